#include "galmod/io.hpp"

#include "galmod/error.hpp"

#include <fstream>
#include <sstream>

namespace galmod {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const json& require(const json& obj, const char* key) {
  if (!obj.is_object()) schema_error(std::string("expected an object holding '") + key + "'");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(std::string("missing field '") + key + "'");
  return *it;
}

Int as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) schema_error(what + " must be an integer");
  return j.get<Int>();
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed) ok = ok || it.key() == k;
    if (!ok) schema_error("unknown field '" + it.key() + "' in " + where);
  }
}

} // namespace

InputDocument parse_input(const json& j) {
  if (!j.is_object()) schema_error("input must be a JSON object");
  check_keys(j, {"group", "base_genus", "orbits", "divisor", "options"}, "input");

  const json& grp = require(j, "group");
  check_keys(grp, {"p", "v"}, "group");
  const Int p = as_int(require(grp, "p"), "group.p");
  const Int v = as_int(require(grp, "v"), "group.v");
  if (p < 2 || p > 1'000'000 || v < 0 || v > 64) throw Error(ErrorKind::Validation, "group out of range");
  GroupSpec group = [&] {
    try {
      return GroupSpec(static_cast<int>(p), static_cast<int>(v));
    } catch (const Error& e) {
      throw Error(ErrorKind::Validation, e.what());
    }
  }();

  const Int base_genus = as_int(require(j, "base_genus"), "base_genus");

  std::vector<RamifiedOrbit> orbits;
  if (auto it = j.find("orbits"); it != j.end()) {
    if (!it->is_array()) schema_error("orbits must be an array");
    for (const json& o : *it) {
      check_keys(o, {"id", "depth", "jumps"}, "orbit");
      RamifiedOrbit orbit;
      const json& id = require(o, "id");
      if (!id.is_string()) schema_error("orbit id must be a string");
      orbit.id = id.get<std::string>();
      orbit.depth = static_cast<int>(as_int(require(o, "depth"), "orbit depth"));
      const json& jumps = require(o, "jumps");
      if (!jumps.is_array()) schema_error("orbit jumps must be an array");
      for (const json& n : jumps) orbit.jumps.push_back(as_int(n, "jump"));
      orbits.push_back(std::move(orbit));
    }
  }

  InputDocument doc{CoverTower(group, base_genus, std::move(orbits)), {}, false};

  if (auto it = j.find("divisor"); it != j.end()) {
    check_keys(*it, {"base_degree", "orbit_coeffs"}, "divisor");
    if (auto b = it->find("base_degree"); b != it->end())
      doc.divisor.base_degree = as_int(*b, "divisor.base_degree");
    if (auto c = it->find("orbit_coeffs"); c != it->end()) {
      if (!c->is_object()) schema_error("divisor.orbit_coeffs must be an object");
      for (auto e = c->begin(); e != c->end(); ++e) {
        doc.divisor.orbit_coeffs[e.key()] = as_int(e.value(), "coefficient of '" + e.key() + "'");
        doc.tower.orbit_index(e.key());
      }
    }
  }
  if (auto it = j.find("options"); it != j.end()) {
    check_keys(*it, {"strict_validation"}, "options");
    if (auto s = it->find("strict_validation"); s != it->end()) {
      if (!s->is_boolean()) schema_error("options.strict_validation must be a boolean");
      doc.strict_validation = s->get<bool>();
    }
  }

  const ValidationReport structural = structural_violations(doc.tower);
  if (!structural.ok()) throw Error(ErrorKind::Validation, structural.violations.front());
  return doc;
}

InputDocument parse_input_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    schema_error(std::string("malformed JSON: ") + e.what());
  }
  return parse_input(j);
}

InputDocument load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) schema_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_input_text(ss.str());
}

json to_json(const CoverTower& t) {
  json orbits = json::array();
  for (const auto& o : t.orbits()) orbits.push_back({{"id", o.id}, {"depth", o.depth}, {"jumps", o.jumps}});
  return {{"group", {{"p", t.group().prime()}, {"v", t.group().exponent()}}},
          {"base_genus", t.base_genus()},
          {"orbits", std::move(orbits)}};
}

json to_json(const InvariantDivisor& d) {
  json coeffs = json::object();
  for (const auto& [id, c] : d.orbit_coeffs) coeffs[id] = c;
  return {{"base_degree", d.base_degree}, {"orbit_coeffs", std::move(coeffs)}};
}

json to_json(const InputDocument& doc) {
  json j = to_json(doc.tower);
  j["divisor"] = to_json(doc.divisor);
  j["options"] = {{"strict_validation", doc.strict_validation}};
  return j;
}

json to_json(const ValidationReport& r) {
  return {{"ok", r.ok()}, {"violations", r.violations}};
}

json to_json(const NoetherReport& r) {
  json j = {{"w", r.w},
            {"ram_exponent", r.ram_exponent},
            {"containment", r.containment},
            {"all_projective", r.all_projective},
            {"samples", r.samples},
            {"consistent", r.consistent()}};
  if (r.witness)
    j["witness"] = {{"divisor", to_json(r.witness->divisor)}, {"j", r.witness->j},
                    {"multiplicity", r.witness->multiplicity}};
  else
    j["witness"] = nullptr;
  j["predicted_witness"] = r.predicted_witness ? json(*r.predicted_witness) : json(nullptr);
  j["observed_witness"] = r.observed_witness ? json(*r.observed_witness) : json(nullptr);
  return j;
}

bool OutputReport::realizable() const {
  for (Int m : multiplicities)
    if (m < 0) return false;
  return true;
}

DecomposeOutcome run_decompose(const InputDocument& doc, const std::vector<Method>& methods) {
  if (methods.empty()) throw Error(ErrorKind::OutOfRange, "no method selected");
  DecomposeOutcome out{.report = OutputReport{.input = doc}};
  OutputReport& r = out.report;
  r.genera = doc.tower.genera();
  r.divisor_degree = divisor_degree(doc.divisor, doc.tower);
  r.strict = validate_strict(doc.tower);
  if (doc.strict_validation && !r.strict.ok())
    throw Error(ErrorKind::Validation, "strict validation failed: " + r.strict.violations.front());

  std::vector<DecompositionReport> reps;
  for (Method m : methods) reps.push_back(decompose(doc.divisor, doc.tower, m));
  const DecompositionReport& first = reps.front();
  r.degrees = first.degrees;
  r.multiplicities = first.multiplicities;
  r.dim_h0 = first.dim_h0;
  r.euler = euler_characteristic(doc.divisor, doc.tower).coords;
  r.methods = methods;
  for (std::size_t i = 1; i < reps.size(); ++i) {
    if (reps[i].multiplicities != first.multiplicities || reps[i].degrees != first.degrees) {
      out.agreed = false;
      r.diagnostics.push_back(std::string("method ") + to_string(reps[i].method) + " disagrees with " +
                              to_string(first.method));
    }
  }
  if (!r.realizable())
    r.diagnostics.push_back("negative multiplicity: the ramification data is not realizable");
  if (!r.strict.ok())
    r.diagnostics.push_back("strict validation reports " + std::to_string(r.strict.violations.size()) +
                            " violation(s)");
  const Int rr = r.divisor_degree + 1 - r.genera.front();
  if (r.dim_h0 != rr)
    r.diagnostics.push_back("dimension " + std::to_string(r.dim_h0) + " differs from Riemann-Roch " +
                            std::to_string(rr));
  return out;
}

json to_json(const OutputReport& r) {
  json methods = json::array();
  for (Method m : r.methods) methods.push_back(to_string(m));
  return {{"input", to_json(r.input)},
          {"genus", r.genera},
          {"divisor_degree", r.divisor_degree},
          {"degree_bound", 2 * r.genera.front() - 2},
          {"degrees", r.degrees},
          {"multiplicities", r.multiplicities},
          {"dim_h0", r.dim_h0},
          {"euler", r.euler},
          {"methods", std::move(methods)},
          {"realizable", r.realizable()},
          {"validation", {{"structural", {{"ok", true}, {"violations", json::array()}}},
                          {"strict", to_json(r.strict)}}},
          {"diagnostics", r.diagnostics}};
}

namespace {

std::string join(const std::vector<Int>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
  return os.str();
}

} // namespace

std::string render_table(const OutputReport& r) {
  std::ostringstream os;
  const auto& g = r.input.tower.group();
  os << "group          Z/" << g.prime() << "^" << g.exponent() << " (order " << g.order() << ")\n";
  os << "genus X_0..X_v " << join(r.genera) << "\n";
  os << "deg D          " << r.divisor_degree << "  (bound " << 2 * r.genera.front() - 2 << ")\n";
  os << "dim H^0        " << r.dim_h0 << "\n";
  os << "methods        ";
  for (std::size_t i = 0; i < r.methods.size(); ++i) os << (i ? "," : "") << to_string(r.methods[i]);
  os << "\n";
  os << "strict         " << (r.strict.ok() ? "pass" : "fail") << "\n";
  os << "\n     j      deg_j        m_j      euler_j\n";
  for (std::size_t i = 0; i < r.multiplicities.size(); ++i) {
    char line[96];
    std::snprintf(line, sizeof line, "%6zu %10lld %10lld %12lld\n", i + 1,
                  static_cast<long long>(r.degrees[i]), static_cast<long long>(r.multiplicities[i]),
                  static_cast<long long>(r.euler[i]));
    os << line;
  }
  for (const auto& v : r.strict.violations) os << "violation: " << v << "\n";
  for (const auto& d : r.diagnostics) os << "note: " << d << "\n";
  return os.str();
}

} // namespace galmod
