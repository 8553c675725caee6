#include "galmod/cover_tower.hpp"

#include "galmod/error.hpp"

#include <set>

namespace galmod {

Int orbit_point_count(const RamifiedOrbit& o, int level, const GroupSpec& g) {
  if (level < 0 || level > g.exponent())
    throw Error(ErrorKind::OutOfRange, "level " + std::to_string(level) + " out of range");
  const int v = g.exponent();
  return level <= o.depth ? g.subgroup_order(v - o.depth) : g.subgroup_order(v - level);
}

CoverTower::CoverTower(GroupSpec group, Int base_genus, std::vector<RamifiedOrbit> orbits)
    : group_(group), base_genus_(base_genus), orbits_(std::move(orbits)) {
  if (base_genus_ < 0)
    throw Error(ErrorKind::Validation, "base genus must be nonnegative");
  std::set<std::string> seen;
  for (const auto& o : orbits_) {
    if (!seen.insert(o.id).second)
      throw Error(ErrorKind::Validation, "duplicate orbit id '" + o.id + "'");
    if (o.depth < 1 || o.depth > group_.exponent())
      throw Error(ErrorKind::Validation, "orbit '" + o.id + "' has depth " +
                                             std::to_string(o.depth) + " outside 1.." +
                                             std::to_string(group_.exponent()));
    if (static_cast<int>(o.jumps.size()) != o.depth)
      throw Error(ErrorKind::Validation, "orbit '" + o.id + "' needs exactly " +
                                             std::to_string(o.depth) + " jumps");
    for (Int n : o.jumps)
      if (n < 1)
        throw Error(ErrorKind::Validation, "orbit '" + o.id + "' has non-positive jump");
  }
}

std::size_t CoverTower::orbit_index(const std::string& id) const {
  for (std::size_t i = 0; i < orbits_.size(); ++i)
    if (orbits_[i].id == id) return i;
  throw Error(ErrorKind::Validation, "unknown orbit id '" + id + "'");
}

std::vector<Int> CoverTower::genera() const {
  const int v = levels();
  const Int p = group_.prime();
  std::vector<Int> g(static_cast<std::size_t>(v) + 1);
  // euler = 2g - 2 on the current level, walked down from Y.
  Int euler = 2 * base_genus_ - 2;
  g[static_cast<std::size_t>(v)] = base_genus_;
  for (int n = v; n >= 1; --n) {
    Int next = p * euler;
    for (const auto& o : orbits_)
      if (o.depth >= n) next += orbit_point_count(o, n - 1, group_) * (p - 1) * (o.jump(n) + 1);
    if (next % 2 != 0)
      throw Error(ErrorKind::Validation,
                  "genus of X_" + std::to_string(n - 1) + " is not an integer");
    const Int genus = next / 2 + 1;
    if (genus < 0)
      throw Error(ErrorKind::Validation,
                  "genus of X_" + std::to_string(n - 1) + " is negative (" + std::to_string(genus) + ")");
    g[static_cast<std::size_t>(n - 1)] = genus;
    euler = next;
  }
  return g;
}

Int CoverTower::genus(int level) const {
  if (level < 0 || level > levels())
    throw Error(ErrorKind::OutOfRange, "level " + std::to_string(level) + " out of range");
  return genera()[static_cast<std::size_t>(level)];
}

LevelDivisor level_zero(const InvariantDivisor& d, const CoverTower& t) {
  LevelDivisor out{0, d.base_degree, std::vector<Int>(t.orbits().size(), 0)};
  for (const auto& [id, c] : d.orbit_coeffs) out.coeffs[t.orbit_index(id)] = c;
  return out;
}

Int divisor_degree(const LevelDivisor& d, const CoverTower& t) {
  const GroupSpec& g = t.group();
  if (d.coeffs.size() != t.orbits().size())
    throw Error(ErrorKind::OutOfRange, "divisor does not match the tower's orbits");
  Int deg = d.base_degree * g.subgroup_order(g.exponent() - d.level);
  for (std::size_t i = 0; i < d.coeffs.size(); ++i)
    deg += d.coeffs[i] * orbit_point_count(t.orbits()[i], d.level, g);
  return deg;
}

LevelDivisor pushforward_alpha(const LevelDivisor& d, const CoverTower& t, int alpha) {
  const Int p = t.group().prime();
  const int n = d.level + 1;
  if (n > t.levels()) throw Error(ErrorKind::OutOfRange, "no cover above the top level");
  if (alpha < 0 || alpha >= p)
    throw Error(ErrorKind::OutOfRange, "twist " + std::to_string(alpha) + " outside 0..p-1");
  LevelDivisor out = d;
  out.level = n;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
    const auto& o = t.orbits()[i];
    if (o.depth >= n) out.coeffs[i] = floor_div(d.coeffs[i] - alpha * o.jump(n), p);
  }
  return out;
}

LevelDivisor kani_pushforward(const InvariantDivisor& d, const CoverTower& t) {
  LevelDivisor out = level_zero(d, t);
  out.level = t.levels();
  for (std::size_t i = 0; i < out.coeffs.size(); ++i)
    out.coeffs[i] = floor_div(out.coeffs[i], t.group().subgroup_order(t.orbits()[i].depth));
  return out;
}

ValidationReport structural_violations(const CoverTower& t) {
  ValidationReport r;
  try {
    t.genera();
  } catch (const Error& e) {
    r.violations.emplace_back(e.what());
  }
  return r;
}

ValidationReport validate_strict(const CoverTower& t) {
  ValidationReport r = structural_violations(t);
  const Int p = t.group().prime();
  for (const auto& o : t.orbits()) {
    const std::string who = "orbit '" + o.id + "': ";
    for (int n = 1; n <= o.depth; ++n)
      if (o.jump(n) % p == 0)
        r.violations.push_back(who + "p divides the break of level " + std::to_string(n));
    // Lower breaks of the stabilizer: b_1 <= ... <= b_m, with b_m at the cover nearest X.
    std::vector<Int> lower(o.jumps.rbegin(), o.jumps.rend());
    bool ordered = true;
    for (std::size_t i = 1; i < lower.size(); ++i)
      if (lower[i] < lower[i - 1]) ordered = false;
    if (!ordered) {
      r.violations.push_back(who + "breaks increase down the tower");
      continue;
    }
    Int upper = lower[0];
    Int pw = 1;
    for (std::size_t i = 1; i < lower.size(); ++i) {
      pw *= p;
      const Int diff = lower[i] - lower[i - 1];
      if (diff % pw != 0) {
        r.violations.push_back(who + "upper break u_" + std::to_string(i + 1) + " is not an integer");
        break;
      }
      const Int next = upper + diff / pw;
      if (next < p * upper)
        r.violations.push_back(who + "upper break u_" + std::to_string(i + 1) + " < p * u_" +
                               std::to_string(i));
      else if (next > p * upper && next % p == 0)
        r.violations.push_back(who + "p divides upper break u_" + std::to_string(i + 1));
      upper = next;
    }
  }
  return r;
}

} // namespace galmod
