#include "galmod/decomposition.hpp"

#include "galmod/error.hpp"

#include <algorithm>
#include <random>

namespace galmod {

const char* to_string(Method m) {
  switch (m) {
  case Method::ClosedForm: return "closed";
  case Method::SecondDifference: return "second-diff";
  case Method::Recursive: return "recursive";
  case Method::SimpleBasis: return "simple-basis";
  }
  return "unknown";
}

bool DecompositionReport::realizable() const {
  return std::all_of(multiplicities.begin(), multiplicities.end(), [](Int m) { return m >= 0; });
}

Decomposition DecompositionReport::decomposition() const {
  return Decomposition::from_dense(multiplicities);
}

LevelDivisor gr0_divisor(const InvariantDivisor& d, const CoverTower& t, Int j) {
  const GroupSpec& g = t.group();
  const std::vector<int> digits = p_adic_digits(j, g);
  const int v = g.exponent();
  LevelDivisor cur = level_zero(d, t);
  // pi_1 (innermost) takes the most significant digit.
  for (int n = 1; n <= v; ++n)
    cur = pushforward_alpha(cur, t, digits[static_cast<std::size_t>(v - n)]);
  return cur;
}

Int gr0_degree(const InvariantDivisor& d, const CoverTower& t, Int j) {
  return divisor_degree(gr0_divisor(d, t, j), t);
}

std::vector<Int> gr0_degrees(const InvariantDivisor& d, const CoverTower& t) {
  const Int n = t.group().order();
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (Int j = 1; j <= n; ++j) out.push_back(gr0_degree(d, t, j));
  return out;
}

void require_degree_bound(const InvariantDivisor& d, const CoverTower& t) {
  const Int deg = divisor_degree(d, t);
  const Int gx = t.top_genus();
  if (deg <= 2 * gx - 2)
    throw Error(ErrorKind::DegreeTooSmall, "deg D = " + std::to_string(deg) +
                                               " is not above 2 g_X - 2 = " + std::to_string(2 * gx - 2));
}

namespace {

DecompositionReport make_report(std::vector<Int> degrees, std::vector<Int> mult, const CoverTower& t,
                                Method method) {
  DecompositionReport r;
  r.degrees = std::move(degrees);
  r.multiplicities = std::move(mult);
  for (std::size_t i = 0; i < r.multiplicities.size(); ++i)
    r.dim_h0 += static_cast<Int>(i + 1) * r.multiplicities[i];
  r.top_genus = t.top_genus();
  r.method = method;
  return r;
}

// gr_0 of V_j over the subtower X_0 -> ... -> X_top, by peeling off the top
// degree-p cover: j = (l - 1) p + j', V_l handled by the subtower below, then
// the top cover contributes [ (n_P - (j' - 1) N_P) / p ] at each ramified point.
LevelDivisor gr0_by_descent(const LevelDivisor& base, const CoverTower& t, int top, Int j) {
  if (top == 0) return base;
  const Int p = t.group().prime();
  const Int l = (j - 1) / p + 1;
  const Int jp = (j - 1) % p + 1;
  LevelDivisor below = gr0_by_descent(base, t, top - 1, l);
  below.level = top;
  for (std::size_t i = 0; i < below.coeffs.size(); ++i) {
    const auto& o = t.orbits()[i];
    if (o.depth < top) continue;
    below.coeffs[i] = floor_div(below.coeffs[i] - (jp - 1) * o.jumps[static_cast<std::size_t>(top - 1)], p);
  }
  return below;
}

} // namespace

DecompositionReport decompose_closed_form(const InvariantDivisor& d, const CoverTower& t) {
  require_degree_bound(d, t);
  std::vector<Int> deg = gr0_degrees(d, t);
  const std::size_t n = deg.size();
  std::vector<Int> m(n);
  for (std::size_t j = 0; j + 1 < n; ++j) m[j] = deg[j] - deg[j + 1];
  m[n - 1] = 1 - t.base_genus() + deg[n - 1];
  return make_report(std::move(deg), std::move(m), t, Method::ClosedForm);
}

DecompositionReport decompose_second_difference(const InvariantDivisor& d, const CoverTower& t) {
  require_degree_bound(d, t);
  std::vector<Int> deg = gr0_degrees(d, t);
  const std::size_t n = deg.size();
  std::vector<Int> a(n);
  Int acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    acc += deg[j];
    a[j] = static_cast<Int>(j + 1) * (1 - t.base_genus()) + acc;
  }
  std::vector<Int> m(n);
  if (n == 1) {
    m[0] = a[0];
  } else {
    m[0] = 2 * a[0] - a[1];
    for (std::size_t j = 1; j + 1 < n; ++j) m[j] = -a[j - 1] + 2 * a[j] - a[j + 1];
    m[n - 1] = a[n - 1] - a[n - 2];
  }
  return make_report(std::move(deg), std::move(m), t, Method::SecondDifference);
}

DecompositionReport decompose_recursive(const InvariantDivisor& d, const CoverTower& t) {
  require_degree_bound(d, t);
  const GroupSpec& g = t.group();
  const LevelDivisor base = level_zero(d, t);
  std::vector<Int> deg;
  std::vector<Int> b;
  Int acc = 0;
  for (Int j = 1; j <= g.order(); ++j) {
    deg.push_back(divisor_degree(gr0_by_descent(base, t, g.exponent(), j), t));
    acc += deg.back() + 1 - t.base_genus();
    b.push_back(acc);
  }
  K0Vector standard = from_simple_basis({K0Basis::Simple, std::move(b)}, g);
  return make_report(std::move(deg), std::move(standard.coords), t, Method::Recursive);
}

K0Vector euler_characteristic(const InvariantDivisor& d, const CoverTower& t) {
  std::vector<Int> coords;
  Int acc = 0;
  for (Int deg : gr0_degrees(d, t)) {
    acc += deg + 1 - t.base_genus();
    coords.push_back(acc);
  }
  return {K0Basis::Simple, std::move(coords)};
}

DecompositionReport decompose_simple_basis(const InvariantDivisor& d, const CoverTower& t) {
  require_degree_bound(d, t);
  K0Vector standard = from_simple_basis(euler_characteristic(d, t), t.group());
  return make_report(gr0_degrees(d, t), std::move(standard.coords), t, Method::SimpleBasis);
}

DecompositionReport decompose(const InvariantDivisor& d, const CoverTower& t, Method m) {
  switch (m) {
  case Method::ClosedForm: return decompose_closed_form(d, t);
  case Method::SecondDifference: return decompose_second_difference(d, t);
  case Method::Recursive: return decompose_recursive(d, t);
  case Method::SimpleBasis: return decompose_simple_basis(d, t);
  }
  throw Error(ErrorKind::OutOfRange, "unknown method");
}

DecompositionReport decompose_pullback(Int deg_m, const CoverTower& t, Method m) {
  InvariantDivisor d;
  d.base_degree = deg_m;
  return decompose(d, t, m);
}

int ramification_subgroup_exponent(const CoverTower& t) {
  int r = 0;
  for (const auto& o : t.orbits()) r = std::max(r, o.depth);
  return r;
}

bool NoetherReport::consistent() const {
  if (containment != all_projective) return false;
  if (!containment && !witness) return false;
  if (predicted_witness != observed_witness) return false;
  return true;
}

namespace {

bool dense_is_projective(const std::vector<Int>& mult, Int step) {
  for (std::size_t i = 0; i < mult.size(); ++i)
    if (mult[i] != 0 && static_cast<Int>(i + 1) % step != 0) return false;
  return true;
}

std::optional<NoetherWitness> find_witness(const InvariantDivisor& d, const std::vector<Int>& mult,
                                           Int step) {
  for (std::size_t i = 0; i < mult.size(); ++i) {
    const Int j = static_cast<Int>(i + 1);
    if (j % step != 0 && mult[i] > 0) return NoetherWitness{d, j, mult[i]};
  }
  return std::nullopt;
}

} // namespace

NoetherReport noether_check(const CoverTower& t, int w, const NoetherSampling& sampling) {
  const GroupSpec& g = t.group();
  const Int step = g.order() / g.subgroup_order(w);
  const Int bound = 2 * t.top_genus() - 2;

  NoetherReport r;
  r.w = w;
  r.ram_exponent = ramification_subgroup_exponent(t);
  r.containment = r.ram_exponent <= w;

  std::vector<InvariantDivisor> divisors;
  const Int first_base = floor_div(bound, g.order()) + 1;
  for (int k = 0; k < sampling.pullback_count; ++k) divisors.push_back({first_base + k, {}});

  Int max_jump = 0;
  for (const auto& o : t.orbits())
    for (Int n : o.jumps) max_jump = std::max(max_jump, n);
  if (!t.orbits().empty()) {
    std::mt19937_64 rng(sampling.seed);
    const auto span = static_cast<std::uint64_t>(3 * max_jump + 1);
    for (int k = 0; k < sampling.ramified_count; ++k) {
      InvariantDivisor d;
      for (const auto& o : t.orbits()) d.orbit_coeffs[o.id] = static_cast<Int>(rng() % span);
      d.base_degree = 0;
      const Int deg = divisor_degree(d, t);
      if (deg <= bound) d.base_degree = floor_div(bound - deg, g.order()) + 1;
      d.base_degree += static_cast<Int>(rng() % 3);
      divisors.push_back(std::move(d));
    }
  }

  for (const auto& d : divisors) {
    const DecompositionReport rep = decompose_closed_form(d, t);
    ++r.samples;
    if (!dense_is_projective(rep.multiplicities, step)) {
      r.all_projective = false;
      if (!r.witness) r.witness = find_witness(d, rep.multiplicities, step);
    }
  }

  if (r.ram_exponent == w + 1 && sampling.pullback_count > 0) {
    Int predicted = 0;
    for (const auto& o : t.orbits())
      if (o.depth >= w + 1) predicted -= floor_div(-o.jump(w + 1), g.prime());
    r.predicted_witness = predicted;
    const Int j = g.order() / g.subgroup_order(w + 1);
    r.observed_witness =
        decompose_pullback(first_base, t).multiplicities[static_cast<std::size_t>(j - 1)];
  }
  return r;
}

} // namespace galmod
