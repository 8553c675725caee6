#include "galmod/property.hpp"

#include "galmod/io.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace galmod::check {

std::vector<std::vector<Int>> strict_jump_sequences(int p, int depth, Int max_jump) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur(static_cast<std::size_t>(depth), 1);
  const GroupSpec g(p, depth);
  // odometer over [1, max_jump]^depth
  while (true) {
    const CoverTower t(g, 1, {RamifiedOrbit{"o", depth, cur}});
    if (validate_strict(t).ok()) out.push_back(cur);
    std::size_t k = 0;
    while (k < cur.size() && cur[k] == max_jump) cur[k++] = 1;
    if (k == cur.size()) break;
    ++cur[k];
  }
  return out;
}

CorpusGenerator::CorpusGenerator(std::uint64_t seed, CorpusLimits limits)
    : rng_(seed), limits_(std::move(limits)) {}

Int CorpusGenerator::uniform(Int lo, Int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<Int>(rng_() % span);
}

const std::vector<std::vector<Int>>& CorpusGenerator::jumps_for(int p, int depth) {
  for (const auto& [key, seqs] : jump_cache_)
    if (key == std::make_pair(p, depth)) return seqs;
  jump_cache_.push_back({{p, depth}, strict_jump_sequences(p, depth, limits_.max_jump)});
  return jump_cache_.back().second;
}

Case CorpusGenerator::next() {
  while (true) {
    const int p = limits_.primes[static_cast<std::size_t>(uniform(0, static_cast<Int>(limits_.primes.size()) - 1))];
    const int v = static_cast<int>(uniform(0, limits_.max_v));
    const GroupSpec g(p, v);
    const Int base_genus = uniform(0, limits_.max_base_genus);
    std::vector<RamifiedOrbit> orbits;
    const Int count = v == 0 ? 0 : uniform(0, limits_.max_orbits);
    for (Int k = 0; k < count; ++k) {
      int depth = static_cast<int>(uniform(1, v));
      while (depth > 0 && jumps_for(p, depth).empty()) --depth;
      if (depth == 0) break;
      const auto& seqs = jumps_for(p, depth);
      orbits.push_back({"P" + std::to_string(k), depth,
                        seqs[static_cast<std::size_t>(uniform(0, static_cast<Int>(seqs.size()) - 1))]});
    }
    CoverTower tower(g, base_genus, std::move(orbits));
    if (!structural_violations(tower).ok()) continue;

    InvariantDivisor d;
    for (const auto& o : tower.orbits()) d.orbit_coeffs[o.id] = uniform(-limits_.max_coeff, limits_.max_coeff);
    d.base_degree = uniform(-5, 10);
    const Int bound = 2 * tower.top_genus() - 2;
    const Int deg = divisor_degree(d, tower);
    if (deg <= bound) {
      // lift the pullback part just over the bound, sometimes a little further
      const Int rest = deg - d.base_degree * g.order();
      d.base_degree = floor_div(bound - rest, g.order()) + 1 + uniform(0, 3);
    }
    return {std::move(tower), std::move(d)};
  }
}

std::vector<Case> generate_corpus(std::uint64_t seed, std::size_t count, const CorpusLimits& limits) {
  CorpusGenerator gen(seed, limits);
  std::vector<Case> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(gen.next());
  return out;
}

const char* to_string(Property p) {
  switch (p) {
  case Property::DimensionIdentity: return "dimension-identity";
  case Property::MethodAgreement: return "method-agreement";
  case Property::Nonnegativity: return "nonnegativity";
  case Property::Monotonicity: return "monotonicity";
  case Property::PullbackStability: return "pullback-stability";
  case Property::FreeSymmetry: return "free-symmetry";
  case Property::KaniConsistency: return "kani-consistency";
  case Property::EulerConsistency: return "euler-consistency";
  case Property::Exception: return "exception";
  }
  return "unknown";
}

std::string describe(const Case& c) {
  nlohmann::json j = to_json(c.tower);
  j["divisor"] = to_json(c.divisor);
  return j.dump();
}

std::vector<Failure> check_case(const Case& c) {
  std::vector<Failure> fails;
  auto fail = [&](Property p, std::string why) { fails.push_back({p, std::move(why)}); };
  const CoverTower& t = c.tower;
  const GroupSpec& g = t.group();
  const auto n = static_cast<std::size_t>(g.order());

  const DecompositionReport closed = decompose_closed_form(c.divisor, t);
  const Int deg = divisor_degree(c.divisor, t);
  if (closed.dim_h0 != deg + 1 - closed.top_genus)
    fail(Property::DimensionIdentity, "sum j m_j = " + std::to_string(closed.dim_h0) + ", expected " +
                                          std::to_string(deg + 1 - closed.top_genus));

  for (Method m : {Method::SecondDifference, Method::Recursive, Method::SimpleBasis}) {
    const DecompositionReport other = decompose(c.divisor, t, m);
    if (other.multiplicities != closed.multiplicities || other.degrees != closed.degrees)
      fail(Property::MethodAgreement, std::string(to_string(m)) + " differs from closed form");
  }

  for (std::size_t j = 0; j < n; ++j)
    if (closed.multiplicities[j] < 0)
      fail(Property::Nonnegativity, "m_" + std::to_string(j + 1) + " = " + std::to_string(closed.multiplicities[j]));
  for (std::size_t j = 0; j + 1 < n; ++j)
    if (closed.degrees[j] < closed.degrees[j + 1])
      fail(Property::Monotonicity, "deg_" + std::to_string(j + 1) + " < deg_" + std::to_string(j + 2));

  const Int bound = 2 * closed.top_genus - 2;
  const Int b0 = floor_div(bound, g.order()) + 1;
  const DecompositionReport base = decompose_pullback(b0, t);
  for (Int k = 1; k <= 3; ++k) {
    const DecompositionReport up = decompose_pullback(b0 + k, t);
    std::vector<Int> diff(n);
    for (std::size_t j = 0; j < n; ++j) diff[j] = up.multiplicities[j] - base.multiplicities[j];
    std::vector<Int> expect(n, 0);
    expect[n - 1] = k;
    if (diff != expect) fail(Property::PullbackStability, "deg M = " + std::to_string(b0 + k));
  }

  if (t.orbits().empty()) {
    std::vector<Int> expect(n, 0);
    expect[n - 1] = 1 - t.base_genus() + c.divisor.base_degree;
    if (closed.multiplicities != expect) fail(Property::FreeSymmetry, "not a multiple of k[G]");
  }

  const LevelDivisor kani = kani_pushforward(c.divisor, t);
  LevelDivisor composite = level_zero(c.divisor, t);
  for (int lvl = 1; lvl <= t.levels(); ++lvl) composite = pushforward_alpha(composite, t, 0);
  if (kani != composite) fail(Property::KaniConsistency, "kani differs from the alpha = 0 composite");
  if (divisor_degree(kani, t) != closed.degrees.front())
    fail(Property::KaniConsistency, "kani degree differs from deg_1");

  const K0Vector euler = euler_characteristic(c.divisor, t);
  if (closed.realizable() && to_simple_basis({K0Basis::Standard, closed.multiplicities}, g) != euler)
    fail(Property::EulerConsistency, "euler characteristic differs from the class of H^0");
  return fails;
}

std::vector<std::vector<Failure>> check_all(const std::vector<Case>& cases, unsigned threads) {
  std::vector<std::vector<Failure>> results(cases.size());
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(cases.size())));
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i; (i = cursor.fetch_add(1)) < cases.size();) {
      try {
        results[i] = check_case(cases[i]);
      } catch (const std::exception& e) {
        results[i] = {{Property::Exception, e.what()}};
      }
    }
  };
  if (threads <= 1) {
    worker();
    return results;
  }
  std::vector<std::jthread> pool;
  for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  pool.clear();
  return results;
}

InvariantDivisor shrink_divisor(const CoverTower& t, InvariantDivisor d,
                                const std::function<bool(const InvariantDivisor&)>& still_fails) {
  const Int bound = 2 * t.top_genus() - 2;
  auto accepts = [&](const InvariantDivisor& cand) {
    if (divisor_degree(cand, t) <= bound) return false;
    try {
      return still_fails(cand);
    } catch (const std::exception&) {
      return false;
    }
  };
  // Each slot moves toward zero by halving steps until no step is accepted.
  auto shrink_slot = [&](Int& slot) {
    bool moved = false;
    for (Int step = slot < 0 ? -slot : slot; step > 0; step /= 2) {
      while (slot != 0) {
        const Int saved = slot;
        slot += slot > 0 ? -std::min(step, slot) : std::min(step, -slot);
        if (accepts(d)) {
          moved = true;
        } else {
          slot = saved;
          break;
        }
      }
    }
    return moved;
  };
  for (bool progress = true; progress;) {
    progress = false;
    for (auto& [id, c] : d.orbit_coeffs) progress = shrink_slot(c) || progress;
    progress = shrink_slot(d.base_degree) || progress;
  }
  return d;
}

unsigned thread_budget() {
  if (const char* env = std::getenv("GALMOD_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

} // namespace galmod::check
