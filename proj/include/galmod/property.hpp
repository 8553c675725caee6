#pragma once
/*
  Seeded random corpus of strict-valid towers and divisors, and the invariant
  checks run on each case. Shared by `galmod check` and the acceptance suite.
*/

#include "galmod/cover_tower.hpp"
#include "galmod/decomposition.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace galmod::check {

struct CorpusLimits {
  std::vector<int> primes{2, 3, 5};
  int max_v = 3;
  Int max_jump = 25;
  Int max_coeff = 60;
  int max_orbits = 3;
  Int max_base_genus = 3;
};

struct Case {
  CoverTower tower;
  InvariantDivisor divisor;
};

/// All jump lists [N^(1), ..., N^(depth)] with entries in 1..max_jump that
/// pass the strict per-orbit conditions.
std::vector<std::vector<Int>> strict_jump_sequences(int p, int depth, Int max_jump);

/// Deterministic stream of strict-valid cases with deg D > 2 g_X - 2.
class CorpusGenerator {
public:
  CorpusGenerator(std::uint64_t seed, CorpusLimits limits = {});
  Case next();

private:
  Int uniform(Int lo, Int hi); // inclusive
  const std::vector<std::vector<Int>>& jumps_for(int p, int depth);

  std::mt19937_64 rng_;
  CorpusLimits limits_;
  std::vector<std::pair<std::pair<int, int>, std::vector<std::vector<Int>>>> jump_cache_;
};

std::vector<Case> generate_corpus(std::uint64_t seed, std::size_t count, const CorpusLimits& limits = {});

enum class Property {
  DimensionIdentity,
  MethodAgreement,
  Nonnegativity,
  Monotonicity,
  PullbackStability,
  FreeSymmetry,
  KaniConsistency,
  EulerConsistency,
  Exception,
};

const char* to_string(Property p);

struct Failure {
  Property property;
  std::string detail;
  friend bool operator==(const Failure&, const Failure&) = default;
};

/// Every invariant on one case; empty when all hold.
std::vector<Failure> check_case(const Case& c);

/// Runs check_case over the corpus on up to `threads` workers; results in case order.
std::vector<std::vector<Failure>> check_all(const std::vector<Case>& cases, unsigned threads);

/// Compact JSON of a case, for reproducible failure dumps.
std::string describe(const Case& c);

/// Greedy shrink of a failing divisor toward zero, keeping deg D > 2 g_X - 2
/// and `still_fails` true at every accepted step.
InvariantDivisor shrink_divisor(const CoverTower& t, InvariantDivisor d,
                                const std::function<bool(const InvariantDivisor&)>& still_fails);

/// Worker count from GALMOD_THREADS, defaulting to hardware concurrency.
unsigned thread_budget();

} // namespace galmod::check
