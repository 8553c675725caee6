#pragma once
/*
  Combinatorial model of a tower of degree-p covers

      X = X_0 -> X_1 -> ... -> X_v = Y

  with total group Z/p^v, where X_n is the quotient of X by the subgroup of
  order p^n and pi_n : X_{n-1} -> X_n.

  Points are tracked as G-orbits. An orbit of depth m has stabilizer of order
  p^m; it is ramified in pi_1, ..., pi_m and unramified above. Its jump list
  stores the break of pi_n at the orbit's image for n = 1..m, so jumps[0]
  belongs to the cover closest to X. The unramified part of a divisor is only
  ever acted on by the identity, so it is carried as a single degree on Y.
*/

#include "galmod/cyclic_rep.hpp"

#include <map>
#include <string>
#include <vector>

namespace galmod {

struct RamifiedOrbit {
  std::string id;
  int depth = 1;
  std::vector<Int> jumps;

  /// Break of pi_level at this orbit; level in 1..depth.
  Int jump(int level) const { return jumps.at(static_cast<std::size_t>(level - 1)); }

  friend bool operator==(const RamifiedOrbit&, const RamifiedOrbit&) = default;
};

/// Number of points of X_n lying in the image of the orbit.
Int orbit_point_count(const RamifiedOrbit& o, int level, const GroupSpec& g);

class CoverTower {
public:
  /// Checks shape only (depth range, jump count and positivity, unique ids);
  /// realizability of the genus is checked by genus()/structural_violations().
  CoverTower(GroupSpec group, Int base_genus, std::vector<RamifiedOrbit> orbits);

  const GroupSpec& group() const { return group_; }
  int levels() const { return group_.exponent(); }
  Int base_genus() const { return base_genus_; }
  const std::vector<RamifiedOrbit>& orbits() const { return orbits_; }

  /// Index of the orbit with this id; throws Validation if unknown.
  std::size_t orbit_index(const std::string& id) const;

  /// Genus of X_level via Riemann-Hurwitz from the base down.
  /// Throws Validation when some level genus is non-integral or negative.
  Int genus(int level) const;
  Int top_genus() const { return genus(0); }
  /// Genera of X_0, ..., X_v.
  std::vector<Int> genera() const;

  friend bool operator==(const CoverTower&, const CoverTower&) = default;

private:
  GroupSpec group_;
  Int base_genus_;
  std::vector<RamifiedOrbit> orbits_;
};

/// G-invariant divisor on X: pullback of a degree-`base_degree` divisor from Y
/// plus an integer multiple of each ramified orbit.
struct InvariantDivisor {
  Int base_degree = 0;
  std::map<std::string, Int> orbit_coeffs;

  friend bool operator==(const InvariantDivisor&, const InvariantDivisor&) = default;
};

/// Divisor on X_level, invariant under the residual group.
/// coeffs is indexed like CoverTower::orbits().
struct LevelDivisor {
  int level = 0;
  Int base_degree = 0;
  std::vector<Int> coeffs;

  friend bool operator==(const LevelDivisor&, const LevelDivisor&) = default;
};

/// Lifts an invariant divisor to a level-0 divisor; unknown orbit ids are a Validation error.
LevelDivisor level_zero(const InvariantDivisor& d, const CoverTower& t);

Int divisor_degree(const LevelDivisor& d, const CoverTower& t);
inline Int divisor_degree(const InvariantDivisor& d, const CoverTower& t) {
  return divisor_degree(level_zero(d, t), t);
}

/// Twisted pushforward [ (1/p) pi_*(D - alpha * sum N_P P) ] along pi_{level+1}.
LevelDivisor pushforward_alpha(const LevelDivisor& d, const CoverTower& t, int alpha);

/// pi_*^G of D as a divisor on Y: [pi_* D / #G] coefficientwise.
LevelDivisor kani_pushforward(const InvariantDivisor& d, const CoverTower& t);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Genus integrality and nonnegativity at every level.
ValidationReport structural_violations(const CoverTower& t);

/// Structural checks plus necessary conditions on each orbit's breaks:
/// p does not divide any break, lower breaks grow toward X, and the induced
/// upper breaks are integers with u_{i+1} >= p u_i (and p does not divide
/// u_{i+1} when the inequality is strict).
ValidationReport validate_strict(const CoverTower& t);

} // namespace galmod
