#pragma once
/*
  Krull-Schmidt decomposition of H^0(X, L_X(D)) for a G-invariant divisor D on
  a tower with group Z/p^v, computed from the degrees of the gr_0 divisors on Y.

  For 1 <= j <= p^v let deg_j be the degree of

      pi_v*^{a_0(j)} ... pi_1*^{a_{v-1}(j)} D,

  where a_h(j) are the base-p digits of j - 1. When deg D > 2 g_X - 2,

      m_j     = deg_j - deg_{j+1}          (j < p^v)
      m_{p^v} = 1 - g_Y + deg_{p^v}.

  Four independent routes produce the same multiplicities; they are kept
  separate so they can be checked against each other.
*/

#include "galmod/cover_tower.hpp"
#include "galmod/cyclic_rep.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace galmod {

enum class Method { ClosedForm, SecondDifference, Recursive, SimpleBasis };

const char* to_string(Method m);

struct DecompositionReport {
  std::vector<Int> degrees;        ///< deg_j for j = 1..p^v
  std::vector<Int> multiplicities; ///< m_j for j = 1..p^v, dense
  Int dim_h0 = 0;                  ///< sum j m_j
  Int top_genus = 0;               ///< g_X
  Method method = Method::ClosedForm;

  /// False when some m_j < 0: the tower data cannot come from an actual curve.
  bool realizable() const;
  /// Throws NegativeMultiplicity when !realizable().
  Decomposition decomposition() const;
};

/// Degree on Y of the j-th gr_0 divisor.
Int gr0_degree(const InvariantDivisor& d, const CoverTower& t, Int j);
/// The j-th gr_0 divisor itself, as a divisor on Y.
LevelDivisor gr0_divisor(const InvariantDivisor& d, const CoverTower& t, Int j);
std::vector<Int> gr0_degrees(const InvariantDivisor& d, const CoverTower& t);

/// Throws DegreeTooSmall unless deg D > 2 g_X - 2.
void require_degree_bound(const InvariantDivisor& d, const CoverTower& t);

DecompositionReport decompose_closed_form(const InvariantDivisor& d, const CoverTower& t);
DecompositionReport decompose_second_difference(const InvariantDivisor& d, const CoverTower& t);
DecompositionReport decompose_recursive(const InvariantDivisor& d, const CoverTower& t);
/// Reconstruction from euler_characteristic through the inverse Cartan matrix.
DecompositionReport decompose_simple_basis(const InvariantDivisor& d, const CoverTower& t);
DecompositionReport decompose(const InvariantDivisor& d, const CoverTower& t, Method m);

/// Equivariant Euler characteristic in the simple basis:
/// coordinate j is sum_{i <= j} (deg_i + 1 - g_Y). Valid for any degree.
K0Vector euler_characteristic(const InvariantDivisor& d, const CoverTower& t);

/// H^0(X, pi^* M) for deg M = deg_m; requires p^v deg_m > 2 g_X - 2.
DecompositionReport decompose_pullback(Int deg_m, const CoverTower& t,
                                       Method m = Method::ClosedForm);

/// Exponent of the subgroup generated by all stabilizers (max orbit depth).
int ramification_subgroup_exponent(const CoverTower& t);

struct NoetherSampling {
  std::uint64_t seed = 1;
  int pullback_count = 10; ///< consecutive pullback degrees above the bound
  int ramified_count = 10; ///< random divisors supported on the ramification
};

struct NoetherWitness {
  InvariantDivisor divisor;
  Int j = 0;
  Int multiplicity = 0;
};

struct NoetherReport {
  int w = 0;
  int ram_exponent = 0;
  bool containment = false;    ///< ram subgroup contained in the subgroup of exponent w
  bool all_projective = true;  ///< every sampled H^0 relatively projective
  std::size_t samples = 0;
  std::optional<NoetherWitness> witness;
  /// Set when ram_exponent == w + 1: predicted m_{p^{v-w-1}} for any pullback,
  /// -sum [ -N/p ] over the orbits ramified in pi_{w+1}, one term per point of Y.
  std::optional<Int> predicted_witness;
  /// m_{p^{v-w-1}} observed on the first sampled pullback, when predicted.
  std::optional<Int> observed_witness;

  /// Containment agrees with projectivity, a witness exists when it should,
  /// and the predicted witness value matches.
  bool consistent() const;
};

NoetherReport noether_check(const CoverTower& t, int w, const NoetherSampling& sampling = {});

} // namespace galmod
