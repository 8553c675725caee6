#pragma once
/*
  Modular representations of the cyclic p-group Z/p^v over an algebraically
  closed field of characteristic p.

  There are exactly p^v indecomposables V_1, ..., V_{p^v}: V_j is a single
  Jordan block of size j for a fixed generator sigma, i.e. k[sigma]/(sigma-1)^j.
  The Grothendieck group of the functor category carries two bases, the simple
  classes S_j and the standard classes [V_j]; the change of basis between them
  is the Cartan matrix min(i, j).
*/

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace galmod {

using Int = std::int64_t;

/// Floor division rounding toward negative infinity; den > 0.
constexpr Int floor_div(Int num, Int den) {
  Int q = num / den;
  if ((num % den != 0) && (num < 0)) --q;
  return q;
}

bool is_prime(Int n);

/// Largest group order supported; keeps every product below 2^63.
inline constexpr Int kMaxGroupOrder = 3125;

class GroupSpec {
public:
  GroupSpec(int p, int v);

  int prime() const { return p_; }
  int exponent() const { return v_; }
  Int order() const { return order_; }

  /// Order p^w of the subgroup of exponent w.
  Int subgroup_order(int w) const;
  /// The cyclic group Z/p^w, viewed as the subgroup of exponent w.
  GroupSpec subgroup(int w) const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

private:
  int p_;
  int v_;
  Int order_;
};

struct Indecomposable {
  Int dim;
  friend bool operator==(const Indecomposable&, const Indecomposable&) = default;
};

/// Multiset of indecomposables: dimension -> multiplicity, zero entries dropped.
class Decomposition {
public:
  Decomposition() = default;

  /// Dense list (m_1, ..., m_n); throws NegativeMultiplicity on negative entries.
  static Decomposition from_dense(std::span<const Int> mult);

  void add(Int dim, Int count);
  Int multiplicity(Int dim) const;
  Int total_dimension() const;
  bool empty() const { return mult_.empty(); }
  std::vector<Int> dense(Int order) const;
  const std::map<Int, Int>& entries() const { return mult_; }

  std::string to_string() const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;

private:
  std::map<Int, Int> mult_;
};

/// Dense square integer matrix, row-major.
class IntMatrix {
public:
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  static IntMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  Int& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  Int operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  std::vector<Int> apply(std::span<const Int> x) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  std::size_t n_;
  std::vector<Int> data_;
};

enum class K0Basis { Simple, Standard };

struct K0Vector {
  K0Basis basis;
  std::vector<Int> coords; // index 0 holds the coordinate of j = 1

  friend bool operator==(const K0Vector&, const K0Vector&) = default;
};

/// Entry (i, j) = dim Hom(V_i, V_j) = min(i, j).
IntMatrix cartan_matrix(const GroupSpec& g);
/// Tridiagonal inverse of cartan_matrix: 2 on the diagonal (1 in the corner), -1 beside it.
IntMatrix cartan_inverse(const GroupSpec& g);

/// Base-p digits of j - 1, least significant first; always v entries.
std::vector<int> p_adic_digits(Int j, const GroupSpec& g);

/// Restriction of V_j to the subgroup of index p.
Decomposition restrict_step(const GroupSpec& g, Int j);

/// Ind from the subgroup of exponent w of its indecomposable V_l.
Indecomposable induce(const GroupSpec& g, int w, Int l);

/// Relatively projective w.r.t. the subgroup of exponent w: only V_j with p^{v-w} | j occur.
bool is_relatively_projective(const Decomposition& d, const GroupSpec& g, int w);

/// Omega(V_j) = V_{p^v - j}; nullopt for the projective V_{p^v}.
std::optional<Indecomposable> heller(const GroupSpec& g, Int j);

K0Vector to_simple_basis(const K0Vector& x, const GroupSpec& g);
K0Vector from_simple_basis(const K0Vector& x, const GroupSpec& g);

/// Reads off the Krull-Schmidt decomposition of a K0 class of an actual module.
Decomposition module_from_k0(const K0Vector& x, const GroupSpec& g);

/// Class of a decomposition in the standard basis.
K0Vector standard_vector(const Decomposition& d, const GroupSpec& g);

/// k[G] itself: one Jordan block of size p^v.
Decomposition regular_decomposition(const GroupSpec& g);

} // namespace galmod
