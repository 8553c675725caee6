#pragma once
/*
  Brute-force ground truth on Artin-Schreier curves y^p - y = x^m, p not
  dividing m, with G = Z/p acting by sigma : y -> y + 1.

  The only pole of x and y is the single point P_inf above x = infinity, where
  v(x) = -p and v(y) = -m. The monomials x^i y^j (0 <= j < p) have pairwise
  distinct pole orders p i + m j, so those with p i + m j <= n form a basis of
  L(n P_inf). Jordan types are read off from ranks of powers of sigma - 1 over
  F_p; they do not change under extension to the algebraic closure.
*/

#include "galmod/cover_tower.hpp"
#include "galmod/cyclic_rep.hpp"

#include <cstdint>
#include <vector>

namespace galmod {

class ASCurve {
public:
  ASCurve(int p, Int m);

  int prime() const { return p_; }
  Int m() const { return m_; }
  /// (p - 1)(m - 1) / 2
  Int genus() const { return (p_ - 1) * (m_ - 1) / 2; }

private:
  int p_;
  Int m_;
};

struct Monomial {
  Int x_exp = 0;
  Int y_exp = 0;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

using MonomialBasis = std::vector<Monomial>;

/// Dense matrix over F_p.
class FpMatrix {
public:
  FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
      : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static FpMatrix identity(std::uint32_t p, std::size_t n);

  std::uint32_t prime() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  FpMatrix operator*(const FpMatrix& rhs) const;
  FpMatrix operator-(const FpMatrix& rhs) const;
  bool is_zero() const;

  /// Rank by Gaussian elimination mod p.
  std::size_t rank() const;

private:
  std::uint32_t p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

/// Basis of L(n P_inf), sorted by (y_exp, x_exp).
MonomialBasis riemann_roch_basis(const ASCurve& c, Int n);

/// Matrix of sigma in the given basis; column k is the image of basis[k].
FpMatrix sigma_matrix(const ASCurve& c, const MonomialBasis& basis);

/// r_0, r_1, ... with r_k = rank (sigma - 1)^k, ending at the first zero.
std::vector<std::size_t> rank_sequence(const ASCurve& c, Int n);

/// Jordan type of sigma on H^0(X, L(n P_inf)); requires n > 2g - 2.
Decomposition jordan_type(const ASCurve& c, Int n);

struct ASTower {
  CoverTower tower;
  /// n P_inf as an invariant divisor on the tower.
  InvariantDivisor divisor(Int n) const;
};

/// The curve as a one-level tower over P^1 with a single orbit of break m.
ASTower to_tower(const ASCurve& c);

} // namespace galmod
