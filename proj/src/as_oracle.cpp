#include "galmod/as_oracle.hpp"

#include "galmod/error.hpp"

#include <algorithm>
#include <numeric>

namespace galmod {

ASCurve::ASCurve(int p, Int m) : p_(p), m_(m) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidGroup, "p = " + std::to_string(p) + " is not prime");
  if (m < 1 || std::gcd(m, static_cast<Int>(p)) != 1)
    throw Error(ErrorKind::Validation, "need m >= 1 prime to p, got m = " + std::to_string(m));
}

FpMatrix FpMatrix::identity(std::uint32_t p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % p;
  return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
  if (cols_ != rhs.rows_ || p_ != rhs.p_) throw Error(ErrorKind::OutOfRange, "matrix shape mismatch");
  FpMatrix out(p_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out(i, j) = static_cast<std::uint32_t>((out(i, j) + a * rhs(k, j)) % p_);
    }
  return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || p_ != rhs.p_)
    throw Error(ErrorKind::OutOfRange, "matrix shape mismatch");
  FpMatrix out(p_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = (data_[i] + p_ - rhs.data_[i]) % p_;
  return out;
}

bool FpMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint32_t x) { return x == 0; });
}

namespace {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2)
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

} // namespace

std::size_t FpMatrix::rank() const {
  FpMatrix a = *this;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && a(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(a(pivot, j), a(rank, j));
    const std::uint64_t inv = inverse_mod(a(rank, col), p_);
    for (std::size_t j = col; j < cols_; ++j)
      a(rank, j) = static_cast<std::uint32_t>(a(rank, j) * inv % p_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == rank || a(i, col) == 0) continue;
      const std::uint64_t f = a(i, col);
      for (std::size_t j = col; j < cols_; ++j)
        a(i, j) = static_cast<std::uint32_t>((a(i, j) + (p_ - f) * a(rank, j)) % p_);
    }
    ++rank;
  }
  return rank;
}

MonomialBasis riemann_roch_basis(const ASCurve& c, Int n) {
  if (n < 0) throw Error(ErrorKind::OutOfRange, "n must be nonnegative");
  MonomialBasis basis;
  for (Int j = 0; j < c.prime(); ++j)
    for (Int i = 0; c.prime() * i + c.m() * j <= n; ++i) basis.push_back({i, j});
  return basis;
}

FpMatrix sigma_matrix(const ASCurve& c, const MonomialBasis& basis) {
  const auto p = static_cast<std::uint32_t>(c.prime());
  // Pascal's triangle mod p up to row p - 1.
  std::vector<std::vector<std::uint32_t>> binom(p, std::vector<std::uint32_t>(p, 0));
  for (std::uint32_t r = 0; r < p; ++r) {
    binom[r][0] = 1;
    for (std::uint32_t k = 1; k <= r; ++k) binom[r][k] = (binom[r - 1][k - 1] + binom[r - 1][k]) % p;
  }
  auto index_of = [&](Monomial mono) {
    auto it = std::find(basis.begin(), basis.end(), mono);
    if (it == basis.end()) throw Error(ErrorKind::OutOfRange, "basis is not sigma-stable");
    return static_cast<std::size_t>(it - basis.begin());
  };
  FpMatrix s(p, basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto [i, j] = basis[col];
    // x^i (y + 1)^j = sum_t C(j, t) x^i y^t
    for (Int t = 0; t <= j; ++t) {
      const std::uint32_t coef = binom[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)];
      if (coef != 0) s(index_of({i, t}), col) = coef;
    }
  }
  return s;
}

std::vector<std::size_t> rank_sequence(const ASCurve& c, Int n) {
  const MonomialBasis basis = riemann_roch_basis(c, n);
  const auto p = static_cast<std::uint32_t>(c.prime());
  const FpMatrix nil = sigma_matrix(c, basis) - FpMatrix::identity(p, basis.size());
  std::vector<std::size_t> ranks{basis.size()};
  FpMatrix power = FpMatrix::identity(p, basis.size());
  while (ranks.back() != 0) {
    power = power * nil;
    ranks.push_back(power.rank());
  }
  return ranks;
}

Decomposition jordan_type(const ASCurve& c, Int n) {
  if (n <= 2 * c.genus() - 2)
    throw Error(ErrorKind::DegreeTooSmall, "n = " + std::to_string(n) + " is not above 2g - 2");
  std::vector<std::size_t> r = rank_sequence(c, n);
  r.push_back(0);
  Decomposition d;
  // blocks of size exactly s: r_{s-1} - 2 r_s + r_{s+1}
  for (std::size_t s = 1; s + 1 < r.size(); ++s)
    d.add(static_cast<Int>(s), static_cast<Int>(r[s - 1]) - 2 * static_cast<Int>(r[s]) +
                                   static_cast<Int>(r[s + 1]));
  return d;
}

InvariantDivisor ASTower::divisor(Int n) const { return {0, {{"P_inf", n}}}; }

ASTower to_tower(const ASCurve& c) {
  return {CoverTower(GroupSpec(c.prime(), 1), 0, {RamifiedOrbit{"P_inf", 1, {c.m()}}})};
}

} // namespace galmod
