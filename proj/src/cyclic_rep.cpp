#include "galmod/cyclic_rep.hpp"

#include "galmod/error.hpp"

#include <algorithm>
#include <sstream>

namespace galmod {

const char* to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::OutOfRange: return "OutOfRange";
  case ErrorKind::InvalidGroup: return "InvalidGroup";
  case ErrorKind::WrongBasis: return "WrongBasis";
  case ErrorKind::NegativeMultiplicity: return "NegativeMultiplicity";
  case ErrorKind::Parse: return "ParseError";
  case ErrorKind::Validation: return "ValidationError";
  case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
  }
  return "Unknown";
}

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

GroupSpec::GroupSpec(int p, int v) : p_(p), v_(v), order_(1) {
  if (!is_prime(p))
    throw Error(ErrorKind::InvalidGroup, "p = " + std::to_string(p) + " is not prime");
  if (v < 0)
    throw Error(ErrorKind::InvalidGroup, "negative exponent v = " + std::to_string(v));
  for (int i = 0; i < v; ++i) {
    order_ *= p;
    if (order_ > kMaxGroupOrder)
      throw Error(ErrorKind::InvalidGroup,
                  "group order exceeds " + std::to_string(kMaxGroupOrder));
  }
}

Int GroupSpec::subgroup_order(int w) const {
  if (w < 0 || w > v_)
    throw Error(ErrorKind::OutOfRange, "subgroup exponent " + std::to_string(w) + " out of range");
  Int r = 1;
  for (int i = 0; i < w; ++i) r *= p_;
  return r;
}

GroupSpec GroupSpec::subgroup(int w) const {
  subgroup_order(w);
  return GroupSpec(p_, w);
}

// ---------------------------------------------------------------------------

Decomposition Decomposition::from_dense(std::span<const Int> mult) {
  Decomposition d;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] < 0)
      throw Error(ErrorKind::NegativeMultiplicity,
                  "multiplicity of V_" + std::to_string(i + 1) + " is " + std::to_string(mult[i]));
    d.add(static_cast<Int>(i) + 1, mult[i]);
  }
  return d;
}

void Decomposition::add(Int dim, Int count) {
  if (dim < 1) throw Error(ErrorKind::OutOfRange, "indecomposable of dimension " + std::to_string(dim));
  if (count == 0) return;
  Int& m = mult_[dim];
  m += count;
  if (m < 0)
    throw Error(ErrorKind::NegativeMultiplicity,
                "multiplicity of V_" + std::to_string(dim) + " would become " + std::to_string(m));
  if (m == 0) mult_.erase(dim);
}

Int Decomposition::multiplicity(Int dim) const {
  auto it = mult_.find(dim);
  return it == mult_.end() ? 0 : it->second;
}

Int Decomposition::total_dimension() const {
  Int s = 0;
  for (auto [dim, m] : mult_) s += dim * m;
  return s;
}

std::vector<Int> Decomposition::dense(Int order) const {
  std::vector<Int> out(static_cast<std::size_t>(order), 0);
  for (auto [dim, m] : mult_) {
    if (dim > order)
      throw Error(ErrorKind::OutOfRange, "V_" + std::to_string(dim) + " exceeds group order");
    out[static_cast<std::size_t>(dim - 1)] = m;
  }
  return out;
}

std::string Decomposition::to_string() const {
  if (mult_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto [dim, m] : mult_) {
    if (!first) os << " + ";
    first = false;
    os << "V_" << dim;
    if (m != 1) os << "^" << m;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (rhs.n_ != n_) throw Error(ErrorKind::OutOfRange, "matrix size mismatch");
  IntMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      Int a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

std::vector<Int> IntMatrix::apply(std::span<const Int> x) const {
  if (x.size() != n_) throw Error(ErrorKind::OutOfRange, "vector length does not match matrix");
  std::vector<Int> y(n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

// ---------------------------------------------------------------------------

namespace {

void check_index(Int j, Int order, const char* what) {
  if (j < 1 || j > order)
    throw Error(ErrorKind::OutOfRange, std::string(what) + " index " + std::to_string(j) +
                                           " outside 1.." + std::to_string(order));
}

void check_length(const K0Vector& x, const GroupSpec& g) {
  if (static_cast<Int>(x.coords.size()) != g.order())
    throw Error(ErrorKind::OutOfRange, "K0 vector has " + std::to_string(x.coords.size()) +
                                           " coordinates, expected " + std::to_string(g.order()));
}

} // namespace

IntMatrix cartan_matrix(const GroupSpec& g) {
  const auto n = static_cast<std::size_t>(g.order());
  IntMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = static_cast<Int>(std::min(i, j)) + 1;
  return a;
}

IntMatrix cartan_inverse(const GroupSpec& g) {
  const auto n = static_cast<std::size_t>(g.order());
  IntMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = (i + 1 == n) ? 1 : 2;
    if (i + 1 < n) {
      a(i, i + 1) = -1;
      a(i + 1, i) = -1;
    }
  }
  return a;
}

std::vector<int> p_adic_digits(Int j, const GroupSpec& g) {
  check_index(j, g.order(), "digit");
  std::vector<int> digits(static_cast<std::size_t>(g.exponent()));
  Int r = j - 1;
  for (auto& d : digits) {
    d = static_cast<int>(r % g.prime());
    r /= g.prime();
  }
  return digits;
}

Decomposition restrict_step(const GroupSpec& g, Int j) {
  if (g.exponent() == 0)
    throw Error(ErrorKind::InvalidGroup, "the trivial group has no proper subgroup");
  check_index(j, g.order(), "restriction");
  const Int p = g.prime();
  const Int l = (j - 1) / p + 1;
  const Int jp = (j - 1) % p + 1;
  Decomposition d;
  d.add(l, jp);
  if (l > 1) d.add(l - 1, p - jp);
  return d;
}

Indecomposable induce(const GroupSpec& g, int w, Int l) {
  const Int h = g.subgroup_order(w);
  check_index(l, h, "subgroup indecomposable");
  return {l * (g.order() / h)};
}

bool is_relatively_projective(const Decomposition& d, const GroupSpec& g, int w) {
  const Int step = g.order() / g.subgroup_order(w);
  return std::all_of(d.entries().begin(), d.entries().end(),
                     [step](const auto& e) { return e.second == 0 || e.first % step == 0; });
}

std::optional<Indecomposable> heller(const GroupSpec& g, Int j) {
  check_index(j, g.order(), "indecomposable");
  if (j == g.order()) return std::nullopt;
  return Indecomposable{g.order() - j};
}

K0Vector to_simple_basis(const K0Vector& x, const GroupSpec& g) {
  if (x.basis != K0Basis::Standard)
    throw Error(ErrorKind::WrongBasis, "to_simple_basis expects a standard-basis vector");
  check_length(x, g);
  // (A x)_i = sum_j min(i, j) x_j, via suffix sums: O(n) instead of O(n^2).
  const std::size_t n = x.coords.size();
  std::vector<Int> out(n, 0);
  Int suffix = 0;
  std::vector<Int> tail(n + 1, 0);
  for (std::size_t j = n; j-- > 0;) {
    suffix += x.coords[j];
    tail[j] = suffix;
  }
  Int acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += tail[i];
    out[i] = acc;
  }
  return {K0Basis::Simple, std::move(out)};
}

K0Vector from_simple_basis(const K0Vector& x, const GroupSpec& g) {
  if (x.basis != K0Basis::Simple)
    throw Error(ErrorKind::WrongBasis, "from_simple_basis expects a simple-basis vector");
  check_length(x, g);
  const std::size_t n = x.coords.size();
  std::vector<Int> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Int prev = i > 0 ? x.coords[i - 1] : 0;
    Int next = i + 1 < n ? x.coords[i + 1] : x.coords[i];
    out[i] = 2 * x.coords[i] - prev - next;
  }
  return {K0Basis::Standard, std::move(out)};
}

Decomposition module_from_k0(const K0Vector& x, const GroupSpec& g) {
  const K0Vector std_vec = x.basis == K0Basis::Standard ? x : from_simple_basis(x, g);
  check_length(std_vec, g);
  return Decomposition::from_dense(std_vec.coords);
}

K0Vector standard_vector(const Decomposition& d, const GroupSpec& g) {
  return {K0Basis::Standard, d.dense(g.order())};
}

Decomposition regular_decomposition(const GroupSpec& g) {
  Decomposition d;
  d.add(g.order(), 1);
  return d;
}

} // namespace galmod
