#include "galmod/as_oracle.hpp"
#include "galmod/cyclic_rep.hpp"
#include "galmod/error.hpp"

#include <doctest.h>

#include <random>

using namespace galmod;

namespace {

IntMatrix rows(std::initializer_list<std::initializer_list<Int>> r) {
  IntMatrix m(r.size());
  std::size_t i = 0;
  for (auto row : r) {
    std::size_t j = 0;
    for (Int x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

Decomposition decomp(std::initializer_list<std::pair<Int, Int>> entries) {
  Decomposition d;
  for (auto [dim, m] : entries) d.add(dim, m);
  return d;
}

} // namespace

TEST_CASE("group spec validation") {
  CHECK(GroupSpec(2, 2).order() == 4);
  CHECK(GroupSpec(5, 0).order() == 1);
  CHECK(GroupSpec(5, 5).order() == 3125);
  CHECK_THROWS_AS(GroupSpec(4, 1), Error);
  CHECK_THROWS_AS(GroupSpec(1, 1), Error);
  CHECK_THROWS_AS(GroupSpec(2, -1), Error);
  CHECK_THROWS_AS(GroupSpec(2, 12), Error);
  CHECK(GroupSpec(3, 2).subgroup(1) == GroupSpec(3, 1));
}

TEST_CASE("cartan matrix") {
  CHECK(cartan_matrix(GroupSpec(3, 1)) == rows({{1, 1, 1}, {1, 2, 2}, {1, 2, 3}}));
  CHECK(cartan_matrix(GroupSpec(2, 0)) == rows({{1}}));
  CHECK(cartan_matrix(GroupSpec(2, 1)) == rows({{1, 1}, {1, 2}}));
}

TEST_CASE("cartan inverse") {
  CHECK(cartan_inverse(GroupSpec(3, 1)) == rows({{2, -1, 0}, {-1, 2, -1}, {0, -1, 1}}));
  CHECK(cartan_inverse(GroupSpec(3, 0)) == rows({{1}}));
  CHECK(cartan_matrix(GroupSpec(2, 2)) * cartan_inverse(GroupSpec(2, 2)) == IntMatrix::identity(4));
  for (auto [p, v] : {std::pair{2, 5}, {3, 3}, {5, 3}}) {
    const GroupSpec g(p, v);
    CHECK(cartan_matrix(g) * cartan_inverse(g) == IntMatrix::identity(static_cast<std::size_t>(g.order())));
    CHECK(cartan_inverse(g) * cartan_matrix(g) == IntMatrix::identity(static_cast<std::size_t>(g.order())));
  }
}

TEST_CASE("p-adic digits") {
  const GroupSpec g(3, 2);
  CHECK(p_adic_digits(1, g) == std::vector<int>{0, 0});
  CHECK(p_adic_digits(9, g) == std::vector<int>{2, 2});
  CHECK(p_adic_digits(4, g) == std::vector<int>{0, 1});
  CHECK_THROWS_AS(p_adic_digits(0, g), Error);
  CHECK_THROWS_AS(p_adic_digits(10, g), Error);

  for (auto [p, v] : {std::pair{2, 4}, {3, 3}, {5, 2}}) {
    const GroupSpec h(p, v);
    for (Int j = 1; j <= h.order(); ++j) {
      Int back = 1, pw = 1;
      for (int d : p_adic_digits(j, h)) {
        CHECK(d >= 0);
        CHECK(d < p);
        back += d * pw;
        pw *= p;
      }
      CHECK(back == j);
    }
  }
}

TEST_CASE("restriction to the index-p subgroup") {
  CHECK(restrict_step(GroupSpec(2, 2), 3) == decomp({{2, 1}, {1, 1}}));
  CHECK(restrict_step(GroupSpec(2, 2), 4) == decomp({{2, 2}}));
  CHECK(restrict_step(GroupSpec(3, 1), 1) == decomp({{1, 1}}));
  CHECK_THROWS_AS(restrict_step(GroupSpec(3, 0), 1), Error);

  for (auto [p, v] : {std::pair{2, 3}, {3, 2}, {5, 2}}) {
    const GroupSpec g(p, v);
    for (Int j = 1; j <= g.order(); ++j) {
      const Decomposition r = restrict_step(g, j);
      CHECK(r.total_dimension() == j);
      for (auto [dim, m] : r.entries()) CHECK(dim <= g.order() / p);
    }
  }
}

TEST_CASE("restriction agrees with Jordan blocks of sigma^p") {
  // V_j is a single nilpotent Jordan block N of size j with sigma = 1 + N. The
  // generator of the index-p subgroup acts as sigma^p = 1 + N^p in char p; its
  // Jordan type comes from ranks of powers of N^p.
  for (auto [p, v] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
    const GroupSpec g(p, v);
    for (Int j = 1; j <= g.order(); ++j) {
      const auto n = static_cast<std::size_t>(j);
      FpMatrix nil(static_cast<std::uint32_t>(p), n, n);
      for (std::size_t i = 0; i + 1 < n; ++i) nil(i + 1, i) = 1;
      FpMatrix np = FpMatrix::identity(static_cast<std::uint32_t>(p), n);
      for (int k = 0; k < p; ++k) np = np * nil;
      std::vector<Int> r{j};
      FpMatrix pw = FpMatrix::identity(static_cast<std::uint32_t>(p), n);
      while (r.back() != 0) {
        pw = pw * np;
        r.push_back(static_cast<Int>(pw.rank()));
      }
      r.push_back(0);
      Decomposition expect;
      for (std::size_t s = 1; s + 1 < r.size(); ++s) expect.add(static_cast<Int>(s), r[s - 1] - 2 * r[s] + r[s + 1]);
      CHECK(restrict_step(g, j) == expect);
    }
  }
}

TEST_CASE("induction") {
  const GroupSpec g(2, 2);
  CHECK(induce(g, 1, 2) == Indecomposable{4});
  CHECK(induce(g, 2, 3) == Indecomposable{3});
  CHECK(induce(g, 0, 1) == Indecomposable{4});
  CHECK_THROWS_AS(induce(g, 1, 3), Error);
  CHECK_THROWS_AS(induce(g, 3, 1), Error);
  const GroupSpec h(3, 3);
  for (int w = 0; w <= 3; ++w)
    for (Int l = 1; l <= h.subgroup_order(w); ++l) CHECK(induce(h, w, l).dim == l * h.order() / h.subgroup_order(w));
}

TEST_CASE("relative projectivity") {
  const GroupSpec g(2, 2);
  CHECK(is_relatively_projective(decomp({{4, 2}}), g, 1));
  CHECK_FALSE(is_relatively_projective(decomp({{1, 1}}), g, 1));
  CHECK(is_relatively_projective(decomp({{2, 3}, {4, 1}}), g, 1));
  CHECK(is_relatively_projective(decomp({{1, 1}, {3, 2}}), g, 2));
  CHECK(is_relatively_projective(Decomposition{}, g, 0));
  for (auto [p, v] : {std::pair{2, 3}, {3, 2}, {5, 1}}) {
    const GroupSpec h(p, v);
    for (int w = 0; w <= v; ++w) CHECK(is_relatively_projective(regular_decomposition(h), h, w));
  }
}

TEST_CASE("heller shift") {
  const GroupSpec g(2, 2);
  CHECK(heller(g, 1) == Indecomposable{3});
  CHECK_FALSE(heller(g, 4).has_value());
  for (Int j = 1; j < g.order(); ++j) CHECK(heller(g, heller(g, j)->dim) == Indecomposable{j});
}

TEST_CASE("heller of the trivial module via the regular representation") {
  // k[Z/4] over F_2 with basis 1, s, s^2, s^3; sigma is the cyclic shift. The
  // kernel of the augmentation onto V_1 is spanned by s^i + s^{i+1}, i = 0..2.
  const std::uint32_t p = 2;
  FpMatrix shift(p, 4, 4);
  for (std::size_t i = 0; i < 4; ++i) shift((i + 1) % 4, i) = 1;
  const FpMatrix nil = shift - FpMatrix::identity(p, 4);
  FpMatrix kernel(p, 4, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    kernel(i, i) = 1;
    kernel(i + 1, i) = 1;
  }
  REQUIRE(kernel.rank() == 3);
  // ranks of N^k on the kernel: 3, 2, 1, 0 means a single block of size 3
  std::vector<std::size_t> ranks;
  FpMatrix img = kernel;
  for (int k = 0; k < 4; ++k) {
    ranks.push_back(img.rank());
    img = nil * img;
  }
  CHECK(ranks == std::vector<std::size_t>{3, 2, 1, 0});
  CHECK(heller(GroupSpec(2, 2), 1) == Indecomposable{3});
}

TEST_CASE("basis conversions") {
  const GroupSpec g3(3, 1);
  CHECK(to_simple_basis({K0Basis::Standard, {1, 0, 0}}, g3) == K0Vector{K0Basis::Simple, {1, 1, 1}});
  CHECK(to_simple_basis({K0Basis::Standard, {0, 0, 0}}, g3) == K0Vector{K0Basis::Simple, {0, 0, 0}});
  CHECK(to_simple_basis({K0Basis::Standard, {0, 0, 1}}, g3) == K0Vector{K0Basis::Simple, {1, 2, 3}});
  CHECK_THROWS_AS(to_simple_basis({K0Basis::Simple, {0, 0, 1}}, g3), Error);
  CHECK_THROWS_AS(from_simple_basis({K0Basis::Standard, {0, 0, 1}}, g3), Error);
  CHECK_THROWS_AS(to_simple_basis({K0Basis::Standard, {0, 1}}, g3), Error);

  const GroupSpec g4(2, 2);
  // min(i, j) * (0, 1, 0, 1) = (1+1, 2+2, 2+3, 2+4)
  CHECK(from_simple_basis({K0Basis::Simple, {2, 4, 5, 6}}, g4) == K0Vector{K0Basis::Standard, {0, 1, 0, 1}});
  CHECK(cartan_matrix(g4).apply(std::vector<Int>{0, 1, 0, 1}) == std::vector<Int>{2, 4, 5, 6});
  CHECK(from_simple_basis({K0Basis::Simple, {1, 1, 1, 1}}, g4) == K0Vector{K0Basis::Standard, {1, 0, 0, 0}});
}

TEST_CASE("basis conversions agree with the matrices and round-trip") {
  std::mt19937_64 rng(7);
  for (auto [p, v] : {std::pair{2, 0}, {2, 3}, {3, 2}, {5, 2}}) {
    const GroupSpec g(p, v);
    const auto n = static_cast<std::size_t>(g.order());
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Int> x(n);
      for (auto& c : x) c = static_cast<Int>(rng() % 201) - 100;
      const K0Vector simple = to_simple_basis({K0Basis::Standard, x}, g);
      CHECK(simple.coords == cartan_matrix(g).apply(x));
      CHECK(from_simple_basis(simple, g) == K0Vector{K0Basis::Standard, x});
      const K0Vector standard = from_simple_basis({K0Basis::Simple, x}, g);
      CHECK(standard.coords == cartan_inverse(g).apply(x));
      CHECK(to_simple_basis(standard, g) == K0Vector{K0Basis::Simple, x});
    }
  }
}

TEST_CASE("module from K0 class") {
  const GroupSpec g4(2, 2);
  CHECK(module_from_k0({K0Basis::Simple, {2, 4, 5, 6}}, g4) == decomp({{2, 1}, {4, 1}}));
  CHECK_THROWS_AS(module_from_k0({K0Basis::Simple, {0, 0, 0, 1}}, g4), Error);
  try {
    module_from_k0({K0Basis::Simple, {0, 0, 0, 1}}, g4);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NegativeMultiplicity);
  }
  CHECK(module_from_k0({K0Basis::Simple, {0, 0, 0, 0}}, g4).empty());

  std::mt19937_64 rng(11);
  const GroupSpec g(3, 2);
  for (int trial = 0; trial < 50; ++trial) {
    Decomposition d;
    for (Int j = 1; j <= g.order(); ++j) d.add(j, static_cast<Int>(rng() % 4));
    CHECK(module_from_k0(to_simple_basis(standard_vector(d, g), g), g) == d);
  }
}

TEST_CASE("regular representation") {
  CHECK(regular_decomposition(GroupSpec(2, 2)) == decomp({{4, 1}}));
  CHECK(regular_decomposition(GroupSpec(3, 0)) == decomp({{1, 1}}));
  CHECK(regular_decomposition(GroupSpec(5, 2)).total_dimension() == 25);
}

TEST_CASE("decomposition bookkeeping") {
  Decomposition d;
  d.add(3, 2);
  d.add(1, 1);
  CHECK(d.total_dimension() == 7);
  CHECK(d.dense(4) == std::vector<Int>{1, 0, 2, 0});
  CHECK(d.to_string() == "V_1 + V_3^2");
  d.add(3, -2);
  CHECK(d.dense(3) == std::vector<Int>{1, 0, 0});
  CHECK_THROWS_AS(d.add(1, -2), Error);
  CHECK_THROWS_AS(d.add(0, 1), Error);
  CHECK_THROWS_AS(Decomposition::from_dense(std::vector<Int>{1, -1}), Error);
}

TEST_CASE("floor division rounds toward negative infinity") {
  CHECK(floor_div(7, 3) == 2);
  CHECK(floor_div(-1, 2) == -1);
  CHECK(floor_div(-4, 2) == -2);
  CHECK(floor_div(-5, 3) == -2);
  CHECK(floor_div(0, 5) == 0);
}
