#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lierig/matrix.hpp"
#include "lierig/polynomial.hpp"
#include "lierig/subspace.hpp"
#include "oracles.hpp"

#include <algorithm>

using namespace lierig;

namespace {

RatMatrix rotation2() { return RatMatrix{{0, -1}, {1, 0}}; }

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-7")) == "-7");
  CHECK(to_string(parse_rational("0/5")) == "0");
  CHECK(to_string(Rational(4) / 2) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("--1"), std::invalid_argument);
}

TEST_CASE("vector helpers") {
  Vector a{1, 2, 3};
  Vector b = unit_vector(3, 1);
  CHECK(a + b == Vector{1, 3, 3});
  CHECK(a - a == zero_vector(3));
  CHECK(is_zero(a - a));
  axpy(a, Rational(-2), b);
  CHECK(a == Vector{1, 0, 3});
  CHECK(Rational(1, 2) * a == Vector{Rational(1, 2), 0, Rational(3, 2)});
}

TEST_CASE("rank, kernel and inverse on a hand example") {
  // Third row is the sum of the first two.
  RatMatrix m{{1, 2, 3}, {0, 1, 1}, {1, 3, 4}};
  CHECK(rank(m) == 2);
  CHECK(fraction_free_rank(m) == 2);
  const auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == Vector{-1, -1, 1});
  CHECK_THROWS_AS(inverse(m), std::domain_error);
  CHECK_THROWS_AS(inverse(RatMatrix(2, 3)), std::invalid_argument);

  RatMatrix a{{2, 1}, {1, 1}};
  CHECK(inverse(a) == RatMatrix{{1, -1}, {-1, 2}});
}

TEST_CASE("row echelon pivots follow the first nonzero row") {
  RatMatrix m{{0, 0, 2}, {0, 3, 1}, {0, 6, 2}};
  const Echelon e = row_echelon(m, true);
  CHECK(e.pivots == std::vector<std::size_t>{1, 2});
  CHECK(e.form.row(0) == Vector{0, 1, 0});
  CHECK(e.form.row(1) == Vector{0, 0, 1});
  CHECK(e.form.row(2) == zero_vector(3));
}

TEST_CASE("empty and zero matrices") {
  CHECK(rank(RatMatrix(0, 4)) == 0);
  CHECK(kernel_basis(RatMatrix(0, 3)).size() == 3);
  CHECK(rank(RatMatrix(3, 3)) == 0);
  CHECK(fraction_free_rank(RatMatrix(3, 2)) == 0);
  CHECK(char_poly(RatMatrix(0, 0)) == RatPolynomial{1});
}

TEST_CASE("property: RREF rank, Bareiss rank and minors agree") {
  oracle::Gen gen(11);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t r = gen.integer(1, 5), c = gen.integer(1, 5);
    RatMatrix m = gen.matrix(r, c, 3, gen.integer(0, 80));
    if (trial % 4 == 0 && r > 1)  // force a dependent row
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2 - m(r > 2 ? 1 : 0, j);
    const std::size_t expected = oracle::rank_by_minors(m);
    CHECK(rank(m) == expected);
    CHECK(fraction_free_rank(m) == expected);
    const auto k = kernel_basis(m);
    CHECK(k.size() + expected == c);
    for (const auto& v : k) CHECK(is_zero(m * v));
  }
}

TEST_CASE("property: inverse is a two-sided inverse") {
  oracle::Gen gen(12);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = gen.integer(1, 5);
    const RatMatrix a = gen.invertible(n, 3);
    const RatMatrix b = inverse(a);
    CHECK(a * b == RatMatrix::identity(n));
    CHECK(b * a == RatMatrix::identity(n));
  }
}

TEST_CASE("signature of small symmetric matrices") {
  CHECK(signature(RatMatrix{{2, 0}, {0, -3}}) == Inertia{1, 1, 0});
  // Zero diagonal forces an off-diagonal pivot.
  CHECK(signature(RatMatrix{{0, 1}, {1, 0}}) == Inertia{1, 1, 0});
  CHECK(signature(RatMatrix{{1, 1}, {1, 1}}) == Inertia{1, 0, 1});
  CHECK(signature(RatMatrix(3, 3)) == Inertia{0, 0, 3});
  CHECK_THROWS_AS(signature(RatMatrix{{1, 2}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("property: signature matches Descartes count and is congruence invariant") {
  oracle::Gen gen(13);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = gen.integer(1, 5);
    const RatMatrix s = gen.symmetric(n);
    const auto d = oracle::inertia_by_descartes(s);
    const Inertia in = signature(s);
    CHECK(in == Inertia{d.positive, d.negative, d.zero});
    const RatMatrix p = gen.invertible(n);
    CHECK(signature(p.transpose() * s * p) == in);
  }
}

TEST_CASE("polynomial arithmetic") {
  const RatPolynomial x = RatPolynomial::monomial(1);
  const RatPolynomial p = (x - RatPolynomial{1}) * (x - RatPolynomial{2});
  CHECK(p == RatPolynomial{2, -3, 1});
  CHECK(p.degree() == 2);
  CHECK(RatPolynomial().degree() == -1);
  CHECK(p.derivative() == RatPolynomial{-3, 2});
  CHECK(p(Rational(3)) == 2);
  const auto [q, r] = divmod(p, x - RatPolynomial{1});
  CHECK(q == x - RatPolynomial{2});
  CHECK(r.is_zero());
  CHECK_THROWS_AS(divmod(p, RatPolynomial()), std::domain_error);
  CHECK(gcd(p, x * x - RatPolynomial{1}) == x - RatPolynomial{1});
  CHECK(p.to_string() == "x^2 - 3*x + 2");
  CHECK(RatPolynomial{Rational(1, 2), 0, -1}.monic() == RatPolynomial{Rational(-1, 2), 0, 1});
}

TEST_CASE("characteristic and minimal polynomials") {
  CHECK(char_poly(rotation2()) == RatPolynomial{1, 0, 1});
  CHECK(min_poly(RatMatrix::identity(3)) == RatPolynomial{-1, 1});
  // Jordan block: min poly (x-2)^2 is not squarefree.
  RatMatrix j{{2, 1}, {0, 2}};
  CHECK(min_poly(j) == RatPolynomial{4, -4, 1});
  CHECK_FALSE(is_squarefree(min_poly(j)));
  CHECK(is_squarefree(min_poly(RatMatrix::diagonal({1, 1, 2}))));
  CHECK_THROWS(is_squarefree(RatPolynomial()));
}

TEST_CASE("property: char_poly agrees with det(xI - A) and Cayley-Hamilton holds") {
  oracle::Gen gen(14);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = gen.integer(1, 5);
    const RatMatrix a = gen.matrix(n, n);
    const RatPolynomial p = char_poly(a);
    CHECK(p.degree() == static_cast<int>(n));
    for (int x = -2; x <= static_cast<int>(n); ++x) CHECK(p(Rational(x)) == oracle::char_poly_at(a, Rational(x)));
    CHECK(p(a).is_zero());
    const RatPolynomial m = min_poly(a);
    CHECK(m(a).is_zero());
    CHECK(divmod(p, m).second.is_zero());
  }
}

TEST_CASE("Sturm real root counts") {
  const RatPolynomial x = RatPolynomial::monomial(1);
  CHECK(count_real_roots(x * x + RatPolynomial{1}) == 0);
  CHECK(count_real_roots(x * x - RatPolynomial{2}) == 2);
  // x^3 + 1 = (x + 1)(x^2 - x + 1)
  CHECK(count_real_roots(x * x * x + RatPolynomial{1}) == 1);
  // repeated roots are counted once
  CHECK(count_real_roots((x - RatPolynomial{1}) * (x - RatPolynomial{1}) * x) == 2);
  CHECK(count_real_roots(RatPolynomial{5}) == 0);
  const auto seq = sturm_sequence(x * x - RatPolynomial{2});
  CHECK(seq.size() == 3);
}

TEST_CASE("property: Sturm counts products of known real and complex factors") {
  oracle::Gen gen(15);
  const RatPolynomial x = RatPolynomial::monomial(1);
  for (int trial = 0; trial < 50; ++trial) {
    RatPolynomial p{1};
    std::vector<Rational> roots;
    const int real = gen.integer(0, 4);
    for (int i = 0; i < real; ++i) {
      const Rational r = gen.rational(4);
      p = p * (x - RatPolynomial{r});
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    std::vector<std::pair<Rational, Rational>> pairs;
    for (int i = gen.integer(0, 2); i > 0; --i) {
      // (x - a)^2 + b^2 with b > 0
      const Rational a = gen.rational(3);
      const Rational b = gen.integer(1, 3);
      p = p * RatPolynomial{a * a + b * b, -2 * a, 1};
      if (std::find(pairs.begin(), pairs.end(), std::pair{a, b}) == pairs.end()) pairs.emplace_back(a, b);
    }
    CHECK(count_real_roots(p) == roots.size());
    CHECK(squarefree_part(p).degree() == static_cast<int>(roots.size() + 2 * pairs.size()));
    CHECK(is_squarefree(squarefree_part(p)));
  }
}

TEST_CASE("subspace operations") {
  const Subspace a = Subspace::span(3, {{1, 0, 0}, {0, 1, 0}});
  const Subspace b = Subspace::span(3, {{0, 1, 1}, {0, 2, 2}});
  CHECK(a.dim() == 2);
  CHECK(b.dim() == 1);
  CHECK((a + b) == Subspace::whole(3));
  CHECK(a.intersect(b).dim() == 0);
  CHECK(a.intersect(Subspace::span(3, {{1, 1, 0}, {0, 0, 1}})) == Subspace::span(3, {{1, 1, 0}}));
  CHECK(a.contains(Vector{2, -1, 0}));
  CHECK_FALSE(a.contains(Vector{0, 0, 1}));
  CHECK(a.coordinates(Vector{2, -1, 0}) == Vector{2, -1});
  CHECK_THROWS(a.coordinates(Vector{0, 0, 1}));
  // Different spanning sets of one space compare equal.
  CHECK(Subspace::span(3, {{1, 1, 0}, {1, -1, 0}}) == a);
}

TEST_CASE("property: dim(A + B) + dim(A n B) = dim A + dim B") {
  oracle::Gen gen(16);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = gen.integer(1, 5);
    std::vector<Vector> va, vb;
    for (int i = gen.integer(0, 3); i > 0; --i) va.push_back(gen.matrix(1, n, 2).row(0));
    for (int i = gen.integer(0, 3); i > 0; --i) vb.push_back(gen.matrix(1, n, 2).row(0));
    const Subspace a = Subspace::span(n, va), b = Subspace::span(n, vb);
    const Subspace meet = a.intersect(b);
    CHECK((a + b).dim() + meet.dim() == a.dim() + b.dim());
    CHECK(a.contains(meet));
    CHECK(b.contains(meet));
  }
}
