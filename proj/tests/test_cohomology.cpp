#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "lierig/cohomology.hpp"
#include "lierig/derivations.hpp"
#include "lierig/lie_core.hpp"
#include "oracles.hpp"

#include <chrono>

using namespace lierig;

TEST_CASE("binomials and colex ranks") {
  CHECK(binomial(8, 2) == 28);
  CHECK(binomial(8, 3) == 56);
  CHECK(binomial(3, 5) == 0);
  CHECK(CochainSpace::colex_rank({0, 1}) == 0);
  CHECK(CochainSpace::colex_rank({0, 2}) == 1);
  CHECK(CochainSpace::colex_rank({1, 2}) == 2);
  CHECK(CochainSpace::colex_rank({0, 3}) == 3);
  CHECK(CochainSpace::colex_rank({0, 1, 2}) == 0);
  CHECK(CochainSpace::colex_rank({0, 1, 3}) == 1);
  const CochainSpace c(4, 2);
  CHECK(c.dimension() == 24);
  for (std::size_t r = 0; r < c.subset_count(); ++r) CHECK(CochainSpace::colex_rank(c.subset(r)) == r);
  CHECK(c.index(3, {1, 2}) == 2 * 4 + 3);
  CHECK_THROWS_AS(CochainSpace(2, 3), std::invalid_argument);
}

TEST_CASE("differential shapes") {
  const auto& g = fixtures::algebra("g8_37");
  CHECK(differential_matrix(g, 0).rows() == 64);
  CHECK(differential_matrix(g, 0).cols() == 8);
  CHECK(differential_matrix(g, 1).rows() == 224);
  CHECK(differential_matrix(g, 1).cols() == 64);
  CHECK(differential_matrix(g, 2).rows() == 448);
  CHECK(differential_matrix(g, 2).cols() == 224);
  CHECK_THROWS_AS(differential_matrix(g, 3), std::invalid_argument);
  CHECK(differential_matrix(abelian(1), 1).rows() == 0);
  CHECK(differential_matrix(abelian(2), 2).rows() == 0);
}

TEST_CASE("differentials equal the general coboundary formula") {
  for (const auto& name : fixtures::lie_entries(5)) {
    const auto& g = fixtures::algebra(name);
    for (std::size_t k = 0; k <= 2 && k < g.dim(); ++k)
      CHECK_MESSAGE(differential_matrix(g, k) == oracle::coboundary_matrix(g, k), name << " d" << k);
  }
  // One full-size check at dimension 8.
  const auto& g8 = fixtures::algebra("g8_39");
  CHECK(differential_matrix(g8, 2) == oracle::coboundary_matrix(g8, 2));
}

TEST_CASE("hand values at dimension 2 and 3") {
  // a2 abelian: every cochain is a cocycle and no coboundaries, so H^k = C^k.
  const auto r = full_report(fixtures::algebra("a2"));
  CHECK(r.h_dims == std::array<std::size_t, 3>{2, 4, 2});
  // h1: H^0 = center (1), H^1 = Der/Inner (6 - 2 = 4), H^2 = 5.
  const auto h = full_report(fixtures::algebra("h1"));
  CHECK(h.h_dims == std::array<std::size_t, 3>{1, 4, 5});
  CHECK(h.cochain_dims == std::array<std::size_t, 4>{3, 9, 9, 3});
  CHECK_FALSE(is_algebraically_rigid(fixtures::algebra("h1")));
  CHECK(is_algebraically_rigid(fixtures::algebra("g4_2")));
}

TEST_CASE("cross identities on every fixture") {
  for (const auto& name : fixtures::lie_entries()) {
    const auto& g = fixtures::algebra(name);
    const RatMatrix d0 = differential_matrix(g, 0);
    const RatMatrix d1 = differential_matrix(g, 1);
    const RatMatrix d2 = differential_matrix(g, 2);
    CHECK_MESSAGE((d1 * d0).is_zero(), name);
    CHECK_MESSAGE((d2 * d1).is_zero(), name);
    const auto r = full_report(g);
    CHECK(r.h_dims[0] == center(g).dim());
    const auto der = derivation_space(g);
    CHECK(r.h_dims[1] == der.dim() - der.inner_dim);
    for (std::size_t k = 0; k < 3; ++k) CHECK(r.h_dims[k] == h_dim(g, k));
  }
}

TEST_CASE("property: d o d = 0 on random extensions") {
  oracle::Gen gen(41);
  for (int t = 0; t < 10; ++t) {
    const auto g = t % 2 ? gen.abelian_extension(gen.integer(1, 2), gen.integer(2, 4))
                         : gen.derivation_extension(fixtures::algebra(t % 4 ? "h1" : "N5_3"));
    REQUIRE(is_lie_algebra(g));
    CHECK((differential_matrix(g, 1) * differential_matrix(g, 0)).is_zero());
    CHECK((differential_matrix(g, 2) * differential_matrix(g, 1)).is_zero());
  }
}

TEST_CASE("property: cohomology dimensions are basis independent") {
  oracle::Gen gen(42);
  for (const std::string name : {"h1", "g4_rotation", "g5_2", "N5_3"}) {
    const auto& g = fixtures::algebra(name);
    const auto h = change_basis(g, gen.invertible(g.dim()));
    CHECK(full_report(h).h_dims == full_report(g).h_dims);
  }
}

TEST_CASE("non-Lie input is rejected") {
  CHECK_THROWS_AS(h_dim(*catalog::get("g7_9_printed").constants, 2), std::domain_error);
}

TEST_CASE("dimension 8 second differential rank is fast") {
  const auto& g = fixtures::algebra("g8_40");
  const auto start = std::chrono::steady_clock::now();
  const std::size_t r = rank(differential_matrix(g, 2));
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(r > 0);
  CHECK(seconds < 10.0);
}
