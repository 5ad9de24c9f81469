#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "lierig/cohomology.hpp"
#include "lierig/derivations.hpp"
#include "lierig/lie_core.hpp"
#include "lierig/structure.hpp"
#include "oracles.hpp"

using namespace lierig;

TEST_CASE("nilradical equals the brute-force maximal nilpotent ideal at dim <= 5") {
  for (const auto& name : fixtures::lie_entries(5)) {
    const auto& g = fixtures::algebra(name);
    const Subspace nil = nilradical(g);
    CHECK_MESSAGE(nil == Subspace::span(g.dim(), oracle::brute_force_nilradical(g)), name);
    CHECK(is_ideal(g, nil));
    CHECK(is_nilpotent(induced_algebra(g, nil)));
  }
}

TEST_CASE("property: nilradical of random abelian extensions") {
  oracle::Gen gen(51);
  for (int t = 0; t < 15; ++t) {
    const auto g = gen.abelian_extension(gen.integer(1, 2), gen.integer(1, 3));
    CHECK(nilradical(g) == Subspace::span(g.dim(), oracle::brute_force_nilradical(g)));
  }
}

TEST_CASE("nilradical of known algebras") {
  CHECK(nilradical(fixtures::algebra("N5_3")).dim() == 5);
  const auto& g = fixtures::algebra("g7_rotation");
  const Subspace nil = nilradical(g);
  CHECK(nil.dim() == 5);
  for (std::size_t i = 2; i < 7; ++i) CHECK(nil.contains(unit_vector(7, i)));
  CHECK(fingerprint(induced_algebra(g, nil)) == fingerprint(fixtures::algebra("N5_3")));
  StructureConstants sl2(3);
  sl2.set_bracket(0, 1, {0, 2, 0});
  sl2.set_bracket(0, 2, {0, 0, -2});
  sl2.set_bracket(1, 2, {1, 0, 0});
  CHECK_THROWS_AS(nilradical(sl2), std::domain_error);
}

TEST_CASE("adjoint associative closure") {
  // h1: ad X1, ad X2 and their products span 2 dims (products vanish).
  CHECK(adjoint_associative_closure(fixtures::algebra("h1")).dim() == 2);
  CHECK(adjoint_associative_closure(abelian(3)).dim() == 0);
}

TEST_CASE("semidirect sums reproduce the worked dim-7 tables") {
  const auto& n = fixtures::algebra("N5_3");
  const auto& tori = catalog::get("N5_3").tori;
  const auto& t1 = tori[0].generators;
  const auto& t2 = tori[1].generators;
  // Extension basis (T_1, T_2, Y_1..Y_5); the rotation generator goes first
  // to match the (Y, Z, X1..X5) naming.
  CHECK(semidirect_sum(n, {t2[1], t2[0]}) == fixtures::algebra("g7_rotation"));
  CHECK(semidirect_sum(n, t1) == fixtures::algebra("g7_normal"));
  CHECK(semidirect_sum(fixtures::algebra("a2"), catalog::get("a2").tori[0].generators) ==
        fixtures::algebra("g4_normal"));
  CHECK_THROWS_AS(semidirect_sum(n, {RatMatrix::identity(5)}), std::domain_error);
}

TEST_CASE("the rotation dim-7 form matches the canonical g7_9 up to relabeling") {
  CHECK(fingerprint(fixtures::algebra("g7_rotation")) == fingerprint(fixtures::algebra("g7_9")));
  // Relabel (Y, Z, X1..X5) -> (X6, X7, X1..X5).
  RatMatrix p(7, 7);
  for (std::size_t i = 0; i < 5; ++i) p(2 + i, i) = 1;
  p(0, 5) = 1;
  p(1, 6) = 1;
  CHECK(change_basis(fixtures::algebra("g7_rotation"), p) == fixtures::algebra("g7_9"));
}

TEST_CASE("the n=1, k=1 Heisenberg form is g5_2 after renaming the torus") {
  // g5_2 basis in family coordinates: X1, X2, X3, Y2, -Y1.
  RatMatrix p(5, 5);
  p(0, 0) = p(1, 1) = p(2, 2) = 1;
  p(4, 3) = 1;
  p(3, 4) = -1;
  CHECK(change_basis(catalog::heisenberg_rigid_form(1, 1), p) == fixtures::algebra("g5_2"));
}

TEST_CASE("fingerprint fields and first difference") {
  CHECK(fingerprint_fields().size() == 12);
  CHECK(fingerprint_fields().front() == "dim");
  CHECK(fingerprint_fields().back() == "completely_solvable");
  const Fingerprint a = fingerprint(fixtures::algebra("g4_normal"));
  const Fingerprint b = fingerprint(fixtures::algebra("g4_rotation"));
  CHECK(a.killing_signature == Inertia{2, 0, 2});
  CHECK(b.killing_signature == Inertia{1, 1, 2});
  CHECK(first_difference(a, b) == "killing_signature");
  CHECK(first_difference(a, a).empty());
  const Verdict v = distinguish(fixtures::algebra("g4_normal"), fixtures::algebra("g4_2"));
  CHECK(v.non_isomorphic());
  CHECK(v.field == "killing_signature");
  // Isomorphic inputs are only ever reported as indistinguishable.
  const Verdict same = distinguish(fixtures::algebra("g4_rotation"), fixtures::algebra("g4_2"));
  CHECK(same.kind == VerdictKind::Indistinguishable);
  CHECK(same.field.empty());
}

TEST_CASE("fingerprint of h1") {
  const Fingerprint f = fingerprint(fixtures::algebra("h1"));
  CHECK(f.dim == 3);
  CHECK(f.derived_dims == std::vector<std::size_t>{3, 1, 0});
  CHECK(f.center_dim == 1);
  CHECK(f.nilradical_dim == 3);
  CHECK(f.der_dim == 6);
  CHECK(f.h0 == 1);
  CHECK(f.h1 == 4);
  CHECK(f.h2 == 5);
  CHECK(f.killing_signature == Inertia{0, 0, 3});
  CHECK(f.completely_solvable);
}

TEST_CASE("property: fingerprint is invariant under random basis change") {
  oracle::Gen gen(52);
  for (const std::string name : {"h1", "g4_normal", "g4_rotation", "g5_2", "g5_k0", "g6_4"}) {
    const auto& g = fixtures::algebra(name);
    for (int t = 0; t < 2; ++t) {
      const auto h = change_basis(g, gen.invertible(g.dim()));
      CHECK_MESSAGE(fingerprint(h) == fingerprint(g), name);
      CHECK_FALSE(distinguish(g, h).non_isomorphic());
    }
  }
}

TEST_CASE("fingerprint rejects non-solvable and non-Lie input") {
  StructureConstants sl2(3);
  sl2.set_bracket(0, 1, {0, 2, 0});
  sl2.set_bracket(0, 2, {0, 0, -2});
  sl2.set_bracket(1, 2, {1, 0, 0});
  CHECK_THROWS_AS(fingerprint(sl2), std::domain_error);
  CHECK_THROWS_AS(fingerprint(*catalog::get("g8_37_printed").constants), std::domain_error);
}
