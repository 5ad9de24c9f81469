#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "lierig/cohomology.hpp"
#include "lierig/derivations.hpp"
#include "lierig/lie_core.hpp"
#include "lierig/structure.hpp"

#include <set>

using namespace lierig;

namespace {

std::size_t idx(const catalog::CatalogEntry& e, const std::string& label) {
  for (std::size_t i = 0; i < e.labels.size(); ++i)
    if (e.labels[i] == label) return i;
  throw std::out_of_range(label);
}

// Coefficient of `out` in [a, b] for a catalog entry, by label.
Rational c(const std::string& name, const std::string& a, const std::string& b, const std::string& out) {
  const auto& e = catalog::get(name);
  return e.constants->coefficient(idx(e, a), idx(e, b), idx(e, out));
}

}  // namespace

TEST_CASE("lookup") {
  CHECK(catalog::get("g4_2").dim == 4);
  CHECK_THROWS_AS(catalog::get("g9_1"), std::out_of_range);
  std::set<std::string> names;
  for (const auto& e : catalog::list()) {
    CHECK(names.insert(e.name).second);
    CHECK(e.constants.has_value() != e.is_external());
    if (e.constants) {
      CHECK(e.constants->dim() == e.dim);
      CHECK(e.labels.size() == e.dim);
    }
    CHECK_FALSE(e.provenance.empty());
  }
}

TEST_CASE("brackets as printed") {
  CHECK(c("g4_2", "X1", "X3", "X2") == 1);
  CHECK(c("g4_2", "X3", "X2", "X1") == 1);
  CHECK(c("g4_2", "X4", "X1", "X1") == 1);
  CHECK(c("g4_2", "X4", "X2", "X2") == 1);
  CHECK(c("g8_37", "X1", "X2", "X5") == 1);
  CHECK(c("g8_37", "X3", "X4", "X5") == 1);
  CHECK(c("g8_37", "X6", "X5", "X5") == 2);
  CHECK(c("g8_37", "X8", "X3", "X4") == -1);
  CHECK(c("N5_3", "Y1", "Y2", "Y3") == 1);
  CHECK(c("N5_3", "Y1", "Y3", "Y4") == 1);
  CHECK(c("N5_3", "Y2", "Y3", "Y5") == 1);
  CHECK(catalog::get("N5_3").constants->brackets().size() == 3);
  CHECK(c("g7_9", "X2", "X3", "X5") == 1);
  CHECK(c("g7_9_printed", "X2", "X3", "X4") == 1);
  CHECK(c("g7_10", "X1", "X2", "X3") == 1);
  CHECK(c("g7_10_printed", "X1", "X2", "X3") == 0);
}

TEST_CASE("every asserted entry is a solvable Lie algebra with its expected invariants") {
  for (const auto& e : catalog::list()) {
    if (e.is_external() || e.kind == catalog::EntryKind::PrintedVariant) continue;
    const auto& g = *e.constants;
    REQUIRE_MESSAGE(is_lie_algebra(g), e.name);
    CHECK(is_solvable(g));
    const auto& x = e.expected;
    if (x.rigid) CHECK_MESSAGE((h_dim(g, 2) == 0) == *x.rigid, e.name);
    if (x.nilradical_dim) CHECK_MESSAGE(nilradical(g).dim() == *x.nilradical_dim, e.name);
    if (x.completely_solvable) CHECK_MESSAGE(is_completely_solvable(g) == *x.completely_solvable, e.name);
  }
}

TEST_CASE("printed variants disagree with their canonical entries") {
  CHECK_FALSE(is_lie_algebra(fixtures::algebra("g7_9_printed")));
  CHECK_FALSE(is_lie_algebra(fixtures::algebra("g8_37_printed")));
  CHECK_FALSE(is_lie_algebra(fixtures::algebra("g8_38_printed")));
  const auto& g710 = fixtures::algebra("g7_10_printed");
  REQUIRE(is_lie_algebra(g710));
  CHECK(h_dim(g710, 2) == 4);
  // Its nilradical is abelian, not the Heisenberg-plus-line of the pairing table.
  CHECK(induced_algebra(g710, nilradical(g710)).is_abelian());
  for (const auto& e : catalog::list())
    if (e.kind == catalog::EntryKind::PrintedVariant) CHECK_NOTHROW(catalog::get(e.variant_of));
}

TEST_CASE("Heisenberg algebras") {
  CHECK_THROWS_AS(catalog::heisenberg(0), std::invalid_argument);
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto h = catalog::heisenberg(n);
    CHECK(h.dim() == 2 * n + 1);
    CHECK(is_lie_algebra(h));
    CHECK(center(h).dim() == 1);
    CHECK(lower_central_dims(h) == std::vector<std::size_t>{2 * n + 1, 1, 0});
  }
  CHECK(catalog::heisenberg(1) == fixtures::algebra("h1"));
}

TEST_CASE("Heisenberg rigid forms") {
  CHECK_THROWS_AS(catalog::heisenberg_rigid_form(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(catalog::heisenberg_rigid_form(0, 0), std::invalid_argument);
  CHECK(catalog::heisenberg_rigid_form_labels(2) ==
        std::vector<std::string>{"X1", "X2", "X3", "X4", "X5", "Y1", "Y2", "Y3"});
  for (std::size_t n = 1; n <= 2; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      const auto g = catalog::heisenberg_rigid_form(n, k);
      CHECK(g.dim() == 3 * n + 2);
      CHECK(is_lie_algebra(g));
      CHECK(h_dim(g, 2) == 0);
      CHECK(is_completely_solvable(g) == (k == 0));
      CHECK(nilradical(g).dim() == 2 * n + 1);
    }
  // Hand check of (1, 1): [Y1,X1] = X2, [Y1,X2] = -X1, Y2 weights (1,1,2).
  const auto g = catalog::heisenberg_rigid_form(1, 1);
  CHECK(g.basis_bracket(3, 0) == Vector{0, 1, 0, 0, 0});
  CHECK(g.basis_bracket(3, 1) == Vector{-1, 0, 0, 0, 0});
  CHECK(g.basis_bracket(4, 2) == Vector{0, 0, 2, 0, 0});
}

TEST_CASE("nilradical pairing rows") {
  const auto& rows = catalog::table1_pairs();
  CHECK(rows.size() == 10);
  CHECK(rows[0].dimension == 4);
  CHECK(rows[0].nilradical == "abelian");
  CHECK(rows[0].forms[0].name == "g4_1");
  CHECK(rows[0].forms[0].external);
  CHECK(rows[0].forms[1].name == "g4_2");
  std::size_t h2_rows = 0;
  for (const auto& row : rows) {
    for (const auto& f : row.forms) {
      const auto& e = catalog::get(f.name);
      CHECK(e.is_external() == f.external);
      CHECK(e.dim == row.dimension);
      CHECK(e.expected.nilradical_name == row.nilradical);
    }
    if (row.nilradical == "h2") {
      ++h2_rows;
      CHECK(row.forms.size() == 3);
    }
  }
  CHECK(h2_rows == 1);
}

TEST_CASE("forms sharing a row have matching nilradicals and are pairwise distinguished") {
  for (const auto& row : catalog::table1_pairs()) {
    std::vector<const catalog::CatalogEntry*> forms;
    for (const auto& f : row.forms)
      if (!f.external) forms.push_back(&catalog::get(f.name));
    for (const auto* e : forms) {
      const auto& g = *e->constants;
      const auto nil = induced_algebra(g, nilradical(g));
      if (auto ref = catalog::nilradical_reference(row.nilradical, nil.dim()))
        CHECK_MESSAGE(fingerprint(nil) == fingerprint(*ref), e->name);
    }
    for (std::size_t a = 0; a < forms.size(); ++a)
      for (std::size_t b = a + 1; b < forms.size(); ++b) {
        const auto& ga = *forms[a]->constants;
        const auto& gb = *forms[b]->constants;
        CHECK(fingerprint(induced_algebra(ga, nilradical(ga))) == fingerprint(induced_algebra(gb, nilradical(gb))));
        CHECK(distinguish(ga, gb).non_isomorphic());
      }
  }
}

TEST_CASE("nilradical references") {
  CHECK(catalog::nilradical_reference("abelian", 4) == abelian(4));
  CHECK(catalog::nilradical_reference("h1+R", 4)->dim() == 4);
  CHECK_FALSE(catalog::nilradical_reference("N6_14", 6));
}

TEST_CASE("every rigid fixture has a nonzero diagonal derivation") {
  for (const auto& e : catalog::list()) {
    if (e.is_external() || !e.expected.rigid || !*e.expected.rigid) continue;
    CHECK_MESSAGE(diagonal_derivations(*e.constants).dim() >= 1, e.name);
  }
}
