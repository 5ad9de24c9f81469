#include "lierig/catalog.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace lierig::catalog {

namespace {

using Term = std::pair<Rational, std::string>;

/// Bracket table written with basis labels, e.g. t.set("X4", "X3", {{2, "X3"}}).
class Table {
 public:
  explicit Table(std::vector<std::string> labels) : labels_(std::move(labels)), g_(labels_.size()) {}

  static Table numbered(std::size_t n, const std::string& prefix = "X") {
    std::vector<std::string> l;
    for (std::size_t i = 1; i <= n; ++i) l.push_back(prefix + std::to_string(i));
    return Table(std::move(l));
  }

  Table& set(const std::string& a, const std::string& b, const std::vector<Term>& terms) {
    Vector v = zero_vector(labels_.size());
    for (const auto& [c, label] : terms) v[index(label)] += c;
    g_.set_bracket(index(a), index(b), std::move(v));
    return *this;
  }

  std::size_t index(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw std::logic_error("catalog table: unknown label " + label);
    return static_cast<std::size_t>(it - labels_.begin());
  }

  const std::vector<std::string>& labels() const { return labels_; }
  const StructureConstants& constants() const { return g_; }

 private:
  std::vector<std::string> labels_;
  StructureConstants g_;
};

std::string x(int i) { return "X" + std::to_string(i); }

/// [X1,X3]=X2, [X3,X2]=X1, [X4,X1]=X1, [X4,X2]=X2 (rotation X3, scaling X4)
void rotation_block4(Table& t, int a, int b, int rot, int scale) {
  t.set(x(a), x(rot), {{1, x(b)}});
  t.set(x(rot), x(b), {{1, x(a)}});
  t.set(x(scale), x(a), {{1, x(a)}});
  t.set(x(scale), x(b), {{1, x(b)}});
}

Table g4_2() {
  Table t = Table::numbered(4);
  rotation_block4(t, 1, 2, 3, 4);
  return t;
}

Table g5_2() {
  Table t = Table::numbered(5);
  t.set("X1", "X2", {{1, "X3"}});
  t.set("X4", "X1", {{1, "X1"}});
  t.set("X4", "X2", {{1, "X2"}});
  t.set("X4", "X3", {{2, "X3"}});
  t.set("X5", "X1", {{-1, "X2"}});
  t.set("X5", "X2", {{1, "X1"}});
  return t;
}

Table g6_4() {
  Table t = Table::numbered(6);
  rotation_block4(t, 1, 2, 3, 4);
  t.set("X5", "X6", {{1, "X5"}});
  return t;
}

Table g7_9(bool printed) {
  Table t = Table::numbered(7);
  t.set("X1", "X2", {{1, "X3"}});
  t.set("X1", "X3", {{1, "X4"}});
  t.set("X2", "X3", {{1, printed ? "X4" : "X5"}});
  t.set("X6", "X1", {{-1, "X2"}});
  t.set("X6", "X2", {{1, "X1"}});
  t.set("X6", "X4", {{-1, "X5"}});
  t.set("X6", "X5", {{1, "X4"}});
  t.set("X7", "X1", {{1, "X1"}});
  t.set("X7", "X2", {{1, "X2"}});
  t.set("X7", "X3", {{2, "X3"}});
  t.set("X7", "X4", {{3, "X4"}});
  t.set("X7", "X5", {{3, "X5"}});
  return t;
}

Table g7_10(bool printed) {
  Table t = Table::numbered(7);
  if (!printed) t.set("X1", "X2", {{1, "X3"}});
  t.set("X5", "X1", {{1, "X1"}});
  t.set("X5", "X2", {{1, "X2"}});
  t.set("X5", "X3", {{2, "X3"}});
  t.set("X6", "X1", {{-1, "X2"}});
  t.set("X6", "X2", {{1, "X1"}});
  t.set("X7", "X4", {{1, "X4"}});
  return t;
}

Table g8_34() {
  Table t = Table::numbered(8);
  rotation_block4(t, 1, 2, 3, 4);
  t.set("X5", "X7", {{1, "X6"}});
  t.set("X7", "X6", {{1, "X5"}});
  t.set("X8", "X5", {{1, "X5"}});
  t.set("X8", "X6", {{1, "X6"}});
  return t;
}

Table g8_35() {
  Table t = Table::numbered(8);
  rotation_block4(t, 1, 2, 3, 4);
  t.set("X5", "X6", {{1, "X6"}});
  t.set("X7", "X8", {{1, "X8"}});
  return t;
}

Table g8_36() {
  Table t = Table::numbered(8);
  t.set("X1", "X2", {{1, "X4"}});
  t.set("X1", "X3", {{1, "X5"}});
  for (int i : {1, 4, 5}) t.set("X6", x(i), {{1, x(i)}});
  t.set("X7", "X2", {{-1, "X3"}});
  t.set("X7", "X3", {{1, "X2"}});
  t.set("X7", "X4", {{-1, "X5"}});
  t.set("X7", "X5", {{1, "X4"}});
  for (int i : {2, 3, 4, 5}) t.set("X8", x(i), {{1, x(i)}});
  return t;
}

/// Shared part of the two forms over h2: [X1,X2] = [X3,X4] = X5 and X6
/// scaling the nilradical. `scaled` lists the X_i with [X6,X_i] = X_i.
Table h2_forms_base(const std::vector<int>& scaled) {
  Table t = Table::numbered(8);
  t.set("X1", "X2", {{1, "X5"}});
  t.set("X3", "X4", {{1, "X5"}});
  for (int i : scaled) t.set("X6", x(i), {{1, x(i)}});
  t.set("X6", "X5", {{2, "X5"}});
  t.set("X8", "X3", {{-1, "X4"}});
  t.set("X8", "X4", {{1, "X3"}});
  return t;
}

const std::vector<int> kPrintedScaling{1, 2};
const std::vector<int> kFullScaling{1, 2, 3, 4};

Table g8_37(bool printed) {
  Table t = h2_forms_base(printed ? kPrintedScaling : kFullScaling);
  t.set("X7", "X1", {{-1, "X2"}});
  t.set("X7", "X2", {{1, "X1"}});
  return t;
}

Table g8_38(bool printed) {
  Table t = h2_forms_base(printed ? kPrintedScaling : kFullScaling);
  t.set("X7", "X1", {{1, "X1"}});
  t.set("X7", "X2", {{-1, "X2"}});
  return t;
}

Table g8_39() {
  Table t = Table::numbered(8);
  for (int i = 2; i <= 4; ++i) t.set("X1", x(i), {{1, x(i + 1)}});
  t.set("X3", "X2", {{1, "X6"}});
  t.set("X6", "X2", {{1, "X5"}});
  const int weights[] = {1, 1, 2, 3, 4, 3};
  for (int i = 1; i <= 6; ++i) t.set("X7", x(i), {{weights[i - 1], x(i)}});
  t.set("X8", "X1", {{1, "X2"}});
  t.set("X8", "X2", {{-1, "X1"}});
  t.set("X8", "X4", {{-1, "X6"}});
  t.set("X8", "X6", {{1, "X4"}});
  return t;
}

Table g8_40() {
  Table t = Table::numbered(8);
  for (int i = 2; i <= 4; ++i) t.set("X1", x(i), {{1, x(i + 2)}});
  t.set("X2", "X3", {{1, "X6"}});
  t.set("X4", "X2", {{1, "X5"}});
  const int weights[] = {1, 1, 2, 2, 3, 3};
  for (int i = 1; i <= 6; ++i) t.set("X7", x(i), {{weights[i - 1], x(i)}});
  t.set("X8", "X1", {{1, "X2"}});
  t.set("X8", "X2", {{-1, "X1"}});
  t.set("X8", "X5", {{1, "X6"}});
  t.set("X8", "X6", {{-1, "X5"}});
  return t;
}

Table n5_3() {
  Table t = Table::numbered(5, "Y");
  t.set("Y1", "Y2", {{1, "Y3"}});
  t.set("Y1", "Y3", {{1, "Y4"}});
  t.set("Y2", "Y3", {{1, "Y5"}});
  return t;
}

RatMatrix diag(std::initializer_list<long> d) {
  Vector v;
  for (long x : d) v.emplace_back(x);
  return RatMatrix::diagonal(v);
}

std::vector<NamedTorus> h1_tori() {
  return {{"t1", {diag({1, 0, 1}), diag({0, 1, 1})}},
          {"t2", {diag({1, 1, 2}), RatMatrix{{0, -1, 0}, {1, 0, 0}, {0, 0, 0}}}}};
}

std::vector<NamedTorus> a2_tori() {
  return {{"t1", {diag({1, 0}), diag({0, 1})}}, {"t2", {diag({1, 1}), RatMatrix{{0, -1}, {1, 0}}}}};
}

RatMatrix n5_3_rotation() {
  return RatMatrix{{0, 1, 0, 0, 0}, {-1, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 1}, {0, 0, 0, -1, 0}};
}

std::vector<NamedTorus> n5_3_tori() {
  return {{"t1", {diag({1, 0, 1, 2, 1}), diag({0, 1, 1, 1, 2})}},
          {"t2", {diag({1, 1, 2, 3, 3}), n5_3_rotation()}}};
}

/// Torus generators acting on the last labels: [T_a, x] = D_a x.
Table extension(const std::vector<std::string>& torus_labels, const Table& base,
                const std::vector<RatMatrix>& gens) {
  std::vector<std::string> labels = torus_labels;
  labels.insert(labels.end(), base.labels().begin(), base.labels().end());
  Table t(labels);
  const auto& bl = base.labels();
  for (const auto& [key, v] : base.constants().brackets()) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] != 0) terms.emplace_back(v[k], bl[k]);
    t.set(bl[key.first], bl[key.second], terms);
  }
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t j = 0; j < bl.size(); ++j) {
      std::vector<Term> terms;
      for (std::size_t r = 0; r < bl.size(); ++r)
        if (gens[a](r, j) != 0) terms.emplace_back(gens[a](r, j), bl[r]);
      if (!terms.empty()) t.set(torus_labels[a], bl[j], terms);
    }
  return t;
}

Table a2_table() { return Table({"Y1", "Y2"}); }

CatalogEntry make(std::string name, EntryKind kind, const Table& t, Expectation e, std::string provenance) {
  CatalogEntry c;
  c.name = std::move(name);
  c.kind = kind;
  c.dim = t.labels().size();
  c.labels = t.labels();
  c.constants = t.constants();
  c.expected = std::move(e);
  c.provenance = std::move(provenance);
  return c;
}

CatalogEntry external(std::string name, std::size_t dim, std::string nilradical) {
  CatalogEntry c;
  c.name = std::move(name);
  c.kind = EntryKind::External;
  c.dim = dim;
  c.expected.nilradical_name = std::move(nilradical);
  c.provenance = "normal form of the complex classification, referenced by name only";
  return c;
}

Expectation rigid_form(std::size_t nil_dim, std::string nil_name, bool cs, std::string normal_form) {
  return {true, nil_dim, std::move(nil_name), cs, std::move(normal_form)};
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;

  {
    Table h1 = Table::numbered(3);
    h1.set("X1", "X2", {{1, "X3"}});
    auto e = make("h1", EntryKind::Example, h1, {false, 3, "h1", true, ""},
                  "worked example: 3-dimensional Heisenberg algebra with a split and a rotation torus");
    e.tori = h1_tori();
    out.push_back(std::move(e));
  }
  {
    auto e = make("a2", EntryKind::Example, a2_table(), {false, 2, "abelian", true, ""},
                  "worked example: abelian plane with two non-conjugate tori");
    e.labels = {"Y1", "Y2"};
    e.tori = a2_tori();
    out.push_back(std::move(e));
  }
  {
    auto e = make("N5_3", EntryKind::Example, n5_3(), {false, 5, "N5_3", true, ""},
                  "worked example: free 3-step nilpotent algebra on two generators with its two tori");
    e.tori = n5_3_tori();
    out.push_back(std::move(e));
  }
  out.push_back(make("g4_normal", EntryKind::Example, extension({"X1", "X2"}, a2_table(), a2_tori()[0].generators),
                     {true, 2, "abelian", true, ""}, "split torus extension of the abelian plane"));
  out.push_back(make("g4_rotation", EntryKind::Example,
                     extension({"X1", "X2"}, a2_table(), a2_tori()[1].generators), {true, 2, "abelian", false, ""},
                     "rotation torus extension of the abelian plane"));
  {
    const auto t1 = n5_3_tori()[0].generators;
    out.push_back(make("g7_normal", EntryKind::Example, extension({"Z1", "Z2"}, n5_3(), t1),
                       {true, 5, "N5_3", true, ""}, "split torus extension of N5_3"));
    // Basis (Y, Z, X1..X5) with Y the rotation and Z the scaling generator.
    Table rot({"Y", "Z", "X1", "X2", "X3", "X4", "X5"});
    rot.set("X1", "X2", {{1, "X3"}});
    rot.set("X1", "X3", {{1, "X4"}});
    rot.set("X2", "X3", {{1, "X5"}});
    rot.set("Y", "X1", {{-1, "X2"}});
    rot.set("Y", "X2", {{1, "X1"}});
    rot.set("Y", "X4", {{-1, "X5"}});
    rot.set("Y", "X5", {{1, "X4"}});
    rot.set("Z", "X1", {{1, "X1"}});
    rot.set("Z", "X2", {{1, "X2"}});
    rot.set("Z", "X3", {{2, "X3"}});
    rot.set("Z", "X4", {{3, "X4"}});
    rot.set("Z", "X5", {{3, "X5"}});
    out.push_back(make("g7_rotation", EntryKind::Example, rot, {true, 5, "N5_3", false, ""},
                       "rotation torus extension of N5_3, bracket table as printed"));
  }

  out.push_back(make("g4_2", EntryKind::Classification, g4_2(), rigid_form(2, "abelian", false, "g4_1"),
                     "classification, dimension 4"));
  out.push_back(make("g5_2", EntryKind::Classification, g5_2(), rigid_form(3, "h1", false, "g5_1"),
                     "classification, dimension 5"));
  out.push_back(make("g6_4", EntryKind::Classification, g6_4(), rigid_form(3, "abelian", false, "g6_3"),
                     "classification, dimension 6"));
  out.push_back(make("g7_9", EntryKind::Classification, g7_9(false), rigid_form(5, "N5_3", false, "g7_6"),
                     "classification, dimension 7; [X2,X3]=X5 as in the rotation extension of N5_3"));
  out.push_back(make("g7_10", EntryKind::Classification, g7_10(false), rigid_form(4, "h1+R", false, "g7_8"),
                     "classification, dimension 7; [X1,X2]=X3 restored so the nilradical is h1+R"));
  out.push_back(make("g8_34", EntryKind::Classification, g8_34(), rigid_form(4, "abelian", false, "g8_33"),
                     "classification, dimension 8"));
  out.push_back(make("g8_35", EntryKind::Classification, g8_35(), rigid_form(4, "abelian", false, "g8_33"),
                     "classification, dimension 8"));
  out.push_back(make("g8_36", EntryKind::Classification, g8_36(), rigid_form(5, "N5_5", false, "g8_31"),
                     "classification, dimension 8"));
  out.push_back(make("g8_37", EntryKind::Classification, g8_37(false), rigid_form(5, "h2", false, "g8_32"),
                     "classification, dimension 8; [X6,Xi]=Xi for i=1..4"));
  out.push_back(make("g8_38", EntryKind::Classification, g8_38(false), rigid_form(5, "h2", false, "g8_32"),
                     "classification, dimension 8; [X6,Xi]=Xi for i=1..4"));
  out.push_back(make("g8_39", EntryKind::Classification, g8_39(), rigid_form(6, "N6_6", false, "g8_22"),
                     "classification, dimension 8"));
  out.push_back(make("g8_40", EntryKind::Classification, g8_40(), rigid_form(6, "N6_14", false, "g8_29"),
                     "classification, dimension 8"));

  auto variant = [&](std::string name, const Table& t, std::string of, std::string what) {
    auto e = make(std::move(name), EntryKind::PrintedVariant, t, {}, std::move(what));
    e.variant_of = std::move(of);
    out.push_back(std::move(e));
  };
  variant("g7_9_printed", g7_9(true), "g7_9", "classification table as printed: [X2,X3]=X4");
  variant("g7_10_printed", g7_10(true), "g7_10", "classification table as printed: no [X1,X2] bracket");
  variant("g8_37_printed", g8_37(true), "g8_37", "classification table as printed: [X6,Xi]=Xi for i=1,2 only");
  variant("g8_38_printed", g8_38(true), "g8_38", "classification table as printed: [X6,Xi]=Xi for i=1,2 only");

  for (std::size_t n : {1u, 2u})
    for (std::size_t k = 0; k <= n; ++k) {
      Table t(heisenberg_rigid_form_labels(n));
      CatalogEntry e;
      e.name = "g" + std::to_string(3 * n + 2) + "_k" + std::to_string(k);
      e.kind = EntryKind::Family;
      e.dim = 3 * n + 2;
      e.labels = heisenberg_rigid_form_labels(n);
      e.constants = heisenberg_rigid_form(n, k);
      e.expected = {true, 2 * n + 1, n == 1 ? "h1" : "h2", k == 0, ""};
      e.provenance = "Heisenberg family real form with " + std::to_string(k) + " rotation generator(s)";
      out.push_back(std::move(e));
    }

  out.push_back(external("g4_1", 4, "abelian"));
  out.push_back(external("g5_1", 5, "h1"));
  out.push_back(external("g6_3", 6, "abelian"));
  out.push_back(external("g7_6", 7, "N5_3"));
  out.push_back(external("g7_8", 7, "h1+R"));
  out.push_back(external("g8_22", 8, "N6_6"));
  out.push_back(external("g8_29", 8, "N6_14"));
  out.push_back(external("g8_31", 8, "N5_5"));
  out.push_back(external("g8_32", 8, "h2"));
  out.push_back(external("g8_33", 8, "abelian"));
  return out;
}

}  // namespace

std::string kind_name(catalog::EntryKind k) {
  switch (k) {
    case catalog::EntryKind::Example:
      return "example";
    case catalog::EntryKind::Classification:
      return "classification";
    case catalog::EntryKind::PrintedVariant:
      return "printed_variant";
    case catalog::EntryKind::Family:
      return "family";
    case catalog::EntryKind::External:
      return "external";
  }
  return "unknown";
}

const std::vector<CatalogEntry>& list() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry& get(const std::string& name) {
  for (const auto& e : list())
    if (e.name == name) return e;
  throw std::out_of_range("unknown catalog entry '" + name + "'");
}

StructureConstants heisenberg(std::size_t n) {
  if (n == 0) throw std::invalid_argument("heisenberg: n must be at least 1");
  const std::size_t dim = 2 * n + 1;
  StructureConstants g(dim);
  for (std::size_t i = 0; i < n; ++i) g.set_bracket(2 * i, 2 * i + 1, unit_vector(dim, 2 * n));
  return g;
}

std::vector<std::string> heisenberg_rigid_form_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= 2 * n + 1; ++i) labels.push_back("X" + std::to_string(i));
  for (std::size_t i = 1; i <= n + 1; ++i) labels.push_back("Y" + std::to_string(i));
  return labels;
}

StructureConstants heisenberg_rigid_form(std::size_t n, std::size_t k) {
  if (n == 0) throw std::invalid_argument("heisenberg_rigid_form: n must be at least 1");
  if (k > n) throw std::invalid_argument("heisenberg_rigid_form: k must not exceed n");
  const std::size_t dim = 3 * n + 2;
  const std::size_t center = 2 * n;       // X_{2n+1}
  const std::size_t y0 = 2 * n + 1;       // Y_1
  StructureConstants g(dim);
  auto e = [&](std::size_t i, const Rational& c = 1) { return Rational(c) * unit_vector(dim, i); };
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t a = 2 * i;  // X_{2i-1}
    const std::size_t b = a + 1;  // X_{2i}
    g.set_bracket(a, b, e(center));
    if (i < k) {
      g.set_bracket(y0 + i, a, e(b));
      g.set_bracket(y0 + i, b, e(a, -1));
    } else {
      g.set_bracket(y0 + i, a, e(a));
      g.set_bracket(y0 + i, b, e(b, -1));
    }
  }
  for (std::size_t i = 0; i < 2 * n; ++i) g.set_bracket(y0 + n, i, e(i));
  g.set_bracket(y0 + n, center, e(center, 2));
  return g;
}

const std::vector<Table1Row>& table1_pairs() {
  static const std::vector<Table1Row> rows{
      {4, "abelian", {{"g4_1", true}, {"g4_2", false}}},
      {5, "h1", {{"g5_1", true}, {"g5_2", false}}},
      {6, "abelian", {{"g6_3", true}, {"g6_4", false}}},
      {7, "h1+R", {{"g7_8", true}, {"g7_10", false}}},
      {7, "N5_3", {{"g7_6", true}, {"g7_9", false}}},
      {8, "abelian", {{"g8_33", true}, {"g8_34", false}, {"g8_35", false}}},
      {8, "N5_5", {{"g8_31", true}, {"g8_36", false}}},
      {8, "h2", {{"g8_32", true}, {"g8_37", false}, {"g8_38", false}}},
      {8, "N6_6", {{"g8_22", true}, {"g8_39", false}}},
      {8, "N6_14", {{"g8_29", true}, {"g8_40", false}}},
  };
  return rows;
}

std::optional<StructureConstants> nilradical_reference(const std::string& name, std::size_t dim) {
  if (name == "abelian") return abelian(dim);
  if (name == "h1") return heisenberg(1);
  if (name == "h2") return heisenberg(2);
  if (name == "h1+R") return direct_sum(heisenberg(1), abelian(1));
  if (name == "N5_3") return get("N5_3").constants;
  return std::nullopt;
}

}  // namespace lierig::catalog
