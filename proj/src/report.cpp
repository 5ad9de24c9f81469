#include "lierig/report.hpp"

#include "lierig/catalog.hpp"
#include "lierig/derivations.hpp"
#include "lierig/lie_core.hpp"

#include <map>
#include <sstream>

namespace lierig {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json to_json(const RatMatrix& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(to_json(m.row(r)));
  return a;
}

Json to_json(const Inertia& s) {
  return Json{{"positive", s.positive}, {"negative", s.negative}, {"zero", s.zero}};
}

Json to_json(const CohomologyReport& r) {
  Json j;
  j["cochain_dims"] = r.cochain_dims;
  j["ranks"] = r.ranks;
  j["cocycle_dims"] = r.cocycle_dims;
  j["coboundary_dims"] = r.coboundary_dims;
  j["h_dims"] = r.h_dims;
  return j;
}

Json to_json(const Fingerprint& f) {
  Json j;
  j["dim"] = f.dim;
  j["derived_dims"] = f.derived_dims;
  j["lcs_dims"] = f.lcs_dims;
  j["center_dim"] = f.center_dim;
  j["nilradical_dim"] = f.nilradical_dim;
  j["nilradical_lcs_dims"] = f.nilradical_lcs_dims;
  j["der_dim"] = f.der_dim;
  j["h0"] = f.h0;
  j["h1"] = f.h1;
  j["h2"] = f.h2;
  j["killing_signature"] = to_json(f.killing_signature);
  j["completely_solvable"] = f.completely_solvable;
  return j;
}

std::string format_dims(const std::vector<std::size_t>& dims) {
  std::string s = "[";
  for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
  return s + "]";
}

std::string format_inertia(const Inertia& s) {
  return "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + "," + std::to_string(s.zero) + ")";
}

bool CatalogVerification::passed() const {
  for (const auto& e : entries)
    if (e.asserted && !e.passed()) return false;
  for (const auto& p : pairs)
    if (!p.passed()) return false;
  return true;
}

namespace {

struct Computed {
  Fingerprint fingerprint;
  Fingerprint nilradical_fingerprint;
};

class Verifier {
 public:
  CatalogVerification run() {
    CatalogVerification out;
    for (const auto& e : catalog::list()) {
      if (e.is_external()) {
        out.external.push_back(e.name);
        continue;
      }
      out.entries.push_back(check_entry(e));
    }
    for (const auto& row : catalog::table1_pairs()) {
      std::vector<std::string> forms;
      for (const auto& f : row.forms)
        if (!f.external) forms.push_back(f.name);
      pairwise("dim " + std::to_string(row.dimension) + " nilradical " + row.nilradical, forms, true, out);
    }
    pairwise("worked example dim 4", {"g4_normal", "g4_rotation"}, true, out);
    pairwise("worked example dim 7", {"g7_normal", "g7_rotation"}, true, out);
    for (std::size_t n : {1u, 2u}) {
      std::vector<std::string> forms;
      for (std::size_t k = 0; k <= n; ++k) forms.push_back("g" + std::to_string(3 * n + 2) + "_k" + std::to_string(k));
      pairwise("heisenberg family n=" + std::to_string(n), forms, true, out);
    }
    return out;
  }

 private:
  EntryCheck check_entry(const catalog::CatalogEntry& e) {
    EntryCheck c;
    c.name = e.name;
    c.kind = catalog::kind_name(e.kind);
    c.asserted = e.kind != catalog::EntryKind::PrintedVariant;
    const StructureConstants& g = *e.constants;
    if (auto v = find_jacobi_violation(g)) {
      c.is_lie = false;
      c.failures.push_back("Jacobi fails on (" + e.labels[v->i] + "," + e.labels[v->j] + "," + e.labels[v->k] + ")");
      return c;
    }
    c.is_lie = true;
    c.h2 = h_dim(g, 2);
    if (!is_solvable(g)) {
      c.failures.push_back("not solvable");
      return c;
    }
    const Subspace nil = nilradical(g);
    c.nilradical_dim = nil.dim();
    c.completely_solvable = is_completely_solvable(g);
    if (*c.h2 == 0) c.diagonal_derivations_dim = diagonal_derivations(g).dim();
    computed_[e.name] = {fingerprint(g), fingerprint(induced_algebra(g, nil))};

    const auto& x = e.expected;
    if (x.rigid && *x.rigid != (*c.h2 == 0))
      c.failures.push_back(*x.rigid ? "expected rigid, h2 = " + std::to_string(*c.h2) : "expected h2 > 0");
    if (x.nilradical_dim && *x.nilradical_dim != nil.dim())
      c.failures.push_back("nilradical dim " + std::to_string(nil.dim()) + ", expected " +
                           std::to_string(*x.nilradical_dim));
    if (x.completely_solvable && *x.completely_solvable != *c.completely_solvable)
      c.failures.push_back(std::string("completely_solvable is ") + (*c.completely_solvable ? "true" : "false"));
    if (!x.nilradical_name.empty()) {
      if (auto ref = catalog::nilradical_reference(x.nilradical_name, nil.dim())) {
        if (fingerprint(*ref) != computed_[e.name].nilradical_fingerprint)
          c.failures.push_back("nilradical does not match " + x.nilradical_name);
      }
    }
    std::vector<Torus> tori;
    for (const auto& t : e.tori) {
      if (!is_torus(g, t.generators)) {
        c.failures.push_back("torus " + t.name + " fails is_torus");
        continue;
      }
      tori.emplace_back(g, t.generators);
    }
    if (tori.size() == 2 && !nonconjugacy_certificate(tori[0], tori[1]))
      c.failures.push_back("no non-conjugacy certificate for " + e.tori[0].name + ", " + e.tori[1].name);
    return c;
  }

  void pairwise(const std::string& group, const std::vector<std::string>& forms, bool same_nilradical,
                CatalogVerification& out) {
    for (std::size_t a = 0; a < forms.size(); ++a)
      for (std::size_t b = a + 1; b < forms.size(); ++b) {
        PairCheck p;
        p.group = group;
        p.first = forms[a];
        p.second = forms[b];
        p.require_same_nilradical = same_nilradical;
        auto ia = computed_.find(forms[a]);
        auto ib = computed_.find(forms[b]);
        if (ia != computed_.end() && ib != computed_.end()) {
          p.verdict = distinguish(ia->second.fingerprint, ib->second.fingerprint);
          p.nilradicals_match = ia->second.nilradical_fingerprint == ib->second.nilradical_fingerprint;
        }
        out.pairs.push_back(std::move(p));
      }
  }

  std::map<std::string, Computed> computed_;
};

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

CatalogVerification verify_catalog() { return Verifier().run(); }

Json to_json(const CatalogVerification& v) {
  Json j;
  j["passed"] = v.passed();
  Json entries = Json::array();
  for (const auto& e : v.entries) {
    Json x;
    x["name"] = e.name;
    x["kind"] = e.kind;
    x["asserted"] = e.asserted;
    x["is_lie_algebra"] = e.is_lie;
    x["h2"] = optional_json(e.h2);
    x["nilradical_dim"] = optional_json(e.nilradical_dim);
    x["completely_solvable"] = optional_json(e.completely_solvable);
    x["diagonal_derivations_dim"] = optional_json(e.diagonal_derivations_dim);
    x["failures"] = e.failures;
    entries.push_back(std::move(x));
  }
  j["entries"] = std::move(entries);
  Json pairs = Json::array();
  for (const auto& p : v.pairs) {
    Json x;
    x["group"] = p.group;
    x["forms"] = {p.first, p.second};
    x["verdict"] = p.verdict.non_isomorphic() ? "ProvablyNonIsomorphic" : "Indistinguishable";
    x["field"] = p.verdict.field.empty() ? Json(nullptr) : Json(p.verdict.field);
    x["nilradicals_match"] = p.nilradicals_match;
    x["passed"] = p.passed();
    pairs.push_back(std::move(x));
  }
  j["pairs"] = std::move(pairs);
  j["external"] = v.external;
  return j;
}

std::string to_text(const CatalogVerification& v) {
  std::ostringstream out;
  for (const auto& e : v.entries) {
    out << (e.passed() ? "ok   " : (e.asserted ? "FAIL " : "note ")) << e.name << " (" << e.kind << ")";
    out << " lie=" << (e.is_lie ? "yes" : "no");
    if (e.h2) out << " h2=" << *e.h2;
    if (e.nilradical_dim) out << " nilradical=" << *e.nilradical_dim;
    if (e.completely_solvable) out << " completely_solvable=" << (*e.completely_solvable ? "yes" : "no");
    if (e.diagonal_derivations_dim) out << " diagonal_derivations=" << *e.diagonal_derivations_dim;
    for (const auto& f : e.failures) out << "\n       " << f;
    out << "\n";
  }
  for (const auto& p : v.pairs) {
    out << (p.passed() ? "ok   " : "FAIL ") << p.group << ": " << p.first << " vs " << p.second << " -> "
        << (p.verdict.non_isomorphic() ? "ProvablyNonIsomorphic: " + p.verdict.field : "Indistinguishable");
    if (p.require_same_nilradical) out << (p.nilradicals_match ? ", same nilradical" : ", nilradicals differ");
    out << "\n";
  }
  out << "external (name only):";
  for (const auto& n : v.external) out << ' ' << n;
  out << "\n" << (v.passed() ? "catalog verified" : "catalog verification FAILED") << "\n";
  return out.str();
}

}  // namespace lierig
