#include "lierig/structure.hpp"

#include "lierig/cohomology.hpp"
#include "lierig/derivations.hpp"
#include "lierig/lie_core.hpp"

#include <stdexcept>

namespace lierig {

Subspace adjoint_associative_closure(const StructureConstants& g) {
  const std::size_t n = g.dim();
  const auto gens = adjoint_basis(g);
  Subspace closure(n * n);
  std::vector<RatMatrix> frontier;
  for (const auto& a : gens) {
    if (!closure.contains(a.flat())) {
      closure = closure + Subspace::span(n * n, {a.flat()});
      frontier.push_back(a);
    }
  }
  // Words of length m+1 are generators times words of length m.
  while (!frontier.empty()) {
    std::vector<RatMatrix> next;
    for (const auto& w : frontier)
      for (const auto& a : gens) {
        RatMatrix p = a * w;
        if (!closure.contains(p.flat())) {
          closure = closure + Subspace::span(n * n, {p.flat()});
          next.push_back(std::move(p));
        }
      }
    frontier = std::move(next);
  }
  return closure;
}

Subspace nilradical(const StructureConstants& g) {
  if (!is_solvable(g)) throw std::domain_error("nilradical: algebra is not solvable");
  const std::size_t n = g.dim();
  const auto ads = adjoint_basis(g);
  const auto closure = maps_of(adjoint_associative_closure(g), n);
  if (closure.empty()) return Subspace::whole(n);
  RatMatrix traces(closure.size(), n);
  for (std::size_t r = 0; r < closure.size(); ++r)
    for (std::size_t i = 0; i < n; ++i) traces(r, i) = (ads[i] * closure[r]).trace();
  return Subspace::span(n, kernel_basis(traces));
}

StructureConstants semidirect_sum(const StructureConstants& n, const std::vector<RatMatrix>& gens) {
  require_lie_algebra(n, "semidirect_sum");
  if (!is_torus(n, gens)) throw std::domain_error("semidirect_sum: generators are not a torus of derivations");
  const std::size_t k = gens.size();
  const std::size_t m = n.dim();
  StructureConstants out(k + m);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t j = 0; j < m; ++j) {
      Vector v = zero_vector(k + m);
      for (std::size_t r = 0; r < m; ++r) v[k + r] = gens[a](r, j);
      out.set_bracket(a, k + j, std::move(v));
    }
  for (const auto& [key, v] : n.brackets()) {
    Vector w = zero_vector(k + m);
    for (std::size_t r = 0; r < m; ++r) w[k + r] = v[r];
    out.set_bracket(k + key.first, k + key.second, std::move(w));
  }
  return out;
}

const std::vector<std::string>& fingerprint_fields() {
  static const std::vector<std::string> names{
      "dim", "derived_dims", "lcs_dims", "center_dim", "nilradical_dim", "nilradical_lcs_dims",
      "der_dim", "h0", "h1", "h2", "killing_signature", "completely_solvable"};
  return names;
}

Fingerprint fingerprint(const StructureConstants& g) {
  require_lie_algebra(g, "fingerprint");
  if (!is_solvable(g)) throw std::domain_error("fingerprint: algebra is not solvable");
  Fingerprint f;
  f.dim = g.dim();
  f.derived_dims = derived_series_dims(g);
  f.lcs_dims = lower_central_dims(g);
  f.center_dim = center(g).dim();
  const Subspace nil = nilradical(g);
  f.nilradical_dim = nil.dim();
  f.nilradical_lcs_dims = lower_central_dims(induced_algebra(g, nil));
  f.der_dim = derivation_space(g).dim();
  const CohomologyReport r = full_report(g);
  f.h0 = r.h_dims[0];
  f.h1 = r.h_dims[1];
  f.h2 = r.h_dims[2];
  f.killing_signature = killing_signature(g);
  f.completely_solvable = is_completely_solvable(g);
  return f;
}

std::string first_difference(const Fingerprint& a, const Fingerprint& b) {
  const auto& names = fingerprint_fields();
  const bool same[] = {a.dim == b.dim,
                       a.derived_dims == b.derived_dims,
                       a.lcs_dims == b.lcs_dims,
                       a.center_dim == b.center_dim,
                       a.nilradical_dim == b.nilradical_dim,
                       a.nilradical_lcs_dims == b.nilradical_lcs_dims,
                       a.der_dim == b.der_dim,
                       a.h0 == b.h0,
                       a.h1 == b.h1,
                       a.h2 == b.h2,
                       a.killing_signature == b.killing_signature,
                       a.completely_solvable == b.completely_solvable};
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!same[i]) return names[i];
  return {};
}

Verdict distinguish(const Fingerprint& f1, const Fingerprint& f2) {
  std::string field = first_difference(f1, f2);
  if (field.empty()) return {VerdictKind::Indistinguishable, {}};
  return {VerdictKind::ProvablyNonIsomorphic, std::move(field)};
}

Verdict distinguish(const StructureConstants& g1, const StructureConstants& g2) {
  return distinguish(fingerprint(g1), fingerprint(g2));
}

}  // namespace lierig
