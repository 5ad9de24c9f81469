#include "lierig/lie_core.hpp"

#include "lierig/polynomial.hpp"

#include <stdexcept>

namespace lierig {

Subspace bracket_span(const StructureConstants& g, const Subspace& a, const Subspace& b) {
  std::vector<Vector> out;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) {
      Vector z = bracket(g, x, y);
      if (!is_zero(z)) out.push_back(std::move(z));
    }
  return Subspace::span(g.dim(), out);
}

bool is_subalgebra(const StructureConstants& g, const Subspace& s) {
  return s.contains(bracket_span(g, s, s));
}

bool is_ideal(const StructureConstants& g, const Subspace& s) {
  return s.contains(bracket_span(g, Subspace::whole(g.dim()), s));
}

StructureConstants induced_algebra(const StructureConstants& g, const Subspace& s) {
  if (!is_subalgebra(g, s)) throw std::domain_error("induced_algebra: subspace is not a subalgebra");
  const auto& b = s.basis();
  StructureConstants out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) out.set_bracket(i, j, s.coordinates(bracket(g, b[i], b[j])));
  return out;
}

namespace {

template <typename Step>
std::vector<std::size_t> series_dims(const StructureConstants& g, Step step) {
  Subspace cur = Subspace::whole(g.dim());
  std::vector<std::size_t> dims{cur.dim()};
  while (true) {
    Subspace next = step(cur);
    if (next == cur) break;
    cur = std::move(next);
    dims.push_back(cur.dim());
  }
  return dims;
}

}  // namespace

std::vector<std::size_t> derived_series_dims(const StructureConstants& g) {
  require_lie_algebra(g, "derived_series_dims");
  return series_dims(g, [&](const Subspace& s) { return bracket_span(g, s, s); });
}

std::vector<std::size_t> lower_central_dims(const StructureConstants& g) {
  require_lie_algebra(g, "lower_central_dims");
  const Subspace all = Subspace::whole(g.dim());
  return series_dims(g, [&](const Subspace& s) { return bracket_span(g, all, s); });
}

bool is_solvable(const StructureConstants& g) { return derived_series_dims(g).back() == 0; }

bool is_nilpotent(const StructureConstants& g) { return lower_central_dims(g).back() == 0; }

Subspace center(const StructureConstants& g) {
  require_lie_algebra(g, "center");
  if (g.dim() == 0) return Subspace(0);
  // x is central iff ad(e_j) x = [e_j, x] = 0 for every j.
  return Subspace::span(g.dim(), kernel_basis(vstack(adjoint_basis(g))));
}

RatMatrix killing_form(const StructureConstants& g) {
  require_lie_algebra(g, "killing_form");
  const auto ads = adjoint_basis(g);
  const std::size_t n = g.dim();
  RatMatrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) k(i, j) = k(j, i) = (ads[i] * ads[j]).trace();
  return k;
}

Inertia killing_signature(const StructureConstants& g) { return signature(killing_form(g)); }

CompleteSolvability complete_solvability(const StructureConstants& g) {
  if (!is_solvable(g)) return {false, SolvabilityReason::NotSolvable, std::nullopt};
  const auto ads = adjoint_basis(g);
  for (std::size_t j = 0; j < ads.size(); ++j) {
    const RatPolynomial s = squarefree_part(char_poly(ads[j]));
    if (count_real_roots(s) != static_cast<std::size_t>(s.degree()))
      return {false, SolvabilityReason::NonRealSpectrum, j};
  }
  return {true, SolvabilityReason::CompletelySolvable, std::nullopt};
}

bool is_completely_solvable(const StructureConstants& g) { return complete_solvability(g).value; }

}  // namespace lierig
