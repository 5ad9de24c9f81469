#include "lierig/derivations.hpp"

#include "lierig/lie_core.hpp"
#include "lierig/polynomial.hpp"

#include <stdexcept>

namespace lierig {

std::vector<RatMatrix> maps_of(const Subspace& s, std::size_t n) {
  if (s.ambient_dim() != n * n) throw std::invalid_argument("maps_of: ambient dimension is not n*n");
  std::vector<RatMatrix> out;
  for (const auto& v : s.basis()) out.push_back(RatMatrix::unflatten(v, n, n));
  return out;
}

Subspace span_of_maps(const std::vector<RatMatrix>& maps, std::size_t n) {
  std::vector<Vector> flat;
  for (const auto& m : maps) {
    if (m.rows() != n || m.cols() != n) throw std::invalid_argument("span_of_maps: shape mismatch");
    flat.push_back(m.flat());
  }
  return Subspace::span(n * n, flat);
}

bool is_derivation(const StructureConstants& g, const RatMatrix& d) {
  const std::size_t n = g.dim();
  if (d.rows() != n || d.cols() != n) throw std::invalid_argument("is_derivation: dimension mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector lhs = d * g.basis_bracket(i, j);
      Vector rhs = bracket(g, d.column(i), unit_vector(n, j));
      rhs += bracket(g, unit_vector(n, i), d.column(j));
      if (lhs != rhs) return false;
    }
  return true;
}

DerivationSpace derivation_space(const StructureConstants& g) {
  require_lie_algebra(g, "derivation_space");
  const std::size_t n = g.dim();
  const StructureTensor c(g);
  // Unknown D(a,b) sits at column a*n + b. One row per (i<j, k):
  //   sum_p C_ij^p D(k,p) - sum_a C_aj^k D(a,i) - sum_a C_ia^k D(a,j) = 0
  const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  RatMatrix system(pairs * n, n * n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k, ++row) {
        for (std::size_t p = 0; p < n; ++p) system(row, k * n + p) += c(i, j, p);
        for (std::size_t a = 0; a < n; ++a) {
          system(row, a * n + i) -= c(a, j, k);
          system(row, a * n + j) -= c(i, a, k);
        }
      }

  DerivationSpace out{g, {}, n - center(g).dim()};
  for (const auto& v : kernel_basis(system)) out.basis.push_back(RatMatrix::unflatten(v, n, n));
  return out;
}

Subspace inner_derivations(const StructureConstants& g) {
  require_lie_algebra(g, "inner_derivations");
  return span_of_maps(adjoint_basis(g), g.dim());
}

Subspace diagonal_derivations(const StructureConstants& g) {
  require_lie_algebra(g, "diagonal_derivations");
  const std::size_t n = g.dim();
  std::vector<Vector> constraints;
  for (const auto& [key, v] : g.brackets())
    for (std::size_t k = 0; k < n; ++k) {
      if (v[k] == 0) continue;
      Vector row = zero_vector(n);
      row[key.first] += 1;
      row[key.second] += 1;
      row[k] -= 1;
      constraints.push_back(std::move(row));
    }
  std::vector<RatMatrix> diag;
  if (constraints.empty()) {
    for (std::size_t i = 0; i < n; ++i) diag.push_back(RatMatrix::diagonal(unit_vector(n, i)));
  } else {
    for (const auto& l : kernel_basis(RatMatrix::from_rows(constraints, n))) diag.push_back(RatMatrix::diagonal(l));
  }
  return span_of_maps(diag, n);
}

bool is_semisimple(const RatMatrix& d) { return is_squarefree(min_poly(d)); }

bool is_real_diagonalizable(const RatMatrix& d) {
  const RatPolynomial m = min_poly(d);
  return is_squarefree(m) && count_real_roots(m) == static_cast<std::size_t>(m.degree());
}

bool is_torus(const StructureConstants& g, const std::vector<RatMatrix>& generators) {
  for (const auto& d : generators)
    if (d.rows() != g.dim() || d.cols() != g.dim()) throw std::invalid_argument("is_torus: dimension mismatch");
  require_lie_algebra(g, "is_torus");
  for (std::size_t a = 0; a < generators.size(); ++a) {
    if (!is_derivation(g, generators[a]) || !is_semisimple(generators[a])) return false;
    for (std::size_t b = a + 1; b < generators.size(); ++b)
      if (!commutator(generators[a], generators[b]).is_zero()) return false;
  }
  return true;
}

Torus::Torus(StructureConstants algebra, std::vector<RatMatrix> generators)
    : algebra_(std::move(algebra)), generators_(std::move(generators)) {
  if (!is_torus(algebra_, generators_)) throw std::domain_error("generators do not form a torus of derivations");
}

bool is_split_torus(const Torus& t) {
  for (const auto& d : t.generators())
    if (!is_real_diagonalizable(d)) return false;
  return true;
}

namespace {

std::optional<NonConjugacyCertificate> witness_in(const Torus& t, std::size_t index) {
  for (std::size_t a = 0; a < t.generators().size(); ++a) {
    const RatPolynomial m = min_poly(t.generators()[a]);
    const std::size_t real = count_real_roots(m);
    const auto degree = static_cast<std::size_t>(m.degree());
    if (real < degree) return NonConjugacyCertificate{index, unit_vector(t.generators().size(), a), {real, degree}};
  }
  return std::nullopt;
}

}  // namespace

std::optional<NonConjugacyCertificate> nonconjugacy_certificate(const Torus& t1, const Torus& t2) {
  if (!(t1.algebra() == t2.algebra())) throw std::invalid_argument("nonconjugacy_certificate: tori on different algebras");
  const bool split1 = is_split_torus(t1);
  const bool split2 = is_split_torus(t2);
  if (split1 && !split2) return witness_in(t2, 1);
  if (split2 && !split1) return witness_in(t1, 0);
  return std::nullopt;
}

}  // namespace lierig
