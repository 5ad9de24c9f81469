#pragma once

#include "lierig/matrix.hpp"
#include "lierig/structure_constants.hpp"
#include "lierig/subspace.hpp"

#include <optional>
#include <vector>

namespace lierig {

// Spaces of linear maps are returned as Subspace of Q^(n*n), each map
// flattened row-major (RatMatrix::flat). maps_of() unflattens a basis.

std::vector<RatMatrix> maps_of(const Subspace& s, std::size_t n);
Subspace span_of_maps(const std::vector<RatMatrix>& maps, std::size_t n);

/// D[x,y] == [Dx,y] + [x,Dy] on every basis pair.
bool is_derivation(const StructureConstants& g, const RatMatrix& d);

struct DerivationSpace {
  StructureConstants algebra;
  std::vector<RatMatrix> basis;
  std::size_t inner_dim = 0;  ///< dim g - dim center

  std::size_t dim() const { return basis.size(); }
  Subspace as_subspace() const { return span_of_maps(basis, algebra.dim()); }
};

/// Der(g) as the kernel of the linear system D[e_i,e_j] = [De_i,e_j] + [e_i,De_j].
DerivationSpace derivation_space(const StructureConstants& g);

/// span{ad(e_i)}
Subspace inner_derivations(const StructureConstants& g);

/// Diagonal derivations diag(l_1..l_n): l_i + l_j = l_k whenever C_ij^k != 0.
Subspace diagonal_derivations(const StructureConstants& g);

/// Minimal polynomial squarefree (diagonalizable over C).
bool is_semisimple(const RatMatrix& d);
/// Semisimple with every eigenvalue real.
bool is_real_diagonalizable(const RatMatrix& d);

/// Generators are derivations, commute pairwise and are each semisimple.
/// Commuting semisimple maps are simultaneously diagonalizable over C, so
/// every element of their span is semisimple too.
bool is_torus(const StructureConstants& g, const std::vector<RatMatrix>& generators);

/// Validated torus of derivations. Construction throws std::domain_error when
/// the generators do not form a torus.
class Torus {
 public:
  Torus(StructureConstants algebra, std::vector<RatMatrix> generators);

  const StructureConstants& algebra() const { return algebra_; }
  const std::vector<RatMatrix>& generators() const { return generators_; }

 private:
  StructureConstants algebra_;
  std::vector<RatMatrix> generators_;
};

/// Every generator is real-diagonalizable; commuting generators are then
/// simultaneously diagonalizable over R, so the whole torus has real spectrum.
bool is_split_torus(const Torus& t);

struct SpectralType {
  std::size_t real_roots = 0;  ///< distinct real roots of the minimal polynomial
  std::size_t degree = 0;      ///< degree of the (squarefree) minimal polynomial
};

struct NonConjugacyCertificate {
  std::size_t witness_index = 0;  ///< 0 for the first torus, 1 for the second
  Vector witness_element;         ///< coefficients over that torus's generators
  SpectralType reason;            ///< real_roots < degree for the witness
};

/// One-sided certificate: if one torus is split and the other contains an
/// element with non-real spectrum, no real automorphism conjugates them since
/// conjugation preserves spectra. An empty result is inconclusive.
/// Throws std::invalid_argument when the tori act on different algebras.
std::optional<NonConjugacyCertificate> nonconjugacy_certificate(const Torus& t1, const Torus& t2);

}  // namespace lierig
