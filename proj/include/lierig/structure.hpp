#pragma once

#include "lierig/matrix.hpp"
#include "lierig/structure_constants.hpp"
#include "lierig/subspace.hpp"

#include <string>
#include <vector>

namespace lierig {

/// Maximal nilpotent ideal of a solvable algebra. Throws std::domain_error
/// when g is not solvable.
///
/// Let A be the associative algebra generated by ad(e_1), ..., ad(e_n). For
/// solvable g the matrices in A are simultaneously triangularizable over C, so
/// the nilpotent elements of A form its radical, and a in A is nilpotent iff
/// tr(a b) = 0 for every b in A (tr(a^m) = 0 for all m >= 2 already forces
/// nilpotency in characteristic 0). The nilradical of a solvable algebra is
/// the set of ad-nilpotent elements, hence
///   N = { x : tr(ad(x) b) = 0 for b in a basis of A }.
Subspace nilradical(const StructureConstants& g);

/// Associative closure of {ad(e_i)} as a space of flattened n x n matrices.
Subspace adjoint_associative_closure(const StructureConstants& g);

/// t (+) n with basis (T_1..T_k, then n's basis), [T_a, x] = D_a x,
/// [T_a, T_b] = 0. Throws std::domain_error unless the generators form a torus.
StructureConstants semidirect_sum(const StructureConstants& n, const std::vector<RatMatrix>& torus_generators);

/// Basis-change invariants. Equal fingerprints do not imply isomorphism.
struct Fingerprint {
  std::size_t dim = 0;
  std::vector<std::size_t> derived_dims;
  std::vector<std::size_t> lcs_dims;
  std::size_t center_dim = 0;
  std::size_t nilradical_dim = 0;
  std::vector<std::size_t> nilradical_lcs_dims;
  std::size_t der_dim = 0;
  std::size_t h0 = 0;
  std::size_t h1 = 0;
  std::size_t h2 = 0;
  Inertia killing_signature;
  bool completely_solvable = false;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

/// Field names in comparison order.
const std::vector<std::string>& fingerprint_fields();

/// Requires a solvable Lie algebra.
Fingerprint fingerprint(const StructureConstants& g);

/// Name of the first field (in fingerprint_fields() order) where a and b
/// differ, or empty when they agree.
std::string first_difference(const Fingerprint& a, const Fingerprint& b);

enum class VerdictKind { ProvablyNonIsomorphic, Indistinguishable };

struct Verdict {
  VerdictKind kind = VerdictKind::Indistinguishable;
  std::string field;  ///< first differing fingerprint field when non-isomorphic

  bool non_isomorphic() const { return kind == VerdictKind::ProvablyNonIsomorphic; }
};

/// Never claims isomorphism: Indistinguishable only means equal fingerprints.
Verdict distinguish(const StructureConstants& g1, const StructureConstants& g2);
Verdict distinguish(const Fingerprint& f1, const Fingerprint& f2);

}  // namespace lierig
