#pragma once

#include "lierig/matrix.hpp"
#include "lierig/structure_constants.hpp"
#include "lierig/subspace.hpp"

#include <optional>
#include <vector>

namespace lierig {

/// span{[a, b] : a in A, b in B}
Subspace bracket_span(const StructureConstants& g, const Subspace& a, const Subspace& b);

bool is_subalgebra(const StructureConstants& g, const Subspace& s);
bool is_ideal(const StructureConstants& g, const Subspace& s);

/// Structure constants of a subalgebra in the coordinates of s.basis().
/// Throws std::domain_error if s is not closed under the bracket.
StructureConstants induced_algebra(const StructureConstants& g, const Subspace& s);

/// dim g^(0), dim g^(1), ... where g^(k+1) = [g^(k), g^(k)]; stops at the
/// first repeated value, which is listed once.
std::vector<std::size_t> derived_series_dims(const StructureConstants& g);
/// Same for the lower central series C^0 = g, C^(k+1) = [g, C^k].
std::vector<std::size_t> lower_central_dims(const StructureConstants& g);

bool is_solvable(const StructureConstants& g);
bool is_nilpotent(const StructureConstants& g);

Subspace center(const StructureConstants& g);

/// K(x, y) = tr(ad x ad y) on the basis.
RatMatrix killing_form(const StructureConstants& g);
Inertia killing_signature(const StructureConstants& g);

enum class SolvabilityReason {
  CompletelySolvable,
  NotSolvable,
  NonRealSpectrum,  ///< some ad(e_j) has a non-real eigenvalue
};

struct CompleteSolvability {
  bool value = false;
  SolvabilityReason reason = SolvabilityReason::NotSolvable;
  std::optional<std::size_t> witness;  ///< basis index when NonRealSpectrum
};

/// Real completely solvable test. For solvable g, Lie's theorem over C makes
/// every eigenvalue of ad(x) a weight alpha(x) linear in x, so the spectrum
/// is real for all x exactly when it is real on each basis vector; a real
/// solvable algebra is completely solvable iff all ad(x) have real spectrum.
CompleteSolvability complete_solvability(const StructureConstants& g);
bool is_completely_solvable(const StructureConstants& g);

}  // namespace lierig
