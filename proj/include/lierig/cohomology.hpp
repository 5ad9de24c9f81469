#pragma once

#include "lierig/matrix.hpp"
#include "lierig/structure_constants.hpp"

#include <array>
#include <vector>

namespace lierig {

/// Index scheme for C^k(g, g) = Hom(Λ^k g, g). k-subsets of {0..n-1} are
/// ordered colexicographically; the target coordinate varies fastest, so the
/// flat index of (t, S) is colex_rank(S) * n + t.
class CochainSpace {
 public:
  CochainSpace(std::size_t n, std::size_t k);

  std::size_t n() const { return n_; }
  std::size_t degree() const { return k_; }
  std::size_t dimension() const { return n_ * subsets_.size(); }
  std::size_t subset_count() const { return subsets_.size(); }
  const std::vector<std::size_t>& subset(std::size_t rank) const { return subsets_.at(rank); }

  /// colex rank: sum over positions p (1-based) of binom(s_p, p).
  static std::size_t colex_rank(const std::vector<std::size_t>& sorted_subset);
  std::size_t index(std::size_t target, const std::vector<std::size_t>& sorted_subset) const;

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<std::vector<std::size_t>> subsets_;
};

std::size_t binomial(std::size_t n, std::size_t k);

/// Matrix of d^k : C^k -> C^(k+1), k in {0, 1, 2}, with
///   d0 x (y)       = [y, x]
///   d1 f (x, y)    = [x, f(y)] - [y, f(x)] - f([x, y])
///   d2 phi(x,y,z)  = [x, phi(y,z)] - [y, phi(x,z)] + [z, phi(x,y)]
///                    - phi([x,y], z) + phi([x,z], y) - phi([y,z], x)
/// Throws std::invalid_argument for other k.
RatMatrix differential_matrix(const StructureConstants& g, std::size_t k);

struct CohomologyReport {
  std::array<std::size_t, 4> cochain_dims{};  ///< C^0..C^3
  std::array<std::size_t, 3> ranks{};         ///< rank d^0, d^1, d^2
  std::array<std::size_t, 3> cocycle_dims{};  ///< Z^0..Z^2
  std::array<std::size_t, 3> coboundary_dims{};  ///< B^0..B^2 (B^0 = 0)
  std::array<std::size_t, 3> h_dims{};        ///< H^0..H^2
};

std::size_t h_dim(const StructureConstants& g, std::size_t k);
bool is_algebraically_rigid(const StructureConstants& g);
CohomologyReport full_report(const StructureConstants& g);

}  // namespace lierig
