#pragma once

#include "lierig/matrix.hpp"
#include "lierig/rational.hpp"

#include <map>
#include <optional>
#include <utility>

namespace lierig {

/// Bilinear antisymmetric bracket on Q^n given by [e_i, e_j] for i < j.
/// Only ordered pairs are stored, so antisymmetry holds by construction.
/// The Jacobi identity is *not* enforced here; see is_lie_algebra().
class StructureConstants {
 public:
  using Key = std::pair<std::size_t, std::size_t>;

  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }

  /// Sets [e_i, e_j] = v. Accepts i > j (stores -v under (j, i)). Throws
  /// std::invalid_argument for i == j, out-of-range indices or a wrong length.
  /// A zero vector erases the entry.
  void set_bracket(std::size_t i, std::size_t j, Vector v);

  /// Coordinates of [e_i, e_j] for any i, j.
  Vector basis_bracket(std::size_t i, std::size_t j) const;
  /// C_{ij}^k with antisymmetry applied.
  Rational coefficient(std::size_t i, std::size_t j, std::size_t k) const;

  const std::map<Key, Vector>& brackets() const { return brackets_; }
  bool is_abelian() const { return brackets_.empty(); }

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

 private:
  std::size_t dim_ = 0;
  std::map<Key, Vector> brackets_;
};

/// Dense C_{ij}^k table, antisymmetric in (i,j). Hot loops (cohomology,
/// derivations) read from this instead of the sparse map.
class StructureTensor {
 public:
  explicit StructureTensor(const StructureConstants& g);
  std::size_t dim() const { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * n_ + j) * n_ + k];
  }

 private:
  std::size_t n_;
  Vector data_;
};

StructureConstants abelian(std::size_t n);

struct JacobiViolation {
  std::size_t i, j, k;  ///< i < j < k
  Vector residual;      ///< [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
};

std::optional<JacobiViolation> find_jacobi_violation(const StructureConstants& g);
bool is_lie_algebra(const StructureConstants& g);

/// Throws std::domain_error naming `op` and the offending triple.
void require_lie_algebra(const StructureConstants& g, const char* op);

Vector bracket(const StructureConstants& g, const Vector& x, const Vector& y);
/// Matrix of y -> [x, y].
RatMatrix ad(const StructureConstants& g, const Vector& x);
/// ad(e_0), ..., ad(e_{n-1}).
std::vector<RatMatrix> adjoint_basis(const StructureConstants& g);

/// Structure constants in the basis f_j = sum_i P(i,j) e_i (columns of P).
StructureConstants change_basis(const StructureConstants& g, const RatMatrix& p);

/// g1 (+) g2 with g1's basis first.
StructureConstants direct_sum(const StructureConstants& g1, const StructureConstants& g2);

}  // namespace lierig
