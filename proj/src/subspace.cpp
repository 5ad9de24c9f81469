#include "lierig/subspace.hpp"

#include "lierig/matrix.hpp"

#include <stdexcept>

namespace lierig {

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  const Echelon e = row_echelon(RatMatrix::from_rows(vectors, ambient_dim), true);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) s.basis_.push_back(e.form.row(r));
  s.pivots_ = e.pivots;
  return s;
}

Subspace Subspace::whole(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.basis_.push_back(unit_vector(ambient_dim, i));
    s.pivots_.push_back(i);
  }
  return s;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("subspace: vector length mismatch");
  // Reducing by the RREF basis leaves zero iff v is in the span.
  Vector r = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Rational c = r[pivots_[k]];
    if (c != 0) axpy(r, -c, basis_[k]);
  }
  return lierig::is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw std::domain_error("subspace: vector not in span");
  Vector c(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) c[k] = v[pivots_[k]];
  return c;
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("subspace sum: ambient mismatch");
  std::vector<Vector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, all);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("subspace intersection: ambient mismatch");
  if (basis_.empty() || other.basis_.empty()) return Subspace(ambient_);
  // Solve sum a_k u_k - sum b_l w_l = 0; the u-part of each solution spans A ∩ B.
  std::vector<Vector> cols = basis_;
  for (const auto& w : other.basis_) cols.push_back(Rational(-1) * w);
  const auto ker = kernel_basis(RatMatrix::from_columns(cols, ambient_));
  std::vector<Vector> vs;
  for (const auto& k : ker) {
    Vector v = zero_vector(ambient_);
    for (std::size_t i = 0; i < basis_.size(); ++i) axpy(v, k[i], basis_[i]);
    vs.push_back(std::move(v));
  }
  return span(ambient_, vs);
}

}  // namespace lierig
