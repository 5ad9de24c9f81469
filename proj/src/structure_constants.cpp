#include "lierig/structure_constants.hpp"

#include <stdexcept>
#include <string>

namespace lierig {

void StructureConstants::set_bracket(std::size_t i, std::size_t j, Vector v) {
  if (i >= dim_ || j >= dim_) throw std::invalid_argument("bracket index out of range");
  if (i == j) throw std::invalid_argument("self-bracket [e_i,e_i] is zero by antisymmetry");
  if (v.size() != dim_) throw std::invalid_argument("bracket vector has wrong length");
  if (i > j) {
    std::swap(i, j);
    for (auto& x : v) x = -x;
  }
  if (lierig::is_zero(v))
    brackets_.erase({i, j});
  else
    brackets_[{i, j}] = std::move(v);
}

Vector StructureConstants::basis_bracket(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw std::invalid_argument("bracket index out of range");
  if (i == j) return zero_vector(dim_);
  const bool flip = i > j;
  auto it = brackets_.find(flip ? Key{j, i} : Key{i, j});
  if (it == brackets_.end()) return zero_vector(dim_);
  return flip ? Rational(-1) * it->second : it->second;
}

Rational StructureConstants::coefficient(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j) return 0;
  const bool flip = i > j;
  auto it = brackets_.find(flip ? Key{j, i} : Key{i, j});
  if (it == brackets_.end()) return 0;
  return flip ? Rational(-it->second.at(k)) : it->second.at(k);
}

StructureTensor::StructureTensor(const StructureConstants& g)
    : n_(g.dim()), data_(n_ * n_ * n_, Rational(0)) {
  for (const auto& [key, v] : g.brackets()) {
    const auto [i, j] = key;
    for (std::size_t k = 0; k < n_; ++k) {
      data_[(i * n_ + j) * n_ + k] = v[k];
      data_[(j * n_ + i) * n_ + k] = -v[k];
    }
  }
}

StructureConstants abelian(std::size_t n) { return StructureConstants(n); }

Vector bracket(const StructureConstants& g, const Vector& x, const Vector& y) {
  if (x.size() != g.dim() || y.size() != g.dim()) throw std::invalid_argument("bracket: vector length mismatch");
  Vector out = zero_vector(g.dim());
  for (const auto& [key, v] : g.brackets()) {
    const auto [i, j] = key;
    const Rational c = x[i] * y[j] - x[j] * y[i];
    axpy(out, c, v);
  }
  return out;
}

RatMatrix ad(const StructureConstants& g, const Vector& x) {
  if (x.size() != g.dim()) throw std::invalid_argument("ad: vector length mismatch");
  const std::size_t n = g.dim();
  RatMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.set_column(j, bracket(g, x, unit_vector(n, j)));
  return m;
}

std::vector<RatMatrix> adjoint_basis(const StructureConstants& g) {
  std::vector<RatMatrix> out;
  out.reserve(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) out.push_back(ad(g, unit_vector(g.dim(), i)));
  return out;
}

std::optional<JacobiViolation> find_jacobi_violation(const StructureConstants& g) {
  const std::size_t n = g.dim();
  std::vector<Vector> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(unit_vector(n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector r = bracket(g, g.basis_bracket(i, j), e[k]);
        r += bracket(g, g.basis_bracket(j, k), e[i]);
        r += bracket(g, g.basis_bracket(k, i), e[j]);
        if (!is_zero(r)) return JacobiViolation{i, j, k, std::move(r)};
      }
  return std::nullopt;
}

bool is_lie_algebra(const StructureConstants& g) { return !find_jacobi_violation(g).has_value(); }

void require_lie_algebra(const StructureConstants& g, const char* op) {
  if (auto v = find_jacobi_violation(g))
    throw std::domain_error(std::string(op) + ": not a Lie algebra (Jacobi fails on basis triple (" +
                            std::to_string(v->i) + "," + std::to_string(v->j) + "," + std::to_string(v->k) + "))");
}

StructureConstants change_basis(const StructureConstants& g, const RatMatrix& p) {
  const std::size_t n = g.dim();
  if (p.rows() != n || p.cols() != n) throw std::invalid_argument("change_basis: matrix shape mismatch");
  const RatMatrix p_inv = inverse(p);
  StructureConstants out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const Vector v = bracket(g, p.column(a), p.column(b));
      out.set_bracket(a, b, p_inv * v);
    }
  return out;
}

StructureConstants direct_sum(const StructureConstants& g1, const StructureConstants& g2) {
  const std::size_t n1 = g1.dim();
  const std::size_t n = n1 + g2.dim();
  StructureConstants out(n);
  for (const auto& [key, v] : g1.brackets()) {
    Vector w = zero_vector(n);
    for (std::size_t k = 0; k < n1; ++k) w[k] = v[k];
    out.set_bracket(key.first, key.second, std::move(w));
  }
  for (const auto& [key, v] : g2.brackets()) {
    Vector w = zero_vector(n);
    for (std::size_t k = 0; k < v.size(); ++k) w[n1 + k] = v[k];
    out.set_bracket(n1 + key.first, n1 + key.second, std::move(w));
  }
  return out;
}

}  // namespace lierig
