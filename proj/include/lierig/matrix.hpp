#pragma once

#include "lierig/rational.hpp"

#include <cstddef>
#include <vector>

namespace lierig {

/// Dense row-major rational matrix. Used for adjoint maps, derivations,
/// torus generators and the cochain differentials.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  /// Row-list constructor; every row must have the same length.
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix diagonal(const Vector& d);
  static RatMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static RatMatrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_zero() const;

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& at(std::size_t r, std::size_t c);
  const Rational& at(std::size_t r, std::size_t c) const;

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);

  RatMatrix transpose() const;
  Rational trace() const;

  /// Row-major flattening, entry (r,c) at index r*cols + c.
  const Vector& flat() const { return data_; }
  static RatMatrix unflatten(const Vector& v, std::size_t rows, std::size_t cols);

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rational& s, const RatMatrix& m);
Vector operator*(const RatMatrix& m, const Vector& v);

/// ab - ba
RatMatrix commutator(const RatMatrix& a, const RatMatrix& b);

/// Stacks matrices with equal column counts on top of each other.
RatMatrix vstack(const std::vector<RatMatrix>& blocks);

struct Echelon {
  RatMatrix form;                   ///< row echelon form (reduced when requested)
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

/// Gaussian elimination over Q. Pivot is the first nonzero entry in row order
/// within each column. With `reduced`, pivots are 1 and cleared above too.
Echelon row_echelon(RatMatrix m, bool reduced);

std::size_t rank(const RatMatrix& m);

/// Rank by Bareiss fraction-free elimination on the denominator-cleared
/// integer matrix. Same contract as rank(); kept as an independent route.
std::size_t fraction_free_rank(const RatMatrix& m);

/// Basis of {v : m v = 0}, one vector per free column of the RREF, with a 1 in
/// that free coordinate.
std::vector<Vector> kernel_basis(const RatMatrix& m);

/// Throws std::domain_error when singular, std::invalid_argument when not square.
RatMatrix inverse(const RatMatrix& m);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Sylvester inertia of a symmetric matrix by exact congruence
/// diagonalization. Throws std::invalid_argument on non-symmetric input.
Inertia signature(const RatMatrix& m);

}  // namespace lierig
