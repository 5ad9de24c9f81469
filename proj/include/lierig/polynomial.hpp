#pragma once

#include "lierig/matrix.hpp"
#include "lierig/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lierig {

/// Univariate polynomial over Q, coefficients lowest degree first. Trailing
/// zeros are trimmed so the zero polynomial has no coefficients.
class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(Vector coeffs);
  RatPolynomial(std::initializer_list<Rational> coeffs);

  static RatPolynomial constant(const Rational& c);
  /// x^k
  static RatPolynomial monomial(std::size_t k, const Rational& c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Vector& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t k) const;
  const Rational& leading() const;

  RatPolynomial derivative() const;
  RatPolynomial monic() const;
  Rational operator()(const Rational& x) const;
  /// Matrix substitution by Horner's rule.
  RatMatrix operator()(const RatMatrix& m) const;

  std::string to_string(const std::string& var = "x") const;

  friend bool operator==(const RatPolynomial&, const RatPolynomial&) = default;

 private:
  void trim();
  Vector coeffs_;
};

RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial operator-(const RatPolynomial& a);
RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);

/// Euclidean division; throws std::domain_error on a zero divisor.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial gcd(RatPolynomial a, RatPolynomial b);

/// det(x I - m) by Faddeev-LeVerrier.
RatPolynomial char_poly(const RatMatrix& m);
RatPolynomial min_poly(const RatMatrix& m);

bool is_squarefree(const RatPolynomial& p);
/// p / gcd(p, p'), made monic. Same distinct roots as p, each simple.
RatPolynomial squarefree_part(const RatPolynomial& p);

/// p, p', -rem(...), ... down to the last nonzero remainder.
std::vector<RatPolynomial> sturm_sequence(const RatPolynomial& p);

/// Number of distinct real roots (Sturm's theorem on the squarefree part).
std::size_t count_real_roots(const RatPolynomial& p);

}  // namespace lierig
