#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace lierig {

/// Exact rational scalar. GMP keeps every value canonical (reduced, positive
/// denominator) after each arithmetic operation; the two-argument
/// constructor does not, so call canonicalize() on an unreduced pair.
using Rational = mpq_class;

/// Dense coordinate vector over the rationals.
using Vector = std::vector<Rational>;

/// Reduced "p/q" form; integers are written without a denominator.
std::string to_string(const Rational& q);

/// Parses `[-]int[/posint]`. Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
Vector& operator+=(Vector& a, const Vector& b);

/// a += s * b
void axpy(Vector& a, const Rational& s, const Vector& b);

}  // namespace lierig
