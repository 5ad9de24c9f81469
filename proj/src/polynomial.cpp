#include "lierig/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace lierig {

RatPolynomial::RatPolynomial(Vector coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPolynomial::RatPolynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

RatPolynomial RatPolynomial::constant(const Rational& c) { return RatPolynomial(Vector{c}); }

RatPolynomial RatPolynomial::monomial(std::size_t k, const Rational& c) {
  Vector v = zero_vector(k + 1);
  v[k] = c;
  return RatPolynomial(std::move(v));
}

void RatPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RatPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

const Rational& RatPolynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

RatPolynomial RatPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  Vector d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<long>(k) * coeffs_[k];
  return RatPolynomial(std::move(d));
}

RatPolynomial RatPolynomial::monic() const {
  if (is_zero()) return {};
  const Rational inv = 1 / leading();
  Vector v = coeffs_;
  for (auto& c : v) c *= inv;
  return RatPolynomial(std::move(v));
}

Rational RatPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatMatrix RatPolynomial::operator()(const RatMatrix& m) const {
  if (!m.is_square()) throw std::invalid_argument("polynomial of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix acc(n, n);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

std::string RatPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || k == 0) out << lierig::to_string(mag);
    if (k > 0) {
      if (mag != 1) out << '*';
      out << var;
      if (k > 1) out << '^' << k;
    }
    first = false;
  }
  return out.str();
}

RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b) {
  Vector v = zero_vector(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t k = 0; k < a.coefficients().size(); ++k) v[k] += a.coefficients()[k];
  for (std::size_t k = 0; k < b.coefficients().size(); ++k) v[k] += b.coefficients()[k];
  return RatPolynomial(std::move(v));
}

RatPolynomial operator-(const RatPolynomial& a) {
  Vector v = a.coefficients();
  for (auto& c : v) c = -c;
  return RatPolynomial(std::move(v));
}

RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b) { return a + (-b); }

RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  Vector v = zero_vector(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) v[i + j] += x[i] * y[j];
  return RatPolynomial(std::move(v));
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPolynomial{}, a};
  Vector rem = a.coefficients();
  const auto db = static_cast<std::size_t>(b.degree());
  Vector quot = zero_vector(rem.size() - db);
  const Rational lead_inv = 1 / b.leading();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    const Rational f = rem[k] * lead_inv;
    quot[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coefficients()[j];
  }
  return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    RatPolynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RatPolynomial char_poly(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("char_poly of non-square matrix");
  const std::size_t n = m.rows();
  Vector c = zero_vector(n + 1);
  c[n] = 1;
  RatMatrix acc(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    acc = m * acc;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += c[n - k + 1];
    c[n - k] = -(m * acc).trace() / static_cast<long>(k);
  }
  return RatPolynomial(std::move(c));
}

RatPolynomial min_poly(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("min_poly of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return RatPolynomial::constant(1);
  // The first linear dependency among I, m, m^2, ... gives the minimal
  // polynomial; earlier powers are independent so the kernel is a line.
  std::vector<Vector> powers{RatMatrix::identity(n).flat()};
  RatMatrix power = RatMatrix::identity(n);
  for (std::size_t d = 1; d <= n; ++d) {
    power = power * m;
    powers.push_back(power.flat());
    const auto ker = kernel_basis(RatMatrix::from_columns(powers, n * n));
    if (!ker.empty()) return RatPolynomial(ker.front()).monic();
  }
  throw std::logic_error("min_poly: no dependency up to degree n");
}

bool is_squarefree(const RatPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("is_squarefree of zero polynomial");
  return gcd(p, p.derivative()).degree() == 0;
}

RatPolynomial squarefree_part(const RatPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_part of zero polynomial");
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

std::vector<RatPolynomial> sturm_sequence(const RatPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("sturm_sequence of zero polynomial");
  std::vector<RatPolynomial> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    const auto& a = seq[seq.size() - 2];
    const auto& b = seq.back();
    seq.push_back(-divmod(a, b).second);
  }
  seq.pop_back();
  return seq;
}

namespace {

std::size_t sign_changes(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::size_t count_real_roots(const RatPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("count_real_roots of zero polynomial");
  const auto seq = sturm_sequence(squarefree_part(p));
  std::vector<int> at_neg_inf, at_pos_inf;
  for (const auto& q : seq) {
    const int s = sgn(q.leading());
    at_pos_inf.push_back(s);
    at_neg_inf.push_back(q.degree() % 2 == 0 ? s : -s);
  }
  return sign_changes(at_neg_inf) - sign_changes(at_pos_inf);
}

}  // namespace lierig
