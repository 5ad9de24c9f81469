#include "lierig/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace lierig {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

CochainSpace::CochainSpace(std::size_t n, std::size_t k) : n_(n), k_(k) {
  if (k > n) throw std::invalid_argument("cochain degree exceeds dimension");
  subsets_.resize(binomial(n, k));
  std::vector<std::size_t> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  // Walk every k-subset in lexicographic order, file it under its colex rank.
  while (true) {
    subsets_[colex_rank(s)] = s;
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

std::size_t CochainSpace::colex_rank(const std::vector<std::size_t>& s) {
  std::size_t r = 0;
  for (std::size_t p = 0; p < s.size(); ++p) r += binomial(s[p], p + 1);
  return r;
}

std::size_t CochainSpace::index(std::size_t target, const std::vector<std::size_t>& s) const {
  return colex_rank(s) * n_ + target;
}

namespace {

// Column of phi_{t,{a,b}} contributing to phi(e_a, e_b), with the sign of the
// reordering; a == b contributes nothing.
struct PairRef {
  bool zero;
  std::size_t subset_rank;
  int sign;
};

PairRef pair_ref(std::size_t a, std::size_t b) {
  if (a == b) return {true, 0, 0};
  if (a < b) return {false, CochainSpace::colex_rank({a, b}), 1};
  return {false, CochainSpace::colex_rank({b, a}), -1};
}

RatMatrix d0(const StructureTensor& c) {
  const std::size_t n = c.dim();
  RatMatrix m(n * n, n);
  // row (t, {j}) = j*n + t, column s
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t s = 0; s < n; ++s) m(j * n + t, s) = c(j, s, t);
  return m;
}

RatMatrix d1(const StructureTensor& c, const CochainSpace& c2) {
  const std::size_t n = c.dim();
  RatMatrix m(c2.dimension(), n * n);
  for (std::size_t r = 0; r < c2.subset_count(); ++r) {
    const std::size_t i = c2.subset(r)[0];
    const std::size_t j = c2.subset(r)[1];
    for (std::size_t out = 0; out < n; ++out) {
      const std::size_t row = r * n + out;
      for (std::size_t t = 0; t < n; ++t) {
        m(row, j * n + t) += c(i, t, out);
        m(row, i * n + t) -= c(j, t, out);
      }
      for (std::size_t p = 0; p < n; ++p) m(row, p * n + out) -= c(i, j, p);
    }
  }
  return m;
}

RatMatrix d2(const StructureTensor& c, const CochainSpace& c2, const CochainSpace& c3) {
  const std::size_t n = c.dim();
  RatMatrix m(c3.dimension(), c2.dimension());
  for (std::size_t r = 0; r < c3.subset_count(); ++r) {
    const std::size_t i = c3.subset(r)[0];
    const std::size_t j = c3.subset(r)[1];
    const std::size_t l = c3.subset(r)[2];
    const std::size_t jl = CochainSpace::colex_rank({j, l});
    const std::size_t il = CochainSpace::colex_rank({i, l});
    const std::size_t ij = CochainSpace::colex_rank({i, j});
    for (std::size_t out = 0; out < n; ++out) {
      const std::size_t row = r * n + out;
      for (std::size_t t = 0; t < n; ++t) {
        m(row, jl * n + t) += c(i, t, out);
        m(row, il * n + t) -= c(j, t, out);
        m(row, ij * n + t) += c(l, t, out);
      }
      // -phi([x,y], z) + phi([x,z], y) - phi([y,z], x)
      const struct {
        std::size_t a, b, other;
        int sign;
      } terms[3] = {{i, j, l, -1}, {i, l, j, 1}, {j, l, i, -1}};
      for (const auto& term : terms)
        for (std::size_t p = 0; p < n; ++p) {
          const Rational& coef = c(term.a, term.b, p);
          if (coef == 0) continue;
          const PairRef ref = pair_ref(p, term.other);
          if (ref.zero) continue;
          m(row, ref.subset_rank * n + out) += (term.sign * ref.sign) * coef;
        }
    }
  }
  return m;
}

}  // namespace

RatMatrix differential_matrix(const StructureConstants& g, std::size_t k) {
  if (k > 2) throw std::invalid_argument("differential_matrix: degree must be 0, 1 or 2");
  require_lie_algebra(g, "differential_matrix");
  const std::size_t n = g.dim();
  const StructureTensor c(g);
  switch (k) {
    case 0:
      return d0(c);
    case 1:
      return n >= 2 ? d1(c, CochainSpace(n, 2)) : RatMatrix(0, n * n);
    default:
      if (n < 2) return RatMatrix(0, 0);
      if (n < 3) return RatMatrix(0, CochainSpace(n, 2).dimension());
      return d2(c, CochainSpace(n, 2), CochainSpace(n, 3));
  }
}

CohomologyReport full_report(const StructureConstants& g) {
  require_lie_algebra(g, "full_report");
  const std::size_t n = g.dim();
  CohomologyReport r;
  for (std::size_t k = 0; k < 4; ++k) r.cochain_dims[k] = n * binomial(n, k);
  for (std::size_t k = 0; k < 3; ++k) r.ranks[k] = rank(differential_matrix(g, k));
  for (std::size_t k = 0; k < 3; ++k) {
    r.cocycle_dims[k] = r.cochain_dims[k] - r.ranks[k];
    r.coboundary_dims[k] = k == 0 ? 0 : r.ranks[k - 1];
    r.h_dims[k] = r.cocycle_dims[k] - r.coboundary_dims[k];
  }
  return r;
}

std::size_t h_dim(const StructureConstants& g, std::size_t k) {
  if (k > 2) throw std::invalid_argument("h_dim: degree must be 0, 1 or 2");
  require_lie_algebra(g, "h_dim");
  const std::size_t n = g.dim();
  const std::size_t z = n * binomial(n, k) - rank(differential_matrix(g, k));
  const std::size_t b = k == 0 ? 0 : rank(differential_matrix(g, k - 1));
  return z - b;
}

bool is_algebraically_rigid(const StructureConstants& g) { return h_dim(g, 2) == 0; }

}  // namespace lierig
