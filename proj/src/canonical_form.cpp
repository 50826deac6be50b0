#include "asorbit/canonical_form.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <stdexcept>

namespace asorbit {

BorelMatrix::BorelMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("Borel matrix must be square");
  for (int i = 0; i < m_.rows(); ++i) {
    if (m_(i, i).is_zero()) throw std::invalid_argument("Borel matrix needs a nonzero diagonal");
    for (int j = 0; j < i; ++j)
      if (!m_(i, j).is_zero())
        throw std::invalid_argument("Borel matrix must be upper-triangular");
  }
}

Rational BorelMatrix::diagonal_product() const {
  Rational p(1);
  for (int i = 0; i < n(); ++i) p *= m_(i, i);
  return p;
}

MonomialASMatrix::MonomialASMatrix(int n, std::vector<std::pair<int, int>> pairs)
    : n_(n), pairs_(std::move(pairs)) {
  if (n < 1) throw std::invalid_argument("matrix dimension must be positive");
  std::sort(pairs_.begin(), pairs_.end());
  std::vector<bool> used(n, false);
  for (const auto& [i, j] : pairs_) {
    if (i < 0 || j < 0 || i >= n || j >= n || i >= j)
      throw std::invalid_argument("monomial pair indices must satisfy 0 <= i < j < n");
    if (used[i] || used[j]) throw std::invalid_argument("monomial pairs must be disjoint");
    used[i] = used[j] = true;
  }
}

Matrix MonomialASMatrix::to_matrix() const {
  Matrix m(n_, n_);
  for (const auto& [i, j] : pairs_) {
    m(i, j) = Rational(1);
    m(j, i) = Rational(-1);
  }
  return m;
}

namespace {

// Solves T * B = I for upper-triangular T by back substitution.
Matrix invert_upper_triangular(const Matrix& t) {
  const int n = t.rows();
  Matrix b(n, n);
  for (int c = 0; c < n; ++c) {
    for (int r = c; r >= 0; --r) {
      Rational s = (r == c) ? Rational(1) : Rational(0);
      for (int k = r + 1; k <= c; ++k) s -= t(r, k) * b(k, c);
      b(r, c) = s / t(r, r);
    }
  }
  return b;
}

}  // namespace

Canonicalization canonicalize(const ASMatrix& a) {
  const int n = a.n();
  Matrix m = a.underlying();
  Matrix t = Matrix::identity(n);

  // One elementary congruence step: col dst += f * col src together with the
  // mirrored row update, which keeps m anti-symmetric and maintains
  // m == t^t * a * t with t upper-triangular (src < dst throughout).
  auto congruence_update = [&](int src, int dst, const Rational& f) {
    for (int r = 0; r < n; ++r) m(r, dst) += f * m(r, src);
    for (int c = 0; c < n; ++c) m(dst, c) += f * m(src, c);
    for (int r = 0; r <= src; ++r) t(r, dst) += f * t(r, src);
  };

  std::vector<std::pair<int, int>> pivots;
  for (int i = 0; i < n; ++i) {
    // Leftmost nonzero entry right of the diagonal. Rows that are zero there
    // are fixed points or lower partners of earlier pivots; skip them.
    int j = -1;
    for (int c = i + 1; c < n; ++c)
      if (!m(i, c).is_zero()) {
        j = c;
        break;
      }
    if (j < 0) continue;
    const Rational v = m(i, j);
    for (int c = j + 1; c < n; ++c)
      if (!m(i, c).is_zero()) congruence_update(j, c, -m(i, c) / v);
    for (int r = i + 1; r < n; ++r)
      if (r != j && !m(r, j).is_zero()) congruence_update(i, r, -m(r, j) / v);
    pivots.emplace_back(i, j);
  }

  // Diagonal congruence scales each pivot pair to +1/-1; the pairs are
  // disjoint, so the scalings are independent.
  for (const auto& [i, j] : pivots) {
    const Rational v = m(i, j);
    for (int r = 0; r < n; ++r) m(r, j) /= v;
    for (int c = 0; c < n; ++c) m(j, c) /= v;
    for (int r = 0; r <= j; ++r) t(r, j) /= v;
  }

  MonomialASMatrix monomial(n, pivots);
  assert(m == monomial.to_matrix());
  // m == t^t a t, so a == b^t m b for b = t^{-1}.
  BorelMatrix witness(invert_upper_triangular(t));
  return Canonicalization{std::move(monomial), std::move(witness)};
}

MonomialASMatrix involution_to_monomial(const Involution& p) {
  return MonomialASMatrix(p.n(), p.two_cycles());
}

Involution monomial_to_involution(const MonomialASMatrix& m) {
  return Involution::from_pairs(m.n(), m.pairs());
}

namespace {

std::uint64_t mix64(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// Bounded draw; the small modulo bias is irrelevant for test sampling and
// keeps the stream identical across standard libraries.
long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

BorelMatrix random_borel(int n, std::uint64_t seed, int entry_bound) {
  if (entry_bound < 1) throw std::invalid_argument("entry bound must be positive");
  std::mt19937_64 rng(seed);
  Matrix b(n, n);
  for (int i = 0; i < n; ++i) {
    b(i, i) = Rational(draw(rng, 1, entry_bound));
    for (int j = i + 1; j < n; ++j) b(i, j) = Rational(draw(rng, -entry_bound, entry_bound));
  }
  return BorelMatrix(std::move(b));
}

ASMatrix random_orbit_element(const Involution& p, std::uint64_t seed, int entry_bound) {
  std::uint64_t h = mix64(0x61736f72626974ULL, seed);
  h = mix64(h, static_cast<std::uint64_t>(p.n()));
  for (int i = 0; i < p.n(); ++i) h = mix64(h, static_cast<std::uint64_t>(p.at(i)));
  h = mix64(h, static_cast<std::uint64_t>(entry_bound));
  const BorelMatrix b = random_borel(p.n(), h, entry_bound);
  const Matrix monomial = involution_to_monomial(p).to_matrix();
  return ASMatrix(b.underlying().transpose() * monomial * b.underlying());
}

}  // namespace asorbit
