#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "asorbit/involution.hpp"
#include "asorbit/matrix.hpp"

namespace asorbit {

// Invertible upper-triangular matrix.
class BorelMatrix {
 public:
  explicit BorelMatrix(Matrix m);  // throws std::invalid_argument

  int n() const { return m_.rows(); }
  const Matrix& underlying() const { return m_; }
  Rational diagonal_product() const;

 private:
  Matrix m_;
};

// Anti-symmetric monomial matrix with entries +1 above / -1 below the
// diagonal, stored as its set of index pairs (i, j), i < j, 0-based.
class MonomialASMatrix {
 public:
  MonomialASMatrix(int n, std::vector<std::pair<int, int>> pairs);  // validates disjointness

  int n() const { return n_; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  Matrix to_matrix() const;

  friend bool operator==(const MonomialASMatrix& a, const MonomialASMatrix& b) {
    return a.n_ == b.n_ && a.pairs_ == b.pairs_;
  }
  friend bool operator!=(const MonomialASMatrix& a, const MonomialASMatrix& b) {
    return !(a == b);
  }

 private:
  int n_;
  std::vector<std::pair<int, int>> pairs_;
};

struct Canonicalization {
  MonomialASMatrix monomial;
  BorelMatrix witness;  // witness^t * monomial * witness == input, exactly
};

// Reduces an anti-symmetric matrix to its canonical signed monomial form by
// upper-triangular congruence. The monomial form depends only on the orbit.
Canonicalization canonicalize(const ASMatrix& a);

MonomialASMatrix involution_to_monomial(const Involution& p);
Involution monomial_to_involution(const MonomialASMatrix& m);

// Pseudo-random upper-triangular matrix: diagonal in [1, entry_bound],
// strict upper entries in [-entry_bound, entry_bound]. Deterministic per seed.
BorelMatrix random_borel(int n, std::uint64_t seed, int entry_bound);

// B^t M B for the monomial form M of p and a seeded random Borel B;
// deterministic in (p, seed, entry_bound).
ASMatrix random_orbit_element(const Involution& p, std::uint64_t seed, int entry_bound);

}  // namespace asorbit
