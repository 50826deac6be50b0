#pragma once

#include <string>
#include <vector>

#include "asorbit/matrix.hpp"

namespace asorbit {

// Matrix of ranks of all upper-left blocks; the congruence-orbit invariant.
class RankControlMatrix {
 public:
  RankControlMatrix(int n, std::vector<int> entries);  // validates shape invariants

  int n() const { return n_; }
  int at(int k, int l) const { return r_[static_cast<std::size_t>(k) * n_ + l]; }  // 0-based

  std::string to_text() const;  // n lines of n integers

  friend bool operator==(const RankControlMatrix& a, const RankControlMatrix& b) {
    return a.n_ == b.n_ && a.r_ == b.r_;
  }
  friend bool operator!=(const RankControlMatrix& a, const RankControlMatrix& b) {
    return !(a == b);
  }

 private:
  int n_;
  std::vector<int> r_;
};

RankControlMatrix rank_control(const Matrix& m);  // throws std::invalid_argument if non-square

// Entrywise comparison; throws on size mismatch.
bool leq_R(const RankControlMatrix& p, const RankControlMatrix& q);

// Number of strict-upper positions (i,j) with r[i][j] == r[i-1][j-1], reading
// the phantom row r[0][*] as zeros (1-based statement; 0 <= result <= n(n-1)/2).
int count_A(const RankControlMatrix& rc);

}  // namespace asorbit
