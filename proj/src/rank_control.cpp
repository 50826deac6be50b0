#include "asorbit/rank_control.hpp"

#include <sstream>
#include <stdexcept>

namespace asorbit {

RankControlMatrix::RankControlMatrix(int n, std::vector<int> entries)
    : n_(n), r_(std::move(entries)) {
  if (n < 1) throw std::invalid_argument("rank-control size must be positive");
  if (r_.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("rank-control entry count mismatch");
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      const int v = at(k, l);
      if (v < 0 || v > std::min(k, l) + 1)
        throw std::invalid_argument("rank-control entry out of range");
      if (k > 0 && (v < at(k - 1, l) || v > at(k - 1, l) + 1))
        throw std::invalid_argument("rank-control rows must grow by 0 or 1");
      if (l > 0 && (v < at(k, l - 1) || v > at(k, l - 1) + 1))
        throw std::invalid_argument("rank-control columns must grow by 0 or 1");
    }
}

std::string RankControlMatrix::to_text() const {
  std::ostringstream os;
  for (int k = 0; k < n_; ++k) {
    for (int l = 0; l < n_; ++l) {
      if (l > 0) os << ' ';
      os << at(k, l);
    }
    os << "\n";
  }
  return os.str();
}

RankControlMatrix rank_control(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("rank control requires a square matrix");
  const int n = m.rows();
  std::vector<int> r(static_cast<std::size_t>(n) * n);
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l)
      r[static_cast<std::size_t>(k - 1) * n + (l - 1)] = rank(m.upper_left(k, l));
  return RankControlMatrix(n, std::move(r));
}

bool leq_R(const RankControlMatrix& p, const RankControlMatrix& q) {
  if (p.n() != q.n()) throw std::invalid_argument("rank-control size mismatch");
  for (int k = 0; k < p.n(); ++k)
    for (int l = 0; l < p.n(); ++l)
      if (p.at(k, l) > q.at(k, l)) return false;
  return true;
}

int count_A(const RankControlMatrix& rc) {
  const int n = rc.n();
  int count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int prev = (i == 0) ? 0 : rc.at(i - 1, j - 1);
      if (rc.at(i, j) == prev) ++count;
    }
  return count;
}

}  // namespace asorbit
