#include "asorbit/poset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "asorbit/parallel.hpp"

namespace asorbit {

CanonicWord::CanonicWord(std::vector<int> w) : letters(std::move(w)) {
  if (letters.size() % 2 != 0) throw std::invalid_argument("canonic word must pair up");
  std::vector<int> seen;
  for (std::size_t t = 0; t + 1 < letters.size(); t += 2) {
    if (letters[t] >= letters[t + 1])
      throw std::invalid_argument("canonic word needs i < j within each pair");
    if (t >= 2 && letters[t - 2] >= letters[t])
      throw std::invalid_argument("canonic word needs increasing pair openers");
  }
  seen = letters;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw std::invalid_argument("canonic word letters must be distinct");
}

CanonicWord canonic_word(const Involution& p) {
  std::vector<int> letters;
  for (const auto& [i, j] : p.two_cycles()) {
    letters.push_back(i);
    letters.push_back(j);
  }
  return CanonicWord(std::move(letters));
}

int inversions(const CanonicWord& w) {
  int count = 0;
  for (std::size_t s = 0; s < w.letters.size(); ++s)
    for (std::size_t t = s + 1; t < w.letters.size(); ++t)
      if (w.letters[s] > w.letters[t]) ++count;
  return count;
}

int count_A_of(const Involution& p) {
  return count_A(rank_control(involution_to_monomial(p).to_matrix()));
}

int dim_by_A(const Involution& p) {
  const int n = p.n();
  return n * (n - 1) / 2 - count_A_of(p);
}

int dim_by_secfm(const Involution& p) {
  const int n = p.n();
  int fixed_sum = 0;
  for (int a : p.fixed_points()) fixed_sum += n - (a + 1);
  return n * (n - 1) / 2 - (inversions(canonic_word(p)) + fixed_sum);
}

int orbit_dimension_oracle(const Involution& p) {
  const int n = p.n();
  const Matrix m = involution_to_monomial(p).to_matrix();
  // Row per upper-triangular basis element e_{s,t}, column per anti-symmetric
  // coordinate (r,c) with r < c; entry of e_{t,s} M + M e_{s,t} at (r,c).
  const int rows = n * (n + 1) / 2;
  const int cols = n * (n - 1) / 2;
  if (cols == 0) return 0;
  Matrix coeff(rows, cols);
  int row = 0;
  for (int s = 0; s < n; ++s)
    for (int t = s; t < n; ++t, ++row) {
      int col = 0;
      for (int r = 0; r < n; ++r)
        for (int c = r + 1; c < n; ++c, ++col) {
          Rational entry(0);
          if (r == t) entry += m(s, c);
          if (c == t) entry += m(r, s);
          coeff(row, col) = entry;
        }
    }
  return rank(coeff);
}

OrbitPoset::OrbitPoset(int n, std::vector<PosetNode> nodes, std::vector<std::pair<int, int>> covers)
    : n_(n), nodes_(std::move(nodes)), covers_(std::move(covers)) {
  const int m = size();
  leq_.assign(m, std::vector<bool>(m, false));
  for (int x = 0; x < m; ++x) {
    if (nodes_[x].inv.n() != n_ || nodes_[x].rc.n() != n_)
      throw std::invalid_argument("poset node size mismatch");
    if (nodes_[x].rank != n_ * (n_ - 1) / 2 - count_A(nodes_[x].rc))
      throw std::invalid_argument("poset node rank inconsistent with its rank control");
    for (int y = 0; y < m; ++y) leq_[x][y] = leq_R(nodes_[x].rc, nodes_[y].rc);
  }
  for (const auto& [lo, hi] : covers_)
    if (lo < 0 || hi < 0 || lo >= m || hi >= m || lo == hi || !leq_[lo][hi])
      throw std::invalid_argument("invalid cover edge");
}

int OrbitPoset::index_of(const Involution& p) const {
  for (int i = 0; i < size(); ++i)
    if (nodes_[i].inv == p) return i;
  return -1;
}

bool operator==(const OrbitPoset& a, const OrbitPoset& b) {
  if (a.n_ != b.n_ || a.covers_ != b.covers_ || a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i) {
    if (a.nodes_[i].inv != b.nodes_[i].inv || a.nodes_[i].rc != b.nodes_[i].rc ||
        a.nodes_[i].rank != b.nodes_[i].rank)
      return false;
  }
  return true;
}

OrbitPoset build_poset(int n, int jobs) {
  const std::vector<Involution> invs = enumerate_involutions(n);
  const int m = static_cast<int>(invs.size());

  std::vector<std::optional<RankControlMatrix>> rcs(m);
  parallel_for(m, jobs, [&](int i) {
    rcs[i] = rank_control(involution_to_monomial(invs[i]).to_matrix());
  });

  std::vector<PosetNode> nodes;
  nodes.reserve(m);
  for (int i = 0; i < m; ++i) {
    const int rnk = n * (n - 1) / 2 - count_A(*rcs[i]);
    nodes.push_back(PosetNode{invs[i], std::move(*rcs[i]), rnk});
  }

  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  parallel_for(m, jobs, [&](int x) {
    for (int y = 0; y < m; ++y) leq[x][y] = leq_R(nodes[x].rc, nodes[y].rc);
  });
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y)
      if (leq[x][y] && leq[y][x])
        throw std::logic_error("distinct orbits share a rank-control matrix");

  // Transitive reduction: (x,y) is a cover iff nothing sits strictly between.
  std::vector<std::pair<int, int>> covers;
  for (int y = 0; y < m; ++y) {
    std::vector<int> preds;
    for (int x = 0; x < m; ++x)
      if (x != y && leq[x][y]) preds.push_back(x);
    for (int x : preds) {
      bool covered = true;
      for (int z : preds)
        if (z != x && leq[x][z]) {
          covered = false;
          break;
        }
      if (covered) covers.emplace_back(x, y);
    }
  }
  std::sort(covers.begin(), covers.end());
  return OrbitPoset(n, std::move(nodes), std::move(covers));
}

bool check_graded(const OrbitPoset& poset) {
  for (const auto& [lo, hi] : poset.covers())
    if (poset.node(hi).rank != poset.node(lo).rank + 1) return false;
  return true;
}

IntervalCheck check_interval(const std::function<bool(int, int)>& leq, int universe,
                             const std::vector<int>& members) {
  IntervalCheck result;
  for (int x : members) {
    bool is_min = true, is_max = true;
    for (int y : members) {
      if (!leq(x, y)) is_min = false;
      if (!leq(y, x)) is_max = false;
    }
    if (is_min) result.min_index = x;
    if (is_max) result.max_index = x;
  }
  if (result.min_index < 0) {
    result.reason = "no-minimum";
    return result;
  }
  if (result.max_index < 0) {
    result.reason = "no-maximum";
    return result;
  }
  std::vector<bool> inside(universe, false);
  for (int x : members) inside[x] = true;
  for (int z = 0; z < universe; ++z)
    if (!inside[z] && leq(result.min_index, z) && leq(z, result.max_index)) {
      result.violator = z;
      result.reason = "gap";
      return result;
    }
  result.is_interval = true;
  return result;
}

std::map<std::vector<int>, std::vector<int>> support_classes(const OrbitPoset& poset) {
  std::map<std::vector<int>, std::vector<int>> classes;
  for (int i = 0; i < poset.size(); ++i)
    classes[poset.node(i).inv.fixed_points()].push_back(i);
  return classes;
}

std::string SupportIntervalViolation::describe(const OrbitPoset& poset) const {
  std::ostringstream os;
  os << "fixed set {";
  for (std::size_t i = 0; i < fixed_set.size(); ++i) {
    if (i > 0) os << ',';
    os << fixed_set[i] + 1;
  }
  os << "}: " << check.reason;
  if (check.violator >= 0)
    os << ", " << poset.node(check.violator).inv.cycles_str() << " lies between "
       << poset.node(check.min_index).inv.cycles_str() << " and "
       << poset.node(check.max_index).inv.cycles_str() << " but has different support";
  return os.str();
}

std::optional<SupportIntervalViolation> orbit_support_interval_violation(const OrbitPoset& poset) {
  for (const auto& [fixed_set, members] : support_classes(poset)) {
    const IntervalCheck check = check_interval(
        [&](int x, int y) { return poset.leq(x, y); }, poset.size(), members);
    if (!check.is_interval) return SupportIntervalViolation{fixed_set, check};
  }
  return std::nullopt;
}

}  // namespace asorbit
