#include "asorbit/bruhat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "asorbit/rank_control.hpp"

namespace asorbit {

Permutation::Permutation(std::vector<int> map) : map_(std::move(map)) {
  const int n = static_cast<int>(map_.size());
  if (n < 1) throw std::invalid_argument("permutation size must be positive");
  std::vector<bool> seen(n, false);
  for (int v : map_) {
    if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("map is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> map(n);
  std::iota(map.begin(), map.end(), 0);
  return Permutation(std::move(map));
}

Matrix Permutation::to_matrix() const {
  Matrix m(n(), n());
  for (int i = 0; i < n(); ++i) m(i, map_[i]) = Rational(1);
  return m;
}

int Permutation::inversion_count() const {
  int count = 0;
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      if (map_[i] > map_[j]) ++count;
  return count;
}

std::string Permutation::one_line_str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n(); ++i) {
    if (i > 0) os << ',';
    os << map_[i] + 1;
  }
  os << ']';
  return os.str();
}

bool bruhat_leq_rc(const Permutation& p, const Permutation& q) {
  if (p.n() != q.n()) throw std::invalid_argument("permutation size mismatch");
  return leq_R(rank_control(q.to_matrix()), rank_control(p.to_matrix()));
}

namespace {

constexpr int kMaxBruhatN = 7;

int factorial(int n) {
  int f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// Lexicographic rank of a permutation (factorial number system).
int lehmer_rank(const std::vector<int>& map) {
  const int n = static_cast<int>(map.size());
  int rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (map[j] < map[i]) ++smaller;
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

int inversions_of(const std::vector<int>& map) {
  int count = 0;
  const int n = static_cast<int>(map.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (map[i] > map[j]) ++count;
  return count;
}

}  // namespace

BruhatOrder::BruhatOrder(int n) : n_(n) {
  if (n < 1 || n > kMaxBruhatN)
    throw std::invalid_argument("Bruhat order cache supports 1 <= n <= " +
                                std::to_string(kMaxBruhatN));
  const int total = factorial(n);
  perms_.reserve(total);
  std::vector<int> map(n);
  std::iota(map.begin(), map.end(), 0);
  do {
    perms_.push_back(Permutation(map));
  } while (std::next_permutation(map.begin(), map.end()));

  words_ = (total + 63) / 64;
  down_.assign(total, std::vector<std::uint64_t>(words_, 0));

  std::vector<int> by_inversions(total);
  std::iota(by_inversions.begin(), by_inversions.end(), 0);
  std::vector<int> inv_count(total);
  for (int i = 0; i < total; ++i) inv_count[i] = perms_[i].inversion_count();
  std::stable_sort(by_inversions.begin(), by_inversions.end(),
                   [&](int a, int b) { return inv_count[a] < inv_count[b]; });

  // Down-sets accumulate over the covering relation sigma -> sigma * (a b)
  // with inversion count + 1, processed in length order.
  for (int idx : by_inversions) {
    auto& bits = down_[idx];
    bits[idx / 64] |= 1ULL << (idx % 64);
    std::vector<int> swapped = perms_[idx].map();
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        std::swap(swapped[a], swapped[b]);
        if (inversions_of(swapped) == inv_count[idx] - 1) {
          const int pred = lehmer_rank(swapped);
          for (int w = 0; w < words_; ++w) bits[w] |= down_[pred][w];
        }
        std::swap(swapped[a], swapped[b]);
      }
  }
}

int BruhatOrder::index_of(const Permutation& p) const {
  if (p.n() != n_) throw std::invalid_argument("permutation size mismatch");
  return lehmer_rank(p.map());
}

bool BruhatOrder::leq_index(int p, int q) const {
  return (down_[q][p / 64] >> (p % 64)) & 1ULL;
}

bool BruhatOrder::leq(const Permutation& p, const Permutation& q) const {
  return leq_index(index_of(p), index_of(q));
}

FpfComparisonReport compare_fpf_with_bruhat(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("fixed-point-free involutions need even n >= 2");
  const OrbitPoset poset = build_poset(n);
  const BruhatOrder bruhat(n);

  std::vector<int> fpf;
  for (int i = 0; i < poset.size(); ++i)
    if (poset.node(i).inv.is_fixed_point_free()) fpf.push_back(i);

  FpfComparisonReport report;
  report.n = n;
  for (int x : fpf)
    for (int y : fpf) {
      ++report.checked_pairs;
      const bool orbit_leq = poset.leq(x, y);
      const bool bruhat_geq = bruhat.leq(Permutation::of(poset.node(y).inv),
                                         Permutation::of(poset.node(x).inv));
      if (orbit_leq != bruhat_geq)
        report.violations.push_back(FpfViolation{poset.node(x).inv.cycles_str(),
                                                 poset.node(y).inv.cycles_str(), orbit_leq,
                                                 bruhat_geq});
    }
  return report;
}

std::optional<std::pair<Involution, Involution>> full_poset_not_bruhat_witness(int n) {
  const OrbitPoset poset = build_poset(n);
  const BruhatOrder bruhat(n);
  for (int x = 0; x < poset.size(); ++x)
    for (int y = 0; y < poset.size(); ++y) {
      if (x == y) continue;
      const bool orbit_leq = poset.leq(x, y);
      const bool bruhat_leq = bruhat.leq(Permutation::of(poset.node(x).inv),
                                         Permutation::of(poset.node(y).inv));
      if (orbit_leq != bruhat_leq)
        return std::make_pair(poset.node(x).inv, poset.node(y).inv);
    }
  return std::nullopt;
}

std::optional<BruhatSupportWitness> bruhat_support_not_interval_witness(int n) {
  const std::vector<Involution> invs = enumerate_involutions(n);
  const BruhatOrder bruhat(n);
  const int m = static_cast<int>(invs.size());

  std::vector<int> perm_index(m);
  for (int i = 0; i < m; ++i) perm_index[i] = bruhat.index_of(Permutation::of(invs[i]));
  auto leq = [&](int x, int y) { return bruhat.leq_index(perm_index[x], perm_index[y]); };

  std::map<std::vector<int>, std::vector<int>> classes;
  for (int i = 0; i < m; ++i) classes[invs[i].fixed_points()].push_back(i);

  for (const auto& [fixed_set, members] : classes) {
    const IntervalCheck check = check_interval(leq, m, members);
    if (check.is_interval) continue;
    BruhatSupportWitness witness;
    witness.n = n;
    witness.fixed_set = fixed_set;
    witness.check = check;
    std::ostringstream os;
    if (check.violator >= 0)
      os << invs[check.violator].cycles_str() << " lies Bruhat-between "
         << invs[check.min_index].cycles_str() << " and " << invs[check.max_index].cycles_str()
         << " but has different support";
    else
      os << "class has no Bruhat " << (check.min_index < 0 ? "minimum" : "maximum");
    witness.detail = os.str();
    return witness;
  }
  return std::nullopt;
}

}  // namespace asorbit
