#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asorbit/canonical_form.hpp"
#include "asorbit/involution.hpp"
#include "asorbit/rank_control.hpp"

namespace asorbit {

// Involution written as (i1,j1)...(ik,jk) with i_t < j_t and i_1 < ... < i_k,
// flattened to the word i1 j1 i2 j2 ... (0-based letters).
struct CanonicWord {
  explicit CanonicWord(std::vector<int> letters);  // validates the shape above
  std::vector<int> letters;
};

CanonicWord canonic_word(const Involution& p);
int inversions(const CanonicWord& w);

int count_A_of(const Involution& p);  // count_A of the monomial form's rank control
int dim_by_A(const Involution& p);      // (n^2-n)/2 - A
int dim_by_secfm(const Involution& p);  // (n^2-n)/2 - (inversions + sum over fixed a of n-a)

// Orbit dimension as the exact rank of the congruence tangent map
// u -> u^t M + M u at the monomial representative M, over upper-triangular u.
int orbit_dimension_oracle(const Involution& p);

struct PosetNode {
  Involution inv;
  RankControlMatrix rc;
  int rank;
};

// Congruence-orbit poset: order is entrywise rank-control comparison,
// covers are its transitive reduction.
class OrbitPoset {
 public:
  OrbitPoset(int n, std::vector<PosetNode> nodes, std::vector<std::pair<int, int>> covers);

  int n() const { return n_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  const PosetNode& node(int i) const { return nodes_[i]; }
  const std::vector<PosetNode>& nodes() const { return nodes_; }
  bool leq(int x, int y) const { return leq_[x][y]; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  int index_of(const Involution& p) const;  // -1 if absent

  friend bool operator==(const OrbitPoset& a, const OrbitPoset& b);

 private:
  int n_;
  std::vector<PosetNode> nodes_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::pair<int, int>> covers_;
};

OrbitPoset build_poset(int n, int jobs = 1);

// True iff every cover edge raises the rank by exactly one.
bool check_graded(const OrbitPoset& poset);

struct IntervalCheck {
  bool is_interval = false;
  int min_index = -1;
  int max_index = -1;
  int violator = -1;       // element within [min,max] but outside the set
  std::string reason;      // "no-minimum", "no-maximum" or "gap" when not an interval
};

// Whether `members` equals an interval [a,b] of the universe 0..universe-1
// ordered by `leq`.
IntervalCheck check_interval(const std::function<bool(int, int)>& leq, int universe,
                             const std::vector<int>& members);

// Node indices grouped by fixed-point set (as a sorted 0-based list).
std::map<std::vector<int>, std::vector<int>> support_classes(const OrbitPoset& poset);

struct SupportIntervalViolation {
  std::vector<int> fixed_set;  // 0-based
  IntervalCheck check;
  std::string describe(const OrbitPoset& poset) const;
};

// First prescribed-support class that fails to be an interval of the orbit
// poset; expected empty for every n.
std::optional<SupportIntervalViolation> orbit_support_interval_violation(const OrbitPoset& poset);

}  // namespace asorbit
