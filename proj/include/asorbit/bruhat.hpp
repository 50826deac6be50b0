#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asorbit/involution.hpp"
#include "asorbit/matrix.hpp"
#include "asorbit/poset.hpp"

namespace asorbit {

class Permutation {
 public:
  explicit Permutation(std::vector<int> map);  // 0-based bijection of {0..n-1}
  static Permutation identity(int n);
  static Permutation of(const Involution& p) { return Permutation(p.map()); }

  int n() const { return static_cast<int>(map_.size()); }
  int at(int i) const { return map_[i]; }
  const std::vector<int>& map() const { return map_; }

  Matrix to_matrix() const;  // entry 1 at (i, map[i])
  int inversion_count() const;
  std::string one_line_str() const;  // "[2,1,4,3]"

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.map_ == b.map_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }

 private:
  std::vector<int> map_;
};

// Bruhat comparison through rank-control matrices: p <= q iff R(p) >= R(q)
// entrywise. Throws on size mismatch.
bool bruhat_leq_rc(const Permutation& p, const Permutation& q);

// Independent Bruhat order oracle: the reflexive-transitive closure of
// "multiply by a transposition, inversion count goes up by exactly one",
// generated upward from the identity over all of S_n.
class BruhatOrder {
 public:
  explicit BruhatOrder(int n);  // exhaustive; practical for n <= 7

  int n() const { return n_; }
  int count() const { return static_cast<int>(perms_.size()); }
  const Permutation& at(int index) const { return perms_[index]; }
  int index_of(const Permutation& p) const;

  bool leq(const Permutation& p, const Permutation& q) const;
  bool leq_index(int p, int q) const;

 private:
  int n_;
  std::vector<Permutation> perms_;  // lexicographic
  int words_;
  std::vector<std::vector<std::uint64_t>> down_;  // down_[q] = bitset of all p <= q
};

struct FpfViolation {
  std::string a;
  std::string b;
  bool orbit_leq;
  bool bruhat_geq;
};

// Restriction of the orbit poset to fixed-point-free involutions, compared
// against the reversed Bruhat order on the same elements.
struct FpfComparisonReport {
  int n = 0;
  long checked_pairs = 0;
  std::vector<FpfViolation> violations;
  bool isomorphic() const { return violations.empty(); }
};

FpfComparisonReport compare_fpf_with_bruhat(int n);  // n even

// First ordered pair of involutions on which the orbit order and the Bruhat
// order disagree, in enumeration order; empty for n <= 2.
std::optional<std::pair<Involution, Involution>> full_poset_not_bruhat_witness(int n);

struct BruhatSupportWitness {
  int n = 0;
  std::vector<int> fixed_set;  // 0-based
  IntervalCheck check;
  std::string detail;          // element names involved
};

// Searches for a prescribed-support class of involutions that is not an
// interval of the Bruhat poset of involutions.
std::optional<BruhatSupportWitness> bruhat_support_not_interval_witness(int n);

}  // namespace asorbit
