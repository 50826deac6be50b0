#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace asorbit {

// Self-inverse permutation of {0..n-1}. Text I/O is 1-based cycle notation.
class Involution {
 public:
  static Involution identity(int n);
  static Involution from_map(std::vector<int> map);  // validates map[map[i]] == i
  static Involution from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);
  // "e" or "(i,j)(k,l)..." with 1-based indices, i<j in each pair.
  static Involution parse(std::string_view text, int n);  // throws std::invalid_argument

  int n() const { return static_cast<int>(map_.size()); }
  int at(int i) const { return map_[i]; }
  const std::vector<int>& map() const { return map_; }

  std::vector<std::pair<int, int>> two_cycles() const;  // (i,j), i<j, sorted by i
  std::vector<int> fixed_points() const;
  bool is_fixed_point_free() const;
  std::string cycles_str() const;  // "e" or "(1,4)(2,5)"

  friend bool operator==(const Involution& a, const Involution& b) { return a.map_ == b.map_; }
  friend bool operator!=(const Involution& a, const Involution& b) { return !(a == b); }
  friend bool operator<(const Involution& a, const Involution& b) { return a.map_ < b.map_; }

 private:
  explicit Involution(std::vector<int> map) : map_(std::move(map)) {}
  std::vector<int> map_;
};

// All involutions of S_n, lexicographic by one-line notation.
std::vector<Involution> enumerate_involutions(int n);

// I(n) = I(n-1) + (n-1) I(n-2), the telephone numbers.
std::uint64_t involution_count(int n);

}  // namespace asorbit
