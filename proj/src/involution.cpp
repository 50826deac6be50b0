#include "asorbit/involution.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace asorbit {

Involution Involution::identity(int n) {
  if (n < 1) throw std::invalid_argument("involution size must be positive");
  std::vector<int> map(n);
  for (int i = 0; i < n; ++i) map[i] = i;
  return Involution(std::move(map));
}

Involution Involution::from_map(std::vector<int> map) {
  const int n = static_cast<int>(map.size());
  if (n < 1) throw std::invalid_argument("involution size must be positive");
  for (int i = 0; i < n; ++i) {
    if (map[i] < 0 || map[i] >= n) throw std::invalid_argument("involution image out of range");
    if (map[map[i]] != i) throw std::invalid_argument("map is not self-inverse");
  }
  return Involution(std::move(map));
}

Involution Involution::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  if (n < 1) throw std::invalid_argument("involution size must be positive");
  std::vector<int> map(n);
  for (int i = 0; i < n; ++i) map[i] = i;
  for (const auto& [i, j] : pairs) {
    if (i < 0 || j < 0 || i >= n || j >= n || i == j)
      throw std::invalid_argument("invalid transposition");
    if (map[i] != i || map[j] != j) throw std::invalid_argument("transpositions not disjoint");
    map[i] = j;
    map[j] = i;
  }
  return Involution(std::move(map));
}

Involution Involution::parse(std::string_view text, int n) {
  if (n < 1) throw std::invalid_argument("involution size must be positive");
  std::size_t pos = 0;
  auto skip_spaces = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_spaces();
  if (pos >= text.size()) throw std::invalid_argument("empty involution");
  if (text[pos] == 'e') {
    ++pos;
    skip_spaces();
    if (pos != text.size()) throw std::invalid_argument("trailing content after 'e'");
    return identity(n);
  }
  auto read_index = [&]() -> int {
    skip_spaces();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start)
      throw std::invalid_argument("expected index at position " + std::to_string(start + 1));
    long v = std::stol(std::string(text.substr(start, pos - start)));
    if (v < 1 || v > n)
      throw std::invalid_argument("index " + std::to_string(v) + " out of range 1.." +
                                  std::to_string(n));
    return static_cast<int>(v) - 1;
  };
  std::vector<std::pair<int, int>> pairs;
  while (true) {
    skip_spaces();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++pos;
    const int i = read_index();
    skip_spaces();
    if (pos >= text.size() || text[pos] != ',')
      throw std::invalid_argument("expected ',' in cycle");
    ++pos;
    const int j = read_index();
    skip_spaces();
    if (pos >= text.size() || text[pos] != ')')
      throw std::invalid_argument("expected ')' in cycle");
    ++pos;
    if (i >= j)
      throw std::invalid_argument("cycle must be written (i,j) with i < j");
    pairs.emplace_back(i, j);
  }
  if (pairs.empty()) throw std::invalid_argument("empty involution");
  try {
    return from_pairs(n, pairs);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("repeated index in cycles");
  }
}

std::vector<std::pair<int, int>> Involution::two_cycles() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n(); ++i)
    if (map_[i] > i) out.emplace_back(i, map_[i]);
  return out;
}

std::vector<int> Involution::fixed_points() const {
  std::vector<int> out;
  for (int i = 0; i < n(); ++i)
    if (map_[i] == i) out.push_back(i);
  return out;
}

bool Involution::is_fixed_point_free() const {
  for (int i = 0; i < n(); ++i)
    if (map_[i] == i) return false;
  return true;
}

std::string Involution::cycles_str() const {
  const auto cycles = two_cycles();
  if (cycles.empty()) return "e";
  std::ostringstream os;
  for (const auto& [i, j] : cycles) os << '(' << i + 1 << ',' << j + 1 << ')';
  return os.str();
}

std::vector<Involution> enumerate_involutions(int n) {
  if (n < 1) throw std::invalid_argument("involution size must be positive");
  std::vector<Involution> out;
  std::vector<int> map(n, -1);
  auto rec = [&](auto&& self, int from) -> void {
    int i = from;
    while (i < n && map[i] >= 0) ++i;
    if (i == n) {
      out.push_back(Involution::from_map(map));
      return;
    }
    map[i] = i;
    self(self, i + 1);
    map[i] = -1;
    for (int j = i + 1; j < n; ++j) {
      if (map[j] >= 0) continue;
      map[i] = j;
      map[j] = i;
      self(self, i + 1);
      map[i] = map[j] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

std::uint64_t involution_count(int n) {
  if (n < 1 || n > 30) throw std::invalid_argument("involution count supported for 1 <= n <= 30");
  std::uint64_t prev2 = 1, prev1 = 1;  // I(0), I(1)
  for (int k = 2; k <= n; ++k) {
    std::uint64_t cur = prev1 + static_cast<std::uint64_t>(k - 1) * prev2;
    prev2 = prev1;
    prev1 = cur;
  }
  return prev1;
}

}  // namespace asorbit
