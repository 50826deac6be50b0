#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace asorbit {

struct CheckResult {
  std::string name;
  bool passed = false;
  long cases = 0;
  std::string detail;
};

// Practical per-check bounds on n (costs grow with the involution count
// I(n) or with n!).
inline constexpr int kGradingMaxN = 8;
inline constexpr int kDimensionMaxN = 6;
inline constexpr int kSecfmMaxN = 10;
inline constexpr int kBruhatMaxN = 6;   // exhaustive pairs for n <= 4, sampled above
inline constexpr int kInvarianceMaxN = 6;
inline constexpr int kPfaffianMaxN = 8;
inline constexpr int kIntervalsMaxN = 8;

// Cover edges raise rank by one; identity is the unique minimum and, for
// even n, the pairing (1,2)(3,4)... is the unique maximum.
CheckResult check_grading(int n, int jobs = 1);

// dim by the rank-control formula == tangent-space oracle, all involutions.
CheckResult check_dimension(int n, int jobs = 1);

// dim by the rank-control formula == dim by the word formula, all involutions.
CheckResult check_secfm(int n, int jobs = 1);

// Rank-control Bruhat comparison == cover-generated oracle (exhaustive for
// n <= 4, 500 seeded pairs otherwise); on even n also: fixed-point-free
// orbit order == reversed Bruhat, and the full poset differs from the
// Bruhat order for n >= 3.
CheckResult check_bruhat(int n, std::uint64_t seed);

// Random congruences leave the rank-control matrix unchanged and
// canonicalize recovers the involution with a valid witness.
CheckResult check_invariance(int n, std::uint64_t seed, int trials, int jobs = 1,
                             int entry_bound = 5);

// |Pf(B^t M B)| == |prod diag B| for fixed-point-free involutions, plus
// Pf^2 == det on every sample.
CheckResult check_pfaffian(int n, std::uint64_t seed, int trials, int jobs = 1,
                           int entry_bound = 5);

// Every prescribed-support class is an interval of the orbit poset; reports
// (without asserting) a Bruhat-side non-interval class when one exists.
CheckResult check_intervals(int n);

int verify_exit_code(const std::vector<CheckResult>& results);  // 0 ok, 2 any failure

}  // namespace asorbit
