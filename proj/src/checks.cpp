#include "asorbit/checks.hpp"

#include <atomic>
#include <random>
#include <sstream>

#include "asorbit/bruhat.hpp"
#include "asorbit/canonical_form.hpp"
#include "asorbit/matrix.hpp"
#include "asorbit/parallel.hpp"
#include "asorbit/poset.hpp"
#include "asorbit/rank_control.hpp"

namespace asorbit {

namespace {

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  return seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(trial + 1));
}

}  // namespace

CheckResult check_grading(int n, int jobs) {
  CheckResult result{"grading", false, 0, ""};
  const OrbitPoset poset = build_poset(n, jobs);
  result.cases = poset.size();

  bool ok = check_graded(poset);
  std::ostringstream os;
  os << "nodes=" << poset.size() << " covers=" << poset.covers().size();

  const int min_index = poset.index_of(Involution::identity(n));
  for (int y = 0; ok && y < poset.size(); ++y)
    if (!poset.leq(min_index, y)) ok = false;
  if (ok && poset.node(min_index).rank != 0) ok = false;
  for (int x = 0; ok && x < poset.size(); ++x)
    if (x != min_index && poset.leq(x, min_index)) ok = false;

  if (ok && n % 2 == 0) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; i += 2) pairs.emplace_back(i, i + 1);
    const int top = poset.index_of(Involution::from_pairs(n, pairs));
    for (int x = 0; ok && x < poset.size(); ++x)
      if (!poset.leq(x, top)) ok = false;
    if (ok && poset.node(top).rank != n * (n - 1) / 2) ok = false;
  }

  result.passed = ok;
  result.detail = os.str() + (ok ? " graded, extremes verified" : " violation found");
  return result;
}

CheckResult check_dimension(int n, int jobs) {
  CheckResult result{"dimension", false, 0, ""};
  const std::vector<Involution> invs = enumerate_involutions(n);
  result.cases = static_cast<long>(invs.size());
  std::atomic<int> failures{0};
  parallel_for(static_cast<int>(invs.size()), jobs, [&](int i) {
    if (dim_by_A(invs[i]) != orbit_dimension_oracle(invs[i])) ++failures;
  });
  result.passed = failures == 0;
  std::ostringstream os;
  os << result.cases << " involutions vs tangent oracle, " << failures << " mismatches";
  result.detail = os.str();
  return result;
}

CheckResult check_secfm(int n, int jobs) {
  CheckResult result{"secfm", false, 0, ""};
  const std::vector<Involution> invs = enumerate_involutions(n);
  result.cases = static_cast<long>(invs.size());
  std::atomic<int> failures{0};
  parallel_for(static_cast<int>(invs.size()), jobs, [&](int i) {
    if (dim_by_A(invs[i]) != dim_by_secfm(invs[i])) ++failures;
  });
  result.passed = failures == 0;
  std::ostringstream os;
  os << result.cases << " involutions, both formulas, " << failures << " mismatches";
  result.detail = os.str();
  return result;
}

CheckResult check_bruhat(int n, std::uint64_t seed) {
  CheckResult result{"bruhat", false, 0, ""};
  const BruhatOrder oracle(n);
  long mismatches = 0;

  if (n <= 4) {
    for (int x = 0; x < oracle.count(); ++x)
      for (int y = 0; y < oracle.count(); ++y) {
        ++result.cases;
        if (bruhat_leq_rc(oracle.at(x), oracle.at(y)) != oracle.leq_index(x, y)) ++mismatches;
      }
  } else {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 500; ++t) {
      const int x = static_cast<int>(rng() % oracle.count());
      const int y = static_cast<int>(rng() % oracle.count());
      ++result.cases;
      if (bruhat_leq_rc(oracle.at(x), oracle.at(y)) != oracle.leq_index(x, y)) ++mismatches;
    }
  }

  std::ostringstream os;
  os << result.cases << " pairs vs cover oracle, " << mismatches << " mismatches";
  bool ok = mismatches == 0;

  if (ok && n % 2 == 0) {
    const FpfComparisonReport report = compare_fpf_with_bruhat(n);
    os << "; fpf-vs-reversed-bruhat pairs=" << report.checked_pairs
       << " violations=" << report.violations.size();
    ok = report.isomorphic();
  }

  if (ok) {
    const auto witness = full_poset_not_bruhat_witness(n);
    if (n <= 2) {
      ok = !witness.has_value();
      os << "; full poset == bruhat order (expected for n<=2)";
    } else {
      ok = witness.has_value();
      if (witness)
        os << "; differs from bruhat order at (" << witness->first.cycles_str() << ", "
           << witness->second.cycles_str() << ")";
      else
        os << "; expected a divergence from the bruhat order but found none";
    }
  }

  result.passed = ok;
  result.detail = os.str();
  return result;
}

CheckResult check_invariance(int n, std::uint64_t seed, int trials, int jobs, int entry_bound) {
  CheckResult result{"invariance", false, 0, ""};
  const std::vector<Involution> invs = enumerate_involutions(n);
  result.cases = static_cast<long>(invs.size()) * trials;
  std::atomic<int> failures{0};
  parallel_for(static_cast<int>(invs.size()), jobs, [&](int i) {
    const Involution& p = invs[i];
    const MonomialASMatrix expected = involution_to_monomial(p);
    const RankControlMatrix expected_rc = rank_control(expected.to_matrix());
    for (int t = 0; t < trials; ++t) {
      const ASMatrix a = random_orbit_element(p, trial_seed(seed, t), entry_bound);
      if (rank_control(a.underlying()) != expected_rc) {
        ++failures;
        continue;
      }
      const Canonicalization canon = canonicalize(a);
      if (canon.monomial != expected) {
        ++failures;
        continue;
      }
      const Matrix& b = canon.witness.underlying();
      if (b.transpose() * canon.monomial.to_matrix() * b != a.underlying()) ++failures;
    }
  });
  result.passed = failures == 0;
  std::ostringstream os;
  os << result.cases << " random congruences (bound " << entry_bound << "), " << failures
     << " failures";
  result.detail = os.str();
  return result;
}

CheckResult check_pfaffian(int n, std::uint64_t seed, int trials, int jobs, int entry_bound) {
  CheckResult result{"pfaffian", false, 0, ""};
  if (n % 2 != 0) {
    result.passed = true;
    result.detail = "no fixed-point-free involutions for odd n";
    return result;
  }
  std::vector<Involution> fpf;
  for (const Involution& p : enumerate_involutions(n))
    if (p.is_fixed_point_free()) fpf.push_back(p);
  result.cases = static_cast<long>(fpf.size()) * trials;
  std::atomic<int> failures{0};
  parallel_for(static_cast<int>(fpf.size()), jobs, [&](int i) {
    const Matrix monomial = involution_to_monomial(fpf[i]).to_matrix();
    for (int t = 0; t < trials; ++t) {
      const std::uint64_t s =
          trial_seed(seed, t) ^ (0x517cc1b727220a95ULL * static_cast<std::uint64_t>(i + 1));
      const BorelMatrix b = random_borel(n, s, entry_bound);
      const ASMatrix congruent(b.underlying().transpose() * monomial * b.underlying());
      const Rational pf = pfaffian(congruent);
      if (pf.abs() != b.diagonal_product().abs()) ++failures;
      if (pf * pf != det(congruent.underlying())) ++failures;
    }
  });
  result.passed = failures == 0;
  std::ostringstream os;
  os << result.cases << " congruences of " << fpf.size() << " pairings, " << failures
     << " failures";
  result.detail = os.str();
  return result;
}

CheckResult check_intervals(int n) {
  CheckResult result{"intervals", false, 0, ""};
  const OrbitPoset poset = build_poset(n);
  const auto classes = support_classes(poset);
  result.cases = static_cast<long>(classes.size());
  const auto violation = orbit_support_interval_violation(poset);

  std::ostringstream os;
  os << result.cases << " support classes";
  bool ok = !violation.has_value();
  if (violation) os << "; NOT an interval: " << violation->describe(poset);

  if (ok && n % 2 == 0) {
    // The fixed-point-free class must stretch all the way to the top.
    std::vector<int> fpf;
    for (int i = 0; i < poset.size(); ++i)
      if (poset.node(i).inv.is_fixed_point_free()) fpf.push_back(i);
    const IntervalCheck check =
        check_interval([&](int x, int y) { return poset.leq(x, y); }, poset.size(), fpf);
    ok = check.is_interval && poset.node(check.max_index).rank == n * (n - 1) / 2;
    os << "; invertible class interval [" << poset.node(check.min_index).inv.cycles_str() << ", "
       << poset.node(check.max_index).inv.cycles_str() << "]";
  }

  if (ok && n <= 5) {
    const auto witness = bruhat_support_not_interval_witness(n);
    if (witness)
      os << "; bruhat-side non-interval class found: " << witness->detail;
    else
      os << "; no bruhat-side non-interval class at this n";
  }

  result.passed = ok;
  result.detail = os.str();
  return result;
}

int verify_exit_code(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.passed) return 2;
  return 0;
}

}  // namespace asorbit
