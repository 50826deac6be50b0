#include <doctest.h>

#include <random>

#include "asorbit/canonical_form.hpp"
#include "asorbit/involution.hpp"
#include "asorbit/rank_control.hpp"
#include "test_helpers.hpp"

using namespace asorbit;
using namespace asorbit_test;

namespace {

RankControlMatrix rc_of(const std::string& cycles, int n) {
  return rank_control(involution_to_monomial(Involution::parse(cycles, n)).to_matrix());
}

RankControlMatrix rc_from(const std::vector<std::vector<int>>& rows) {
  std::vector<int> entries;
  for (const auto& row : rows) entries.insert(entries.end(), row.begin(), row.end());
  return RankControlMatrix(static_cast<int>(rows.size()), std::move(entries));
}

// For a monomial matrix the (k,l) entry counts the nonzero positions weakly
// north-west of (k,l); an independent route to the same matrix.
RankControlMatrix rc_by_northwest_count(const MonomialASMatrix& m) {
  const int n = m.n();
  std::vector<int> entries(static_cast<std::size_t>(n) * n, 0);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      int count = 0;
      for (const auto& [i, j] : m.pairs()) {
        if (i <= k && j <= l) ++count;  // the +1 at (i,j)
        if (j <= k && i <= l) ++count;  // the -1 at (j,i)
      }
      entries[static_cast<std::size_t>(k) * n + l] = count;
    }
  return RankControlMatrix(n, std::move(entries));
}

}  // namespace

TEST_CASE("rank-control matrices of the 4x4 pair examples") {
  CHECK(rc_of("(1,2)", 4) ==
        rc_from({{0, 1, 1, 1}, {1, 2, 2, 2}, {1, 2, 2, 2}, {1, 2, 2, 2}}));
  CHECK(rc_of("(1,3)(2,4)", 4) ==
        rc_from({{0, 0, 1, 1}, {0, 0, 1, 2}, {1, 1, 2, 3}, {1, 2, 3, 4}}));
  CHECK(rank_control(Matrix(3, 3)) == rc_from({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
  CHECK_THROWS_AS(rank_control(Matrix(2, 3)), std::invalid_argument);
}

TEST_CASE("rank control agrees with north-west counting on monomial forms") {
  for (int n = 1; n <= 5; ++n)
    for (const Involution& p : enumerate_involutions(n)) {
      const MonomialASMatrix m = involution_to_monomial(p);
      CHECK(rank_control(m.to_matrix()) == rc_by_northwest_count(m));
    }
}

TEST_CASE("entrywise order") {
  const RankControlMatrix r1 = rc_of("(1,2)", 4);
  const RankControlMatrix r2 = rc_of("(1,3)(2,4)", 4);
  CHECK(leq_R(r1, r1));
  CHECK(leq_R(rank_control(Matrix(4, 4)), r1));
  CHECK(!leq_R(r1, r2));
  CHECK(!leq_R(r2, r1));
  CHECK_THROWS_AS(leq_R(r1, rank_control(Matrix(3, 3))), std::invalid_argument);
}

TEST_CASE("leq_R is a partial order on involution rank controls") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<RankControlMatrix> rcs;
    for (const Involution& p : enumerate_involutions(n))
      rcs.push_back(rank_control(involution_to_monomial(p).to_matrix()));
    const int m = static_cast<int>(rcs.size());
    for (int x = 0; x < m; ++x) {
      CHECK(leq_R(rcs[x], rcs[x]));
      for (int y = 0; y < m; ++y) {
        if (x != y && leq_R(rcs[x], rcs[y])) CHECK(!leq_R(rcs[y], rcs[x]));
        for (int z = 0; z < m; ++z)
          if (leq_R(rcs[x], rcs[y]) && leq_R(rcs[y], rcs[z])) CHECK(leq_R(rcs[x], rcs[z]));
      }
    }
  }
}

TEST_CASE("count_A examples") {
  CHECK(count_A(rc_of("(1,2)", 4)) == 1);
  CHECK(count_A(rc_of("(1,3)(2,4)", 4)) == 1);
  for (int n = 1; n <= 6; ++n) {
    CHECK(count_A(rank_control(Matrix(n, n))) == n * (n - 1) / 2);
    for (const Involution& p : enumerate_involutions(n)) {
      const int a = count_A(rank_control(involution_to_monomial(p).to_matrix()));
      CHECK(a >= 0);
      CHECK(a <= n * (n - 1) / 2);
      if (a == n * (n - 1) / 2) CHECK(p == Involution::identity(n));
    }
  }
}

TEST_CASE("rank control is an orbit invariant") {
  for (int n = 1; n <= 5; ++n)
    for (const Involution& p : enumerate_involutions(n)) {
      const RankControlMatrix expected = rank_control(involution_to_monomial(p).to_matrix());
      for (int t = 0; t < 20; ++t)
        CHECK(rank_control(random_orbit_element(p, 400 + t, 5).underlying()) == expected);
    }
}

TEST_CASE("rank control is invariant under lower-upper multiplication") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 25; ++t) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const Matrix x = random_matrix(rng, n, n, 4);
    const Matrix lower = random_borel(n, rng(), 4).underlying().transpose();
    const Matrix upper = random_borel(n, rng(), 4).underlying();
    CHECK(rank_control(lower * x * upper) == rank_control(x));
  }
}

TEST_CASE("rank-control constructor validates the shape invariants") {
  CHECK_THROWS_AS(rc_from({{2, 2}, {2, 2}}), std::invalid_argument);       // r11 > min
  CHECK_THROWS_AS(rc_from({{0, 1}, {1, 3}}), std::invalid_argument);       // jump of 2
  CHECK_THROWS_AS(rc_from({{0, 1}, {1, 0}}), std::invalid_argument);       // not monotone
  CHECK_THROWS_AS(RankControlMatrix(2, {0, 0, 0}), std::invalid_argument); // wrong length
  CHECK_NOTHROW(rc_from({{0, 1}, {1, 1}}));
  CHECK(rc_from({{0, 1}, {1, 2}}).to_text() == "0 1\n1 2\n");
}
