#include <doctest.h>

#include "asorbit/bruhat.hpp"
#include "asorbit/rank_control.hpp"

using namespace asorbit;

TEST_CASE("permutation basics") {
  CHECK_THROWS_AS(Permutation({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 2}), std::invalid_argument);
  const Permutation p({1, 0, 3, 2});
  CHECK(p.inversion_count() == 2);
  CHECK(p.one_line_str() == "[2,1,4,3]");
  CHECK(Permutation::identity(3).inversion_count() == 0);

  const Matrix m = p.to_matrix();
  CHECK(m(0, 1) == Rational(1));
  CHECK(m(1, 0) == Rational(1));
  CHECK(m(0, 0) == Rational(0));
}

TEST_CASE("identity is minimal in the rank-control Bruhat order") {
  const BruhatOrder oracle(3);
  const Permutation id = Permutation::identity(3);
  for (int i = 0; i < oracle.count(); ++i) {
    CHECK(bruhat_leq_rc(id, oracle.at(i)));
    CHECK(bruhat_leq_rc(oracle.at(i), oracle.at(i)));
    CHECK(oracle.leq(id, oracle.at(i)));
  }
  CHECK(bruhat_leq_rc(Permutation({1, 0, 2}), Permutation({2, 1, 0})));  // (1,2) <= (1,3)
  CHECK_THROWS_AS(bruhat_leq_rc(id, Permutation::identity(4)), std::invalid_argument);
}

TEST_CASE("cover oracle sanity") {
  const BruhatOrder oracle(4);
  const Permutation id = Permutation::identity(4);
  const Permutation longest({3, 2, 1, 0});
  CHECK(oracle.leq(id, longest));
  CHECK(!oracle.leq(longest, id));
  for (int i = 0; i < oracle.count(); ++i) CHECK(oracle.leq_index(i, i));
  CHECK_THROWS_AS(BruhatOrder(0), std::invalid_argument);
  CHECK_THROWS_AS(BruhatOrder(9), std::invalid_argument);
}

TEST_CASE("rank-control comparison matches the cover oracle exhaustively") {
  for (int n = 2; n <= 4; ++n) {
    const BruhatOrder oracle(n);
    for (int x = 0; x < oracle.count(); ++x)
      for (int y = 0; y < oracle.count(); ++y)
        CHECK(bruhat_leq_rc(oracle.at(x), oracle.at(y)) == oracle.leq_index(x, y));
  }
}

TEST_CASE("fixed-point-free comparison with the reversed Bruhat order") {
  const FpfComparisonReport tiny = compare_fpf_with_bruhat(2);
  CHECK(tiny.checked_pairs == 1);
  CHECK(tiny.isomorphic());

  const FpfComparisonReport quad = compare_fpf_with_bruhat(4);
  CHECK(quad.checked_pairs == 9);
  CHECK(quad.isomorphic());
  CHECK_THROWS_AS(compare_fpf_with_bruhat(3), std::invalid_argument);

  // The three pairings of S_4 form a chain, reversing their Bruhat order.
  const OrbitPoset poset = build_poset(4);
  const int lo = poset.index_of(Involution::parse("(1,4)(2,3)", 4));
  const int mid = poset.index_of(Involution::parse("(1,3)(2,4)", 4));
  const int hi = poset.index_of(Involution::parse("(1,2)(3,4)", 4));
  CHECK(poset.leq(lo, mid));
  CHECK(poset.leq(mid, hi));
  const BruhatOrder oracle(4);
  CHECK(oracle.leq(Permutation::of(poset.node(hi).inv), Permutation::of(poset.node(mid).inv)));
  CHECK(oracle.leq(Permutation::of(poset.node(mid).inv), Permutation::of(poset.node(lo).inv)));
}

TEST_CASE("the full orbit poset deviates from the Bruhat order exactly for n >= 3") {
  CHECK(!full_poset_not_bruhat_witness(1).has_value());
  CHECK(!full_poset_not_bruhat_witness(2).has_value());
  for (int n = 3; n <= 5; ++n) {
    const auto witness = full_poset_not_bruhat_witness(n);
    REQUIRE(witness.has_value());
    const auto& [x, y] = *witness;
    const OrbitPoset poset = build_poset(n);
    const BruhatOrder oracle(n);
    const bool orbit = poset.leq(poset.index_of(x), poset.index_of(y));
    const bool bruhat = oracle.leq(Permutation::of(x), Permutation::of(y));
    CHECK(orbit != bruhat);
  }
}

TEST_CASE("prescribed-support classes can fail to be Bruhat intervals") {
  CHECK(!bruhat_support_not_interval_witness(2).has_value());
  CHECK(!bruhat_support_not_interval_witness(3).has_value());
  const auto witness = bruhat_support_not_interval_witness(4);
  REQUIRE(witness.has_value());
  CHECK(witness->n == 4);
  CHECK(!witness->check.is_interval);
  CHECK(!witness->detail.empty());
}

TEST_CASE("count_A evaluates on permutation rank controls") {
  // Diagnostic only: the equality count is defined for anti-symmetric
  // matrices, so no particular values are asserted here.
  const BruhatOrder oracle(3);
  for (int i = 0; i < oracle.count(); ++i) {
    const int a = count_A(rank_control(oracle.at(i).to_matrix()));
    CHECK(a >= 0);
    CHECK(a <= 3);
  }
}
