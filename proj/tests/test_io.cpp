#include <doctest.h>

#include "asorbit/io.hpp"
#include "test_helpers.hpp"

using namespace asorbit;
using namespace asorbit_test;

TEST_CASE("matrix text parsing reports line and column") {
  CHECK(parse_matrix("2\n0 1\n-1 0\n") == make_matrix({{0, 1}, {-1, 0}}));
  CHECK(parse_matrix("1\n0") == Matrix(1, 1));

  try {
    parse_matrix("2\n0 x\n-1 0\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.col() == 3);
  }
  try {
    parse_matrix("2\n0 1\n-1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_matrix(""), ParseError);
  CHECK_THROWS_AS(parse_matrix("zero"), ParseError);
  CHECK_THROWS_AS(parse_matrix("-1\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("2\n0 1\n-1 0\n7\n"), ParseError);
}

TEST_CASE("matrix format round trip") {
  const Matrix m = make_matrix({{0, 1, -2}, {-1, 0, 3}, {2, -3, 0}});
  CHECK(parse_matrix(format_matrix(m)) == m);
  CHECK(format_matrix(make_matrix({{0, 1}, {-1, 0}})) == "2\n0 1\n-1 0\n");
  // rationals survive too
  Matrix q(2, 2);
  q(0, 1) = Rational(3, 7);
  q(1, 0) = Rational(-3, 7);
  CHECK(parse_matrix(format_matrix(q)) == q);
}

TEST_CASE("poset json round trips") {
  for (int n = 1; n <= 4; ++n) {
    const OrbitPoset poset = build_poset(n);
    const ordered_json j = poset_to_json(poset);
    const OrbitPoset back = poset_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back == poset);
  }
}

TEST_CASE("poset json shape") {
  const OrbitPoset poset = build_poset(2);
  const ordered_json j = poset_to_json(poset);
  CHECK(j.at("n") == 2);
  CHECK(j.at("nodes").size() == 2);
  CHECK(j.at("nodes")[0].at("cycles") == "e");
  CHECK(j.at("nodes")[1].at("cycles") == "(1,2)");
  CHECK(j.at("nodes")[1].at("rank") == 1);
  CHECK(j.at("covers") == nlohmann::json::parse("[[0,1]]"));
  CHECK_THROWS_AS(poset_from_json(nlohmann::json::parse("{}")), std::invalid_argument);
}

TEST_CASE("rank-control json round trips") {
  const RankControlMatrix rc = rank_control(example6());
  CHECK(rank_control_from_json(nlohmann::json::parse(rank_control_to_json(rc).dump())) == rc);
  CHECK_THROWS_AS(rank_control_from_json(nlohmann::json::parse("{\"n\":2}")),
                  std::invalid_argument);
}

TEST_CASE("poset text lists levels top down") {
  const std::string text = poset_to_text(build_poset(2));
  CHECK(text ==
        "orbit poset n=2: 2 orbits, 1 covers\n"
        "rank 1: (1,2)\n"
        "rank 0: e\n"
        "covers:\n"
        "  e < (1,2)\n");
}

TEST_CASE("poset dot output") {
  const std::string dot = poset_to_dot(build_poset(2));
  CHECK(dot.find("digraph orbit_poset_n2") != std::string::npos);
  CHECK(dot.find("v0 [label=\"e\\nrank 0\"]") != std::string::npos);
  CHECK(dot.find("v0 -> v1;") != std::string::npos);
  CHECK(dot.find("rank=same") != std::string::npos);
}

TEST_CASE("fpf report json shape") {
  const FpfComparisonReport report = compare_fpf_with_bruhat(4);
  const ordered_json j = fpf_report_to_json(report);
  CHECK(j.at("n") == 4);
  CHECK(j.at("checked_pairs") == 9);
  CHECK(j.at("violations").empty());
}
