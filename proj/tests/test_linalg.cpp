#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pathbasis/linalg.hpp"

using namespace pathbasis::linalg;

namespace {

RatVec rv(std::initializer_list<int> xs) { return RatVec(xs.begin(), xs.end()); }

oracles::IntMat to_int(const RatMat& m) {
  oracles::IntMat out;
  for (const RatVec& r : m) {
    std::vector<oracles::Int> row;
    for (const Rational& q : r) {
      REQUIRE(boost::multiprecision::denominator(q) == 1);
      row.push_back(oracles::Int(boost::multiprecision::numerator(q)));
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

TEST_CASE("rref reduces to identity on an invertible matrix") {
  RatMat m{rv({2, 1}), rv({1, 1})};
  auto pivots = rref(m, 2);
  CHECK(pivots == std::vector<std::size_t>{0, 1});
  CHECK(m[0] == rv({1, 0}));
  CHECK(m[1] == rv({0, 1}));
}

TEST_CASE("rref drops zero rows and records pivot columns") {
  RatMat m{rv({1, 2, 3}), rv({2, 4, 6}), rv({0, 0, 1})};
  auto pivots = rref(m, 3);
  CHECK(pivots == std::vector<std::size_t>{0, 2});
  REQUIRE(m.size() == 2);
  CHECK(m[0] == rv({1, 2, 0}));
  CHECK(m[1] == rv({0, 0, 1}));
}

TEST_CASE("rank basics") {
  CHECK(rank({}, 5) == 0);
  CHECK(rank({rv({0, 0})}, 2) == 0);
  CHECK(rank({rv({1, 0}), rv({0, 1}), rv({1, 1})}, 2) == 2);
}

TEST_CASE("row space insert accepts exactly the independent vectors") {
  RowSpace s(3);
  CHECK(s.insert(rv({1, 1, 0})));
  CHECK_FALSE(s.insert(rv({2, 2, 0})));
  CHECK(s.insert(rv({0, 1, 1})));
  CHECK(s.rank() == 2);
  CHECK(s.in_span(rv({1, 0, -1})));
  CHECK_FALSE(s.in_span(rv({0, 0, 1})));
}

TEST_CASE("greedy keeps the first independent combination") {
  // Transitions as unit positions: e01 e12 e23 e34 e02 e24 over 6 columns.
  const RatVec v1 = rv({1, 1, 1, 1, 0, 0});  // e01+e12+e23+e34
  const RatVec v2 = rv({0, 0, 0, 0, 1, 1});  // e02+e24
  const RatVec v3 = rv({1, 1, 0, 0, 0, 1});  // e01+e12+e24
  const RatVec v4 = rv({0, 0, 1, 1, 1, 0});  // e02+e23+e34 = v1+v2-v3
  auto kept = greedy_independent_rows({v1, v2, v3, v4}, 6);
  CHECK(kept == std::vector<std::size_t>{0, 1, 2});
  CHECK(oracles::bareiss_rank(to_int({v1, v2, v3, v4})) == 3);
}

TEST_CASE("duplicated vector is excluded") {
  auto kept = greedy_independent_rows({rv({1, 0}), rv({1, 0})}, 2);
  CHECK(kept == std::vector<std::size_t>{0});
}

TEST_CASE("null space vectors annihilate the row space") {
  RatMat rows{rv({1, 1, 0, 0}), rv({0, 1, 1, 0})};
  RatMat ns = null_space(rows, 4);
  REQUIRE(ns.size() == 2);
  for (const RatVec& y : ns) {
    for (const RatVec& r : rows) {
      Rational dot = 0;
      for (std::size_t i = 0; i < 4; ++i) dot += r[i] * y[i];
      CHECK(dot == 0);
    }
  }
  // A vector inside the span is orthogonal to all of them...
  RatVec inside = rv({1, 2, 1, 0});
  for (const RatVec& y : ns) {
    Rational dot = 0;
    for (std::size_t i = 0; i < 4; ++i) dot += inside[i] * y[i];
    CHECK(dot == 0);
  }
  // ...and one outside is not.
  RatVec outside = rv({0, 0, 0, 1});
  bool hit = false;
  for (const RatVec& y : ns) {
    Rational dot = 0;
    for (std::size_t i = 0; i < 4; ++i) dot += outside[i] * y[i];
    if (dot != 0) hit = true;
  }
  CHECK(hit);
}

TEST_CASE("solve_combination finds the canonical solution") {
  SUBCASE("unique") {
    RatMat cols{rv({1, 0}), rv({0, 1})};
    auto s = solve_combination(cols, rv({3, -2}));
    REQUIRE(s.has_value());
    CHECK(s->coefficients == rv({3, -2}));
    CHECK(s->integral);
  }
  SUBCASE("free variables stay zero") {
    RatMat cols{rv({1, 0}), rv({1, 0})};
    auto s = solve_combination(cols, rv({1, 0}));
    REQUIRE(s.has_value());
    CHECK(s->coefficients == rv({1, 0}));
  }
  SUBCASE("non-integral flagged") {
    RatMat cols{rv({2, 0})};
    auto s = solve_combination(cols, rv({1, 0}));
    REQUIRE(s.has_value());
    CHECK(s->coefficients.front() == Rational(1, 2));
    CHECK_FALSE(s->integral);
  }
  SUBCASE("inconsistent") {
    RatMat cols{rv({1, 0})};
    CHECK_FALSE(solve_combination(cols, rv({0, 1})).has_value());
  }
  SUBCASE("empty basis") {
    CHECK(solve_combination({}, rv({0, 0})).has_value());
    CHECK_FALSE(solve_combination({}, rv({1, 0})).has_value());
  }
}

TEST_CASE("rank agrees with the integer-elimination oracle on random 0-1 matrices") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 20;
    const std::size_t cols = 1 + rng() % 36;
    RatMat m(rows, RatVec(cols));
    for (auto& r : m) {
      for (auto& x : r) x = static_cast<int>(rng() % 2);
    }
    CAPTURE(rows);
    CAPTURE(cols);
    CHECK(rank(m, cols) == oracles::bareiss_rank(to_int(m)));
    // Greedy subset reaches the full rank (maximality).
    CHECK(greedy_independent_rows(m, cols).size() == rank(m, cols));
  }
}
