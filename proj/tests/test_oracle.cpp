#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "jeth/hilbert.hpp"
#include "jeth/oracle.hpp"

using namespace jeth;

TEST_CASE("verify_shelling") {
  auto order = shelling_order(3, 3);
  CHECK(oracle::verify_shelling(order));

  // Regression witness: the reversed order is not a shelling here. The value
  // was computed once by this very check and is asserted for stability.
  auto reversed = order;
  std::reverse(reversed.begin(), reversed.end());
  CHECK_FALSE(oracle::verify_shelling(reversed));

  std::vector<Facet> single{order[0]};
  CHECK(oracle::verify_shelling(single));

  CHECK(oracle::verify_shelling(shelling_order(3, 4)));
  CHECK(oracle::verify_shelling(shelling_order(3, 4, TieBreak::ReversedSteps)));
}

TEST_CASE("f_vector of a single facet is a simplex") {
  auto facets = enumerate_facets(3, 3);
  std::vector<Facet> one{facets[0]};
  auto f = oracle::f_vector(one);
  REQUIRE(f.size() == 11);
  CHECK(f[0] == 1);
  for (int i = 0; i <= 9; ++i)
    CHECK(f[static_cast<std::size_t>(i + 1)] == binom(10, i + 1));

  // A single d-simplex has h = (1, 0, ...), stripped to (1).
  auto h = oracle::h_from_f(f, 10);
  CHECK(h == HVector{{BigInt(1)}});
}

TEST_CASE("f_vector to h-vector at (3,3)") {
  auto f = oracle::f_vector(enumerate_facets(3, 3));
  CHECK(f[0] == 1);
  CHECK(oracle::h_from_f(f, 10) == h_shelling(3, 3));
  CHECK(oracle::h_from_f(f, 10) == h_closed(3, 3));
}

TEST_CASE("h_from_f input validation") {
  std::vector<BigInt> f{1};
  CHECK(oracle::h_from_f(f, 0) == HVector{{BigInt(1)}});
  CHECK_THROWS_AS(oracle::h_from_f(f, 3), ParameterError);
}

TEST_CASE("f_vector guard") {
  auto facets = enumerate_facets(3, 3);
  CHECK_THROWS_WITH_AS(oracle::f_vector(facets, 1000),
                       doctest::Contains("36864"), GuardError);
}

TEST_CASE("brute_nonintersecting") {
  std::vector<GridPoint> ss{{1, 2}, {1, 1}};
  std::vector<GridPoint> ee{{2, 3}, {3, 2}};
  CHECK(oracle::brute_nonintersecting(ss, ee, std::nullopt) == 3);
  CHECK(oracle::brute_nonintersecting(ss, ee, 1) == 1);

  std::vector<GridPoint> s1{{1, 1}}, e1{{4, 5}};
  CHECK(oracle::brute_nonintersecting(s1, e1, std::nullopt) ==
        count_paths({1, 1}, {4, 5}));

  CHECK_THROWS_AS(oracle::brute_nonintersecting(s1, e1, std::nullopt, 10),
                  GuardError);
}
