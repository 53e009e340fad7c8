#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "jeth/latticepath.hpp"
#include "jeth/oracle.hpp"

using namespace jeth;

namespace {

// Test-local turn counter straight from step letters.
long long step_turns(const LatticePath& p) {
  std::string s = p.step_string();
  long long t = 0;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] == 'E' && s[i] == 'S') ++t;
  return t;
}

// Rebuild a path from start, end, and its turn set. Each segment between
// waypoints is south-then-east (the unique turn-free shape), and arriving at
// a turn by that shape ends on an east step, as a turn requires.
LatticePath rebuild_from_turns(GridPoint a, GridPoint e,
                               std::vector<GridPoint> ts) {
  std::sort(ts.begin(), ts.end());
  LatticePath p;
  p.points.push_back(a);
  GridPoint cur = a;
  auto go = [&](GridPoint target) {
    while (cur.row < target.row) p.points.push_back(cur = {cur.row + 1, cur.col});
    while (cur.col < target.col) p.points.push_back(cur = {cur.row, cur.col + 1});
  };
  for (auto t : ts) go(t);
  go(e);
  return p;
}

}  // namespace

TEST_CASE("turns examples") {
  LatticePath p{{{1, 1}, {1, 2}, {1, 3}, {2, 3}}};
  CHECK(turns(p) == std::vector<GridPoint>{{1, 3}});

  auto south_only = LatticePath::from_steps({1, 1}, "SSS");
  CHECK(turns(south_only).empty());

  // From (1,1) to (4,5) with turns exactly at (1,2) and (2,4).
  auto fig = LatticePath::from_steps({1, 1}, "ESEESSE");
  CHECK(fig.end() == GridPoint{4, 5});
  CHECK(turns(fig) == std::vector<GridPoint>{{1, 2}, {2, 4}});
}

TEST_CASE("count_paths examples") {
  CHECK(count_paths({1, 1}, {4, 5}) == 35);
  CHECK(count_paths({2, 2}, {2, 2}) == 1);
  CHECK(count_paths({2, 2}, {1, 5}) == 0);
}

TEST_CASE("count_paths_with_turns examples") {
  CHECK(count_paths_with_turns({1, 1}, {4, 5}, 2) == 18);
  CHECK(count_paths_with_turns({1, 1}, {7, 7}, -1) == 0);

  // Brute-force the (1,1)->(2,3) paths and tally their turns.
  auto all = enumerate_paths({1, 1}, {2, 3});
  REQUIRE(all.size() == 3);
  std::map<long long, int> hist;
  for (const auto& p : all) ++hist[step_turns(p)];
  CHECK(hist[1] == 2);
  CHECK(count_paths_with_turns({1, 1}, {2, 3}, 1) == 2);
  CHECK(count_paths_with_turns({1, 1}, {2, 3}, 0) == BigInt(hist[0]));
}

TEST_CASE("enumerate_paths") {
  auto trivial = enumerate_paths({1, 1}, {1, 1});
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].points == std::vector<GridPoint>{{1, 1}});

  CHECK(enumerate_paths({1, 1}, {2, 2}).size() == 2);

  auto all = enumerate_paths({1, 1}, {4, 5});
  CHECK(all.size() == 35);
  std::set<std::string> steps;
  for (const auto& p : all) {
    CHECK(p.valid());
    CHECK(p.start() == GridPoint{1, 1});
    CHECK(p.end() == GridPoint{4, 5});
    steps.insert(p.step_string());
  }
  CHECK(steps.size() == 35);
  // Lexicographic with E before S: returned order equals sorted order.
  std::vector<std::string> emitted;
  for (const auto& p : all) emitted.push_back(p.step_string());
  CHECK(std::is_sorted(emitted.begin(), emitted.end()));

  CHECK_THROWS_WITH_AS(enumerate_paths({1, 1}, {4, 5}, 10),
                       doctest::Contains("35"), GuardError);
}

TEST_CASE("paths are recoverable from endpoints and turn set") {
  std::mt19937 rng(2023);
  std::uniform_int_distribution<int> c(1, 5);
  for (int iter = 0; iter < 50; ++iter) {
    GridPoint a{c(rng), c(rng)};
    GridPoint e{a.row + c(rng) % 4, a.col + c(rng) % 4};
    for (const auto& p : enumerate_paths(a, e))
      CHECK(rebuild_from_turns(a, e, turns(p)) == p);
  }
}

TEST_CASE("turn counts sum to the path count") {
  for (int dr = 0; dr <= 4; ++dr)
    for (int dc = 0; dc <= 4; ++dc) {
      GridPoint a{2, 3}, e{2 + dr, 3 + dc};
      BigInt total = 0;
      for (long long k = 0; k <= dr + dc + 1; ++k)
        total += count_paths_with_turns(a, e, k);
      CHECK(total == count_paths(a, e));
      CHECK(count_paths(a, e) == BigInt(enumerate_paths(a, e).size()));
    }
}

TEST_CASE("count_nonintersecting examples") {
  std::vector<GridPoint> s1{{1, 1}}, e1{{4, 5}};
  CHECK(count_nonintersecting(s1, e1) == 35);

  std::vector<GridPoint> ss{{1, 2}, {1, 1}};
  std::vector<GridPoint> ee{{2, 3}, {3, 2}};
  CHECK(count_nonintersecting(ss, ee) == 3);
  CHECK(oracle::brute_nonintersecting(ss, ee, std::nullopt) == 3);

  std::vector<GridPoint> ee2{{3, 3}, {3, 2}};
  CHECK(count_nonintersecting(ss, ee2) == 3);
  CHECK(oracle::brute_nonintersecting(ss, ee2, std::nullopt) == 3);

  // Ordering hypotheses are checked strictly.
  std::vector<GridPoint> bad_starts{{2, 1}, {1, 2}};
  CHECK_THROWS_AS(count_nonintersecting(bad_starts, ee), ParameterError);
  CHECK_THROWS_AS(
      count_nonintersecting(std::vector<GridPoint>{{1, 1}}, std::vector<GridPoint>{}),
      ParameterError);
}

TEST_CASE("count_nonintersecting_with_turns examples") {
  std::vector<GridPoint> s1{{1, 1}}, e1{{4, 5}};
  CHECK(count_nonintersecting_with_turns(s1, e1, 2) == 18);

  std::vector<GridPoint> ss{{1, 2}, {1, 1}};
  std::vector<GridPoint> ee{{2, 3}, {3, 2}};
  CHECK(count_nonintersecting_with_turns(ss, ee, 1) == 1);
  CHECK(count_nonintersecting_with_turns(ss, ee, 5) == 0);
  CHECK(count_nonintersecting_with_turns(ss, ee, -1) == 0);

  // Hypotheses for the turn-refined formula are stricter.
  std::vector<GridPoint> flat{{1, 1}, {1, 1}};
  CHECK_THROWS_AS(count_nonintersecting_with_turns(flat, ee, 1), ParameterError);
}

TEST_CASE("corpath examples") {
  for (long long s = 0; s <= 2; ++s) CHECK(corpath(2, 3, 3, 2, s) == 1);
  CHECK(corpath(2, 3, 3, 2, 3) == 0);
  CHECK(corpath(2, 3, 3, 2, -1) == 0);

  BigInt total = 0;
  for (long long s = 0; s <= 5; ++s) total += corpath(2, 3, 3, 2, s);
  std::vector<GridPoint> ss{{1, 2}, {1, 1}}, ee{{2, 3}, {3, 2}};
  CHECK(total == count_nonintersecting(ss, ee));

  CHECK_THROWS_AS(corpath(3, 3, 3, 2, 0), ParameterError);
  CHECK_THROWS_AS(corpath(2, 1, 3, 2, 0), ParameterError);
}

TEST_CASE("determinant formulas agree with brute force on sampled tuples") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> c(1, 5);
  int checked = 0;
  while (checked < 40) {
    int d = 1 + static_cast<int>(rng() % 3);
    std::vector<GridPoint> starts, ends;
    for (int i = 0; i < d; ++i) {
      starts.push_back({c(rng), c(rng)});
      ends.push_back({c(rng), c(rng)});
    }
    std::sort(starts.begin(), starts.end(),
              [](GridPoint a, GridPoint b) { return a.row != b.row ? a.row < b.row
                                                                   : a.col > b.col; });
    std::sort(ends.begin(), ends.end(),
              [](GridPoint a, GridPoint b) { return a.row != b.row ? a.row < b.row
                                                                   : a.col > b.col; });
    auto ordered = [&](bool strict_e_row, bool strict_a_col) {
      for (int i = 0; i + 1 < d; ++i) {
        if (starts[i].row > starts[i + 1].row) return false;
        if (strict_a_col ? starts[i].col <= starts[i + 1].col
                         : starts[i].col < starts[i + 1].col)
          return false;
        if (strict_e_row ? ends[i].row >= ends[i + 1].row
                         : ends[i].row > ends[i + 1].row)
          return false;
        if (ends[i].col < ends[i + 1].col) return false;
      }
      return true;
    };
    // The turn-refined determinant is only a theorem when every entry's
    // binomial tops are nonnegative; with a negative top the generalized
    // binomial no longer vanishes for an unreachable endpoint pair.
    auto tops_nonneg = [&] {
      for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
          if (ends[j - 1].row - starts[i - 1].row + i - j < 0) return false;
          if (ends[j - 1].col - starts[i - 1].col - i + j < 0) return false;
        }
      return true;
    };
    if (!ordered(false, false)) continue;

    BigInt brute_all = oracle::brute_nonintersecting(starts, ends, std::nullopt);
    CHECK(count_nonintersecting(starts, ends) == brute_all);

    if (ordered(true, true) && tops_nonneg()) {
      BigInt total = 0;
      for (long long k = 0; k <= 20; ++k) {
        BigInt v = count_nonintersecting_with_turns(starts, ends, k);
        CHECK(v == oracle::brute_nonintersecting(starts, ends, k));
        total += v;
      }
      CHECK(total == brute_all);
    }
    ++checked;
  }
}

TEST_CASE("corpath equals the two-path determinant formula") {
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      for (int cc = a + 1; cc <= 5; ++cc)
        for (int dd = 1; dd <= b; ++dd)
          for (long long s = 0; s <= 6; ++s) {
            std::vector<GridPoint> starts{{1, 2}, {1, 1}};
            std::vector<GridPoint> ends{{a, b}, {cc, dd}};
            CHECK(corpath(a, b, cc, dd, s) ==
                  count_nonintersecting_with_turns_unchecked(starts, ends, s));
          }
}

TEST_CASE("PathTuple disjointness flag") {
  PathTuple t;
  t.paths.push_back(LatticePath::from_steps({1, 2}, "ES"));
  t.paths.push_back(LatticePath::from_steps({1, 1}, "SSE"));
  CHECK(t.pairwise_disjoint());
  t.paths.push_back(LatticePath::from_steps({1, 1}, "ESS"));
  CHECK_FALSE(t.pairwise_disjoint());
}
