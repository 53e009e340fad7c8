#include "jeth/latticepath.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace jeth {

namespace {

std::string point_str(GridPoint p) {
  return "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")";
}

void require_same_size(std::span<const GridPoint> starts,
                       std::span<const GridPoint> ends) {
  if (starts.empty() || starts.size() != ends.size())
    throw ParameterError("path tuple: need equally many starts and ends, got " +
                         std::to_string(starts.size()) + " and " +
                         std::to_string(ends.size()));
}

IntMatrix gv_matrix(std::span<const GridPoint> starts,
                    std::span<const GridPoint> ends) {
  const std::size_t d = starts.size();
  IntMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      m.at(i, j) = count_paths(starts[i], ends[j]);
  return m;
}

// Hypotheses of the plain determinant formula.
void check_gv_hypotheses(std::span<const GridPoint> starts,
                         std::span<const GridPoint> ends) {
  for (std::size_t i = 0; i + 1 < starts.size(); ++i) {
    if (starts[i].row > starts[i + 1].row || starts[i].col < starts[i + 1].col ||
        ends[i].row > ends[i + 1].row || ends[i].col < ends[i + 1].col)
      throw ParameterError(
          "count_nonintersecting: endpoint ordering hypotheses violated at index " +
          std::to_string(i) + ": starts " + point_str(starts[i]) + "," +
          point_str(starts[i + 1]) + " ends " + point_str(ends[i]) + "," +
          point_str(ends[i + 1]));
  }
}

// Hypotheses of the turn-refined formula (strict on e rows and a' cols).
void check_gv_turn_hypotheses(std::span<const GridPoint> starts,
                              std::span<const GridPoint> ends) {
  for (std::size_t i = 0; i + 1 < starts.size(); ++i) {
    if (starts[i].row > starts[i + 1].row || starts[i].col <= starts[i + 1].col ||
        ends[i].row >= ends[i + 1].row || ends[i].col < ends[i + 1].col)
      throw ParameterError(
          "count_nonintersecting_with_turns: endpoint ordering hypotheses violated "
          "at index " +
          std::to_string(i) + ": starts " + point_str(starts[i]) + "," +
          point_str(starts[i + 1]) + " ends " + point_str(ends[i]) + "," +
          point_str(ends[i + 1]));
  }
}

}  // namespace

bool LatticePath::valid() const {
  if (points.empty()) return false;
  for (std::size_t i = 1; i < points.size(); ++i) {
    int dr = points[i].row - points[i - 1].row;
    int dc = points[i].col - points[i - 1].col;
    if (!((dr == 1 && dc == 0) || (dr == 0 && dc == 1))) return false;
  }
  return true;
}

LatticePath LatticePath::from_steps(GridPoint start, std::string_view steps) {
  LatticePath p;
  p.points.reserve(steps.size() + 1);
  p.points.push_back(start);
  GridPoint cur = start;
  for (char s : steps) {
    if (s == 'E') ++cur.col;
    else if (s == 'S') ++cur.row;
    else throw ParameterError(std::string("from_steps: bad step letter '") + s + "'");
    p.points.push_back(cur);
  }
  return p;
}

std::string LatticePath::step_string() const {
  std::string s;
  s.reserve(points.size());
  for (std::size_t i = 1; i < points.size(); ++i)
    s.push_back(points[i].row > points[i - 1].row ? 'S' : 'E');
  return s;
}

bool PathTuple::pairwise_disjoint() const {
  std::set<GridPoint> seen;
  for (const auto& p : paths)
    for (const auto& pt : p.points)
      if (!seen.insert(pt).second) return false;
  return true;
}

std::vector<GridPoint> turns(const LatticePath& path) {
  std::vector<GridPoint> out;
  const auto& pts = path.points;
  for (std::size_t j = 1; j + 1 < pts.size(); ++j) {
    bool entered_east = pts[j].col == pts[j - 1].col + 1;
    bool left_south = pts[j + 1].row == pts[j].row + 1;
    if (entered_east && left_south) out.push_back(pts[j]);
  }
  return out;
}

BigInt count_paths(GridPoint a, GridPoint e) {
  long long dr = e.row - a.row;
  long long dc = e.col - a.col;
  if (dr < 0 || dc < 0) return 0;
  return binom(dr + dc, dr);
}

BigInt count_paths_with_turns(GridPoint a, GridPoint e, long long k) {
  long long dr = e.row - a.row;
  long long dc = e.col - a.col;
  if (dr < 0 || dc < 0 || k < 0) return 0;
  return binom(dr, k) * binom(dc, k);
}

std::vector<LatticePath> enumerate_paths(GridPoint a, GridPoint e,
                                         std::uint64_t max_paths) {
  std::vector<LatticePath> out;
  BigInt total = count_paths(a, e);
  if (total == 0) return out;
  if (total > max_paths)
    throw GuardError("max_paths", total.str(),
                     "enumerate_paths: " + total.str() + " paths from " +
                         point_str(a) + " to " + point_str(e) +
                         " exceed the guard of " + std::to_string(max_paths));
  out.reserve(static_cast<std::size_t>(total));
  std::vector<GridPoint> prefix{a};
  // E before S gives lexicographic step order.
  auto rec = [&](auto&& self, GridPoint cur) -> void {
    if (cur == e) {
      out.push_back(LatticePath{prefix});
      return;
    }
    if (cur.col < e.col) {
      prefix.push_back({cur.row, cur.col + 1});
      self(self, prefix.back());
      prefix.pop_back();
    }
    if (cur.row < e.row) {
      prefix.push_back({cur.row + 1, cur.col});
      self(self, prefix.back());
      prefix.pop_back();
    }
  };
  rec(rec, a);
  return out;
}

BigInt count_nonintersecting(std::span<const GridPoint> starts,
                             std::span<const GridPoint> ends) {
  require_same_size(starts, ends);
  check_gv_hypotheses(starts, ends);
  return exact_det(gv_matrix(starts, ends));
}

BigInt count_nonintersecting_unchecked(std::span<const GridPoint> starts,
                                       std::span<const GridPoint> ends) {
  require_same_size(starts, ends);
  return exact_det(gv_matrix(starts, ends));
}

namespace {

BigInt gv_turn_sum(std::span<const GridPoint> starts,
                   std::span<const GridPoint> ends, long long k) {
  const std::size_t d = starts.size();
  // Terms with any k_i < 0 vanish (a whole determinant row is zero), so the
  // composition sum runs over nonnegative parts only.
  std::vector<long long> parts(d, 0);
  BigInt total = 0;
  auto rec = [&](auto&& self, std::size_t i, long long remaining) -> void {
    if (i + 1 == d) {
      parts[i] = remaining;
      IntMatrix m(d, d);
      for (std::size_t r = 0; r < d; ++r) {
        long long ii = static_cast<long long>(r) + 1;
        for (std::size_t c = 0; c < d; ++c) {
          long long jj = static_cast<long long>(c) + 1;
          long long er = ends[c].row - starts[r].row;
          long long ec = ends[c].col - starts[r].col;
          m.at(r, c) = binom(er + ii - jj, parts[r] + ii - jj) *
                       binom(ec - ii + jj, parts[r]);
        }
      }
      total += exact_det(m);
      return;
    }
    for (long long v = 0; v <= remaining; ++v) {
      parts[i] = v;
      self(self, i + 1, remaining - v);
    }
  };
  if (k >= 0) rec(rec, 0, k);
  return total;
}

}  // namespace

BigInt count_nonintersecting_with_turns(std::span<const GridPoint> starts,
                                        std::span<const GridPoint> ends,
                                        long long k) {
  require_same_size(starts, ends);
  check_gv_turn_hypotheses(starts, ends);
  if (k < 0) return 0;
  return gv_turn_sum(starts, ends, k);
}

BigInt count_nonintersecting_with_turns_unchecked(std::span<const GridPoint> starts,
                                                  std::span<const GridPoint> ends,
                                                  long long k) {
  require_same_size(starts, ends);
  if (k < 0) return 0;
  return gv_turn_sum(starts, ends, k);
}

BigInt corpath(long long a, long long b, long long c, long long d, long long s) {
  if (a >= c || b < d)
    throw ParameterError("corpath: requires a < c and b >= d, got a=" +
                         std::to_string(a) + " b=" + std::to_string(b) +
                         " c=" + std::to_string(c) + " d=" + std::to_string(d));
  if (s < 0) return 0;
  // Every summand carries a binom(., s1) and a binom(., s2) factor, so the
  // diagonal sum is supported on 0 <= s1 <= s.
  BigInt total = 0;
  for (long long s1 = 0; s1 <= s; ++s1) {
    long long s2 = s - s1;
    total += binom(a - 1, s1) * binom(b - 2, s1) * binom(c - 1, s2) * binom(d - 1, s2);
    total -= binom(a, s2 + 1) * binom(b - 2, s2) * binom(c - 2, s1 - 1) * binom(d - 1, s1);
  }
  return total;
}

}  // namespace jeth
