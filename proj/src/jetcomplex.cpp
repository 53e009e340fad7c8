#include "jeth/jetcomplex.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>
#include <thread>
#include <unordered_set>

namespace jeth {

namespace {

struct PointHash {
  std::size_t operator()(GridPoint p) const {
    return std::hash<long long>()((static_cast<long long>(p.row) << 32) ^
                                  static_cast<unsigned>(p.col));
  }
};

// Extends a lower Y-path from `cur` to (m,j) avoiding `blocked`, appending
// one facet per completion. Pruning on first contact is exact: a shared
// point stays shared under any extension.
void extend_lower(const Facet& base, GridPoint cur, GridPoint goal,
                  const std::unordered_set<GridPoint, PointHash>& blocked,
                  std::vector<GridPoint>& prefix, std::vector<Facet>& out) {
  if (cur == goal) {
    Facet f = base;
    f.fy_lower = LatticePath{prefix};
    out.push_back(std::move(f));
    return;
  }
  if (cur.col < goal.col) {
    GridPoint nxt{cur.row, cur.col + 1};
    if (!blocked.count(nxt)) {
      prefix.push_back(nxt);
      extend_lower(base, nxt, goal, blocked, prefix, out);
      prefix.pop_back();
    }
  }
  if (cur.row < goal.row) {
    GridPoint nxt{cur.row + 1, cur.col};
    if (!blocked.count(nxt)) {
      prefix.push_back(nxt);
      extend_lower(base, nxt, goal, blocked, prefix, out);
      prefix.pop_back();
    }
  }
}

enum class SpreadRelation { Equal, ProperSubset, ProperSuperset, Incomparable };

SpreadRelation spread_compare(const std::vector<int>& p, const std::vector<int>& q) {
  bool le = true, ge = true;
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (p[a] > q[a]) le = false;
    if (p[a] < q[a]) ge = false;
  }
  if (le && ge) return SpreadRelation::Equal;
  if (le) return SpreadRelation::ProperSubset;
  if (ge) return SpreadRelation::ProperSuperset;
  return SpreadRelation::Incomparable;
}

bool facet_less(const Facet& p, const Facet& q) {
  int m = p.m;
  if (x_precedes(p.leader_row(), p.leader_col(), q.leader_row(), q.leader_col()))
    return true;
  if (p.leader_row() != q.leader_row() || p.leader_col() != q.leader_col())
    return false;
  auto relx = spread_compare(spread_profile(p.fx, m), spread_profile(q.fx, m));
  if (relx == SpreadRelation::ProperSubset) return true;
  if (relx != SpreadRelation::Equal) return false;
  // Leaders agree and spreads agree, so the X-paths coincide.
  auto relu =
      spread_compare(spread_profile(p.fy_upper, m), spread_profile(q.fy_upper, m));
  if (relu == SpreadRelation::ProperSubset) return true;
  if (relu != SpreadRelation::Equal) return false;
  auto rell =
      spread_compare(spread_profile(p.fy_lower, m), spread_profile(q.fy_lower, m));
  return rell == SpreadRelation::ProperSubset;
}

struct SortKey {
  int leader_rank;
  long long sx;
  std::string tx;
  long long su;
  std::string tu;
  long long sl;
  std::string tl;

  friend auto operator<=>(const SortKey&, const SortKey&) = default;
};

SortKey make_key(const Facet& f, TieBreak tb) {
  auto steps = [&](const LatticePath& p) {
    std::string s = p.step_string();
    if (tb == TieBreak::ReversedSteps)
      for (char& c : s) c = (c == 'E') ? 'S' : 'E';
    return s;
  };
  // Rank under the anti-lexicographic order: larger (row, col) comes first.
  int rank = (f.m - f.leader_row()) * (f.n + 1) + (f.n - f.leader_col());
  return SortKey{rank,
                 spread_size(f.fx, f.m),      steps(f.fx),
                 spread_size(f.fy_upper, f.m), steps(f.fy_upper),
                 spread_size(f.fy_lower, f.m), steps(f.fy_lower)};
}

int vertex_bit(const Facet& f, const Vertex& v) {
  int base = v.family == VertexFamily::Y ? f.m * f.n : 0;
  return base + (v.row - 1) * f.n + (v.col - 1);
}

}  // namespace

std::vector<Vertex> Facet::vertices() const {
  std::vector<Vertex> out;
  out.reserve(fx.points.size() + fy_upper.points.size() + fy_lower.points.size());
  for (auto p : fx.points) out.push_back({VertexFamily::X, p.row, p.col});
  for (auto p : fy_upper.points) out.push_back({VertexFamily::Y, p.row, p.col});
  for (auto p : fy_lower.points) out.push_back({VertexFamily::Y, p.row, p.col});
  std::sort(out.begin(), out.end());
  return out;
}

Vertex leader(const Facet& f) {
  return {VertexFamily::X, f.leader_row(), f.leader_col()};
}

bool x_precedes(int a, int b, int c, int d) {
  return a > c || (a == c && b > d);
}

std::vector<int> spread_profile(const LatticePath& path, int m) {
  std::vector<int> prof(static_cast<std::size_t>(m) + 1, 0);
  for (auto p : path.points)
    if (p.row >= 1 && p.row <= m && p.col > prof[p.row]) prof[p.row] = p.col;
  for (int a = 2; a <= m; ++a) prof[a] = std::max(prof[a], prof[a - 1]);
  return prof;
}

long long spread_size(const LatticePath& path, int m) {
  auto prof = spread_profile(path, m);
  long long s = 0;
  for (int a = 1; a <= m; ++a) s += prof[a];
  return s;
}

FacetRelation compare_facets(const Facet& p, const Facet& q) {
  if (p == q) return FacetRelation::Equal;
  if (facet_less(p, q)) return FacetRelation::Less;
  if (facet_less(q, p)) return FacetRelation::Greater;
  return FacetRelation::Incomparable;
}

BigInt facet_count(int m, int n) {
  BigInt b = binom(m + n - 2, m - 1);
  return b * b;
}

void require_jet_params(int m, int n) {
  if (!(2 < m && m <= n))
    throw ParameterError("parameters must satisfy 2 < m <= n, got m=" +
                         std::to_string(m) + " n=" + std::to_string(n));
}

std::vector<Facet> enumerate_facets(int m, int n, const Guards& guards) {
  require_jet_params(m, n);
  BigInt expected = facet_count(m, n);
  if (expected > guards.max_facets)
    throw GuardError("max_facets", expected.str(),
                     "enumerate_facets: " + expected.str() +
                         " facets exceed the guard of " +
                         std::to_string(guards.max_facets));
  std::vector<Facet> out;
  out.reserve(static_cast<std::size_t>(expected));
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == m && j == n) continue;
      auto fx_list = enumerate_paths({i, j}, {m, n}, guards.max_paths);
      auto fyu_list = enumerate_paths({1, 1}, {i, n}, guards.max_paths);
      std::vector<Facet> pairs;
      for (const auto& fyu : fyu_list) {
        std::unordered_set<GridPoint, PointHash> blocked(fyu.points.begin(),
                                                         fyu.points.end());
        GridPoint lo_start{2, 1};
        if (blocked.count(lo_start)) continue;
        Facet base;
        base.m = m;
        base.n = n;
        base.fy_upper = fyu;
        std::vector<GridPoint> prefix{lo_start};
        extend_lower(base, lo_start, {m, j}, blocked, prefix, pairs);
      }
      for (const auto& fx : fx_list)
        for (const auto& pr : pairs) {
          Facet f = pr;
          f.fx = fx;
          out.push_back(std::move(f));
        }
    }
  }
  return out;
}

std::vector<Facet> shelling_order(int m, int n, TieBreak tie_break,
                                  const Guards& guards) {
  auto facets = enumerate_facets(m, n, guards);
  std::vector<std::pair<SortKey, std::size_t>> keyed;
  keyed.reserve(facets.size());
  for (std::size_t idx = 0; idx < facets.size(); ++idx)
    keyed.emplace_back(make_key(facets[idx], tie_break), idx);
  std::sort(keyed.begin(), keyed.end());
  std::vector<Facet> out;
  out.reserve(facets.size());
  for (const auto& [key, idx] : keyed) out.push_back(std::move(facets[idx]));
  return out;
}

std::vector<Vertex> corners_bruteforce(std::size_t t,
                                       const std::vector<Facet>& order) {
  const auto vt = order[t].vertices();
  std::set<Vertex> corners;
  for (std::size_t s = 0; s < t; ++s) {
    const auto vs = order[s].vertices();
    const Vertex* only = nullptr;
    int missing = 0;
    std::size_t a = 0, b = 0;
    while (a < vt.size() && missing <= 1) {
      if (b >= vs.size() || vt[a] < vs[b]) {
        only = &vt[a];
        ++missing;
        ++a;
      } else if (vs[b] < vt[a]) {
        ++b;
      } else {
        ++a;
        ++b;
      }
    }
    if (missing == 1) corners.insert(*only);
  }
  return {corners.begin(), corners.end()};
}

std::vector<Vertex> corners_fast(const Facet& f) {
  std::vector<Vertex> out;
  const int i0 = f.leader_row(), j0 = f.leader_col();
  if (!(i0 == f.m && j0 == f.n - 1)) out.push_back(leader(f));
  for (auto t : turns(f.fx)) out.push_back({VertexFamily::X, t.row, t.col});
  for (auto t : turns(f.fy_lower)) out.push_back({VertexFamily::Y, t.row, t.col});
  for (auto t : turns(f.fy_upper)) {
    if (t.row == 1 && t.col == 2) continue;
    if (i0 == f.m && j0 < f.n && t.row == f.m - 1 && t.col == j0 + 1) continue;
    out.push_back({VertexFamily::Y, t.row, t.col});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> corner_count_per_facet(const std::vector<Facet>& order,
                                        int threads) {
  const std::size_t e = order.size();
  std::vector<int> sizes(e, 0);
  if (e == 0) return sizes;
  const int m = order[0].m, n = order[0].n;
  const int bits = 2 * m * n;
  const std::size_t words = static_cast<std::size_t>((bits + 63) / 64);
  std::vector<std::uint64_t> masks(e * words, 0);
  for (std::size_t t = 0; t < e; ++t)
    for (const auto& v : order[t].vertices()) {
      int b = vertex_bit(order[t], v);
      masks[t * words + b / 64] |= std::uint64_t(1) << (b % 64);
    }

  auto run = [&](std::size_t lo, std::size_t hi) {
    std::vector<std::uint64_t> corner(words);
    for (std::size_t t = lo; t < hi; ++t) {
      std::fill(corner.begin(), corner.end(), 0);
      const std::uint64_t* mt = &masks[t * words];
      for (std::size_t s = 0; s < t; ++s) {
        const std::uint64_t* ms = &masks[s * words];
        int cnt = 0;
        std::size_t hit_w = 0;
        std::uint64_t hit_x = 0;
        for (std::size_t w = 0; w < words; ++w) {
          std::uint64_t x = mt[w] & ~ms[w];
          if (x) {
            cnt += std::popcount(x);
            if (cnt > 1) break;
            hit_w = w;
            hit_x = x;
          }
        }
        if (cnt == 1) corner[hit_w] |= hit_x;
      }
      int total = 0;
      for (std::size_t w = 0; w < words; ++w) total += std::popcount(corner[w]);
      sizes[t] = total;
    }
  };

  if (threads <= 1) {
    run(0, e);
  } else {
    // Pair (t, e-1-t) ranges balance the triangular workload well enough.
    std::vector<std::thread> pool;
    std::size_t nth = std::min<std::size_t>(threads, e);
    for (std::size_t w = 0; w < nth; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t t = w; t < e; t += nth) run(t, t + 1);
      });
    for (auto& th : pool) th.join();
  }
  return sizes;
}

int CornerTable::max_k() const {
  int mk = 0;
  for (const auto& [key, v] : entries) mk = std::max(mk, std::get<2>(key));
  return mk;
}

CornerTable corner_table(int m, int n, const Guards& guards) {
  CornerTable table;
  table.m = m;
  table.n = n;
  for (const auto& f : enumerate_facets(m, n, guards)) {
    auto cs = corners_fast(f);
    Vertex lead = leader(f);
    int k = 0;
    for (const auto& v : cs)
      if (!(v == lead)) ++k;
    table.entries[{f.leader_row(), f.leader_col(), k}] += 1;
  }
  return table;
}

}  // namespace jeth
