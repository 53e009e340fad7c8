#pragma once

// The simplicial complex of the principal jet component for parameters
// 2 < m <= n: facet enumeration, the shelling partial order and its
// canonical linear extensions, corner computation (both by definition and
// by the turn characterization), and the corner-count table.
//
// A facet is a triple of lattice paths on the m x n grid: an X-family path
// from the leader (i,j) != (m,n) to (m,n), a Y-family path from (1,1) to
// (i,n), and a Y-family path from (2,1) to (m,j), the last two sharing no
// grid point. Every facet has exactly 2(m+n-1) vertices.

#include <compare>
#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "jeth/exactmath.hpp"
#include "jeth/guards.hpp"
#include "jeth/latticepath.hpp"

namespace jeth {

enum class VertexFamily : std::uint8_t { X, Y };

struct Vertex {
  VertexFamily family = VertexFamily::X;
  int row = 0;
  int col = 0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

struct Facet {
  int m = 0;
  int n = 0;
  LatticePath fx;        // X-family, leader to (m,n)
  LatticePath fy_upper;  // Y-family, (1,1) to (i,n)
  LatticePath fy_lower;  // Y-family, (2,1) to (m,j)

  int leader_row() const { return fx.start().row; }
  int leader_col() const { return fx.start().col; }

  /// All vertices, sorted; size is always 2(m+n-1).
  std::vector<Vertex> vertices() const;

  friend bool operator==(const Facet&, const Facet&) = default;
};

/// The initial X-vertex of the facet's X-path.
Vertex leader(const Facet& f);

/// Anti-lexicographic order on X-positions: (a,b) precedes (c,d) iff a > c,
/// or a = c and b > d.
bool x_precedes(int a, int b, int c, int d);

/// Column-height profile of a path's spread on rows 1..m: entry a is the
/// largest column b with (a,b) on or below the path, 0 if none. Spread
/// inclusion is pointwise comparison of profiles.
std::vector<int> spread_profile(const LatticePath& path, int m);

/// Number of grid cells in the spread.
long long spread_size(const LatticePath& path, int m);

enum class FacetRelation { Less, Greater, Equal, Incomparable };

/// The shelling partial order: P < Q iff the leader of P strictly precedes,
/// or leaders agree and sp(P_x) is a proper subset of sp(Q_x), or the
/// X-paths agree and sp of the upper Y-path is a proper subset, or both the
/// X-paths and upper Y-paths agree and sp of the lower Y-path is a proper
/// subset.
FacetRelation compare_facets(const Facet& p, const Facet& q);

/// Every facet exactly once, leaders in row-major order. Requires
/// 2 < m <= n; throws GuardError when the facet count binom(m+n-2,m-1)^2
/// exceeds guards.max_facets (or a single path family exceeds
/// guards.max_paths).
std::vector<Facet> enumerate_facets(int m, int n, const Guards& guards = {});

/// Tie-breaking convention used to extend the partial order to a total one.
/// Canonical compares step strings with E before S; ReversedSteps flips only
/// that comparison, giving a second, different linear extension.
enum class TieBreak { Canonical, ReversedSteps };

/// Deterministic total order on all facets that strictly extends the
/// shelling partial order (whenever compare_facets(P,Q) is Less, P comes
/// first). Any such extension is a shelling.
std::vector<Facet> shelling_order(int m, int n,
                                  TieBreak tie_break = TieBreak::Canonical,
                                  const Guards& guards = {});

/// Corner set of order[t] by the definition: all v in F_t such that
/// F_t \ F_s = {v} for some s < t. Scans every earlier facet.
std::vector<Vertex> corners_bruteforce(std::size_t t,
                                       const std::vector<Facet>& order);

/// Corner set by the turn characterization: the leader unless it is
/// x_{m,n-1}, every ES-turn of the X-path and of the lower Y-path, and every
/// ES-turn of the upper Y-path except y_{1,2} and except y_{m-1,j+1} when
/// the leader is x_{m,j}.
std::vector<Vertex> corners_fast(const Facet& f);

/// |corner set| for every position in the order, by the same earlier-facet
/// scan as corners_bruteforce but over bit masks. Positions may be processed
/// in parallel; the result does not depend on threads.
std::vector<int> corner_count_per_facet(const std::vector<Facet>& order,
                                        int threads = 1);

/// Lookup from (leader row, leader col, k) to the number of facets with that
/// leader whose corner set contains exactly k ES-turns. The leader itself,
/// when a corner, is not counted in k; (m,n) never appears as a key.
struct CornerTable {
  int m = 0;
  int n = 0;
  std::map<std::tuple<int, int, int>, BigInt> entries;

  BigInt count(int i, int j, int k) const {
    auto it = entries.find({i, j, k});
    return it == entries.end() ? BigInt(0) : it->second;
  }
  BigInt total() const {
    BigInt s = 0;
    for (const auto& [key, v] : entries) s += v;
    return s;
  }
  /// Largest k present for any leader.
  int max_k() const;
};

CornerTable corner_table(int m, int n, const Guards& guards = {});

/// Facet count binom(m+n-2, m-1)^2 without enumerating.
BigInt facet_count(int m, int n);

/// Throws ParameterError unless 2 < m <= n.
void require_jet_params(int m, int n);

}  // namespace jeth
