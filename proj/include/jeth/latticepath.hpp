#pragma once

// Monotone lattice paths with unit steps, NE/ES-turn statistics, exhaustive
// enumeration, and the closed-form counts: single-path binomials, the
// Gessel-Viennot determinant for nonintersecting tuples, its turn-refined
// composition-of-determinants version, and the two-path special case.
//
// One coordinate convention throughout: (row, col) with steps S = (1,0) and
// E = (0,1). A turn is an E-step immediately followed by an S-step; this is
// the same notion whether the picture is drawn as NE-turns or ES-turns.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "jeth/exactmath.hpp"
#include "jeth/guards.hpp"

namespace jeth {

struct GridPoint {
  int row = 0;
  int col = 0;

  friend bool operator==(GridPoint, GridPoint) = default;
  friend auto operator<=>(GridPoint, GridPoint) = default;
};

/// A lattice path as its ordered point list; consecutive differences are
/// exactly (1,0) or (0,1). A single point is the zero-length path.
struct LatticePath {
  std::vector<GridPoint> points;

  const GridPoint& start() const { return points.front(); }
  const GridPoint& end() const { return points.back(); }

  /// True iff the point list satisfies the step invariant and is nonempty.
  bool valid() const;

  /// Build from a start point and a step string over {'E','S'}.
  static LatticePath from_steps(GridPoint start, std::string_view steps);

  /// The path's step letters, 'E' or 'S'.
  std::string step_string() const;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

/// Ordered tuple of paths; "nonintersecting" means no two share a point.
struct PathTuple {
  std::vector<LatticePath> paths;

  bool pairwise_disjoint() const;
};

/// Interior points entered by an E-step and left by an S-step, in path order.
std::vector<GridPoint> turns(const LatticePath& path);

/// Number of lattice paths from a to e: binom((e-a)+(e'-a'), e-a), and 0
/// when either coordinate difference is negative. a = e counts 1.
BigInt count_paths(GridPoint a, GridPoint e);

/// Number of paths from a to e with exactly k turns:
/// binom(e-a, k) * binom(e'-a', k); 0 for k < 0 or unreachable e.
BigInt count_paths_with_turns(GridPoint a, GridPoint e, long long k);

/// Every path from a to e exactly once, in lexicographic step order with E
/// before S. Throws GuardError (naming the refused count) when the number of
/// paths exceeds max_paths.
std::vector<LatticePath> enumerate_paths(GridPoint a, GridPoint e,
                                         std::uint64_t max_paths = Guards{}.max_paths);

/// Number of nonintersecting path tuples from starts to ends, as the
/// determinant of single-path counts. Requires the ordering hypotheses
/// a_1<=...<=a_d, e_1<=...<=e_d, a'_1>=...>=a'_d, e'_1>=...>=e'_d; the
/// determinant identity is only a theorem under them.
BigInt count_nonintersecting(std::span<const GridPoint> starts,
                             std::span<const GridPoint> ends);

/// Same determinant without the hypothesis check, for oracle probing.
BigInt count_nonintersecting_unchecked(std::span<const GridPoint> starts,
                                       std::span<const GridPoint> ends);

/// Number of nonintersecting tuples with exactly k turns in total, as the
/// sum over compositions k_1+...+k_d = k of determinants of binomial
/// products. Requires a_1<=...<=a_d, e_1<...<e_d, a'_1>...>a'_d,
/// e'_1>=...>=e'_d. k < 0 yields 0.
BigInt count_nonintersecting_with_turns(std::span<const GridPoint> starts,
                                        std::span<const GridPoint> ends,
                                        long long k);

/// Unchecked variant of the turn-refined count.
BigInt count_nonintersecting_with_turns_unchecked(std::span<const GridPoint> starts,
                                                  std::span<const GridPoint> ends,
                                                  long long k);

/// Closed two-path count: the number of nonintersecting pairs
/// (1,2)->(a,b), (1,1)->(c,d) with exactly s turns in total, evaluated as
///   sum over s1+s2=s of
///     binom(a-1,s1) binom(b-2,s1) binom(c-1,s2) binom(d-1,s2)
///   - binom(a,s2+1) binom(b-2,s2) binom(c-2,s1-1) binom(d-1,s1).
/// Requires a < c and b >= d.
BigInt corpath(long long a, long long b, long long c, long long d, long long s);

}  // namespace jeth
