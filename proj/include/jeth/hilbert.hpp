#pragma once

// Hilbert series and h-vectors of the principal jet component by four
// independent routes (shelling histogram, corner-table path counts, closed
// binomial double sums, and the squared base numerator), together with the
// classical determinantal series, multiplicities, a-invariant, Gorenstein
// test, canonical-module series, and the jet-scheme component count.

#include <cstdint>
#include <string>
#include <vector>

#include "jeth/exactmath.hpp"
#include "jeth/jetcomplex.hpp"

namespace jeth {

/// Hilbert numerator coefficient list (h_0, h_1, ...), trailing zeros
/// stripped. For the jet principal component h_0 = 1, all entries are
/// nonnegative, and the length is 2m-1.
struct HVector {
  std::vector<BigInt> h;

  int degree() const { return static_cast<int>(h.size()) - 1; }
  BigInt sum() const;
  bool palindromic() const;
  ExactPolynomial to_polynomial() const { return ExactPolynomial(h); }
  std::string str() const;

  friend bool operator==(const HVector&, const HVector&) = default;
};

/// A rational series numerator(z) / (1-z)^pole_order, kept unreduced with
/// pole_order equal to the Krull dimension. Reduction is available but is
/// never applied implicitly.
struct HilbertSeries {
  ExactPolynomial numerator;
  int pole_order = 0;

  /// Divides (1-z) out of numerator and denominator until numerator(1) != 0
  /// or the pole order reaches zero.
  HilbertSeries lowest_form() const;

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

// ---- jet principal component, four routes ----

/// Route 1: histogram of corner-set sizes over the shelling order.
HVector h_shelling(int m, int n, const Guards& guards = {}, int threads = 1);

/// Route 2: corner-count aggregation h_k = C_{m,n-1}^k + sum of C_{i,j}^{k-1}
/// over the other leaders, with every C evaluated by closed path counting
/// (no facet enumeration anywhere).
HVector h_paths(int m, int n);

/// Route 3: the same aggregation collapsed into two closed binomial double
/// sums evaluated as diagonal sums over t1+t2=k.
HVector h_lemma_sums(int m, int n);

/// Route 4: square of the base numerator
/// sum_e binom(m-1,e) binom(n-1,e) z^e. Also evaluated for m = 2 (outside
/// the jet theorem's range) since the formula itself makes sense there.
HVector h_closed(int m, int n);

/// Closed-form corner count C_{i,j}^s from path counting; leader (i,j) must
/// differ from (m,n).
BigInt corner_count_closed(int m, int n, int i, int j, long long s);

/// Numerator h_closed(m,n) over pole order 2(m+n-1).
HilbertSeries jet_hilbert_series(int m, int n);

/// Literal evaluation of the multiplicity double sum over leaders
/// (i,j) != (m,n) of binom(m+n-i-j, m-i) times a 2x2 binomial determinant.
BigInt jet_multiplicity_sum(int m, int n);

/// Closed form binom(m+n-2, m-1)^2.
BigInt jet_multiplicity(int m, int n);

// ---- closed binomial double sums (building blocks of route 3) ----
// C_{i,j}^k is the number of facets with leader x_{i,j} whose corner set
// contains exactly k turns. Each sum below collapses a block of the
// h_k aggregation into a single diagonal sum of binomial products.

/// C_{m,n-1}^k, the lone degree-k contribution of the leader x_{m,n-1}.
BigInt corner_sum_last_leader(int m, int n, long long k);
/// Sum of C_{i,j}^{k-1} over all leaders with i < m.
BigInt corner_sum_upper_rows(int m, int n, long long k);
/// Sum of C_{m,j}^{k-1} over the bottom-row leaders with j <= n-2.
BigInt corner_sum_bottom_row(int m, int n, long long k);
/// corner_sum_last_leader + corner_sum_bottom_row, added termwise.
BigInt corner_sum_bottom_combined(int m, int n, long long k);

// ---- classical determinantal variety ----

/// h-vector of the rank-< r determinantal variety: for each k, the sum over
/// compositions k_1+...+k_{r-1}=k of (r-1)x(r-1) determinants of binomial
/// products. r = 1 yields (1). Requires 1 <= r <= m <= n.
HVector classical_h(int r, int m, int n);

/// Multiplicity determinant det binom(m+n-i-j, m-i), 1 <= i,j <= r-1.
BigInt classical_multiplicity(int r, int m, int n);

/// classical_h over pole order (r-1)(m+n-r+1).
HilbertSeries classical_series(int r, int m, int n);

// ---- derived invariants ----

/// Always -2n; internally verifies deg(numerator) - pole order against it.
int a_invariant(int m, int n);

/// Numerator: square of the base numerator mirrored to top degree m+n-1;
/// pole order 2(m+n-1). Lowest nonzero degree is 2n.
HilbertSeries canonical_module_series(int m, int n);

/// True iff h_closed(m,n) is palindromic; internally asserted equal to m==n.
bool is_gorenstein(int m, int n);

/// Number of irreducible components of the (k-1)-th jet scheme over the
/// rank-< r determinantal variety: k+1 - ceil(k/r). Requires r,k >= 1.
long long component_count(long long r, long long k);

}  // namespace jeth
