#include "jeth/hilbert.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "jeth/latticepath.hpp"

namespace jeth {

namespace {

// Diagonal sum over t1+t2=k of f(t1,t2). Every summand used here carries a
// binom(., t1) and a binom(., t2) factor with nonnegative top, so by the
// binomial zero locus the support lies in 0 <= t1 <= k.
BigInt diagonal_sum(long long k, const std::function<BigInt(long long, long long)>& f) {
  BigInt total = 0;
  for (long long t1 = 0; t1 <= k; ++t1) total += f(t1, k - t1);
  return total;
}

// Validates and strips a just-assembled jet h-vector: h_0 = 1, entries
// nonnegative, degree 2(m-1).
HVector finish_jet_hvector(std::vector<BigInt> h, int m, const char* route) {
  while (!h.empty() && h.back() == 0) h.pop_back();
  if (h.empty() || h.front() != 1)
    throw InternalError(std::string(route) + ": h_0 != 1");
  for (const auto& c : h)
    if (c < 0) throw InternalError(std::string(route) + ": negative h entry");
  if (static_cast<int>(h.size()) != 2 * m - 1)
    throw InternalError(std::string(route) + ": h-vector length " +
                        std::to_string(h.size()) + ", expected " +
                        std::to_string(2 * m - 1));
  return HVector{std::move(h)};
}

ExactPolynomial base_numerator(int m, int n) {
  std::vector<BigInt> c(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) c[e] = binom(m - 1, e) * binom(n - 1, e);
  return ExactPolynomial(std::move(c));
}

void require_classical_params(int r, int m, int n) {
  if (!(1 <= r && r <= m && m <= n))
    throw ParameterError("parameters must satisfy 1 <= r <= m <= n, got r=" +
                         std::to_string(r) + " m=" + std::to_string(m) +
                         " n=" + std::to_string(n));
}

}  // namespace

BigInt HVector::sum() const {
  BigInt s = 0;
  for (const auto& c : h) s += c;
  return s;
}

HilbertSeries HilbertSeries::lowest_form() const {
  HilbertSeries out = *this;
  if (out.numerator.is_zero()) return {ExactPolynomial{}, 0};
  while (out.pole_order > 0 && out.numerator.eval_at_one() == 0) {
    // numerator = (1-z) * q with q_i the partial sums of the coefficients.
    std::vector<BigInt> q(out.numerator.coeffs.size() - 1);
    BigInt acc = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      acc += out.numerator.coeffs[i];
      q[i] = acc;
    }
    out.numerator = ExactPolynomial(std::move(q));
    --out.pole_order;
  }
  return out;
}

bool HVector::palindromic() const {
  for (std::size_t i = 0, j = h.size(); i < j; ++i)
    if (h[i] != h[j - 1 - i]) return false;
  return true;
}

std::string HVector::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) os << ",";
    os << h[i].str();
  }
  os << ")";
  return os.str();
}

HVector h_shelling(int m, int n, const Guards& guards, int threads) {
  auto order = shelling_order(m, n, TieBreak::Canonical, guards);
  auto sizes = corner_count_per_facet(order, threads);
  std::vector<BigInt> h(static_cast<std::size_t>(2 * m - 1), 0);
  for (int s : sizes) {
    if (s >= static_cast<int>(h.size())) h.resize(static_cast<std::size_t>(s) + 1, 0);
    h[s] += 1;
  }
  return finish_jet_hvector(std::move(h), m, "h_shelling");
}

BigInt corner_count_closed(int m, int n, int i, int j, long long s) {
  require_jet_params(m, n);
  if (i < 1 || i > m || j < 1 || j > n || (i == m && j == n))
    throw ParameterError("corner_count_closed: bad leader (" + std::to_string(i) +
                         "," + std::to_string(j) + ")");
  if (s < 0) return 0;
  if (i != m) {
    // Turns split between the X-path (a free single path) and the
    // nonintersecting Y-pair.
    BigInt total = 0;
    for (long long s1 = 0; s1 <= s; ++s1)
      total += binom(m - i, s1) * binom(n - j, s1) * corpath(i, n, m, j, s - s1);
    return total;
  }
  if (j == 1) return binom(n - 2, s) * binom(m - 1, s);
  if (j == n - 1) {
    BigInt total = corpath(m - 1, n - 1, m, n - 1, s);
    for (int p = 1; p <= m - 2; ++p) total += corpath(p, n - 1, m, n - 1, s - 1);
    return total;
  }
  // 1 < j < n-1: upper Y-path truncated at its last turn (p,q+1).
  BigInt total = corpath(m - 1, j, m, j, s);
  for (int p = 1; p <= m - 2; ++p) total += corpath(p, j, m, j, s - 1);
  for (int p = 1; p <= m - 1; ++p)
    for (int q = j + 1; q <= n - 1; ++q) total += corpath(p, q, m, j, s - 1);
  return total;
}

HVector h_paths(int m, int n) {
  require_jet_params(m, n);
  // One slot past the expected degree; the length check catches leakage.
  std::vector<BigInt> h(static_cast<std::size_t>(2 * m), 0);
  h[0] = 1;
  for (int k = 1; k <= 2 * m - 1; ++k) {
    BigInt hk = corner_count_closed(m, n, m, n - 1, k);
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == m && (j == n - 1 || j == n)) continue;
        hk += corner_count_closed(m, n, i, j, k - 1);
      }
    h[k] = hk;
  }
  return finish_jet_hvector(std::move(h), m, "h_paths");
}

BigInt corner_sum_last_leader(int m, int n, long long k) {
  return diagonal_sum(k, [&](long long t1, long long t2) {
    return binom(m - 2, t1) * binom(n - 2, t1) * binom(m - 1, t2) * binom(n - 2, t2) -
           binom(m - 1, t2 + 1) * binom(n - 2, t2) * binom(m - 2, t1 - 1) *
               binom(n - 2, t1);
  });
}

BigInt corner_sum_upper_rows(int m, int n, long long k) {
  return diagonal_sum(k, [&](long long t1, long long t2) {
    return binom(m, t2) * binom(n, t1 + 1) * binom(m - 1, t1) * binom(n - 2, t2 - 1) -
           binom(m - 1, t1) * binom(n, t2) * binom(m - 1, t2 - 1) * binom(n - 2, t1);
  });
}

BigInt corner_sum_bottom_row(int m, int n, long long k) {
  return diagonal_sum(k, [&](long long t1, long long t2) {
    return binom(m - 1, t1) * binom(n - 2, t1) * binom(m - 1, t2 - 1) *
               binom(n - 2, t2) -
           binom(m, t2 + 1) * binom(n - 2, t2) * binom(m - 2, t1 - 2) *
               binom(n - 2, t1);
  });
}

BigInt corner_sum_bottom_combined(int m, int n, long long k) {
  return diagonal_sum(k, [&](long long t1, long long t2) {
    return binom(m - 1, t1) * binom(n - 2, t1) * binom(m - 1, t2) * binom(n - 2, t2) -
           binom(m - 1, t2 + 1) * binom(n - 2, t2) * binom(m - 1, t1 - 1) *
               binom(n - 2, t1);
  });
}

HVector h_lemma_sums(int m, int n) {
  require_jet_params(m, n);
  std::vector<BigInt> h(static_cast<std::size_t>(2 * m), 0);
  h[0] = 1;
  for (int k = 1; k <= 2 * m - 1; ++k)
    h[k] = corner_sum_bottom_combined(m, n, k) + corner_sum_upper_rows(m, n, k);
  return finish_jet_hvector(std::move(h), m, "h_lemma_sums");
}

HVector h_closed(int m, int n) {
  if (!(2 <= m && m <= n))
    throw ParameterError("h_closed: requires 2 <= m <= n, got m=" +
                         std::to_string(m) + " n=" + std::to_string(n));
  auto sq = base_numerator(m, n) * base_numerator(m, n);
  return finish_jet_hvector(std::move(sq.coeffs), m, "h_closed");
}

HilbertSeries jet_hilbert_series(int m, int n) {
  require_jet_params(m, n);
  return {h_closed(m, n).to_polynomial(), 2 * (m + n - 1)};
}

BigInt jet_multiplicity_sum(int m, int n) {
  require_jet_params(m, n);
  BigInt total = 0;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == m && j == n) continue;
      IntMatrix d(2, 2);
      d.at(0, 0) = binom(i + n - 2, i - 1);
      d.at(0, 1) = binom(m + j - 2, m - 1);
      d.at(1, 0) = binom(i + n - 3, i - 2);
      d.at(1, 1) = binom(m + j - 3, m - 2);
      total += binom(m + n - i - j, m - i) * exact_det(d);
    }
  return total;
}

BigInt jet_multiplicity(int m, int n) {
  require_jet_params(m, n);
  return facet_count(m, n);
}

HVector classical_h(int r, int m, int n) {
  require_classical_params(r, m, n);
  std::vector<BigInt> h;
  if (r == 1) {
    h.push_back(1);
    return HVector{std::move(h)};
  }
  const int d = r - 1;
  const long long kmax = static_cast<long long>(d) * (m - 1);
  h.assign(static_cast<std::size_t>(kmax) + 1, 0);
  std::vector<long long> parts(static_cast<std::size_t>(d), 0);
  // Weak compositions with k_i <= m-i: beyond that binom(m-i, k_i) = 0 and
  // the whole determinant row vanishes, so the branch is pruned.
  std::function<void(int, long long)> rec = [&](int idx, long long k) {
    long long i = idx + 1;
    long long hi = m - i;  // binom(m-i, k_i) = 0 beyond this
    if (idx + 1 == d) {
      for (long long ki = 0; ki <= hi; ++ki) {
        parts[idx] = ki;
        long long ktot = k + ki;
        IntMatrix mat(d, d);
        for (int a = 0; a < d; ++a) {
          long long ia = a + 1;
          for (int b = 0; b < d; ++b) {
            long long jb = b + 1;
            mat.at(a, b) = binom(m - ia, parts[a]) * binom(n - jb, parts[a] + ia - jb);
          }
        }
        h[static_cast<std::size_t>(ktot)] += exact_det(mat);
      }
      return;
    }
    for (long long ki = 0; ki <= hi; ++ki) {
      parts[idx] = ki;
      rec(idx + 1, k + ki);
    }
  };
  rec(0, 0);
  while (!h.empty() && h.back() == 0) h.pop_back();
  if (h.empty() || h.front() != 1)
    throw InternalError("classical_h: h_0 != 1");
  for (const auto& c : h)
    if (c < 0) throw InternalError("classical_h: negative h entry");
  return HVector{std::move(h)};
}

BigInt classical_multiplicity(int r, int m, int n) {
  require_classical_params(r, m, n);
  const int d = r - 1;
  IntMatrix mat(d, d);
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      mat.at(i - 1, j - 1) = binom(m + n - i - j, m - i);
  return exact_det(mat);
}

HilbertSeries classical_series(int r, int m, int n) {
  return {classical_h(r, m, n).to_polynomial(), (r - 1) * (m + n - r + 1)};
}

int a_invariant(int m, int n) {
  require_jet_params(m, n);
  auto series = jet_hilbert_series(m, n);
  int a = series.numerator.degree() - series.pole_order;
  if (a != -2 * n)
    throw InternalError("a_invariant: degree check gives " + std::to_string(a) +
                        ", expected " + std::to_string(-2 * n));
  return a;
}

HilbertSeries canonical_module_series(int m, int n) {
  require_jet_params(m, n);
  auto mirrored = poly_reverse(base_numerator(m, n), m + n - 1);
  return {mirrored * mirrored, 2 * (m + n - 1)};
}

bool is_gorenstein(int m, int n) {
  require_jet_params(m, n);
  bool pal = h_closed(m, n).palindromic();
  if (pal != (m == n))
    throw InternalError("is_gorenstein: palindrome test disagrees with m == n");
  return pal;
}

long long component_count(long long r, long long k) {
  if (r < 1 || k < 1)
    throw ParameterError("component_count: requires r >= 1 and k >= 1, got r=" +
                         std::to_string(r) + " k=" + std::to_string(k));
  return k + 1 - (k + r - 1) / r;
}

}  // namespace jeth
