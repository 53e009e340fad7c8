#include "jeth/exactmath.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace jeth {

namespace {

thread_local bool g_binom_cache_enabled = true;
thread_local std::unordered_map<std::uint64_t, BigInt> g_binom_cache;

std::uint64_t binom_key(long long s, long long a) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(s)) << 32) |
         static_cast<std::uint32_t>(a);
}

BigInt binom_uncached(long long s, long long a) {
  if (a < 0) return 0;
  if (s >= 0 && a > s) return 0;
  // Falling factorial with stepwise exact division: after step i the running
  // value is binom(s, i), an integer, so each division is exact.
  BigInt r = 1;
  for (long long i = 1; i <= a; ++i) {
    r *= s - i + 1;
    r /= i;
  }
  return r;
}

}  // namespace

BigInt binom(long long s, long long a) {
  if (!g_binom_cache_enabled) return binom_uncached(s, a);
  // The cache key packs both arguments into 32 bits each; all callers stay
  // far inside that range.
  auto key = binom_key(s, a);
  auto it = g_binom_cache.find(key);
  if (it != g_binom_cache.end()) return it->second;
  BigInt v = binom_uncached(s, a);
  g_binom_cache.emplace(key, v);
  return v;
}

bool set_binomial_cache_enabled(bool enabled) {
  bool prev = g_binom_cache_enabled;
  g_binom_cache_enabled = enabled;
  return prev;
}

BigInt ExactPolynomial::eval_at_one() const {
  BigInt s = 0;
  for (const auto& c : coeffs) s += c;
  return s;
}

ExactPolynomial operator+(const ExactPolynomial& p, const ExactPolynomial& q) {
  std::vector<BigInt> out(std::max(p.coeffs.size(), q.coeffs.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.coeff(i) + q.coeff(i);
  return ExactPolynomial(std::move(out));
}

ExactPolynomial operator-(const ExactPolynomial& p, const ExactPolynomial& q) {
  std::vector<BigInt> out(std::max(p.coeffs.size(), q.coeffs.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.coeff(i) - q.coeff(i);
  return ExactPolynomial(std::move(out));
}

ExactPolynomial operator*(const ExactPolynomial& p, const ExactPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<BigInt> out(p.coeffs.size() + q.coeffs.size() - 1);
  for (std::size_t i = 0; i < p.coeffs.size(); ++i)
    for (std::size_t j = 0; j < q.coeffs.size(); ++j)
      out[i + j] += p.coeffs[i] * q.coeffs[j];
  return ExactPolynomial(std::move(out));
}

ExactPolynomial operator*(const BigInt& c, const ExactPolynomial& p) {
  std::vector<BigInt> out(p.coeffs.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = c * p.coeffs[i];
  return ExactPolynomial(std::move(out));
}

ExactPolynomial poly_reverse(const ExactPolynomial& p, int top_degree) {
  if (top_degree < 0 || top_degree < p.degree())
    throw ParameterError("poly_reverse: top_degree " + std::to_string(top_degree) +
                         " is below degree " + std::to_string(p.degree()));
  std::vector<BigInt> out(static_cast<std::size_t>(top_degree) + 1);
  for (std::size_t e = 0; e < out.size(); ++e)
    out[e] = p.coeff(static_cast<std::size_t>(top_degree) - e);
  return ExactPolynomial(std::move(out));
}

std::string to_string(const ExactPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t e = 0; e < p.coeffs.size(); ++e) {
    const BigInt& c = p.coeffs[e];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    BigInt a = abs(c);
    if (a != 1 || e == 0) os << a.str();
    if (e >= 1) {
      if (a != 1) os << "*";
      os << "z";
      if (e >= 2) os << "^" << e;
    }
  }
  return os.str();
}

BigInt exact_det(const IntMatrix& m) {
  if (m.rows() != m.cols())
    throw ParameterError("exact_det: matrix is " + std::to_string(m.rows()) +
                         "x" + std::to_string(m.cols()) + ", not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix w = m;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && w.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Bareiss update; the division by the previous pivot is exact.
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
      }
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  return sign * w.at(n - 1, n - 1);
}

}  // namespace jeth
