#pragma once

// Exact integer substrate: arbitrary-precision integers, generalized
// binomial coefficients, dense univariate polynomials over them, and
// fraction-free determinants. Everything here is a pure function over
// immutable values.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "jeth/errors.hpp"

namespace jeth {

/// Arbitrary-precision signed integer. Closed under add/sub/mul and the
/// exact divisions used here; equality is exact.
using BigInt = boost::multiprecision::cpp_int;

/// Generalized binomial coefficient for arbitrary integers:
/// s(s-1)...(s-a+1)/a! for a >= 0, and 0 for a < 0. The empty product
/// (a = 0) is 1. Zero exactly when a < 0 or a > s >= 0.
///
/// Computed by the falling-factorial product with an exact division at each
/// step, so negative upper arguments work uniformly, e.g. binom(-1, 2) = 1.
BigInt binom(long long s, long long a);

/// Toggle the per-thread binomial memo table. Results are identical either
/// way; the cache is an invisible optimization. Returns the previous state.
bool set_binomial_cache_enabled(bool enabled);

/// Dense univariate polynomial in z with BigInt coefficients.
/// coeffs[e] is the coefficient of z^e; trailing zeros are stripped, so the
/// zero polynomial has an empty coefficient list.
struct ExactPolynomial {
  std::vector<BigInt> coeffs;

  ExactPolynomial() = default;
  ExactPolynomial(std::initializer_list<BigInt> cs) : coeffs(cs) { normalize(); }
  explicit ExactPolynomial(std::vector<BigInt> cs) : coeffs(std::move(cs)) {
    normalize();
  }

  void normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }

  bool is_zero() const { return coeffs.empty(); }

  /// Index of the last nonzero coefficient; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  /// Coefficient of z^e (0 beyond the stored range).
  const BigInt& coeff(std::size_t e) const {
    static const BigInt kZero = 0;
    return e < coeffs.size() ? coeffs[e] : kZero;
  }

  /// Sum of all coefficients, i.e. the value at z = 1.
  BigInt eval_at_one() const;

  bool operator==(const ExactPolynomial&) const = default;
};

ExactPolynomial operator+(const ExactPolynomial& p, const ExactPolynomial& q);
ExactPolynomial operator-(const ExactPolynomial& p, const ExactPolynomial& q);
ExactPolynomial operator*(const ExactPolynomial& p, const ExactPolynomial& q);

/// Scalar multiple c*p.
ExactPolynomial operator*(const BigInt& c, const ExactPolynomial& p);

/// Coefficient mirror: the coefficient of z^e in the result equals the
/// coefficient of z^(top_degree - e) in p. Rejects top_degree < degree(p).
ExactPolynomial poly_reverse(const ExactPolynomial& p, int top_degree);

/// "1 + 4z + z^2" style rendering, for messages and reports.
std::string to_string(const ExactPolynomial& p);

/// Minimal dense matrix of BigInt entries, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Exact determinant by fraction-free Gaussian elimination (Bareiss).
/// The 0x0 matrix yields 1 (empty product). Rejects non-square input.
BigInt exact_det(const IntMatrix& m);

}  // namespace jeth
