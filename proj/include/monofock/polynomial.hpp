#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monofock/numeric.hpp"

namespace monofock {

struct AtomicMeasure;

/// Dense polynomial with arbitrary-precision integer coefficients,
/// index = degree. Canonical trimmed form; the zero polynomial is empty.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  static IntPoly constant(BigInt c);
  static IntPoly monomial(int degree, BigInt c = BigInt(1));

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& operator[](int k) const { return coeffs_[k]; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  const BigInt& leading() const { return coeffs_.back(); }
  BigInt constant_term() const {
    return coeffs_.empty() ? BigInt(0) : coeffs_[0];
  }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator-() const;
  bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

  IntPoly derivative() const;
  /// Content = positive gcd of coefficients (0 for the zero polynomial).
  BigInt content() const;
  /// Division by the (positive) content; preserves all signs.
  IntPoly primitive_part() const;

  BigRational evaluate(const BigRational& x) const;
  BigFloat evaluate(const BigFloat& x) const;
  /// Exact sign of p(x) for rational x, via homogeneous integer evaluation.
  int sign_at(const BigRational& x) const;

  bool is_monic() const { return !is_zero() && leading() == 1; }
  bool has_only_even_terms() const;
  /// t^deg * p(1/t) == p  (coefficient palindrome).
  bool is_palindromic() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Exact gcd over Z via a primitive pseudo-remainder sequence.
/// Result is primitive with positive leading coefficient.
IntPoly poly_gcd(IntPoly a, IntPoly b);

/// A ratio of integer polynomials representing a moment generating
/// function M_m = Q_m / P_m.
struct RationalFn {
  IntPoly numerator;    // Q_m
  IntPoly denominator;  // P_m
};

/// The pair (Q_m, P_m) from the recurrence
///   Q_{m+1} = prod_{k<=m} P_k,   P_{m+1} = P_m^2 - t^2 Q_m^2,
/// seeded with P_1 = 1 - t^2, Q_1 = 1.
RationalFn mgf_pair(int m, int cap = 8);

/// Truncated formal power series with exact rational coefficients.
struct TruncatedSeries {
  std::vector<BigRational> coeffs;  // length K+1

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  static TruncatedSeries one(int order);
  TruncatedSeries add(const TruncatedSeries& o) const;
  TruncatedSeries sub(const TruncatedSeries& o) const;
  TruncatedSeries mul(const TruncatedSeries& o) const;
  /// Multiplicative inverse; requires nonzero constant term.
  TruncatedSeries inverse() const;
  TruncatedSeries shift(int by) const;  // multiply by t^by
  /// Substitute t -> t^2 (order doubles, truncated back to `order`).
  TruncatedSeries substitute_t_squared(int order) const;
  bool operator==(const TruncatedSeries& o) const { return coeffs == o.coeffs; }
};

/// First K+1 Taylor coefficients of Q/P by exact long division.
TruncatedSeries series_of(const RationalFn& rf, int K);

/// Checks that the two printed T-recurrences agree to order K and that
/// t -> t^2 substitution reproduces the M_m series.
bool t_recurrence_check(int m, int K);

/// An isolating interval for one real root of an integer polynomial.
/// Either lo == hi (exact rational root) or p(lo) * p(hi) < 0.
struct RootInterval {
  std::shared_ptr<const IntPoly> poly;
  BigRational lo;
  BigRational hi;
  int sign_change;  // sign of p just right of the root (0 for exact roots)

  bool is_exact() const { return lo == hi; }
  BigRational midpoint() const { return (lo + hi) / 2; }
};

/// Sturm-sequence isolation of all real roots, sorted ascending.
/// Requires a squarefree input (gcd(p, p') constant); the polynomials this
/// library produces are guaranteed squarefree, so violation is an error.
std::vector<RootInterval> sturm_isolate(const IntPoly& p);

/// Number of distinct real roots (total Sturm variation count).
int sturm_root_count(const IntPoly& p);

/// Bisect the isolating interval until its width is below 2^-bits; returns
/// the midpoint (the exact root when one is detected).
BigFloat refine_root(const RootInterval& ri, unsigned bits);
/// Same, returning the refined exact rational interval.
RootInterval refine_interval(RootInterval ri, unsigned bits);

/// Positive roots of P_{n+1} and Q_{n+1} strictly alternate (counts 2^n and
/// 2^n - 1, starting and ending with P); also checks the root-disjointness
/// gcd(P_k, Q_k) = constant at levels n and n+1.
bool interlacing_check(int n, int cap = 6);

/// P_{n+1} is monic, has constant term 1 and only even-degree terms.
bool structure_check(int n, int cap = 7);

/// Measure reconstruction from the polynomial route: atoms are the roots of
/// the (palindromic) P_m, weights by residue -Q(t)/(t P'(t)) at the
/// reciprocal-paired root.
AtomicMeasure measure_from_polys(int m, int cap = 6);

/// JSON dump {"degree": d, "coefficients": ["...", ...]} (decimal strings;
/// coefficients exceed 64-bit range from m = 5 on).
std::string poly_to_json(const IntPoly& p, bool exact = true);

}  // namespace monofock
