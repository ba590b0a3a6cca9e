#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <string>

namespace monofock {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using BigRational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;
using BigFloat =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                  boost::multiprecision::et_off>;

/// Set the process-wide working precision for BigFloat values, in bits.
/// Measures record the precision they were generated with.
void set_working_precision(unsigned bits);
unsigned working_precision();

/// RAII precision switch for tests that need a different precision.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned bits)
      : saved_(working_precision()) {
    set_working_precision(bits);
  }
  ~PrecisionGuard() { set_working_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

inline int sign_of(const BigInt& x) { return x.sign(); }
inline int sign_of(const BigRational& x) { return x.sign(); }

/// 2^-k as a BigFloat at working precision.
BigFloat pow2(long exponent);

/// Format with the given number of significant decimal digits (CLI contract:
/// 10 significant digits for all human-facing numbers).
std::string format_significant(const BigFloat& x, int digits = 10);
std::string format_significant(double x, int digits = 10);

}  // namespace monofock
