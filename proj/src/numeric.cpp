#include "monofock/numeric.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace monofock {

namespace {
unsigned g_precision_bits = 256;

unsigned bits_to_digits10(unsigned bits) {
  // ceil(bits * log10(2)), floor at double precision
  return std::max(18u, static_cast<unsigned>(bits * 0.30102999566398119521 + 1));
}
}  // namespace

void set_working_precision(unsigned bits) {
  g_precision_bits = std::max(24u, bits);
  BigFloat::default_precision(bits_to_digits10(g_precision_bits));
}

unsigned working_precision() { return g_precision_bits; }

BigFloat pow2(long exponent) {
  BigFloat r = 1;
  if (exponent >= 0) {
    return ldexp(r, static_cast<int>(exponent));
  }
  return ldexp(r, static_cast<int>(exponent));
}

std::string format_significant(const BigFloat& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

std::string format_significant(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  return std::string(buf);
}

namespace {
// Pin the default precision before main() so static initialisation and
// early test code agree with set_working_precision's default.
struct PrecisionInit {
  PrecisionInit() { set_working_precision(256); }
} g_precision_init;
}  // namespace

}  // namespace monofock
