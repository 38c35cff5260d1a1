#include "indpath/portable_math.hpp"

#include <cmath>
#include <stdexcept>

namespace indpath {

namespace {

// Closest doubles to ln(2) and sqrt(1/2).
constexpr double kLn2 = 0x1.62e42fefa39efp-1;
constexpr double kSqrtHalf = 0x1.6a09e667f3bcdp-1;

// atanh(t) / t as a polynomial in t^2, |t| <= 0.1716 (t^2 <= 0.0295).
// Horner in a fixed order keeps the evaluation bit-deterministic.
double atanh_over_t(double t2) {
  double s = 1.0 / 19.0;
  s = s * t2 + 1.0 / 17.0;
  s = s * t2 + 1.0 / 15.0;
  s = s * t2 + 1.0 / 13.0;
  s = s * t2 + 1.0 / 11.0;
  s = s * t2 + 1.0 / 9.0;
  s = s * t2 + 1.0 / 7.0;
  s = s * t2 + 1.0 / 5.0;
  s = s * t2 + 1.0 / 3.0;
  s = s * t2 + 1.0;
  return s;
}

}  // namespace

double portable_log(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("portable_log: argument must be finite and > 0");
  }
  int exp2 = 0;
  double m = std::frexp(x, &exp2);  // x = m * 2^exp2, m in [0.5, 1)
  if (m < kSqrtHalf) {
    m *= 2.0;
    exp2 -= 1;
  }
  // m in [sqrt(1/2), sqrt(2)); ln m = 2 atanh((m-1)/(m+1)).
  const double t = (m - 1.0) / (m + 1.0);
  const double ln_m = 2.0 * t * atanh_over_t(t * t);
  return static_cast<double>(exp2) * kLn2 + ln_m;
}

double portable_log1p(double x) {
  if (!(x > -1.0)) {
    throw std::domain_error("portable_log1p: argument must be > -1");
  }
  if (x > 0.125 || x < -0.125) {
    return portable_log(1.0 + x);
  }
  // Alternating series sum_{k>=1} (-1)^{k+1} x^k / k, truncated where the
  // next term is below 1e-17 relative for |x| <= 0.125 (20 terms).
  double s = -1.0 / 20.0;
  for (int k = 19; k >= 1; --k) {
    s = s * x + ((k % 2 == 1) ? 1.0 : -1.0) / static_cast<double>(k);
  }
  return x * s;
}

}  // namespace indpath
