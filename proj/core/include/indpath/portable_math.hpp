#pragma once

// Deterministic replacements for the handful of libm calls that feed random
// sampling decisions or serialized statistics. They are built exclusively
// from IEEE-754 double operations (+, -, *, /, comparisons, frexp), each of
// which is correctly rounded, so results are bit-identical on every
// conforming platform regardless of the system libm. Accuracy is on the
// order of 1e-16 relative, which is far below any tolerance used here.

namespace indpath {

// Natural logarithm for finite x > 0. Throws std::domain_error otherwise.
double portable_log(double x);

// log(1 + x) for x > -1, accurate for small |x|.
double portable_log1p(double x);

}  // namespace indpath
