#include "indpath/rng.hpp"

#include <cmath>

namespace indpath {

std::uint64_t CounterRng::bernoulli_threshold(double p) {
  constexpr double kTwo53 = 9007199254740992.0;  // 2^53
  if (!(p > 0.0)) return 0;
  if (p >= 1.0) return static_cast<std::uint64_t>(kTwo53);
  return static_cast<std::uint64_t>(std::llround(p * kTwo53));
}

}  // namespace indpath
