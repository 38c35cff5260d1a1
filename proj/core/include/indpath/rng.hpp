#pragma once

#include <bit>
#include <cstdint>

namespace indpath {

// Counter-based pseudo-random generator (SplitMix64 viewed as a pure
// function of a counter): the i-th value of stream `key` is
//
//   mix64(key + i * kGoldenGamma),   i = 1, 2, ...
//
// Streams support random access, and substreams are derived from a (key,
// tag) pair by a fixed hashing rule, so parallel trials and pipeline stages
// get reproducible, statistically separated streams. Everything here is
// integer arithmetic; the only floating-point conversion (next_unit) uses
// exact power-of-two scaling. Output is therefore bit-identical across
// platforms.

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  std::uint64_t next_u64() { return mix64(key_ + (++counter_) * kGoldenGamma); }

  // Uniform on (0, 1], a 53-bit dyadic rational; never returns 0.
  double next_unit() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1p-53;
  }

  // One Bernoulli trial against a precomputed 53-bit threshold.
  bool next_bernoulli(std::uint64_t threshold53) {
    return (next_u64() >> 11) < threshold53;
  }

  // Uniform integer in [0, bound), unbiased via mask rejection. bound >= 1.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t mask = std::bit_ceil(bound) - 1;
    for (;;) {
      const std::uint64_t r = next_u64() & mask;
      if (r < bound) return r;
    }
  }

  std::uint64_t counter() const { return counter_; }

  // Substream derivation rule: child key = mix64(key ^ mix64((tag+1)*gamma)).
  static constexpr std::uint64_t derive(std::uint64_t key, std::uint64_t tag) {
    return mix64(key ^ mix64((tag + 1) * kGoldenGamma));
  }

  // round(p * 2^53) clamped to [0, 2^53]; p >= 1 accepts every draw and
  // p <= 0 rejects every draw, with no special cases at the call site.
  static std::uint64_t bernoulli_threshold(double p);

 private:
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace indpath
