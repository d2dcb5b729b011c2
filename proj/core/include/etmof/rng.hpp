#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace etmof {

/// Deterministic 64-bit generator (splitmix64, Steele/Lea/Flood 2014).
/// Chosen because the sequence is fully specified by the seed and has a
/// published reference stream, so instances can be reproduced bit-exactly
/// from any language. reference_stream() freezes the first ten outputs for
/// seed 0 as a self-test vector.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53-bit resolution.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double next_in(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Uniform integer in [0, n), n > 0. Lemire multiply-shift, no rejection.
  std::uint64_t next_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  /// Standard normal via Box-Muller; consumes two uniforms per pair.
  double next_normal();

  static std::array<std::uint64_t, 10> reference_stream();

private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// FNV-1a over raw bytes; the basis of all derived-seed hashing.
std::uint64_t fnv1a64(std::string_view bytes);

/// One splitmix64 scramble of x (stateless).
std::uint64_t mix64(std::uint64_t x);

/// Order-sensitive fold of one more field into a running seed.
std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t value);

} // namespace etmof
