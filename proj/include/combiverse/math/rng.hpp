#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace combiverse::math {

//! splitmix64 mixing step; used to derive stream seeds from (seed, tag) pairs.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t v) {
  return mix64(seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2)));
}

inline std::uint64_t hash_tag(std::uint64_t seed, std::string_view tag) {
  std::uint64_t h = seed;
  for (char c : tag) h = hash_combine(h, static_cast<std::uint64_t>(static_cast<unsigned char>(c)));
  return h;
}

//! PCG32: small deterministic generator with a serializable 2x u64 state.
//! Used everywhere instead of <random> engines/distributions so that streams
//! are bit-identical across platforms and restorable from checkpoints.
class Pcg32 {
public:
  Pcg32() : Pcg32(0x853c49e6748fea9bull, 0xda3e39cb94b95bdbull) {}
  explicit Pcg32(std::uint64_t seed, std::uint64_t stream = 0xda3e39cb94b95bdbull) {
    state_ = 0;
    inc_ = (stream << 1u) | 1u;
    next_u32();
    state_ += seed;
    next_u32();
  }

  std::uint32_t next_u32() {
    std::uint64_t old = state_;
    state_ = old * 6364136223846793005ull + inc_;
    std::uint32_t xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
    std::uint32_t rot = static_cast<std::uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
  }

  //! Unbiased integer in [0, bound) via rejection.
  std::uint32_t next_below(std::uint32_t bound) {
    if (bound == 0) return 0;
    std::uint32_t threshold = (0u - bound) % bound;
    for (;;) {
      std::uint32_t r = next_u32();
      if (r >= threshold) return r % bound;
    }
  }

  //! Inclusive integer range [lo, hi].
  int next_int(int lo, int hi) {
    return lo + static_cast<int>(next_below(static_cast<std::uint32_t>(hi - lo + 1)));
  }

  //! Uniform double in [0, 1) with 53-bit resolution.
  double next_double() {
    std::uint64_t hi = next_u32();
    std::uint64_t lo = next_u32();
    return static_cast<double>(((hi << 32) | lo) >> 11) * 0x1.0p-53;
  }

  double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  //! Standard normal via Box-Muller (no caching, deterministic pairing).
  double next_normal() {
    double u1 = next_double();
    double u2 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  std::uint64_t state() const { return state_; }
  std::uint64_t inc() const { return inc_; }
  void restore(std::uint64_t state, std::uint64_t inc) {
    state_ = state;
    inc_ = inc;
  }

private:
  std::uint64_t state_;
  std::uint64_t inc_;
};

//! Counter-based stream derivation: independent generator for a purpose tag
//! plus indices (iteration, view, object...). Stateless call sites make
//! checkpoint resume and any-order evaluation reproducible.
inline Pcg32 stream(std::uint64_t seed, std::string_view tag, std::uint64_t a = 0,
                    std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t h = hash_tag(seed, tag);
  h = hash_combine(h, a);
  h = hash_combine(h, b);
  h = hash_combine(h, c);
  return Pcg32(h, mix64(h));
}

}  // namespace combiverse::math
