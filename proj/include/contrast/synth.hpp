#pragma once

#include <cstdint>

#include "contrast/image.hpp"

namespace contrast {

// SplitMix64 (Steele, Lea, Flood 2014). Each call advances the state by
// 0x9E3779B97F4A7C15 and returns
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Integer in [0, span) via multiply-shift on the high 32 bits:
  /// ((next() >> 32) * span) >> 32. Requires 1 <= span <= 2^32.
  std::uint32_t below(std::uint64_t span) noexcept {
    return static_cast<std::uint32_t>(((next() >> 32) * span) >> 32);
  }

 private:
  std::uint64_t state_;
};

/// Row-major image with pixels drawn uniformly from [lo, hi], one draw of
/// SplitMix64::below(hi - lo + 1) per pixel. Throws std::invalid_argument if
/// lo > hi or either bound exceeds 255.
GrayImage synth_uniform(std::size_t width, std::size_t height, int lo, int hi,
                        std::uint64_t seed);

}  // namespace contrast
