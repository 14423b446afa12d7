#include "contrast/synth.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace contrast {

GrayImage synth_uniform(std::size_t width, std::size_t height, int lo, int hi,
                        std::uint64_t seed) {
  if (lo < 0 || hi > kMaxLevel || lo > hi) {
    throw std::invalid_argument("synth: need 0 <= lo <= hi <= 255, got lo=" +
                                std::to_string(lo) + " hi=" + std::to_string(hi));
  }
  SplitMix64 rng(seed);
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  std::vector<Pixel> pixels(width * height);
  for (Pixel& p : pixels) p = static_cast<Pixel>(lo + static_cast<int>(rng.below(span)));
  return GrayImage(width, height, std::move(pixels));
}

}  // namespace contrast
