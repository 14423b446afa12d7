#pragma once

// Independent reference implementations used only by tests. They follow the
// textbook formulas in floating point and never call into histeq.cpp.

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "contrast/image.hpp"

namespace contrast::oracle {

// Per-pixel equalization straight from the definitions: probability of each
// level, cumulative probability, scaled by (L - 1).
inline GrayImage equalize_reference(const GrayImage& img) {
  const auto px = img.pixels();
  const double n = static_cast<double>(px.size());
  std::array<std::uint64_t, 256> counts{};
  for (Pixel p : px) ++counts[p];
  std::array<Pixel, 256> map{};
  std::uint64_t running = 0;
  for (int k = 0; k < 256; ++k) {
    running += counts[k];
    map[k] = static_cast<Pixel>(std::round(static_cast<double>(255 * running) / n));
  }
  std::vector<Pixel> out(px.size());
  for (std::size_t i = 0; i < px.size(); ++i) out[i] = map[px[i]];
  return GrayImage(img.width(), img.height(), std::move(out));
}

// Bi-histogram equalization at threshold t, evaluated per pixel.
inline GrayImage bi_equalize_reference(const GrayImage& img, int t) {
  const auto px = img.pixels();
  std::uint64_t n_low = 0, n_high = 0;
  std::array<std::uint64_t, 256> counts{};
  for (Pixel p : px) {
    ++counts[p];
    (p <= t ? n_low : n_high) += 1;
  }
  std::vector<Pixel> out(px.size());
  for (std::size_t i = 0; i < px.size(); ++i) {
    const int v = px[i];
    std::uint64_t cum = 0;
    if (v <= t) {
      for (int k = 0; k <= v; ++k) cum += counts[k];
      out[i] = static_cast<Pixel>(std::round(static_cast<double>(t * cum) / n_low));
    } else {
      for (int k = t + 1; k <= v; ++k) cum += counts[k];
      const double width = 255.0 - (t + 1);
      out[i] = static_cast<Pixel>((t + 1) + std::round(width * static_cast<double>(cum) /
                                                       static_cast<double>(n_high)));
    }
  }
  return GrayImage(img.width(), img.height(), std::move(out));
}

inline std::int64_t pixel_sum(const GrayImage& img) {
  std::int64_t s = 0;
  for (Pixel p : img.pixels()) s += p;
  return s;
}

// Materializes the output for every threshold and picks the one whose mean is
// closest to the input mean (smallest threshold on ties).
inline int mmbebhe_threshold_bruteforce(const GrayImage& img) {
  const std::int64_t in = pixel_sum(img);
  int best = -1;
  std::int64_t best_err = 0;
  for (int t = 0; t < 256; ++t) {
    const std::int64_t err = std::llabs(in - pixel_sum(bi_equalize_reference(img, t)));
    if (best < 0 || err < best_err) {
      best = t;
      best_err = err;
    }
  }
  return best;
}

}  // namespace contrast::oracle
