#pragma once

#include <array>
#include <cstdint>

#include "contrast/image.hpp"

namespace contrast {

enum class LutMethod { Identity, HE, BBHE, MMBEBHE, Fuzzy };

const char* to_string(LutMethod method) noexcept;

// 256-entry gray-level mapping; every global enhancement compiles to one.
struct IntensityLut {
  std::array<Pixel, kLevels> map{};
  LutMethod method = LutMethod::Identity;

  static IntensityLut identity();

  Pixel operator[](int level) const { return map[static_cast<std::size_t>(level)]; }
  friend bool operator==(const IntensityLut&, const IntensityLut&) = default;
};

/// Classical equalization: map[k] = round(255 * cdf_count(k) / N), half away
/// from zero. Throws std::invalid_argument on an empty histogram.
IntensityLut he_lut(const Histogram& hist);

GrayImage apply_lut(const GrayImage& img, const IntensityLut& lut);

GrayImage equalize(const GrayImage& img);

/// Splits at `threshold`: levels [0, t] are equalized onto [0, t] and levels
/// [t+1, 255] onto [t+1, 255], each with its own pixel count. An empty
/// segment is left as identity.
IntensityLut bi_equalize_lut(const Histogram& hist, int threshold,
                             LutMethod method = LutMethod::BBHE);

/// floor(mean intensity) of the histogram.
int bbhe_threshold(const Histogram& hist);
IntensityLut bbhe_lut(const Histogram& hist);
GrayImage bbhe(const GrayImage& img);

/// Sum over all pixels of lut[pixel], computed from the histogram alone.
std::uint64_t mapped_sum(const Histogram& hist, const IntensityLut& lut);

/// Threshold in [0, 255] whose bi-equalization minimises the absolute mean
/// brightness error. Ties go to the smallest threshold. O(L^2).
int mmbebhe_threshold(const Histogram& hist);
IntensityLut mmbebhe_lut(const Histogram& hist);
GrayImage mmbebhe(const GrayImage& img);

}  // namespace contrast
