#include "contrast/histeq.hpp"

#include <stdexcept>

namespace contrast {

const char* to_string(LutMethod method) noexcept {
  switch (method) {
    case LutMethod::Identity: return "identity";
    case LutMethod::HE: return "he";
    case LutMethod::BBHE: return "bbhe";
    case LutMethod::MMBEBHE: return "mmbebhe";
    case LutMethod::Fuzzy: return "fuzzy";
  }
  return "unknown";
}

IntensityLut IntensityLut::identity() {
  IntensityLut lut;
  for (int k = 0; k < kLevels; ++k) lut.map[k] = static_cast<Pixel>(k);
  return lut;
}

namespace {

// Equalizes input levels [lo, hi] onto output range [lo, hi] using only the
// counts inside that segment. round(w * cum / total) is evaluated in integers:
// floor((2 * w * cum + total) / (2 * total)) rounds halves up, which for
// non-negative operands is half away from zero.
void equalize_segment(const Histogram::Counts& counts, int lo, int hi, IntensityLut& lut) {
  std::uint64_t total = 0;
  for (int k = lo; k <= hi; ++k) total += counts[k];
  if (total == 0) {
    for (int k = lo; k <= hi; ++k) lut.map[k] = static_cast<Pixel>(k);
    return;
  }
  const auto width = static_cast<std::uint64_t>(hi - lo);
  std::uint64_t cum = 0;
  for (int k = lo; k <= hi; ++k) {
    cum += counts[k];
    const std::uint64_t offset = (2 * width * cum + total) / (2 * total);
    lut.map[k] = static_cast<Pixel>(lo + static_cast<int>(offset));
  }
}

}  // namespace

IntensityLut he_lut(const Histogram& hist) {
  if (hist.empty()) throw std::invalid_argument("he_lut: empty histogram");
  IntensityLut lut;
  lut.method = LutMethod::HE;
  equalize_segment(hist.counts(), 0, kMaxLevel, lut);
  return lut;
}

GrayImage apply_lut(const GrayImage& img, const IntensityLut& lut) {
  GrayImage out = img;
  for (Pixel& p : out.pixels()) p = lut.map[p];
  return out;
}

GrayImage equalize(const GrayImage& img) { return apply_lut(img, he_lut(histogram(img))); }

IntensityLut bi_equalize_lut(const Histogram& hist, int threshold, LutMethod method) {
  if (threshold < 0 || threshold > kMaxLevel)
    throw std::invalid_argument("bi_equalize_lut: threshold out of range");
  IntensityLut lut;
  lut.method = method;
  equalize_segment(hist.counts(), 0, threshold, lut);
  if (threshold < kMaxLevel) equalize_segment(hist.counts(), threshold + 1, kMaxLevel, lut);
  return lut;
}

int bbhe_threshold(const Histogram& hist) {
  if (hist.empty()) throw std::invalid_argument("bbhe_threshold: empty histogram");
  std::uint64_t sum = 0;
  for (int k = 0; k < kLevels; ++k) sum += hist.count(k) * static_cast<std::uint64_t>(k);
  return static_cast<int>(sum / hist.total());
}

IntensityLut bbhe_lut(const Histogram& hist) {
  return bi_equalize_lut(hist, bbhe_threshold(hist), LutMethod::BBHE);
}

GrayImage bbhe(const GrayImage& img) { return apply_lut(img, bbhe_lut(histogram(img))); }

std::uint64_t mapped_sum(const Histogram& hist, const IntensityLut& lut) {
  std::uint64_t sum = 0;
  for (int k = 0; k < kLevels; ++k) sum += hist.count(k) * lut[k];
  return sum;
}

int mmbebhe_threshold(const Histogram& hist) {
  if (hist.empty()) throw std::invalid_argument("mmbebhe_threshold: empty histogram");
  // Both means share the divisor N, so comparing |sum_in - sum_out| in
  // integers ranks candidates exactly.
  const std::uint64_t sum_in = mapped_sum(hist, IntensityLut::identity());
  int best = 0;
  std::uint64_t best_err = UINT64_MAX;
  for (int t = 0; t < kLevels; ++t) {
    const std::uint64_t sum_out = mapped_sum(hist, bi_equalize_lut(hist, t));
    const std::uint64_t err = sum_in > sum_out ? sum_in - sum_out : sum_out - sum_in;
    if (err < best_err) {
      best_err = err;
      best = t;
    }
  }
  return best;
}

IntensityLut mmbebhe_lut(const Histogram& hist) {
  return bi_equalize_lut(hist, mmbebhe_threshold(hist), LutMethod::MMBEBHE);
}

GrayImage mmbebhe(const GrayImage& img) { return apply_lut(img, mmbebhe_lut(histogram(img))); }

}  // namespace contrast
