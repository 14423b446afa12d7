#include "contrast/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace contrast {

namespace {

void require_same_shape(const GrayImage& a, const GrayImage& b, const char* what) {
  if (!a.same_shape(b)) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch " +
                                std::to_string(a.width()) + "x" + std::to_string(a.height()) +
                                " vs " + std::to_string(b.width()) + "x" +
                                std::to_string(b.height()));
  }
}

}  // namespace

double mse(const GrayImage& original, const GrayImage& processed) {
  require_same_shape(original, processed, "mse");
  auto a = original.pixels();
  auto b = processed.pixels();
  // Squared 8-bit differences fit easily; the integer sum is exact.
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int d = static_cast<int>(a[i]) - static_cast<int>(b[i]);
    sum += static_cast<std::uint64_t>(d * d);
  }
  return static_cast<double>(sum) / static_cast<double>(a.size());
}

double psnr_from_mse(double mse_value, double peak) {
  if (mse_value == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(peak * peak / mse_value);
}

double psnr(const GrayImage& original, const GrayImage& processed) {
  return psnr_from_mse(mse(original, processed));
}

double entropy(const Histogram& hist) {
  if (hist.empty()) return 0.0;
  double h = 0.0;
  const auto n = static_cast<double>(hist.total());
  for (int k = 0; k < kLevels; ++k) {
    if (hist.count(k) == 0) continue;
    const double p = static_cast<double>(hist.count(k)) / n;
    h -= p * std::log2(p);
  }
  // A single occupied level yields -1 * log2(1) = -0.0.
  return h == 0.0 ? 0.0 : h;
}

double entropy(const GrayImage& img) { return entropy(histogram(img)); }

double ambe(const GrayImage& original, const GrayImage& processed) {
  require_same_shape(original, processed, "ambe");
  // Equal pixel counts: |E(X) - E(Y)| = |sum(X) - sum(Y)| / N, exact up to
  // the final division.
  const std::uint64_t sx = intensity_sum(original);
  const std::uint64_t sy = intensity_sum(processed);
  const std::uint64_t diff = sx > sy ? sx - sy : sy - sx;
  return static_cast<double>(diff) / static_cast<double>(original.size());
}

MetricsReport evaluate(const GrayImage& original, const GrayImage& processed,
                       const std::string& method) {
  MetricsReport r;
  r.method = method;
  r.mse = mse(original, processed);
  r.psnr = psnr_from_mse(r.mse);
  r.entropy = entropy(processed);
  r.ambe = ambe(original, processed);
  return r;
}

}  // namespace contrast
