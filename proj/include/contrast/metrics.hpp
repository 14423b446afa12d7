#pragma once

#include <string>

#include "contrast/image.hpp"

namespace contrast {

/// Peak value used in the PSNR numerator: L - 1 for 8-bit images.
inline constexpr double kPsnrPeak = kMaxLevel;

// Comparisons between two images require identical dimensions; otherwise
// std::invalid_argument is thrown with both shapes in the message.

double mse(const GrayImage& original, const GrayImage& processed);

/// 10 * log10(peak^2 / mse). Returns +infinity when mse == 0.
double psnr_from_mse(double mse, double peak = kPsnrPeak);
double psnr(const GrayImage& original, const GrayImage& processed);

/// Shannon entropy in bits of the intensity distribution, in [0, 8].
double entropy(const GrayImage& img);
double entropy(const Histogram& hist);

/// |mean(original) - mean(processed)|.
double ambe(const GrayImage& original, const GrayImage& processed);

struct MetricsReport {
  std::string method;
  double mse = 0.0;
  double psnr = 0.0;
  double entropy = 0.0;  // of the processed image
  double ambe = 0.0;
};

MetricsReport evaluate(const GrayImage& original, const GrayImage& processed,
                       const std::string& method);

}  // namespace contrast
