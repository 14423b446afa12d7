#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "contrast/fuzzy.hpp"
#include "contrast/image.hpp"
#include "contrast/metrics.hpp"

namespace contrast {

enum class Method { HE, BBHE, MMBEBHE, Fuzzy };

std::optional<Method> parse_method(std::string_view name);
const char* to_string(Method method) noexcept;

/// Runs one enhancement. A custom fuzzy config replaces the image-adaptive
/// default; it is ignored for the histogram methods.
GrayImage enhance(const GrayImage& img, Method method,
                  const std::optional<FuzzyConfig>& fuzzy_config = std::nullopt);

struct ReportRow {
  std::string image;
  MetricsReport metrics;
};

/// Fixed-point rendering with '.' as separator regardless of locale; +inf
/// renders as "inf".
std::string format_fixed(double value, int decimals = 4);

/// Shortest round-trip rendering, always with a decimal point ("1.0", "0.25").
std::string format_shortest(double value);

inline constexpr std::string_view kReportHeader = "image,method,mse,psnr,entropy,ambe";
inline constexpr std::string_view kMetricsHeader = "mse,psnr,entropy,ambe";
inline constexpr std::string_view kHistogramHeader = "level,count,probability";

/// "mse,psnr,entropy,ambe" values joined by commas at 4 decimals.
std::string metrics_csv_fields(const MetricsReport& m);

/// Header line followed by one line per row, each terminated by '\n'.
std::string report_csv(const std::vector<ReportRow>& rows);

/// Header plus 256 rows of level,count,probability.
std::string histogram_csv(const Histogram& hist);

}  // namespace contrast
