#include "contrast/report.hpp"

#include <charconv>
#include <cmath>

#include "contrast/histeq.hpp"

namespace contrast {

std::optional<Method> parse_method(std::string_view name) {
  if (name == "he") return Method::HE;
  if (name == "bbhe") return Method::BBHE;
  if (name == "mmbebhe") return Method::MMBEBHE;
  if (name == "fuzzy") return Method::Fuzzy;
  return std::nullopt;
}

const char* to_string(Method method) noexcept {
  switch (method) {
    case Method::HE: return "he";
    case Method::BBHE: return "bbhe";
    case Method::MMBEBHE: return "mmbebhe";
    case Method::Fuzzy: return "fuzzy";
  }
  return "unknown";
}

GrayImage enhance(const GrayImage& img, Method method,
                  const std::optional<FuzzyConfig>& fuzzy_config) {
  switch (method) {
    case Method::HE: return equalize(img);
    case Method::BBHE: return bbhe(img);
    case Method::MMBEBHE: return mmbebhe(img);
    case Method::Fuzzy:
      return fuzzy_config ? enhance_fuzzy(img, *fuzzy_config) : enhance_fuzzy(img);
  }
  return img;
}

std::string format_fixed(double value, int decimals) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, decimals);
  return std::string(buf, end);
}

std::string format_shortest(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  std::string s(buf, end);
  if (s.find_first_of(".einf") == std::string::npos) s += ".0";
  return s;
}

std::string metrics_csv_fields(const MetricsReport& m) {
  return format_fixed(m.mse) + "," + format_fixed(m.psnr) + "," + format_fixed(m.entropy) + "," +
         format_fixed(m.ambe);
}

std::string report_csv(const std::vector<ReportRow>& rows) {
  std::string out(kReportHeader);
  out += '\n';
  for (const auto& row : rows) {
    out += row.image + "," + row.metrics.method + "," + metrics_csv_fields(row.metrics) + "\n";
  }
  return out;
}

std::string histogram_csv(const Histogram& hist) {
  std::string out(kHistogramHeader);
  out += '\n';
  for (int k = 0; k < kLevels; ++k) {
    out += std::to_string(k) + "," + std::to_string(hist.count(k)) + "," +
           format_shortest(hist.probability(k)) + "\n";
  }
  return out;
}

}  // namespace contrast
