#include "contrast/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace contrast {

double TriangularMf::operator()(double x) const noexcept {
  if (x == b) return 1.0;
  if (x < b) {
    if (x <= a) return 0.0;
    return (x - a) / (b - a);
  }
  if (x >= c) return 0.0;
  return (c - x) / (c - b);
}

void validate(const FuzzyConfig& cfg) {
  auto check = [](const TriangularMf& mf, const char* group, std::size_t i) {
    if (!(std::isfinite(mf.a) && std::isfinite(mf.b) && std::isfinite(mf.c)) ||
        !(mf.a <= mf.b && mf.b <= mf.c)) {
      throw std::invalid_argument(std::string("fuzzy config: ") + group + "[" +
                                  std::to_string(i) + "] must satisfy a <= b <= c");
    }
  };
  for (std::size_t i = 0; i < 3; ++i) {
    check(cfg.input_sets[i], "input_sets", i);
    check(cfg.output_sets[i], "output_sets", i);
  }
  if (cfg.resolution < 2) throw std::invalid_argument("fuzzy config: resolution must be >= 2");
}

FuzzyConfig default_config(const Histogram& hist) {
  if (hist.empty()) throw std::invalid_argument("default_config: empty histogram");
  const double lo = hist.min_level();
  const double hi = hist.max_level();
  const double mid = (lo + hi) / 2.0;

  FuzzyConfig cfg;
  cfg.input_sets = {TriangularMf{lo, lo, mid}, TriangularMf{lo, mid, hi},
                    TriangularMf{mid, hi, hi}};
  cfg.output_sets = {TriangularMf{0, 0, 128}, TriangularMf{64, 128, 192},
                     TriangularMf{128, 255, 255}};
  cfg.resolution = 256;
  cfg.degenerate = hi - lo < 2;
  return cfg;
}

FuzzyConfig default_config(const GrayImage& img) { return default_config(histogram(img)); }

MembershipTriple fuzzify(double gray, const FuzzyConfig& cfg) {
  return {cfg.input_sets[kDark](gray), cfg.input_sets[kGray](gray),
          cfg.input_sets[kBright](gray)};
}

FuzzyPlane fuzzify_all(const FuzzyConfig& cfg) {
  FuzzyPlane plane;
  for (int g = 0; g < kLevels; ++g) plane.degrees[g] = fuzzify(g, cfg);
  return plane;
}

std::vector<double> sample_grid(int resolution) {
  if (resolution < 2) throw std::invalid_argument("sample_grid: resolution must be >= 2");
  std::vector<double> x(static_cast<std::size_t>(resolution));
  const double step = static_cast<double>(kMaxLevel) / (resolution - 1);
  for (int i = 0; i < resolution; ++i) x[i] = i * step;
  x.back() = kMaxLevel;
  return x;
}

SampledSet infer(const MembershipTriple& activation, const FuzzyConfig& cfg) {
  SampledSet agg;
  agg.x = sample_grid(cfg.resolution);
  agg.mu.resize(agg.x.size());
  for (std::size_t i = 0; i < agg.x.size(); ++i) {
    double m = 0.0;
    for (std::size_t r = 0; r < 3; ++r)
      m = std::max(m, std::min(activation[r], cfg.output_sets[r](agg.x[i])));
    agg.mu[i] = m;
  }
  return agg;
}

std::optional<int> defuzzify_centroid(const SampledSet& agg) {
  double weighted = 0.0;
  double mass = 0.0;
  for (std::size_t i = 0; i < agg.x.size(); ++i) {
    weighted += agg.x[i] * agg.mu[i];
    mass += agg.mu[i];
  }
  if (!(mass > 0.0)) return std::nullopt;
  const double centroid = std::round(weighted / mass);
  return static_cast<int>(std::clamp(centroid, 0.0, static_cast<double>(kMaxLevel)));
}

IntensityLut fuzzy_lut(const FuzzyConfig& cfg) {
  validate(cfg);
  IntensityLut lut = IntensityLut::identity();
  lut.method = LutMethod::Fuzzy;
  if (cfg.degenerate) return lut;
  for (int g = 0; g < kLevels; ++g) {
    if (auto v = defuzzify_centroid(infer(fuzzify(g, cfg), cfg))) lut.map[g] = static_cast<Pixel>(*v);
  }
  return lut;
}

GrayImage enhance_fuzzy(const GrayImage& img) { return enhance_fuzzy(img, default_config(img)); }

GrayImage enhance_fuzzy(const GrayImage& img, const FuzzyConfig& cfg) {
  return apply_lut(img, fuzzy_lut(cfg));
}

}  // namespace contrast
