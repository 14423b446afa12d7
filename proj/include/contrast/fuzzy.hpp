#pragma once

#include <array>
#include <optional>
#include <vector>

#include "contrast/histeq.hpp"
#include "contrast/image.hpp"

namespace contrast {

// Triangle with left foot a, peak b, right foot c (a <= b <= c). a == b or
// b == c gives a shoulder that is 1 at the peak and 0 beyond the foot.
struct TriangularMf {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  double operator()(double x) const noexcept;
  friend bool operator==(const TriangularMf&, const TriangularMf&) = default;
};

using MembershipTriple = std::array<double, 3>;

enum FuzzySet : std::size_t { kDark = 0, kGray = 1, kBright = 2 };

// Rules are fixed: input set i fires output set i (Dark->Darker,
// Gray->Mid, Bright->Brighter).
struct FuzzyConfig {
  std::array<TriangularMf, 3> input_sets{};
  std::array<TriangularMf, 3> output_sets{};
  int resolution = 256;
  // Dynamic range too narrow for a meaningful partition; the LUT is identity.
  bool degenerate = false;

  friend bool operator==(const FuzzyConfig&, const FuzzyConfig&) = default;
};

/// Throws std::invalid_argument if a set violates a <= b <= c or resolution < 2.
void validate(const FuzzyConfig& cfg);

/// Image-adaptive input sets over [g_min, g_max] and fixed full-range output
/// sets. Flags the config degenerate when g_max - g_min < 2.
FuzzyConfig default_config(const GrayImage& img);
FuzzyConfig default_config(const Histogram& hist);

MembershipTriple fuzzify(double gray, const FuzzyConfig& cfg);

// The gray-level to membership-plane mapping for all 256 levels.
struct FuzzyPlane {
  std::array<MembershipTriple, kLevels> degrees{};
};

FuzzyPlane fuzzify_all(const FuzzyConfig& cfg);

// Output membership sampled on a uniform grid over [0, 255].
struct SampledSet {
  std::vector<double> x;
  std::vector<double> mu;
};

/// Uniform grid of `resolution` points spanning [0, 255] inclusive.
std::vector<double> sample_grid(int resolution);

/// Mamdani inference: each rule clips its output set at its activation
/// (min implication) and the clipped sets are combined by pointwise max.
SampledSet infer(const MembershipTriple& activation, const FuzzyConfig& cfg);

/// Centre of gravity, rounded half away from zero and clamped to [0, 255].
/// nullopt when the aggregate carries no mass.
std::optional<int> defuzzify_centroid(const SampledSet& agg);

/// Falls back to the input level wherever the aggregate is empty.
IntensityLut fuzzy_lut(const FuzzyConfig& cfg);

GrayImage enhance_fuzzy(const GrayImage& img);
GrayImage enhance_fuzzy(const GrayImage& img, const FuzzyConfig& cfg);

}  // namespace contrast
