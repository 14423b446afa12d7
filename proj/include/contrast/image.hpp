#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace contrast {

/// Number of representable gray levels for 8-bit input.
inline constexpr int kLevels = 256;
inline constexpr int kMaxLevel = kLevels - 1;

using Pixel = std::uint8_t;

// Row-major 8-bit grayscale image. Dimensions are always >= 1.
class GrayImage {
 public:
  GrayImage(std::size_t width, std::size_t height, Pixel fill = 0);
  GrayImage(std::size_t width, std::size_t height, std::vector<Pixel> pixels);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return pixels_.size(); }

  Pixel at(std::size_t x, std::size_t y) const { return pixels_[y * width_ + x]; }
  Pixel& at(std::size_t x, std::size_t y) { return pixels_[y * width_ + x]; }

  std::span<const Pixel> pixels() const noexcept { return pixels_; }
  std::span<Pixel> pixels() noexcept { return pixels_; }

  bool same_shape(const GrayImage& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_;
  }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<Pixel> pixels_;
};

// Raw per-level counts. Probabilities and the CDF are derived on demand in
// double precision.
class Histogram {
 public:
  using Counts = std::array<std::uint64_t, kLevels>;

  Histogram() = default;
  explicit Histogram(const Counts& counts);

  const Counts& counts() const noexcept { return counts_; }
  std::uint64_t count(int level) const { return counts_[static_cast<std::size_t>(level)]; }
  std::uint64_t total() const noexcept { return total_; }
  bool empty() const noexcept { return total_ == 0; }

  /// n_k / N; zero for an empty histogram.
  double probability(int level) const;
  std::array<double, kLevels> probabilities() const;
  /// Running sum of probabilities; the last entry is 1 for a non-empty histogram.
  std::array<double, kLevels> cdf() const;

  /// Lowest and highest occupied level; -1 when empty.
  int min_level() const noexcept;
  int max_level() const noexcept;

  friend bool operator==(const Histogram&, const Histogram&) = default;

 private:
  Counts counts_{};
  std::uint64_t total_ = 0;
};

Histogram histogram(const GrayImage& img);

/// Exact sum of all pixel values.
std::uint64_t intensity_sum(const GrayImage& img);

double mean_intensity(const GrayImage& img);

}  // namespace contrast
