#include "contrast/image.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace contrast {

GrayImage::GrayImage(std::size_t width, std::size_t height, Pixel fill)
    : GrayImage(width, height, std::vector<Pixel>(width * height, fill)) {}

GrayImage::GrayImage(std::size_t width, std::size_t height, std::vector<Pixel> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width == 0 || height == 0) {
    throw std::invalid_argument("GrayImage: zero dimension (" + std::to_string(width) + "x" +
                                std::to_string(height) + ")");
  }
  if (pixels_.size() != width * height) {
    throw std::invalid_argument("GrayImage: expected " + std::to_string(width * height) +
                                " pixels, got " + std::to_string(pixels_.size()));
  }
}

Histogram::Histogram(const Counts& counts)
    : counts_(counts), total_(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0})) {}

double Histogram::probability(int level) const {
  if (total_ == 0) return 0.0;
  return static_cast<double>(count(level)) / static_cast<double>(total_);
}

std::array<double, kLevels> Histogram::probabilities() const {
  std::array<double, kLevels> p{};
  for (int k = 0; k < kLevels; ++k) p[k] = probability(k);
  return p;
}

std::array<double, kLevels> Histogram::cdf() const {
  // Built from integer prefix sums so the final entry is exactly 1.
  std::array<double, kLevels> c{};
  if (total_ == 0) return c;
  std::uint64_t running = 0;
  for (int k = 0; k < kLevels; ++k) {
    running += counts_[k];
    c[k] = static_cast<double>(running) / static_cast<double>(total_);
  }
  return c;
}

int Histogram::min_level() const noexcept {
  for (int k = 0; k < kLevels; ++k)
    if (counts_[k] != 0) return k;
  return -1;
}

int Histogram::max_level() const noexcept {
  for (int k = kMaxLevel; k >= 0; --k)
    if (counts_[k] != 0) return k;
  return -1;
}

Histogram histogram(const GrayImage& img) {
  Histogram::Counts counts{};
  for (Pixel p : img.pixels()) ++counts[p];
  return Histogram(counts);
}

std::uint64_t intensity_sum(const GrayImage& img) {
  std::uint64_t sum = 0;
  for (Pixel p : img.pixels()) sum += p;
  return sum;
}

double mean_intensity(const GrayImage& img) {
  return static_cast<double>(intensity_sum(img)) / static_cast<double>(img.size());
}

}  // namespace contrast
