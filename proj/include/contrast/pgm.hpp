#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "contrast/image.hpp"

namespace contrast {

enum class PgmFormat { P2, P5 };

enum class PgmErrorKind {
  BadMagic,         // not "P2" / "P5"
  BadHeader,        // missing or non-numeric width/height/maxval
  ZeroDimension,
  MaxvalTooLarge,   // maxval > 255
  TruncatedData,    // raster shorter than width*height samples
  SampleOutOfRange  // sample value exceeds maxval
};

const char* to_string(PgmErrorKind kind) noexcept;

class PgmError : public std::runtime_error {
 public:
  PgmError(PgmErrorKind kind, const std::string& detail);
  PgmErrorKind kind() const noexcept { return kind_; }

 private:
  PgmErrorKind kind_;
};

/// Decodes a P2 or P5 graymap. Samples are taken as-is in [0, maxval];
/// no rescaling is applied when maxval < 255.
GrayImage load_pgm(std::span<const std::uint8_t> bytes);

/// Always writes maxval 255. P2 rows are wrapped at 70 columns.
std::vector<std::uint8_t> save_pgm(const GrayImage& img, PgmFormat format = PgmFormat::P5);

// File helpers. I/O failures throw std::runtime_error; decode failures PgmError.
std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);
GrayImage read_pgm_file(const std::filesystem::path& path);
void write_pgm_file(const std::filesystem::path& path, const GrayImage& img,
                    PgmFormat format = PgmFormat::P5);

}  // namespace contrast
