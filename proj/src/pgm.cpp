#include "contrast/pgm.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <optional>

namespace contrast {

const char* to_string(PgmErrorKind kind) noexcept {
  switch (kind) {
    case PgmErrorKind::BadMagic: return "bad magic number";
    case PgmErrorKind::BadHeader: return "malformed header";
    case PgmErrorKind::ZeroDimension: return "zero dimension";
    case PgmErrorKind::MaxvalTooLarge: return "maxval exceeds 255";
    case PgmErrorKind::TruncatedData: return "truncated pixel data";
    case PgmErrorKind::SampleOutOfRange: return "sample exceeds maxval";
  }
  return "unknown error";
}

PgmError::PgmError(PgmErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string("PGM decode error: ") + to_string(kind) +
                         (detail.empty() ? "" : " (" + detail + ")")),
      kind_(kind) {}

namespace {

bool is_space(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  bool at_end() const { return pos_ >= bytes_.size(); }
  std::size_t pos() const { return pos_; }
  std::size_t remaining() const { return bytes_.size() - pos_; }
  std::uint8_t peek() const { return bytes_[pos_]; }
  void advance(std::size_t n = 1) { pos_ += n; }
  std::span<const std::uint8_t> rest() const { return bytes_.subspan(pos_); }

  // Skips whitespace and '#' comments (header only).
  void skip_space_and_comments() {
    while (!at_end()) {
      if (is_space(peek())) {
        advance();
      } else if (peek() == '#') {
        while (!at_end() && peek() != '\n' && peek() != '\r') advance();
      } else {
        break;
      }
    }
  }

  void skip_space() {
    while (!at_end() && is_space(peek())) advance();
  }

  // Reads an unsigned decimal; nullopt if no digits are present.
  std::optional<std::uint64_t> read_uint() {
    std::uint64_t value = 0;
    std::size_t digits = 0;
    while (!at_end() && peek() >= '0' && peek() <= '9') {
      if (value > (UINT64_MAX - 9) / 10) return std::nullopt;
      value = value * 10 + (peek() - '0');
      advance();
      ++digits;
    }
    if (digits == 0) return std::nullopt;
    return value;
  }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

std::uint64_t header_field(Reader& r, const char* name) {
  r.skip_space_and_comments();
  if (r.at_end()) throw PgmError(PgmErrorKind::BadHeader, std::string("missing ") + name);
  auto v = r.read_uint();
  if (!v) throw PgmError(PgmErrorKind::BadHeader, std::string("non-numeric ") + name);
  // A header token must be followed by whitespace or a comment.
  if (!r.at_end() && !is_space(r.peek()) && r.peek() != '#')
    throw PgmError(PgmErrorKind::BadHeader, std::string("garbage after ") + name);
  return *v;
}

void append(std::vector<std::uint8_t>& out, const std::string& s) {
  out.insert(out.end(), s.begin(), s.end());
}

}  // namespace

GrayImage load_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5'))
    throw PgmError(PgmErrorKind::BadMagic, "expected P2 or P5");
  const bool binary = bytes[1] == '5';

  Reader r(bytes);
  r.advance(2);
  if (!r.at_end() && !is_space(r.peek()) && r.peek() != '#')
    throw PgmError(PgmErrorKind::BadMagic, "expected P2 or P5");

  const std::uint64_t width = header_field(r, "width");
  const std::uint64_t height = header_field(r, "height");
  if (width == 0 || height == 0)
    throw PgmError(PgmErrorKind::ZeroDimension,
                   std::to_string(width) + "x" + std::to_string(height));
  const std::uint64_t maxval = header_field(r, "maxval");
  if (maxval > 255) throw PgmError(PgmErrorKind::MaxvalTooLarge, std::to_string(maxval));
  if (maxval == 0) throw PgmError(PgmErrorKind::BadHeader, "maxval is zero");

  constexpr std::uint64_t kMaxPixels = std::uint64_t{1} << 36;
  if (width > kMaxPixels / height)
    throw PgmError(PgmErrorKind::BadHeader, "image dimensions too large");
  const std::size_t n = static_cast<std::size_t>(width * height);

  std::vector<Pixel> pixels;
  if (binary) {
    // Exactly one whitespace byte separates maxval from the raster.
    if (r.at_end()) throw PgmError(PgmErrorKind::TruncatedData, "no raster");
    r.advance();
    if (r.remaining() < n)
      throw PgmError(PgmErrorKind::TruncatedData,
                     "expected " + std::to_string(n) + " bytes, got " +
                         std::to_string(r.remaining()));
    auto raster = r.rest().first(n);
    pixels.assign(raster.begin(), raster.end());
    for (std::size_t i = 0; i < n; ++i) {
      if (pixels[i] > maxval)
        throw PgmError(PgmErrorKind::SampleOutOfRange,
                       "sample " + std::to_string(i) + " = " + std::to_string(pixels[i]));
    }
  } else {
    pixels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      r.skip_space();
      if (r.at_end())
        throw PgmError(PgmErrorKind::TruncatedData,
                       "expected " + std::to_string(n) + " samples, got " + std::to_string(i));
      auto v = r.read_uint();
      if (!v) throw PgmError(PgmErrorKind::BadHeader, "non-numeric sample " + std::to_string(i));
      if (*v > maxval)
        throw PgmError(PgmErrorKind::SampleOutOfRange,
                       "sample " + std::to_string(i) + " = " + std::to_string(*v));
      pixels.push_back(static_cast<Pixel>(*v));
    }
  }
  return GrayImage(static_cast<std::size_t>(width), static_cast<std::size_t>(height),
                   std::move(pixels));
}

std::vector<std::uint8_t> save_pgm(const GrayImage& img, PgmFormat format) {
  std::vector<std::uint8_t> out;
  append(out, format == PgmFormat::P5 ? "P5\n" : "P2\n");
  append(out, std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n");

  if (format == PgmFormat::P5) {
    auto px = img.pixels();
    out.insert(out.end(), px.begin(), px.end());
    return out;
  }

  constexpr std::size_t kMaxLine = 70;
  char buf[4];
  for (std::size_t y = 0; y < img.height(); ++y) {
    std::size_t line = 0;
    for (std::size_t x = 0; x < img.width(); ++x) {
      auto [end, ec] = std::to_chars(buf, buf + sizeof buf, static_cast<int>(img.at(x, y)));
      const auto len = static_cast<std::size_t>(end - buf);
      if (line != 0) {
        if (line + 1 + len > kMaxLine) {
          out.push_back('\n');
          line = 0;
        } else {
          out.push_back(' ');
          ++line;
        }
      }
      out.insert(out.end(), buf, end);
      line += len;
    }
    out.push_back('\n');
  }
  return out;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw std::runtime_error("error reading '" + path.string() + "'");
  return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("error writing '" + path.string() + "'");
}

GrayImage read_pgm_file(const std::filesystem::path& path) { return load_pgm(read_file(path)); }

void write_pgm_file(const std::filesystem::path& path, const GrayImage& img, PgmFormat format) {
  write_file(path, save_pgm(img, format));
}

}  // namespace contrast
