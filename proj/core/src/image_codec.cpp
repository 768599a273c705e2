#include "fakeweather/image_codec.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cstring>
#include <limits>
#include <string>

#include "fakeweather/error.hpp"

namespace fakeweather {
namespace {

constexpr std::array<std::uint8_t, 8> kPngSignature = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};

bool starts_with(std::span<const std::uint8_t> bytes, std::span<const std::uint8_t> prefix) {
  return bytes.size() >= prefix.size() && std::equal(prefix.begin(), prefix.end(), bytes.begin());
}

bool is_pnm_space(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

// Cursor over the PPM header. Comments run from '#' to the end of the line.
class PnmHeaderReader {
 public:
  explicit PnmHeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (is_pnm_space(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  long read_uint(const char* field) {
    skip_space_and_comments();
    if (pos_ >= bytes_.size()) throw TruncatedData(std::string("PPM header ends before ") + field);
    if (!std::isdigit(bytes_[pos_])) {
      throw MalformedHeader(std::string("PPM ") + field + " is not a decimal number");
    }
    long value = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > std::numeric_limits<int>::max()) {
        throw MalformedHeader(std::string("PPM ") + field + " is too large");
      }
      ++pos_;
    }
    return value;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  void expect_single_space() {
    if (pos_ >= bytes_.size()) throw TruncatedData("PPM header ends after maxval");
    if (!is_pnm_space(bytes_[pos_])) throw MalformedHeader("PPM maxval is not followed by whitespace");
    ++pos_;
  }

  std::size_t pos() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

struct PngReadGuard {
  png_image image{};
  PngReadGuard() {
    image.version = PNG_IMAGE_VERSION;
  }
  ~PngReadGuard() { png_image_free(&image); }
};

}  // namespace

std::optional<ImageFormat> format_from_path(std::string_view path) {
  const auto dot = path.rfind('.');
  if (dot == std::string_view::npos) return std::nullopt;
  std::string ext(path.substr(dot + 1));
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (ext == "ppm") return ImageFormat::Ppm;
  if (ext == "png") return ImageFormat::Png;
  return std::nullopt;
}

ImageBuffer decode_ppm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P') throw MalformedHeader("missing PPM magic number");
  if (bytes[1] != '6') {
    throw UnsupportedFormat(std::string("unsupported PNM variant P") + static_cast<char>(bytes[1]) +
                            " (only binary P6 is supported)");
  }
  PnmHeaderReader reader(bytes);
  reader.advance(2);
  if (reader.pos() < bytes.size() && !is_pnm_space(bytes[reader.pos()])) {
    throw MalformedHeader("PPM magic number is not followed by whitespace");
  }
  const long width = reader.read_uint("width");
  const long height = reader.read_uint("height");
  const long maxval = reader.read_uint("maxval");
  if (width == 0 || height == 0) throw MalformedHeader("PPM image has a zero dimension");
  if (maxval == 0 || maxval > 65535) throw MalformedHeader("PPM maxval out of range");
  if (maxval != 255) {
    throw UnsupportedFormat("unsupported PPM maxval " + std::to_string(maxval) +
                            " (only 8-bit, maxval 255, is supported)");
  }
  reader.expect_single_space();

  const auto count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  const std::size_t body = bytes.size() - reader.pos();
  if (body < 3 * count) {
    throw TruncatedData("PPM raster has " + std::to_string(body) + " bytes, expected " +
                        std::to_string(3 * count));
  }
  if (body > 3 * count) {
    throw MalformedHeader("PPM file has " + std::to_string(body - 3 * count) +
                          " trailing bytes after the raster");
  }
  std::vector<Rgb> pixels(count);
  const auto* src = bytes.data() + reader.pos();
  for (std::size_t i = 0; i < count; ++i) pixels[i] = {src[3 * i], src[3 * i + 1], src[3 * i + 2]};
  return ImageBuffer({static_cast<int>(width), static_cast<int>(height)}, std::move(pixels));
}

std::vector<std::uint8_t> encode_ppm(const ImageBuffer& image) {
  const std::string header =
      "P6\n" + std::to_string(image.width()) + " " + std::to_string(image.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(header.size() + 3 * image.pixels().size());
  for (const auto& p : image.pixels()) {
    out.push_back(p.r);
    out.push_back(p.g);
    out.push_back(p.b);
  }
  return out;
}

ImageBuffer decode_png(std::span<const std::uint8_t> bytes) {
  if (!starts_with(bytes, kPngSignature)) throw MalformedHeader("missing PNG signature");
  PngReadGuard guard;
  if (!png_image_begin_read_from_memory(&guard.image, bytes.data(), bytes.size())) {
    throw MalformedHeader(std::string("PNG header: ") + guard.image.message);
  }
  if (guard.image.format != PNG_FORMAT_RGB) {
    throw UnsupportedFormat("unsupported PNG layout (only 8-bit RGB without alpha or palette)");
  }
  const int width = static_cast<int>(guard.image.width);
  const int height = static_cast<int>(guard.image.height);
  std::vector<std::uint8_t> raw(PNG_IMAGE_SIZE(guard.image));
  if (!png_image_finish_read(&guard.image, nullptr, raw.data(), 0, nullptr)) {
    throw TruncatedData(std::string("PNG data: ") + guard.image.message);
  }
  std::vector<Rgb> pixels(static_cast<std::size_t>(width) * static_cast<std::size_t>(height));
  for (std::size_t i = 0; i < pixels.size(); ++i) pixels[i] = {raw[3 * i], raw[3 * i + 1], raw[3 * i + 2]};
  return ImageBuffer({width, height}, std::move(pixels));
}

std::vector<std::uint8_t> encode_png(const ImageBuffer& image) {
  png_image png{};
  png.version = PNG_IMAGE_VERSION;
  png.width = static_cast<png_uint_32>(image.width());
  png.height = static_cast<png_uint_32>(image.height());
  png.format = PNG_FORMAT_RGB;

  std::vector<std::uint8_t> raw;
  raw.reserve(3 * image.pixels().size());
  for (const auto& p : image.pixels()) {
    raw.push_back(p.r);
    raw.push_back(p.g);
    raw.push_back(p.b);
  }

  png_alloc_size_t size = 0;
  if (!png_image_write_to_memory(&png, nullptr, &size, 0, raw.data(), 0, nullptr)) {
    std::string msg = png.message;
    png_image_free(&png);
    throw FormatError("libpng: " + msg);
  }
  std::vector<std::uint8_t> out(size);
  if (!png_image_write_to_memory(&png, out.data(), &size, 0, raw.data(), 0, nullptr)) {
    std::string msg = png.message;
    png_image_free(&png);
    throw FormatError("libpng: " + msg);
  }
  out.resize(size);
  return out;
}

ImageBuffer decode_image(std::span<const std::uint8_t> bytes) {
  if (starts_with(bytes, kPngSignature)) return decode_png(bytes);
  if (!bytes.empty() && bytes[0] == 'P') return decode_ppm(bytes);
  throw UnsupportedFormat("unrecognized image format (expected PPM or PNG)");
}

std::vector<std::uint8_t> encode_image(const ImageBuffer& image, ImageFormat format) {
  return format == ImageFormat::Png ? encode_png(image) : encode_ppm(image);
}

}  // namespace fakeweather
