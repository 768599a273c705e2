#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fakeweather/image.hpp"

namespace fakeweather {

enum class ImageFormat { Ppm, Png };

// Picks the format from a file extension (.ppm / .png, case-insensitive).
std::optional<ImageFormat> format_from_path(std::string_view path);

/// Decodes binary PPM (P6, maxval 255) or 8-bit RGB PNG, detected by magic
/// bytes. Throws MalformedHeader, TruncatedData or UnsupportedFormat.
ImageBuffer decode_image(std::span<const std::uint8_t> bytes);

/// PPM output is canonical: "P6\n<w> <h>\n255\n" followed by the raster.
std::vector<std::uint8_t> encode_image(const ImageBuffer& image, ImageFormat format);

ImageBuffer decode_ppm(std::span<const std::uint8_t> bytes);
ImageBuffer decode_png(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_ppm(const ImageBuffer& image);
std::vector<std::uint8_t> encode_png(const ImageBuffer& image);

}  // namespace fakeweather
