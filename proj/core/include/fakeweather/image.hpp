#pragma once

#include <span>
#include <vector>

#include "fakeweather/mask.hpp"
#include "fakeweather/types.hpp"

namespace fakeweather {

// 8-bit RGB raster, row-major with the origin at the top-left corner.
class ImageBuffer {
 public:
  ImageBuffer() = default;
  ImageBuffer(ImageDims dims, Rgb fill = {});
  // Throws InvalidArgument unless pixels.size() == width * height.
  ImageBuffer(ImageDims dims, std::vector<Rgb> pixels);

  ImageDims dims() const { return dims_; }
  int width() const { return dims_.width; }
  int height() const { return dims_.height; }

  const Rgb& at(int x, int y) const { return pixels_[index(x, y)]; }
  Rgb& at(int x, int y) { return pixels_[index(x, y)]; }

  std::span<const Rgb> pixels() const { return pixels_; }
  std::span<Rgb> pixels() { return pixels_; }

  friend bool operator==(const ImageBuffer&, const ImageBuffer&) = default;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(dims_.width) +
           static_cast<std::size_t>(x);
  }

  ImageDims dims_;
  std::vector<Rgb> pixels_;
};

/// Overwrites the image with the mask's pixels. Mask row y lands on image row
/// height - 1 - y. Throws DimensionMismatch when the sizes differ.
ImageBuffer apply_mask(const ImageBuffer& image, const Mask& mask);

/// In-place variant of apply_mask.
void apply_mask_in_place(ImageBuffer& image, const Mask& mask);

}  // namespace fakeweather
