#include "fakeweather/image.hpp"

#include <string>

#include "fakeweather/error.hpp"

namespace fakeweather {

ImageBuffer::ImageBuffer(ImageDims dims, Rgb fill) : dims_(dims) {
  if (dims.width < 0 || dims.height < 0) {
    throw InvalidArgument("negative image size " + to_string(dims));
  }
  pixels_.assign(static_cast<std::size_t>(dims.area()), fill);
}

ImageBuffer::ImageBuffer(ImageDims dims, std::vector<Rgb> pixels)
    : dims_(dims), pixels_(std::move(pixels)) {
  if (dims.width < 0 || dims.height < 0) {
    throw InvalidArgument("negative image size " + to_string(dims));
  }
  if (pixels_.size() != static_cast<std::size_t>(dims.area())) {
    throw InvalidArgument("image " + to_string(dims) + " needs " + std::to_string(dims.area()) +
                          " pixels, got " + std::to_string(pixels_.size()));
  }
}

void apply_mask_in_place(ImageBuffer& image, const Mask& mask) {
  if (image.dims() != mask.dims()) {
    throw DimensionMismatch("image is " + to_string(image.dims()) + " but mask is " +
                            to_string(mask.dims()));
  }
  const int top = image.height() - 1;
  for (const auto& px : mask.pixels()) image.at(px.x, top - px.y) = px.rgb;
}

ImageBuffer apply_mask(const ImageBuffer& image, const Mask& mask) {
  ImageBuffer out = image;
  apply_mask_in_place(out, mask);
  return out;
}

}  // namespace fakeweather
