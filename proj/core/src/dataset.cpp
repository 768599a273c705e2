#include "fakeweather/dataset.hpp"

#include <algorithm>
#include <string>

#include "fakeweather/error.hpp"

namespace fakeweather {

std::string_view cifar_class_name(int label) {
  if (label < 0 || label >= kCifarClasses) {
    throw InvalidArgument("CIFAR-10 label " + std::to_string(label) + " is outside 0..9");
  }
  return kCifarClassNames[static_cast<std::size_t>(label)];
}

std::vector<LabeledImage> read_cifar_batch(std::span<const std::uint8_t> bytes) {
  if (bytes.size() % kCifarRecordBytes != 0) {
    throw TruncatedData("CIFAR-10 batch of " + std::to_string(bytes.size()) +
                        " bytes is not a multiple of the 3073-byte record size");
  }
  const std::size_t n = bytes.size() / kCifarRecordBytes;
  std::vector<LabeledImage> records;
  records.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto record = bytes.subspan(k * kCifarRecordBytes, kCifarRecordBytes);
    if (record[0] >= kCifarClasses) {
      throw FormatError("CIFAR-10 record " + std::to_string(k) + " has label " +
                        std::to_string(record[0]) + ", expected 0..9");
    }
    const auto* red = record.data() + 1;
    const auto* green = red + kCifarPlaneBytes;
    const auto* blue = green + kCifarPlaneBytes;
    std::vector<Rgb> pixels(kCifarPlaneBytes);
    for (std::size_t i = 0; i < kCifarPlaneBytes; ++i) pixels[i] = {red[i], green[i], blue[i]};
    records.push_back({record[0], ImageBuffer(kCifarDims, std::move(pixels))});
  }
  return records;
}

std::vector<std::uint8_t> write_cifar_batch(std::span<const LabeledImage> records) {
  std::vector<std::uint8_t> out(records.size() * kCifarRecordBytes);
  for (std::size_t k = 0; k < records.size(); ++k) {
    const auto& rec = records[k];
    if (rec.image.dims() != kCifarDims) {
      throw DimensionMismatch("CIFAR-10 record " + std::to_string(k) + " is " +
                              to_string(rec.image.dims()) + ", expected 32x32");
    }
    if (rec.label >= kCifarClasses) {
      throw InvalidArgument("CIFAR-10 record " + std::to_string(k) + " has label " +
                            std::to_string(rec.label) + ", expected 0..9");
    }
    auto* dst = out.data() + k * kCifarRecordBytes;
    dst[0] = rec.label;
    auto* red = dst + 1;
    auto* green = red + kCifarPlaneBytes;
    auto* blue = green + kCifarPlaneBytes;
    const auto pixels = rec.image.pixels();
    for (std::size_t i = 0; i < kCifarPlaneBytes; ++i) {
      red[i] = pixels[i].r;
      green[i] = pixels[i].g;
      blue[i] = pixels[i].b;
    }
  }
  return out;
}

std::vector<LabeledImage> perturb_batch(std::span<const LabeledImage> records, const Mask& mask,
                                        RecordWindow window) {
  if (mask.dims() != kCifarDims) {
    throw DimensionMismatch("CIFAR-10 images are 32x32 but mask is " + to_string(mask.dims()));
  }
  std::vector<LabeledImage> out(records.begin(), records.end());
  const std::size_t begin = std::min(window.offset, out.size());
  const std::size_t end =
      window.count ? begin + std::min(*window.count, out.size() - begin) : out.size();
  for (std::size_t k = begin; k < end; ++k) apply_mask_in_place(out[k].image, mask);
  return out;
}

}  // namespace fakeweather
