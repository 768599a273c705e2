#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fakeweather/image.hpp"
#include "fakeweather/mask.hpp"

namespace fakeweather {

// CIFAR-10 binary batch layout: each record is one label byte followed by
// 1024 red, 1024 green and 1024 blue bytes, every plane row-major from the
// top-left corner.
inline constexpr int kCifarSide = 32;
inline constexpr std::size_t kCifarPlaneBytes = 32 * 32;
inline constexpr std::size_t kCifarRecordBytes = 1 + 3 * kCifarPlaneBytes;
inline constexpr int kCifarClasses = 10;
inline constexpr ImageDims kCifarDims{kCifarSide, kCifarSide};

inline constexpr std::array<std::string_view, kCifarClasses> kCifarClassNames = {
    "airplane", "automobile", "bird", "cat", "deer",
    "dog",      "frog",       "horse", "ship", "truck"};

std::string_view cifar_class_name(int label);

struct LabeledImage {
  std::uint8_t label = 0;
  ImageBuffer image;

  friend bool operator==(const LabeledImage&, const LabeledImage&) = default;
};

std::vector<LabeledImage> read_cifar_batch(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> write_cifar_batch(std::span<const LabeledImage> records);

// Which records perturb_batch touches: `count` records starting at `offset`
// (all remaining records when count is empty). Windows past the end are
// truncated, not rejected.
struct RecordWindow {
  std::size_t offset = 0;
  std::optional<std::size_t> count;
};

/// Applies the mask to the records inside the window and leaves the rest,
/// labels, and record order untouched. The mask must be 32x32.
std::vector<LabeledImage> perturb_batch(std::span<const LabeledImage> records,
                                        const Mask& mask, RecordWindow window = {});

}  // namespace fakeweather
