#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fakeweather/patterns.hpp"
#include "fakeweather/types.hpp"

namespace fakeweather {

struct LengthRange {
  int min = 2;
  int max = 5;

  friend constexpr bool operator==(const LengthRange&, const LengthRange&) = default;
};

// Tunables for mask generation. Only the fields relevant to `kind` are used,
// but all of them are carried along so a mask file records the full config.
struct AttackConfig {
  WeatherKind kind = WeatherKind::Rain;
  std::uint64_t seed = 0;
  double p_agglomerate_below_v = 0.15;
  double p_patch_above_v = 0.05;
  double p_line_above_v = 0.02;
  LengthRange line_length{2, 5};
  int first_line_stride = 3;
  double p_hail = 0.04;

  static AttackConfig defaults(WeatherKind kind, std::uint64_t seed = 0);

  // Throws InvalidArgument naming the first offending field.
  void validate() const;

  friend bool operator==(const AttackConfig&, const AttackConfig&) = default;
};

// Immutable set of pixel overwrites for one image size. Pixels are unique by
// (x, y), lie inside the frame, carry the weather color of `kind`, and are
// stored sorted by (y, x). Row 0 is the bottom row of the image.
class Mask {
 public:
  // Validates every invariant and throws FormatError on violation; the input
  // may be in any order but must not contain duplicate coordinates.
  static Mask from_pixels(ImageDims dims, const AttackConfig& config,
                          std::vector<PixelPerturbation> pixels);

  WeatherKind kind() const { return config_.kind; }
  ImageDims dims() const { return dims_; }
  const AttackConfig& config() const { return config_; }
  std::span<const PixelPerturbation> pixels() const { return pixels_; }
  std::size_t size() const { return pixels_.size(); }
  bool empty() const { return pixels_.empty(); }
  bool contains(Coord c) const;

  friend bool operator==(const Mask&, const Mask&) = default;

 private:
  Mask(ImageDims dims, AttackConfig config, std::vector<PixelPerturbation> pixels)
      : dims_(dims), config_(config), pixels_(std::move(pixels)) {}

  ImageDims dims_;
  AttackConfig config_;
  std::vector<PixelPerturbation> pixels_;
};

// Accumulates patterns into a mask: clips to the frame and merges duplicates.
class MaskBuilder {
 public:
  MaskBuilder(ImageDims dims, const AttackConfig& config);

  void add(const Pattern& pattern);
  Mask build() &&;

 private:
  ImageDims dims_;
  AttackConfig config_;
  std::vector<bool> covered_;
  std::vector<PixelPerturbation> pixels_;
};

}  // namespace fakeweather
