#include "fakeweather/mask.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fakeweather/error.hpp"
#include "fakeweather/maskgen.hpp"

namespace fakeweather {
namespace {

void check_probability(const char* name, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidArgument(std::string(name) + " must be in [0, 1], got " + std::to_string(p));
  }
}

bool yx_less(const PixelPerturbation& a, const PixelPerturbation& b) {
  return a.y != b.y ? a.y < b.y : a.x < b.x;
}

}  // namespace

AttackConfig AttackConfig::defaults(WeatherKind kind, std::uint64_t seed) {
  AttackConfig c;
  c.kind = kind;
  c.seed = seed;
  return c;
}

void AttackConfig::validate() const {
  check_probability("p_agglomerate_below_v", p_agglomerate_below_v);
  check_probability("p_patch_above_v", p_patch_above_v);
  check_probability("p_line_above_v", p_line_above_v);
  check_probability("p_hail", p_hail);
  if (line_length.min < 1) {
    throw InvalidArgument("line_length_min must be at least 1, got " +
                          std::to_string(line_length.min));
  }
  if (line_length.max < line_length.min) {
    throw InvalidArgument("line_length_max (" + std::to_string(line_length.max) +
                          ") is below line_length_min (" + std::to_string(line_length.min) + ")");
  }
  if (first_line_stride < 1) {
    throw InvalidArgument("first_line_stride must be at least 1, got " +
                          std::to_string(first_line_stride));
  }
}

Mask Mask::from_pixels(ImageDims dims, const AttackConfig& config,
                       std::vector<PixelPerturbation> pixels) {
  if (dims.width < kMinMaskSide || dims.height < kMinMaskSide) {
    throw FormatError("mask dimensions " + to_string(dims) + " are below the 4x4 minimum");
  }
  const Rgb color = weather_color(config.kind);
  for (const auto& px : pixels) {
    if (!dims.contains(px.x, px.y)) {
      throw FormatError("mask pixel (" + std::to_string(px.x) + ", " + std::to_string(px.y) +
                        ") lies outside the " + to_string(dims) + " frame");
    }
    if (px.rgb != color) {
      throw FormatError("mask pixel (" + std::to_string(px.x) + ", " + std::to_string(px.y) +
                        ") does not carry the " + std::string(to_string(config.kind)) + " color");
    }
  }
  std::sort(pixels.begin(), pixels.end(), yx_less);
  const auto dup = std::adjacent_find(pixels.begin(), pixels.end(),
                                      [](const auto& a, const auto& b) { return a.coord() == b.coord(); });
  if (dup != pixels.end()) {
    throw FormatError("duplicate mask pixel (" + std::to_string(dup->x) + ", " +
                      std::to_string(dup->y) + ")");
  }
  return Mask(dims, config, std::move(pixels));
}

bool Mask::contains(Coord c) const {
  const PixelPerturbation probe{c.x, c.y, {}};
  return std::binary_search(pixels_.begin(), pixels_.end(), probe, yx_less);
}

MaskBuilder::MaskBuilder(ImageDims dims, const AttackConfig& config)
    : dims_(dims), config_(config) {
  require_mask_dims(dims);
  config.validate();
  covered_.assign(static_cast<std::size_t>(dims.area()), false);
}

void MaskBuilder::add(const Pattern& pattern) {
  for (const auto& px : pattern.pixels) {
    if (!dims_.contains(px.x, px.y)) continue;
    const auto idx = static_cast<std::size_t>(px.y) * static_cast<std::size_t>(dims_.width) +
                     static_cast<std::size_t>(px.x);
    if (covered_[idx]) continue;
    covered_[idx] = true;
    pixels_.push_back(px);
  }
}

Mask MaskBuilder::build() && {
  return Mask::from_pixels(dims_, config_, std::move(pixels_));
}

}  // namespace fakeweather
