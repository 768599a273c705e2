#include "fakeweather/maskgen.hpp"

#include <cstdint>
#include <string>

#include "fakeweather/error.hpp"
#include "fakeweather/keyed_stream.hpp"

namespace fakeweather {
namespace {

void require_kind(const AttackConfig& config, WeatherKind expected) {
  if (config.kind != expected) {
    throw InvalidArgument("expected a " + std::string(to_string(expected)) +
                          " config, got " + std::string(to_string(config.kind)));
  }
}

void require_in_frame(ImageDims dims, int column, int row) {
  if (!dims.contains(column, row)) {
    throw InvalidArgument("coordinate (" + std::to_string(column) + ", " + std::to_string(row) +
                          ") is outside the " + to_string(dims) + " frame");
  }
}

}  // namespace

void require_mask_dims(ImageDims dims) {
  if (dims.width < kMinMaskSide || dims.height < kMinMaskSide) {
    throw InvalidArgument("image size " + to_string(dims) + " is below the " +
                          std::to_string(kMinMaskSide) + "x" + std::to_string(kMinMaskSide) +
                          " minimum");
  }
}

bool below_v(ImageDims dims, int column, int row) {
  require_in_frame(dims, column, row);
  // a < (h + l) / 4  <=>  4a < h + l
  const std::int64_t limit = static_cast<std::int64_t>(dims.height) + dims.width;
  const std::int64_t left = static_cast<std::int64_t>(column) + row;
  const std::int64_t right = static_cast<std::int64_t>(dims.width) - column + row;
  return 4 * left < limit || 4 * right < limit;
}

SnowBand snow_band(ImageDims dims, int row) {
  if (row < 0 || row >= dims.height) {
    throw InvalidArgument("row " + std::to_string(row) + " is outside a frame of height " +
                          std::to_string(dims.height));
  }
  // row < h/3 - 1  <=>  3(row + 1) < h;   row > 2h/3 - 1  <=>  3(row + 1) > 2h
  const std::int64_t scaled = 3 * (static_cast<std::int64_t>(row) + 1);
  if (scaled < dims.height) return SnowBand::Lower;
  if (scaled > 2 * static_cast<std::int64_t>(dims.height)) return SnowBand::Upper;
  return SnowBand::Middle;
}

std::vector<PlacedPattern> plan_rain(ImageDims dims, const AttackConfig& config) {
  require_kind(config, WeatherKind::Rain);
  require_mask_dims(dims);
  config.validate();

  const KeyedStream stream(config.seed, WeatherKind::Rain);
  std::vector<PlacedPattern> placed;

  for (int x = 0; x <= dims.width - 3; x += config.first_line_stride) {
    placed.push_back({RainPhase::FirstLine, agglomerate_pattern({x, 0})});
  }

  for (int i = 0; i <= dims.width - 3; ++i) {
    for (int j = 0; j <= dims.height - 3; ++j) {
      const Coord anchor{i, j};
      if (below_v(dims, i, j)) {
        if (stream.bernoulli(DrawPurpose::RainAgglomerate, anchor, config.p_agglomerate_below_v)) {
          placed.push_back({RainPhase::BelowV, agglomerate_pattern(anchor)});
        }
      } else if (stream.bernoulli(DrawPurpose::RainPatch, anchor, config.p_patch_above_v)) {
        const int type = stream.uniform_int(DrawPurpose::RainPatchType, anchor, 0, 2);
        placed.push_back({RainPhase::AboveV, patch_pattern(anchor, type)});
      } else if (stream.bernoulli(DrawPurpose::RainLine, anchor, config.p_line_above_v)) {
        const int length = stream.uniform_int(DrawPurpose::RainLineLength, anchor,
                                              config.line_length.min, config.line_length.max);
        placed.push_back({RainPhase::AboveV, line_pattern(anchor, length)});
      }
    }
  }
  return placed;
}

std::vector<Coord> plan_hail(ImageDims dims, const AttackConfig& config) {
  require_kind(config, WeatherKind::Hail);
  require_mask_dims(dims);
  config.validate();

  const KeyedStream stream(config.seed, WeatherKind::Hail);
  std::vector<Coord> anchors;
  for (int i = 0; i <= dims.width - 4; ++i) {
    for (int j = 0; j <= dims.height - 4; ++j) {
      if (stream.bernoulli(DrawPurpose::Hail, {i, j}, config.p_hail)) anchors.push_back({i, j});
    }
  }
  return anchors;
}

Mask gen_rain_mask(ImageDims dims, const AttackConfig& config) {
  auto placed = plan_rain(dims, config);
  MaskBuilder builder(dims, config);
  for (const auto& p : placed) builder.add(p.pattern);
  return std::move(builder).build();
}

Mask gen_snow_mask(ImageDims dims, const AttackConfig& config) {
  require_kind(config, WeatherKind::Snow);
  require_mask_dims(dims);
  MaskBuilder builder(dims, config);
  for (int j = 0; j <= dims.height - 2; j += 2) {
    // Outer bands alternate dense and sparse rows; the middle band is dense.
    const bool sparse = snow_band(dims, j) != SnowBand::Middle && j % 4 != 0;
    const int step = sparse ? 6 : 3;
    for (int x = 0; x <= dims.width - 2; x += step) builder.add(snow_pattern({x, j + 1}));
  }
  return std::move(builder).build();
}

Mask gen_hail_mask(ImageDims dims, const AttackConfig& config) {
  const auto anchors = plan_hail(dims, config);
  MaskBuilder builder(dims, config);
  for (const auto& a : anchors) builder.add(hail_pattern(a));
  return std::move(builder).build();
}

Mask generate_mask(ImageDims dims, const AttackConfig& config) {
  switch (config.kind) {
    case WeatherKind::Rain:
      return gen_rain_mask(dims, config);
    case WeatherKind::Snow:
      return gen_snow_mask(dims, config);
    case WeatherKind::Hail:
      return gen_hail_mask(dims, config);
  }
  throw InvalidArgument("unknown weather kind");
}

double perturbation_budget(const Mask& mask) {
  return static_cast<double>(mask.size()) / static_cast<double>(mask.dims().area());
}

}  // namespace fakeweather
