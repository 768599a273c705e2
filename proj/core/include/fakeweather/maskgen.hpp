#pragma once

#include <vector>

#include "fakeweather/mask.hpp"

namespace fakeweather {

// Mask coordinates are bottom-up: row 0 is the bottom row of the image.

/// True when (column, row) lies in the rain mask's dense bottom-corner region:
/// column + row < (h + l) / 4 or (l - column) + row < (h + l) / 4, compared
/// exactly. Throws InvalidArgument for coordinates outside the frame.
bool below_v(ImageDims dims, int column, int row);

enum class SnowBand { Lower, Middle, Upper };

/// Horizontal band of `row` for the snow layout. The outer bands are the rows
/// with row < h/3 - 1 (Lower) or row > 2h/3 - 1 (Upper); all else is Middle.
SnowBand snow_band(ImageDims dims, int row);

enum class RainPhase {
  FirstLine,      // agglomerates tiled along row 0
  BelowV,         // sparse agglomerates in the bottom corners
  AboveV,         // sparse patches and lines elsewhere
};

struct PlacedPattern {
  RainPhase phase;
  Pattern pattern;
};

/// Every pattern the rain generator places, in placement order, before
/// clipping. gen_rain_mask is exactly the union of these.
std::vector<PlacedPattern> plan_rain(ImageDims dims, const AttackConfig& config);

/// Anchors selected by the hail generator, in scan order (outer x, inner y).
std::vector<Coord> plan_hail(ImageDims dims, const AttackConfig& config);

Mask gen_rain_mask(ImageDims dims, const AttackConfig& config);
Mask gen_snow_mask(ImageDims dims, const AttackConfig& config);
Mask gen_hail_mask(ImageDims dims, const AttackConfig& config);

// Dispatches on config.kind.
Mask generate_mask(ImageDims dims, const AttackConfig& config);

/// Fraction of the frame the mask overwrites.
double perturbation_budget(const Mask& mask);

// Throws InvalidArgument unless both sides are at least kMinMaskSide.
void require_mask_dims(ImageDims dims);

}  // namespace fakeweather
