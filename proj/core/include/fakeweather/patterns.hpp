#pragma once

#include <vector>

#include "fakeweather/types.hpp"

namespace fakeweather {

enum class PatternKind {
  Agglomerate,
  PatchVertical,
  PatchDiagonal,
  PatchTwoDots,
  Line,
  SnowDot,
  Hail,
};

// A small local arrangement of same-colored pixels, positioned relative to
// an anchor. Pixels are listed in generation order (outer x offset, inner y
// offset) and are not clipped to any frame.
struct Pattern {
  PatternKind kind = PatternKind::SnowDot;
  Coord anchor;
  int line_length = 0;  // only meaningful for PatternKind::Line
  std::vector<PixelPerturbation> pixels;

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

/// Five-pixel cross: offsets (i, j) in the 3x3 box whose sum is 0, 2 or 4.
Pattern agglomerate_pattern(Coord anchor);

/// Two-pixel rain patch. `type` selects vertical (0), diagonal (1) or
/// two dots with a one-pixel gap (2); anything else throws InvalidArgument.
Pattern patch_pattern(Coord anchor, int type);

/// Vertical run of `length` pixels growing in +y. Throws when length < 1.
Pattern line_pattern(Coord anchor, int length);

/// A single snow flake.
Pattern snow_pattern(Coord anchor);

/// Eight-pixel hail stone inside a 4x4 box.
Pattern hail_pattern(Coord anchor);

}  // namespace fakeweather
