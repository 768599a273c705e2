#include "fakeweather/patterns.hpp"

#include <string>

#include "fakeweather/error.hpp"

namespace fakeweather {
namespace {

Pattern make(PatternKind kind, Coord anchor) {
  Pattern p;
  p.kind = kind;
  p.anchor = anchor;
  return p;
}

void push(Pattern& p, int dx, int dy, Rgb color) {
  p.pixels.push_back({p.anchor.x + dx, p.anchor.y + dy, color});
}

}  // namespace

Pattern agglomerate_pattern(Coord anchor) {
  Pattern p = make(PatternKind::Agglomerate, anchor);
  p.pixels.reserve(5);
  for (int i = 0; i <= 2; ++i) {
    for (int j = 0; j <= 2; ++j) {
      const int s = i + j;
      if (s == 0 || s == 2 || s == 4) push(p, i, j, kRainColor);
    }
  }
  return p;
}

Pattern patch_pattern(Coord anchor, int type) {
  switch (type) {
    case 0: {
      Pattern p = make(PatternKind::PatchVertical, anchor);
      for (int j = 0; j <= 1; ++j) push(p, 0, j, kRainColor);
      return p;
    }
    case 1: {
      Pattern p = make(PatternKind::PatchDiagonal, anchor);
      for (int i = 0; i <= 1; ++i) {
        for (int j = 0; j <= 1; ++j) {
          if (i + j == 1) push(p, i, j, kRainColor);
        }
      }
      return p;
    }
    case 2: {
      Pattern p = make(PatternKind::PatchTwoDots, anchor);
      for (int j = 0; j <= 1; ++j) push(p, 0, 2 * j, kRainColor);
      return p;
    }
    default:
      throw InvalidArgument("patch type must be 0, 1 or 2, got " + std::to_string(type));
  }
}

Pattern line_pattern(Coord anchor, int length) {
  if (length < 1) {
    throw InvalidArgument("line length must be at least 1, got " + std::to_string(length));
  }
  Pattern p = make(PatternKind::Line, anchor);
  p.line_length = length;
  p.pixels.reserve(static_cast<std::size_t>(length));
  for (int j = 0; j < length; ++j) push(p, 0, j, kRainColor);
  return p;
}

Pattern snow_pattern(Coord anchor) {
  Pattern p = make(PatternKind::SnowDot, anchor);
  push(p, 0, 0, kSnowColor);
  return p;
}

Pattern hail_pattern(Coord anchor) {
  Pattern p = make(PatternKind::Hail, anchor);
  p.pixels.reserve(8);
  for (int i = 0; i <= 3; ++i) {
    for (int j = 0; j <= 3; ++j) {
      if ((i == j && i < 2) || (i + j == 3) || (i == 2 && j != 2)) push(p, i, j, kSnowColor);
    }
  }
  return p;
}

}  // namespace fakeweather
