#pragma once

#include <cstdint>

#include "fakeweather/types.hpp"

namespace fakeweather {

// What a draw is used for. Each purpose is an independent sub-stream so that,
// for example, changing the patch probability never shifts line lengths.
enum class DrawPurpose : std::uint64_t {
  RainAgglomerate = 1,
  RainPatch = 2,
  RainPatchType = 3,
  RainLine = 4,
  RainLineLength = 5,
  Hail = 6,
};

// SplitMix64 output finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Counter-based random source: every draw is a pure hash of
// (seed, weather kind, purpose, anchor). There is no internal state, so the
// result for an anchor does not depend on how many other draws happened
// before it, and the values are identical on every platform.
class KeyedStream {
 public:
  KeyedStream(std::uint64_t seed, WeatherKind kind);

  std::uint64_t bits(DrawPurpose purpose, Coord anchor) const;

  // Uniform in [0, 1) with 53 bits of resolution.
  double uniform(DrawPurpose purpose, Coord anchor) const;

  // Uniform integer in [lo, hi]. Requires lo <= hi.
  int uniform_int(DrawPurpose purpose, Coord anchor, int lo, int hi) const;

  // Bernoulli trial; `probability` 1 always succeeds, 0 never does.
  bool bernoulli(DrawPurpose purpose, Coord anchor, double probability) const {
    return uniform(purpose, anchor) < probability;
  }

 private:
  std::uint64_t key_;
};

}  // namespace fakeweather
