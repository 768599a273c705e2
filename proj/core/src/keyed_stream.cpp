#include "fakeweather/keyed_stream.hpp"

#include <cassert>

namespace fakeweather {
namespace {

__extension__ using uint128 = unsigned __int128;

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t absorb(std::uint64_t state, std::uint64_t word) {
  return mix64(state + kGolden + word);
}

constexpr std::uint64_t as_word(int v) {
  return static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
}

}  // namespace

KeyedStream::KeyedStream(std::uint64_t seed, WeatherKind kind)
    : key_(absorb(mix64(seed), static_cast<std::uint64_t>(kind))) {}

std::uint64_t KeyedStream::bits(DrawPurpose purpose, Coord anchor) const {
  std::uint64_t h = absorb(key_, static_cast<std::uint64_t>(purpose));
  h = absorb(h, (as_word(anchor.x) << 32) | as_word(anchor.y));
  return h;
}

double KeyedStream::uniform(DrawPurpose purpose, Coord anchor) const {
  return static_cast<double>(bits(purpose, anchor) >> 11) * 0x1.0p-53;
}

int KeyedStream::uniform_int(DrawPurpose purpose, Coord anchor, int lo, int hi) const {
  assert(lo <= hi);
  const auto span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo) + 1;
  // Multiply-shift range reduction; bias is below 2^-32 for any int range.
  const auto scaled = static_cast<uint128>(bits(purpose, anchor)) * span;
  return static_cast<int>(lo + static_cast<std::int64_t>(scaled >> 64));
}

}  // namespace fakeweather
