#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace fakeweather {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend constexpr bool operator==(const Rgb&, const Rgb&) = default;
};

// Integer pixel coordinate. Pattern generators may produce coordinates that
// fall outside an image; clipping happens when a mask is assembled.
struct Coord {
  int x = 0;
  int y = 0;

  friend constexpr bool operator==(const Coord&, const Coord&) = default;
  friend constexpr auto operator<=>(const Coord&, const Coord&) = default;
};

// One overwritten pixel: position plus the color written there.
struct PixelPerturbation {
  int x = 0;
  int y = 0;
  Rgb rgb;

  constexpr Coord coord() const { return {x, y}; }

  friend constexpr bool operator==(const PixelPerturbation&,
                                   const PixelPerturbation&) = default;
};

enum class WeatherKind : std::uint8_t { Rain, Snow, Hail };

inline constexpr Rgb kRainColor{208, 209, 214};
inline constexpr Rgb kSnowColor{249, 242, 242};

// Rain drops are grey-blue; snow flakes and hail stones share one near-white.
constexpr Rgb weather_color(WeatherKind kind) {
  return kind == WeatherKind::Rain ? kRainColor : kSnowColor;
}

std::string_view to_string(WeatherKind kind);
std::optional<WeatherKind> parse_weather_kind(std::string_view text);

// Image size. `width` is the horizontal extent (columns), `height` the
// vertical extent (rows).
struct ImageDims {
  int width = 0;
  int height = 0;

  constexpr std::int64_t area() const {
    return static_cast<std::int64_t>(width) * height;
  }
  constexpr bool contains(int x, int y) const {
    return x >= 0 && y >= 0 && x < width && y < height;
  }

  friend constexpr bool operator==(const ImageDims&, const ImageDims&) = default;
};

// Smallest image a mask can be generated for: a 4x4 hail stone must fit.
inline constexpr int kMinMaskSide = 4;

std::string to_string(const ImageDims& dims);

}  // namespace fakeweather
