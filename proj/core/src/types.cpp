#include "fakeweather/types.hpp"

namespace fakeweather {

std::string_view to_string(WeatherKind kind) {
  switch (kind) {
    case WeatherKind::Rain:
      return "rain";
    case WeatherKind::Snow:
      return "snow";
    case WeatherKind::Hail:
      return "hail";
  }
  return "unknown";
}

std::optional<WeatherKind> parse_weather_kind(std::string_view text) {
  if (text == "rain") return WeatherKind::Rain;
  if (text == "snow") return WeatherKind::Snow;
  if (text == "hail") return WeatherKind::Hail;
  return std::nullopt;
}

std::string to_string(const ImageDims& dims) {
  return std::to_string(dims.width) + "x" + std::to_string(dims.height);
}

}  // namespace fakeweather
