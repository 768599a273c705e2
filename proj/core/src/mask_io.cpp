#include "fakeweather/mask_io.hpp"

#include <array>
#include <cstdint>
#include <string>

#include "fakeweather/error.hpp"
#include "text_util.hpp"

namespace fakeweather {
namespace {

using detail::format_double;
using detail::parse_number;

constexpr std::array<std::string_view, 7> kParamKeys = {
    "p_agglomerate_below_v", "p_patch_above_v",   "p_line_above_v", "line_length_min",
    "line_length_max",       "first_line_stride", "p_hail",
};

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw FormatError("mask line " + std::to_string(line_no) + ": " + what);
}

// Parses "<key>=<value>" and checks the key.
std::string_view expect_field(std::string_view token, std::string_view key, std::size_t line_no) {
  if (token.size() <= key.size() || token.substr(0, key.size()) != key ||
      token[key.size()] != '=') {
    fail(line_no, "expected '" + std::string(key) + "=...', got '" + std::string(token) + "'");
  }
  return token.substr(key.size() + 1);
}

template <typename T>
T expect_number(std::string_view text, std::string_view what, std::size_t line_no) {
  const auto v = parse_number<T>(text);
  if (!v) fail(line_no, "invalid " + std::string(what) + " '" + std::string(text) + "'");
  return *v;
}

}  // namespace

std::string format_params(const AttackConfig& c) {
  std::string out;
  out += "p_agglomerate_below_v=" + format_double(c.p_agglomerate_below_v);
  out += ",p_patch_above_v=" + format_double(c.p_patch_above_v);
  out += ",p_line_above_v=" + format_double(c.p_line_above_v);
  out += ",line_length_min=" + std::to_string(c.line_length.min);
  out += ",line_length_max=" + std::to_string(c.line_length.max);
  out += ",first_line_stride=" + std::to_string(c.first_line_stride);
  out += ",p_hail=" + format_double(c.p_hail);
  return out;
}

std::string write_mask(const Mask& mask) {
  std::string out;
  out.reserve(64 + mask.size() * 20);
  out += kMaskMagic;
  out += '\n';
  out += "kind=" + std::string(to_string(mask.kind())) + " l=" + std::to_string(mask.dims().width) +
         " h=" + std::to_string(mask.dims().height) + " seed=" + std::to_string(mask.config().seed);
  out += '\n';
  out += "params=" + format_params(mask.config());
  out += '\n';
  for (const auto& px : mask.pixels()) {
    out += std::to_string(px.x);
    out += ' ';
    out += std::to_string(px.y);
    out += ' ';
    out += std::to_string(px.rgb.r);
    out += ' ';
    out += std::to_string(px.rgb.g);
    out += ' ';
    out += std::to_string(px.rgb.b);
    out += '\n';
  }
  return out;
}

Mask read_mask(std::string_view text) {
  const auto lines = detail::split_lines(text);
  if (lines.empty() || lines[0] != kMaskMagic) {
    throw MalformedHeader("not a mask file: first line must be '" + std::string(kMaskMagic) + "'");
  }
  if (lines.size() < 3) throw TruncatedData("mask file ends before the params line");

  AttackConfig config;
  ImageDims dims;
  {
    const auto tokens = detail::split(lines[1], ' ');
    if (tokens.size() != 4) fail(2, "expected 'kind=.. l=.. h=.. seed=..'");
    const auto kind_text = expect_field(tokens[0], "kind", 2);
    const auto kind = parse_weather_kind(kind_text);
    if (!kind) fail(2, "unknown kind '" + std::string(kind_text) + "'");
    config.kind = *kind;
    dims.width = expect_number<int>(expect_field(tokens[1], "l", 2), "width", 2);
    dims.height = expect_number<int>(expect_field(tokens[2], "h", 2), "height", 2);
    config.seed = expect_number<std::uint64_t>(expect_field(tokens[3], "seed", 2), "seed", 2);
  }
  {
    const auto body = expect_field(lines[2], "params", 3);
    const auto tokens = detail::split(body, ',');
    if (tokens.size() != kParamKeys.size()) {
      fail(3, "expected " + std::to_string(kParamKeys.size()) + " parameters, got " +
                  std::to_string(tokens.size()));
    }
    std::array<std::string_view, kParamKeys.size()> values;
    for (std::size_t k = 0; k < kParamKeys.size(); ++k) {
      values[k] = expect_field(tokens[k], kParamKeys[k], 3);
    }
    config.p_agglomerate_below_v = expect_number<double>(values[0], kParamKeys[0], 3);
    config.p_patch_above_v = expect_number<double>(values[1], kParamKeys[1], 3);
    config.p_line_above_v = expect_number<double>(values[2], kParamKeys[2], 3);
    config.line_length.min = expect_number<int>(values[3], kParamKeys[3], 3);
    config.line_length.max = expect_number<int>(values[4], kParamKeys[4], 3);
    config.first_line_stride = expect_number<int>(values[5], kParamKeys[5], 3);
    config.p_hail = expect_number<double>(values[6], kParamKeys[6], 3);
    try {
      config.validate();
    } catch (const InvalidArgument& e) {
      fail(3, e.what());
    }
  }

  std::vector<PixelPerturbation> pixels;
  pixels.reserve(lines.size() - 3);
  for (std::size_t i = 3; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto tokens = detail::split(lines[i], ' ');
    if (tokens.size() != 5) fail(line_no, "expected '<x> <y> <r> <g> <b>'");
    PixelPerturbation px;
    px.x = expect_number<int>(tokens[0], "x", line_no);
    px.y = expect_number<int>(tokens[1], "y", line_no);
    px.rgb.r = expect_number<std::uint8_t>(tokens[2], "red channel", line_no);
    px.rgb.g = expect_number<std::uint8_t>(tokens[3], "green channel", line_no);
    px.rgb.b = expect_number<std::uint8_t>(tokens[4], "blue channel", line_no);
    if (!pixels.empty()) {
      const auto& prev = pixels.back();
      if (px.y < prev.y || (px.y == prev.y && px.x <= prev.x)) {
        fail(line_no, "pixels must be strictly ascending by (y, x)");
      }
    }
    pixels.push_back(px);
  }
  return Mask::from_pixels(dims, config, std::move(pixels));
}

}  // namespace fakeweather
