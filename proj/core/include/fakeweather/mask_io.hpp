#pragma once

#include <string>
#include <string_view>

#include "fakeweather/mask.hpp"

namespace fakeweather {

// Text mask format, version 1:
//
//   fakeweather-mask v1
//   kind=<rain|snow|hail> l=<width> h=<height> seed=<uint64>
//   params=<key=value,...>           (fixed key order, see format_params)
//   <x> <y> <r> <g> <b>              (one line per pixel, sorted by y then x)
//
// Every line ends in '\n'. Writing is canonical, so read-then-write
// reproduces a file written by this library byte for byte.

inline constexpr std::string_view kMaskMagic = "fakeweather-mask v1";

std::string format_params(const AttackConfig& config);
std::string write_mask(const Mask& mask);
Mask read_mask(std::string_view text);

}  // namespace fakeweather
