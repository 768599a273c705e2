#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "fakeweather/error.hpp"
#include "fakeweather/mask_io.hpp"
#include "fakeweather/maskgen.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace fakeweather;
using testing_support::cells_of;

namespace {

constexpr ImageDims k32{32, 32};

AttackConfig zero_rain(int stride) {
  auto c = AttackConfig::defaults(WeatherKind::Rain, 0);
  c.p_agglomerate_below_v = 0.0;
  c.p_patch_above_v = 0.0;
  c.p_line_above_v = 0.0;
  c.first_line_stride = stride;
  return c;
}

std::set<std::pair<int, int>> rows_of(const Mask& m, int y) {
  std::set<std::pair<int, int>> out;
  for (const auto& px : m.pixels()) {
    if (px.y == y) out.insert({px.x, px.y});
  }
  return out;
}

std::vector<int> xs_in_row(const Mask& m, int y) {
  std::vector<int> out;
  for (const auto& px : m.pixels()) {
    if (px.y == y) out.push_back(px.x);
  }
  return out;
}

}  // namespace

TEST_CASE("below_v examples") {
  CHECK(below_v(k32, 0, 0));
  CHECK_FALSE(below_v(k32, 16, 16));
  CHECK(below_v(k32, 31, 0));
  // 4 * (i + j) < 64 exactly at the boundary: i + j = 15 is in, 16 is out.
  CHECK(below_v(k32, 0, 15));
  CHECK_FALSE(below_v(k32, 16, 0));
  CHECK(below_v(k32, 17, 0));  // (32 - 17) + 0 = 15 < 16
}

TEST_CASE("below_v agrees with the floating oracle on many frames") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto dims = testing_support::random_dims(rng, 4, 70);
    for (int i = 0; i < dims.width; ++i) {
      for (int j = 0; j < dims.height; ++j) {
        REQUIRE(below_v(dims, i, j) == oracle::below_v(dims.width, dims.height, i, j));
      }
    }
  }
}

TEST_CASE("below_v rejects coordinates outside the frame") {
  CHECK_THROWS_AS(below_v(k32, -1, 0), InvalidArgument);
  CHECK_THROWS_AS(below_v(k32, 32, 0), InvalidArgument);
  CHECK_THROWS_AS(below_v(k32, 0, 32), InvalidArgument);
}

TEST_CASE("snow_band examples and oracle agreement") {
  CHECK(snow_band(k32, 8) == SnowBand::Lower);
  CHECK(snow_band(k32, 9) == SnowBand::Lower);
  CHECK(snow_band(k32, 10) == SnowBand::Middle);
  CHECK(snow_band(k32, 20) == SnowBand::Middle);
  CHECK(snow_band(k32, 21) == SnowBand::Upper);
  CHECK(snow_band(k32, 22) == SnowBand::Upper);
  // h = 30: thresholds 9 and 19 are integers, the inequalities are strict.
  CHECK(snow_band({30, 30}, 8) == SnowBand::Lower);
  CHECK(snow_band({30, 30}, 9) == SnowBand::Middle);
  CHECK(snow_band({30, 30}, 19) == SnowBand::Middle);
  CHECK(snow_band({30, 30}, 20) == SnowBand::Upper);
  for (int h = 4; h <= 90; ++h) {
    for (int j = 0; j < h; ++j) {
      REQUIRE((snow_band({8, h}, j) != SnowBand::Middle) == oracle::snow_outer(h, j));
    }
  }
  CHECK_THROWS_AS(snow_band(k32, 32), InvalidArgument);
  CHECK_THROWS_AS(snow_band(k32, -1), InvalidArgument);
}

TEST_CASE("rain with zero densities is exactly the row-0 tiling") {
  const auto mask = gen_rain_mask(k32, zero_rain(3));
  // Hand union of agglomerates anchored at x = 0, 3, ..., 27 (anchors <= l - 3).
  CHECK(mask.size() == 50);
  CHECK(cells_of(mask) == oracle::rain_first_line(32, 32, 3));
  for (int stride : {1, 2, 4, 5, 7}) {
    CHECK(cells_of(gen_rain_mask({23, 17}, zero_rain(stride))) ==
          oracle::rain_first_line(23, 17, stride));
  }
}

TEST_CASE("rain mask is the clipped union of its plan") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto dims = testing_support::random_dims(rng, 4, 48);
    const auto config = testing_support::random_config(rng, WeatherKind::Rain);
    const auto plan = plan_rain(dims, config);
    oracle::CellSet expected;
    for (const auto& placed : plan) {
      const auto& p = placed.pattern;
      oracle::CellSet cells;
      switch (p.kind) {
        case PatternKind::Agglomerate:
          cells = oracle::agglomerate(p.anchor.x, p.anchor.y);
          break;
        case PatternKind::PatchVertical:
          cells = oracle::patch(p.anchor.x, p.anchor.y, 0);
          break;
        case PatternKind::PatchDiagonal:
          cells = oracle::patch(p.anchor.x, p.anchor.y, 1);
          break;
        case PatternKind::PatchTwoDots:
          cells = oracle::patch(p.anchor.x, p.anchor.y, 2);
          break;
        case PatternKind::Line:
          REQUIRE(p.line_length >= config.line_length.min);
          REQUIRE(p.line_length <= config.line_length.max);
          for (int k = 0; k < p.line_length; ++k) cells.insert({p.anchor.x, p.anchor.y + k});
          break;
        default:
          FAIL("unexpected pattern kind in rain plan");
      }
      for (const auto& c : cells) expected.insert(c);
    }
    CHECK(cells_of(gen_rain_mask(dims, config)) == oracle::clip(expected, dims.width, dims.height));
  }
}

TEST_CASE("rain V geometry") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const auto dims = testing_support::random_dims(rng, 8, 64);
    const auto config = testing_support::random_config(rng, WeatherKind::Rain);
    for (const auto& placed : plan_rain(dims, config)) {
      const auto a = placed.pattern.anchor;
      switch (placed.phase) {
        case RainPhase::FirstLine:
          CHECK(a.y == 0);
          CHECK(a.x % config.first_line_stride == 0);
          CHECK(placed.pattern.kind == PatternKind::Agglomerate);
          break;
        case RainPhase::BelowV:
          CHECK(below_v(dims, a.x, a.y));
          CHECK(placed.pattern.kind == PatternKind::Agglomerate);
          break;
        case RainPhase::AboveV:
          CHECK_FALSE(below_v(dims, a.x, a.y));
          CHECK(placed.pattern.kind != PatternKind::Agglomerate);
          break;
      }
      CHECK(a.x <= dims.width - 3);
      CHECK(a.y <= dims.height - 3);
    }
  }
}

TEST_CASE("rain density parameters reach their extremes") {
  auto config = zero_rain(3);
  config.p_agglomerate_below_v = 1.0;
  const auto plan = plan_rain(k32, config);
  std::size_t below = 0;
  for (int i = 0; i <= 29; ++i) {
    for (int j = 0; j <= 29; ++j) below += below_v(k32, i, j) ? 1 : 0;
  }
  const auto n_below = std::count_if(plan.begin(), plan.end(),
                                     [](const auto& p) { return p.phase == RainPhase::BelowV; });
  CHECK(static_cast<std::size_t>(n_below) == below);

  config = zero_rain(3);
  config.p_line_above_v = 1.0;
  const auto lines = plan_rain(k32, config);
  const auto n_above = std::count_if(lines.begin(), lines.end(),
                                     [](const auto& p) { return p.phase == RainPhase::AboveV; });
  CHECK(static_cast<std::size_t>(n_above) == 30 * 30 - below);
  for (const auto& p : lines) {
    if (p.phase == RainPhase::AboveV) CHECK(p.pattern.kind == PatternKind::Line);
  }
}

TEST_CASE("rain determinism and seed sensitivity") {
  const auto c42 = AttackConfig::defaults(WeatherKind::Rain, 42);
  CHECK(gen_rain_mask(k32, c42) == gen_rain_mask(k32, c42));
  CHECK(write_mask(gen_rain_mask(k32, c42)) == write_mask(gen_rain_mask(k32, c42)));
  CHECK(cells_of(gen_rain_mask(k32, c42)) !=
        cells_of(gen_rain_mask(k32, AttackConfig::defaults(WeatherKind::Rain, 43))));
}

TEST_CASE("snow rows for 32x32") {
  const auto mask = gen_snow_mask(k32, AttackConfig::defaults(WeatherKind::Snow));
  CHECK(xs_in_row(mask, 1) == oracle::progression(3, 30));
  CHECK(xs_in_row(mask, 3) == oracle::progression(6, 30));
  CHECK(xs_in_row(mask, 1) == std::vector<int>{0, 3, 6, 9, 12, 15, 18, 21, 24, 27, 30});
  CHECK(xs_in_row(mask, 3) == std::vector<int>{0, 6, 12, 18, 24, 30});
  CHECK(cells_of(mask) == oracle::snow_mask(32, 32));
  CHECK(mask.size() == 151);
  CHECK(perturbation_budget(mask) == 151.0 / 1024.0);
  for (const auto& px : mask.pixels()) CHECK(px.y % 2 == 1);
  // Middle band rows (j = 10..20, rows 11..21) have spacing exactly 3.
  for (int j = 10; j <= 20; j += 2) CHECK(xs_in_row(mask, j + 1) == oracle::progression(3, 30));
  CHECK(rows_of(mask, 0).empty());
}

TEST_CASE("snow matches the literal oracle and ignores seed and densities") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto dims = testing_support::random_dims(rng, 4, 80);
    const auto a = testing_support::random_config(rng, WeatherKind::Snow);
    const auto b = testing_support::random_config(rng, WeatherKind::Snow);
    const auto ma = gen_snow_mask(dims, a);
    CHECK(cells_of(ma) == oracle::snow_mask(dims.width, dims.height));
    CHECK(cells_of(ma) == cells_of(gen_snow_mask(dims, b)));
  }
}

TEST_CASE("hail extremes") {
  auto c = AttackConfig::defaults(WeatherKind::Hail, 7);
  c.p_hail = 0.0;
  CHECK(gen_hail_mask(k32, c).empty());
  c.p_hail = 1.0;
  const auto full = gen_hail_mask(k32, c);
  CHECK(cells_of(full) == oracle::hail_full_cover(32, 32));
  CHECK(full.size() == 1021);
  CHECK(plan_hail(k32, c).size() == 29u * 29u);
}

TEST_CASE("hail determinism and monotone density") {
  auto c = AttackConfig::defaults(WeatherKind::Hail, 7);
  c.p_hail = 0.04;
  CHECK(gen_hail_mask(k32, c) == gen_hail_mask(k32, c));

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const auto dims = testing_support::random_dims(rng, 4, 64);
    auto lo = testing_support::random_config(rng, WeatherKind::Hail);
    auto hi = lo;
    hi.p_hail = std::min(1.0, lo.p_hail + std::uniform_real_distribution<double>(0, 0.5)(rng));
    const auto a = plan_hail(dims, lo);
    const auto b = plan_hail(dims, hi);
    CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end(),
                        [](Coord x, Coord y) { return x < y; }));
    const auto ca = cells_of(gen_hail_mask(dims, lo));
    const auto cb = cells_of(gen_hail_mask(dims, hi));
    CHECK(std::includes(cb.begin(), cb.end(), ca.begin(), ca.end()));
  }
}

TEST_CASE("hail mask is the union of its plan") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const auto dims = testing_support::random_dims(rng, 4, 40);
    const auto config = testing_support::random_config(rng, WeatherKind::Hail);
    oracle::CellSet expected;
    for (const auto a : plan_hail(dims, config)) {
      for (const auto& c : oracle::hail(a.x, a.y)) expected.insert(c);
    }
    CHECK(cells_of(gen_hail_mask(dims, config)) == oracle::clip(expected, dims.width, dims.height));
  }
}

TEST_CASE("every mask stays in frame, carries its color and is sorted") {
  std::mt19937_64 rng(10);
  for (auto kind : {WeatherKind::Rain, WeatherKind::Snow, WeatherKind::Hail}) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto dims = testing_support::random_dims(rng, 4, 60);
      const auto mask = generate_mask(dims, testing_support::random_config(rng, kind));
      CHECK(mask.kind() == kind);
      const PixelPerturbation* prev = nullptr;
      for (const auto& px : mask.pixels()) {
        REQUIRE(dims.contains(px.x, px.y));
        REQUIRE(px.rgb == weather_color(kind));
        if (prev) REQUIRE((prev->y < px.y || (prev->y == px.y && prev->x < px.x)));
        prev = &px;
      }
      const double budget = perturbation_budget(mask);
      CHECK(budget >= 0.0);
      CHECK(budget <= 1.0);
    }
  }
}

TEST_CASE("perturbation budget extremes") {
  auto c = AttackConfig::defaults(WeatherKind::Hail);
  c.p_hail = 0.0;
  CHECK(perturbation_budget(gen_hail_mask(k32, c)) == 0.0);

  std::vector<PixelPerturbation> all;
  for (int y = 0; y < 4; ++y) {
    for (int x = 0; x < 4; ++x) all.push_back({x, y, kSnowColor});
  }
  const auto full = Mask::from_pixels({4, 4}, AttackConfig::defaults(WeatherKind::Snow), all);
  CHECK(perturbation_budget(full) == 1.0);
}

TEST_CASE("generators reject bad inputs") {
  CHECK_THROWS_AS(gen_rain_mask({3, 32}, AttackConfig::defaults(WeatherKind::Rain)), InvalidArgument);
  CHECK_THROWS_AS(gen_snow_mask({32, 3}, AttackConfig::defaults(WeatherKind::Snow)), InvalidArgument);
  CHECK_THROWS_AS(gen_hail_mask({0, 0}, AttackConfig::defaults(WeatherKind::Hail)), InvalidArgument);
  CHECK_THROWS_AS(gen_rain_mask(k32, AttackConfig::defaults(WeatherKind::Snow)), InvalidArgument);
  CHECK_THROWS_AS(gen_snow_mask(k32, AttackConfig::defaults(WeatherKind::Hail)), InvalidArgument);
  CHECK_THROWS_AS(gen_hail_mask(k32, AttackConfig::defaults(WeatherKind::Rain)), InvalidArgument);
  CHECK_NOTHROW(generate_mask({4, 4}, AttackConfig::defaults(WeatherKind::Hail)));

  auto c = AttackConfig::defaults(WeatherKind::Rain);
  c.p_patch_above_v = 1.5;
  CHECK_THROWS_AS(gen_rain_mask(k32, c), InvalidArgument);
  c = AttackConfig::defaults(WeatherKind::Rain);
  c.p_hail = std::nan("");
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c = AttackConfig::defaults(WeatherKind::Rain);
  c.line_length = {0, 3};
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c.line_length = {4, 3};
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c = AttackConfig::defaults(WeatherKind::Rain);
  c.first_line_stride = 0;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
}

TEST_CASE("Mask::from_pixels enforces its invariants") {
  const auto cfg = AttackConfig::defaults(WeatherKind::Rain);
  CHECK_THROWS_AS(Mask::from_pixels(k32, cfg, {{32, 0, kRainColor}}), FormatError);
  CHECK_THROWS_AS(Mask::from_pixels(k32, cfg, {{0, 0, kSnowColor}}), FormatError);
  CHECK_THROWS_AS(Mask::from_pixels(k32, cfg, {{1, 1, kRainColor}, {1, 1, kRainColor}}), FormatError);
  const auto m = Mask::from_pixels(k32, cfg, {{5, 2, kRainColor}, {1, 1, kRainColor}, {0, 2, kRainColor}});
  CHECK(m.pixels()[0].coord() == Coord{1, 1});
  CHECK(m.pixels()[1].coord() == Coord{0, 2});
  CHECK(m.contains({5, 2}));
  CHECK_FALSE(m.contains({2, 5}));
}
