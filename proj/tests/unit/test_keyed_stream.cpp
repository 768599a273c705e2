#include <doctest.h>

#include <cmath>
#include <map>

#include "fakeweather/keyed_stream.hpp"

using namespace fakeweather;

TEST_CASE("mix64 reproduces the SplitMix64 reference sequence") {
  // Published SplitMix64 outputs for seed 1234567.
  const std::uint64_t expected[] = {6457827717110365317ULL, 3203168211198807973ULL,
                                    9817491932198370423ULL, 4593380528125082431ULL,
                                    16408922859458223821ULL};
  std::uint64_t state = 1234567;
  for (auto want : expected) {
    state += 0x9E3779B97F4A7C15ULL;
    CHECK(mix64(state) == want);
  }
}

TEST_CASE("draws are pure functions of their key") {
  const KeyedStream a(42, WeatherKind::Rain);
  const KeyedStream b(42, WeatherKind::Rain);
  for (int i = 0; i < 50; ++i) {
    CHECK(a.bits(DrawPurpose::RainPatch, {i, 2 * i}) == b.bits(DrawPurpose::RainPatch, {i, 2 * i}));
  }
  // Order of queries does not matter.
  const auto late = a.uniform(DrawPurpose::Hail, {7, 7});
  (void)a.uniform(DrawPurpose::Hail, {1, 1});
  CHECK(a.uniform(DrawPurpose::Hail, {7, 7}) == late);
}

TEST_CASE("seed, kind, purpose and anchor all separate the streams") {
  const KeyedStream base(1, WeatherKind::Rain);
  const auto ref = base.bits(DrawPurpose::RainPatch, {3, 4});
  CHECK(KeyedStream(2, WeatherKind::Rain).bits(DrawPurpose::RainPatch, {3, 4}) != ref);
  CHECK(KeyedStream(1, WeatherKind::Hail).bits(DrawPurpose::RainPatch, {3, 4}) != ref);
  CHECK(base.bits(DrawPurpose::RainLine, {3, 4}) != ref);
  CHECK(base.bits(DrawPurpose::RainPatch, {4, 3}) != ref);
  CHECK(base.bits(DrawPurpose::RainPatch, {3, 5}) != ref);
}

TEST_CASE("uniform draws cover [0,1) evenly") {
  const KeyedStream s(7, WeatherKind::Hail);
  std::array<int, 10> bins{};
  const int n = 100000;
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const double u = s.uniform(DrawPurpose::Hail, {k % 317, k / 317});
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
    ++bins[static_cast<std::size_t>(u * 10)];
  }
  CHECK(std::abs(sum / n - 0.5) < 0.01);
  for (int b : bins) CHECK(std::abs(b - n / 10) < 600);  // ~6 sigma
}

TEST_CASE("uniform_int stays inside its range and hits every value") {
  const KeyedStream s(99, WeatherKind::Rain);
  std::map<int, int> hits;
  for (int k = 0; k < 6000; ++k) {
    const int v = s.uniform_int(DrawPurpose::RainLineLength, {k, 0}, 2, 5);
    REQUIRE(v >= 2);
    REQUIRE(v <= 5);
    ++hits[v];
  }
  CHECK(hits.size() == 4);
  for (auto [v, c] : hits) CHECK(std::abs(c - 1500) < 250);
  CHECK(s.uniform_int(DrawPurpose::RainPatchType, {1, 1}, 3, 3) == 3);
}

TEST_CASE("bernoulli edge probabilities") {
  const KeyedStream s(5, WeatherKind::Hail);
  for (int k = 0; k < 1000; ++k) {
    CHECK(s.bernoulli(DrawPurpose::Hail, {k, k}, 1.0));
    CHECK_FALSE(s.bernoulli(DrawPurpose::Hail, {k, k}, 0.0));
  }
}
