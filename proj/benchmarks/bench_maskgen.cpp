#include <benchmark/benchmark.h>

#include "fakeweather/mask_io.hpp"
#include "fakeweather/maskgen.hpp"

using namespace fakeweather;

namespace {

void BM_GenerateMask(benchmark::State& state, WeatherKind kind) {
  const int side = static_cast<int>(state.range(0));
  const ImageDims dims{side, side};
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto mask = generate_mask(dims, AttackConfig::defaults(kind, seed++));
    benchmark::DoNotOptimize(mask);
  }
  state.SetItemsProcessed(state.iterations() * dims.area());
}

void BM_WriteReadMask(benchmark::State& state) {
  const auto mask = generate_mask({224, 224}, AttackConfig::defaults(WeatherKind::Rain, 1));
  for (auto _ : state) {
    auto text = write_mask(mask);
    auto back = read_mask(text);
    benchmark::DoNotOptimize(back);
  }
  state.SetLabel(std::to_string(mask.size()) + " pixels");
}

}  // namespace

BENCHMARK_CAPTURE(BM_GenerateMask, rain, WeatherKind::Rain)->Arg(32)->Arg(224)->Arg(1024);
BENCHMARK_CAPTURE(BM_GenerateMask, snow, WeatherKind::Snow)->Arg(32)->Arg(224)->Arg(1024);
BENCHMARK_CAPTURE(BM_GenerateMask, hail, WeatherKind::Hail)->Arg(32)->Arg(224)->Arg(1024);
BENCHMARK(BM_WriteReadMask);
