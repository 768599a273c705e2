#include <benchmark/benchmark.h>

#include "fakeweather/dataset.hpp"
#include "fakeweather/image_codec.hpp"
#include "fakeweather/maskgen.hpp"

using namespace fakeweather;

namespace {

std::vector<std::uint8_t> synthetic_batch(std::size_t records) {
  std::vector<std::uint8_t> bytes(records * kCifarRecordBytes);
  for (std::size_t i = 0; i < bytes.size(); ++i) bytes[i] = static_cast<std::uint8_t>(i * 131 + 7);
  for (std::size_t k = 0; k < records; ++k) bytes[k * kCifarRecordBytes] = static_cast<std::uint8_t>(k % 10);
  return bytes;
}

void BM_ReadCifarBatch(benchmark::State& state) {
  const auto bytes = synthetic_batch(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto records = read_cifar_batch(bytes);
    benchmark::DoNotOptimize(records);
  }
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(bytes.size()));
}

void BM_PerturbBatch(benchmark::State& state, WeatherKind kind) {
  const auto records = read_cifar_batch(synthetic_batch(1000));
  const auto mask = generate_mask(kCifarDims, AttackConfig::defaults(kind, 3));
  for (auto _ : state) {
    auto out = perturb_batch(records, mask);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(records.size()));
}

void BM_EncodeImage(benchmark::State& state, ImageFormat format) {
  ImageBuffer image({224, 224});
  for (int y = 0; y < image.height(); ++y) {
    for (int x = 0; x < image.width(); ++x) {
      image.at(x, y) = {static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y),
                        static_cast<std::uint8_t>(x ^ y)};
    }
  }
  for (auto _ : state) {
    auto bytes = encode_image(image, format);
    benchmark::DoNotOptimize(bytes);
  }
}

}  // namespace

BENCHMARK(BM_ReadCifarBatch)->Arg(200)->Arg(10000);
BENCHMARK_CAPTURE(BM_PerturbBatch, rain, WeatherKind::Rain);
BENCHMARK_CAPTURE(BM_PerturbBatch, hail, WeatherKind::Hail);
BENCHMARK_CAPTURE(BM_EncodeImage, ppm, ImageFormat::Ppm);
BENCHMARK_CAPTURE(BM_EncodeImage, png, ImageFormat::Png);
