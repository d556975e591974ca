// Serial reference kernels vs their OpenMP counterparts, plus the whole
// encrypt/decrypt pipeline at the sizes used for the scaling curve.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "lucrypt/analysis.hpp"
#include "lucrypt/cipher.hpp"
#include "lucrypt/kernels.hpp"

namespace {

using namespace lucrypt;
namespace ks = lucrypt::kernels;

std::vector<double> random_stream(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(-25.0, 25.0);
  std::vector<double> v(n);
  for (double& x : v) x = d(rng);
  return v;
}

std::vector<std::uint8_t> random_bytes(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> v(n);
  for (auto& b : v) b = static_cast<std::uint8_t>(rng());
  return v;
}

template <auto Scale>
void BM_Scale(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto coords = random_stream(n, 1);
  std::vector<double> m(n);
  ks::serial::quantize_multipliers(random_stream(n, 2), m);
  for (auto _ : state) {
    Scale(coords, m, ks::Direction::Encrypt);
    Scale(coords, m, ks::Direction::Decrypt);
    benchmark::DoNotOptimize(coords.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_Scale<ks::serial::scale>)->Name("scale/serial")->Range(1 << 12, 1 << 20);
BENCHMARK(BM_Scale<ks::omp::scale>)->Name("scale/omp")->Range(1 << 12, 1 << 20);

template <auto Quantize>
void BM_QuantizeBytes(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto stream = random_stream(n, 3);
  std::vector<std::uint8_t> out(n);
  for (auto _ : state) {
    Quantize(stream, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_QuantizeBytes<ks::serial::quantize_bytes>)->Name("quantize_bytes/serial")->Range(1 << 12, 1 << 20);
BENCHMARK(BM_QuantizeBytes<ks::omp::quantize_bytes>)->Name("quantize_bytes/omp")->Range(1 << 12, 1 << 20);

template <auto Argsort>
void BM_Argsort(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> keys(n);
  ks::serial::quantize_units(random_stream(n, 4), keys);
  for (auto _ : state) benchmark::DoNotOptimize(Argsort(keys));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_Argsort<ks::serial::argsort>)->Name("argsort/serial")->Range(1 << 12, 1 << 20);
BENCHMARK(BM_Argsort<ks::omp::argsort>)->Name("argsort/omp")->Range(1 << 12, 1 << 20);

template <auto Cipher>
void BM_DnaCipher(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto bytes = random_bytes(n, 5);
  const auto key = random_bytes(n, 6);
  auto mask = random_bytes(n, 7);
  for (auto& b : mask) b &= 1;
  for (auto _ : state) {
    Cipher(bytes, key, mask, ks::Direction::Encrypt);
    Cipher(bytes, key, mask, ks::Direction::Decrypt);
    benchmark::DoNotOptimize(bytes.data());
  }
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_DnaCipher<ks::serial::dna_cipher>)->Name("dna_cipher/serial")->Range(1 << 12, 1 << 20);
BENCHMARK(BM_DnaCipher<ks::omp::dna_cipher>)->Name("dna_cipher/omp")->Range(1 << 12, 1 << 20);

void BM_Keystream(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate_stream(KeyBundle::defaults().vertices, n));
}
BENCHMARK(BM_Keystream)->Name("keystream")->Range(1 << 10, 1 << 18);

void BM_Pipeline(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Backend backend = state.range(1) ? Backend::Parallel : Backend::Serial;
  const auto [model, tex] = analysis::synthesize_model(n, 256, 9);
  const KeyBundle keys = KeyBundle::defaults();
  for (auto _ : state) {
    const auto ct = encrypt_model(model, tex, keys, backend);
    benchmark::DoNotOptimize(decrypt_model(ct, keys, backend));
  }
}
BENCHMARK(BM_Pipeline)
    ->Name("pipeline")
    ->ArgsProduct({{10000, 20000, 40000}, {0, 1}})
    ->ArgNames({"vertices", "omp"})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
