#include <array>
#include <numeric>
#include <parallel/algorithm>
#include <stdexcept>
#include <string>

#include "lucrypt/chaos.hpp"
#include "lucrypt/dnacode.hpp"
#include "lucrypt/kernels.hpp"

namespace lucrypt::kernels::omp {

namespace {

template <class T>
void require_same_length(std::size_t a, std::span<T> b, const char* what) {
  if (a != b.size()) {
    throw std::invalid_argument(std::string(what) + ": length mismatch");
  }
}

using ByteTable = std::array<std::array<std::uint8_t, 256>, 256>;

// Byte-level DNA tables built once from the nucleotide algebra.
struct DnaTables {
  ByteTable add{};  // [plain][key]
  ByteTable sub{};  // [cipher][key]
  std::array<std::uint8_t, 256> complement{};

  DnaTables() {
    for (int a = 0; a < 256; ++a) {
      const auto da = dna::encode_byte(static_cast<std::uint8_t>(a));
      complement[a] = dna::decode_byte(dna::dna_complement(da));
      for (int k = 0; k < 256; ++k) {
        const auto dk = dna::encode_byte(static_cast<std::uint8_t>(k));
        add[a][k] = dna::decode_byte(dna::dna_add(da, dk));
        sub[a][k] = dna::decode_byte(dna::dna_sub(da, dk));
      }
    }
  }
};

const DnaTables& tables() {
  static const DnaTables t;
  return t;
}

std::ptrdiff_t ssize(std::size_t n) { return static_cast<std::ptrdiff_t>(n); }

}  // namespace

void quantize_multipliers(std::span<const double> stream, std::span<double> out) {
  require_same_length(stream.size(), out, "quantize_multipliers");
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < ssize(stream.size()); ++i) {
    out[i] = to_multiplier(stream[i]);
  }
}

void quantize_units(std::span<const double> stream, std::span<double> out) {
  require_same_length(stream.size(), out, "quantize_units");
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < ssize(stream.size()); ++i) {
    out[i] = to_unit(stream[i]);
  }
}

void quantize_bytes(std::span<const double> stream, std::span<std::uint8_t> out) {
  require_same_length(stream.size(), out, "quantize_bytes");
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < ssize(stream.size()); ++i) {
    out[i] = to_byte(stream[i]);
  }
}

void quantize_bits(std::span<const double> stream, std::span<std::uint8_t> out) {
  require_same_length(stream.size(), out, "quantize_bits");
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < ssize(stream.size()); ++i) {
    out[i] = to_bit(stream[i]);
  }
}

void scale(std::span<double> coords, std::span<const double> multipliers, Direction dir) {
  require_same_length(coords.size(), multipliers, "scale");
  const std::ptrdiff_t n = ssize(coords.size());
  if (dir == Direction::Encrypt) {
#pragma omp parallel for simd schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) coords[i] *= multipliers[i];
  } else {
#pragma omp parallel for simd schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) coords[i] /= multipliers[i];
  }
}

std::vector<std::size_t> argsort(std::span<const double> keys) {
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // libstdc++ parallel mode: OpenMP multiway mergesort, stable
  __gnu_parallel::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return keys[a] < keys[b];
  });
  return order;
}

void dna_cipher(std::span<std::uint8_t> bytes, std::span<const std::uint8_t> key,
                std::span<const std::uint8_t> mask, Direction dir) {
  require_same_length(bytes.size(), key, "dna_cipher key");
  require_same_length(bytes.size(), mask, "dna_cipher mask");
  const DnaTables& t = tables();
  const std::ptrdiff_t n = ssize(bytes.size());
  if (dir == Direction::Encrypt) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const std::uint8_t s = t.add[bytes[i]][key[i]];
      bytes[i] = mask[i] ? t.complement[s] : s;
    }
  } else {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const std::uint8_t s = mask[i] ? t.complement[bytes[i]] : bytes[i];
      bytes[i] = t.sub[s][key[i]];
    }
  }
}

}  // namespace lucrypt::kernels::omp
