#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "lucrypt/chaos.hpp"
#include "lucrypt/dnacode.hpp"
#include "lucrypt/kernels.hpp"

namespace lucrypt::kernels::serial {

namespace {

template <class T>
void require_same_length(std::size_t a, std::span<T> b, const char* what) {
  if (a != b.size()) {
    throw std::invalid_argument(std::string(what) + ": length mismatch");
  }
}

}  // namespace

void quantize_multipliers(std::span<const double> stream, std::span<double> out) {
  require_same_length(stream.size(), out, "quantize_multipliers");
  for (std::size_t i = 0; i < stream.size(); ++i) out[i] = to_multiplier(stream[i]);
}

void quantize_units(std::span<const double> stream, std::span<double> out) {
  require_same_length(stream.size(), out, "quantize_units");
  for (std::size_t i = 0; i < stream.size(); ++i) out[i] = to_unit(stream[i]);
}

void quantize_bytes(std::span<const double> stream, std::span<std::uint8_t> out) {
  require_same_length(stream.size(), out, "quantize_bytes");
  for (std::size_t i = 0; i < stream.size(); ++i) out[i] = to_byte(stream[i]);
}

void quantize_bits(std::span<const double> stream, std::span<std::uint8_t> out) {
  require_same_length(stream.size(), out, "quantize_bits");
  for (std::size_t i = 0; i < stream.size(); ++i) out[i] = to_bit(stream[i]);
}

void scale(std::span<double> coords, std::span<const double> multipliers, Direction dir) {
  require_same_length(coords.size(), multipliers, "scale");
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (dir == Direction::Encrypt) {
      coords[i] *= multipliers[i];
    } else {
      coords[i] /= multipliers[i];
    }
  }
}

std::vector<std::size_t> argsort(std::span<const double> keys) {
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  return order;
}

void dna_cipher(std::span<std::uint8_t> bytes, std::span<const std::uint8_t> key,
                std::span<const std::uint8_t> mask, Direction dir) {
  require_same_length(bytes.size(), key, "dna_cipher key");
  require_same_length(bytes.size(), mask, "dna_cipher mask");
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    dna::DnaByte d = dna::encode_byte(bytes[i]);
    const dna::DnaByte k = dna::encode_byte(key[i]);
    if (dir == Direction::Encrypt) {
      d = dna::dna_add(d, k);
      if (mask[i]) d = dna::dna_complement(d);
    } else {
      if (mask[i]) d = dna::dna_complement(d);
      d = dna::dna_sub(d, k);
    }
    bytes[i] = dna::decode_byte(d);
  }
}

}  // namespace lucrypt::kernels::serial
