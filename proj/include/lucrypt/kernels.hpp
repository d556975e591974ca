#pragma once

// Data-parallel inner loops of the three phase ciphers.
//
// Every kernel exists twice with identical signatures: `serial` is the
// reference (its texture path walks nucleotides one at a time), `omp` is the
// OpenMP version the cipher uses by default. Tests require both to agree
// bit-for-bit; bench/ compares their speed.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lucrypt::kernels {

enum class Direction { Encrypt, Decrypt };

namespace serial {

// stream -> to_multiplier / to_unit / to_byte / to_bit, element-wise
void quantize_multipliers(std::span<const double> stream, std::span<double> out);
void quantize_units(std::span<const double> stream, std::span<double> out);
void quantize_bytes(std::span<const double> stream, std::span<std::uint8_t> out);
void quantize_bits(std::span<const double> stream, std::span<std::uint8_t> out);

// coords[j] *= m[j] when encrypting, /= m[j] when decrypting
void scale(std::span<double> coords, std::span<const double> multipliers, Direction dir);

// Stable ascending argsort.
std::vector<std::size_t> argsort(std::span<const double> keys);

// Encrypt: DNA-add the key byte, then complement all four nucleotides where
// mask is 1. Decrypt undoes both steps in reverse order.
void dna_cipher(std::span<std::uint8_t> bytes, std::span<const std::uint8_t> key,
                std::span<const std::uint8_t> mask, Direction dir);

}  // namespace serial

namespace omp {

// stream -> to_multiplier / to_unit / to_byte / to_bit, element-wise
void quantize_multipliers(std::span<const double> stream, std::span<double> out);
void quantize_units(std::span<const double> stream, std::span<double> out);
void quantize_bytes(std::span<const double> stream, std::span<std::uint8_t> out);
void quantize_bits(std::span<const double> stream, std::span<std::uint8_t> out);

// coords[j] *= m[j] when encrypting, /= m[j] when decrypting
void scale(std::span<double> coords, std::span<const double> multipliers, Direction dir);

// Stable ascending argsort.
std::vector<std::size_t> argsort(std::span<const double> keys);

// Encrypt: DNA-add the key byte, then complement all four nucleotides where
// mask is 1. Decrypt undoes both steps in reverse order.
void dna_cipher(std::span<std::uint8_t> bytes, std::span<const std::uint8_t> key,
                std::span<const std::uint8_t> mask, Direction dir);

}  // namespace omp

}  // namespace lucrypt::kernels
