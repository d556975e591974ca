#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lucrypt::dna {

/// One DNA symbol. The enumerator value is its 2-bit code.
enum class Nucleotide : std::uint8_t { A = 0b00, G = 0b01, C = 0b10, T = 0b11 };

inline constexpr std::array<Nucleotide, 4> kAllNucleotides = {
    Nucleotide::A, Nucleotide::G, Nucleotide::C, Nucleotide::T};

char symbol(Nucleotide n);
// Throws std::invalid_argument for anything outside {A, G, C, T}.
Nucleotide from_symbol(char c);

/// Four nucleotides, most significant bit pair first.
using DnaByte = std::array<Nucleotide, 4>;

DnaByte encode_byte(std::uint8_t b);
// Checked overload for values arriving as wider integers.
DnaByte encode_byte(int b);
std::uint8_t decode_byte(const DnaByte& d);

std::string to_string(const DnaByte& d);
DnaByte dna_byte_from_string(const std::string& s);

Nucleotide dna_add(Nucleotide a, Nucleotide b);
// Group inverse of dna_add: the unique n with dna_add(n, b) == a.
Nucleotide dna_sub(Nucleotide a, Nucleotide b);
Nucleotide dna_complement(Nucleotide n);

DnaByte dna_add(const DnaByte& a, const DnaByte& b);
DnaByte dna_sub(const DnaByte& a, const DnaByte& b);
DnaByte dna_complement(const DnaByte& d);

}  // namespace lucrypt::dna
