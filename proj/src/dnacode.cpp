#include "lucrypt/dnacode.hpp"

namespace lucrypt::dna {

namespace {

using N = Nucleotide;

constexpr std::size_t idx(N n) { return static_cast<std::size_t>(n); }

// Addition table indexed by [a][b] in code order A, G, C, T.
// C is the identity and every symbol is its own inverse.
constexpr std::array<std::array<N, 4>, 4> kAdd = {{
    /* A */ {N::C, N::T, N::A, N::G},
    /* G */ {N::T, N::C, N::G, N::A},
    /* C */ {N::A, N::G, N::C, N::T},
    /* T */ {N::G, N::A, N::T, N::C},
}};

// Inverse table derived from kAdd, so decryption always undoes encryption.
constexpr std::array<std::array<N, 4>, 4> make_sub() {
  std::array<std::array<N, 4>, 4> sub{};
  for (N a : kAllNucleotides) {
    for (N b : kAllNucleotides) {
      sub[idx(kAdd[idx(a)][idx(b)])][idx(b)] = a;
    }
  }
  return sub;
}

constexpr auto kSub = make_sub();

}  // namespace

char symbol(Nucleotide n) {
  constexpr char kSymbols[4] = {'A', 'G', 'C', 'T'};
  return kSymbols[idx(n)];
}

Nucleotide from_symbol(char c) {
  switch (c) {
    case 'A': return N::A;
    case 'G': return N::G;
    case 'C': return N::C;
    case 'T': return N::T;
    default:
      throw std::invalid_argument(std::string("not a nucleotide symbol: '") +
                                  c + "'");
  }
}

DnaByte encode_byte(std::uint8_t b) {
  return {static_cast<N>((b >> 6) & 3), static_cast<N>((b >> 4) & 3),
          static_cast<N>((b >> 2) & 3), static_cast<N>(b & 3)};
}

DnaByte encode_byte(int b) {
  if (b < 0 || b > 255) {
    throw std::out_of_range("byte value out of range: " + std::to_string(b));
  }
  return encode_byte(static_cast<std::uint8_t>(b));
}

std::uint8_t decode_byte(const DnaByte& d) {
  return static_cast<std::uint8_t>((idx(d[0]) << 6) | (idx(d[1]) << 4) |
                                   (idx(d[2]) << 2) | idx(d[3]));
}

std::string to_string(const DnaByte& d) {
  return {symbol(d[0]), symbol(d[1]), symbol(d[2]), symbol(d[3])};
}

DnaByte dna_byte_from_string(const std::string& s) {
  if (s.size() != 4) {
    throw std::invalid_argument("DNA byte needs exactly 4 symbols: " + s);
  }
  return {from_symbol(s[0]), from_symbol(s[1]), from_symbol(s[2]),
          from_symbol(s[3])};
}

Nucleotide dna_add(Nucleotide a, Nucleotide b) { return kAdd[idx(a)][idx(b)]; }

Nucleotide dna_sub(Nucleotide a, Nucleotide b) { return kSub[idx(a)][idx(b)]; }

Nucleotide dna_complement(Nucleotide n) {
  // A<->T and G<->C flip both bits of the code.
  return static_cast<N>(idx(n) ^ 0b11);
}

DnaByte dna_add(const DnaByte& a, const DnaByte& b) {
  return {dna_add(a[0], b[0]), dna_add(a[1], b[1]), dna_add(a[2], b[2]),
          dna_add(a[3], b[3])};
}

DnaByte dna_sub(const DnaByte& a, const DnaByte& b) {
  return {dna_sub(a[0], b[0]), dna_sub(a[1], b[1]), dna_sub(a[2], b[2]),
          dna_sub(a[3], b[3])};
}

DnaByte dna_complement(const DnaByte& d) {
  return {dna_complement(d[0]), dna_complement(d[1]), dna_complement(d[2]),
          dna_complement(d[3])};
}

}  // namespace lucrypt::dna
