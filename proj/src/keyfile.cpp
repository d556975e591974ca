#include <array>
#include <charconv>

#include "lucrypt/formats.hpp"
#include "text_util.hpp"

namespace lucrypt {

namespace {

constexpr std::array<std::string_view, 4> kLabels = {"vertices", "polygons",
                                                     "texture1", "texture2"};

LuKey& slot(KeyBundle& kb, std::size_t i) {
  switch (i) {
    case 0: return kb.vertices;
    case 1: return kb.polygons;
    case 2: return kb.texture1;
    default: return kb.texture2;
  }
}

}  // namespace

std::string format_real(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string format_real_shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

KeyBundle parse_keyfile(std::string_view text) {
  KeyBundle kb;
  std::array<bool, 4> seen{};
  std::size_t line_no = 0;

  for (std::string_view raw : detail::split_lines(text)) {
    ++line_no;
    const std::string_view line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;

    const auto toks = detail::split_ws(line);
    std::size_t which = kLabels.size();
    for (std::size_t i = 0; i < kLabels.size(); ++i) {
      if (toks[0] == kLabels[i]) which = i;
    }
    if (which == kLabels.size()) {
      throw FormatError("key file line " + std::to_string(line_no) + ": unknown label '" +
                        std::string(toks[0]) + "'");
    }
    if (seen[which]) {
      throw FormatError("key file line " + std::to_string(line_no) + ": duplicate label '" +
                        std::string(toks[0]) + "'");
    }
    if (toks.size() != 4) {
      throw FormatError("key file line " + std::to_string(line_no) +
                        ": expected '<label> <x0> <y0> <z0>'");
    }
    LuKey& k = slot(kb, which);
    k.x0 = detail::parse_real(toks[1], line_no);
    k.y0 = detail::parse_real(toks[2], line_no);
    k.z0 = detail::parse_real(toks[3], line_no);
    seen[which] = true;
  }

  for (std::size_t i = 0; i < kLabels.size(); ++i) {
    if (!seen[i]) {
      throw FormatError("key file: missing label '" + std::string(kLabels[i]) + "'");
    }
  }
  return kb;
}

std::string write_keyfile(const KeyBundle& kb) {
  std::string out;
  KeyBundle copy = kb;
  for (std::size_t i = 0; i < kLabels.size(); ++i) {
    const LuKey& k = slot(copy, i);
    out += kLabels[i];
    for (double v : {k.x0, k.y0, k.z0}) {
      out += ' ';
      out += format_real_shortest(v);
    }
    out += '\n';
  }
  return out;
}

KeyBundle load_keyfile(const std::filesystem::path& path) {
  try {
    return parse_keyfile(read_file(path));
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

}  // namespace lucrypt
