#include <charconv>
#include <string>
#include <vector>

#include "lucrypt/formats.hpp"
#include "text_util.hpp"

namespace lucrypt {

std::size_t TexturedModel::corner_count() const {
  std::size_t n = 0;
  for (const Face& f : faces) n += f.size();
  return n;
}

void TexturedModel::validate() const {
  const auto in_range = [](std::int64_t i, std::size_t n) {
    return i >= 1 && static_cast<std::size_t>(i) <= n;
  };
  for (std::size_t fi = 0; fi < faces.size(); ++fi) {
    const Face& f = faces[fi];
    const std::string where = "face " + std::to_string(fi + 1);
    if (f.size() < 3) {
      throw FormatError(where + " has " + std::to_string(f.size()) +
                        " corners; at least 3 required");
    }
    for (const Corner& c : f) {
      if (!in_range(c.vertex, vertices.size())) {
        throw FormatError(where + ": vertex index " + std::to_string(c.vertex) +
                          " out of range [1, " + std::to_string(vertices.size()) + "]");
      }
      if (c.texcoord && !in_range(*c.texcoord, texcoords.size())) {
        throw FormatError(where + ": texcoord index " + std::to_string(*c.texcoord) +
                          " out of range [1, " + std::to_string(texcoords.size()) + "]");
      }
      if (c.normal && !in_range(*c.normal, normals.size())) {
        throw FormatError(where + ": normal index " + std::to_string(*c.normal) +
                          " out of range [1, " + std::to_string(normals.size()) + "]");
      }
    }
  }
}

namespace {

std::int64_t parse_index(std::string_view tok, std::size_t count, std::size_t line_no) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || v == 0) {
    throw FormatError("line " + std::to_string(line_no) + ": bad face index '" +
                      std::string(tok) + "'");
  }
  // negative indices count back from the most recent element
  if (v < 0) v += static_cast<std::int64_t>(count) + 1;
  return v;
}

Corner parse_corner(std::string_view tok, const TexturedModel& m, std::size_t line_no) {
  Corner c;
  const std::size_t s1 = tok.find('/');
  if (s1 == std::string_view::npos) {
    c.vertex = parse_index(tok, m.vertices.size(), line_no);
    return c;
  }
  c.vertex = parse_index(tok.substr(0, s1), m.vertices.size(), line_no);
  const std::string_view rest = tok.substr(s1 + 1);
  const std::size_t s2 = rest.find('/');
  const std::string_view vt = rest.substr(0, s2);
  if (!vt.empty()) c.texcoord = parse_index(vt, m.texcoords.size(), line_no);
  if (s2 != std::string_view::npos) {
    c.normal = parse_index(rest.substr(s2 + 1), m.normals.size(), line_no);
  } else if (vt.empty()) {
    throw FormatError("line " + std::to_string(line_no) + ": bad face corner '" +
                      std::string(tok) + "'");
  }
  return c;
}

template <std::size_t N>
std::array<double, N> parse_reals(const std::vector<std::string_view>& toks,
                                  std::size_t line_no, bool allow_zero_w = false) {
  const std::size_t given = toks.size() - 1;
  if (given != N && !(allow_zero_w && given == N + 1)) {
    throw FormatError("line " + std::to_string(line_no) + ": '" + std::string(toks[0]) +
                      "' expects " + std::to_string(N) + " values, got " +
                      std::to_string(given));
  }
  std::array<double, N> out{};
  for (std::size_t i = 0; i < N; ++i) {
    out[i] = detail::parse_real(toks[i + 1], line_no);
  }
  if (given == N + 1 && detail::parse_real(toks[N + 1], line_no) != 0.0) {
    throw FormatError("line " + std::to_string(line_no) +
                      ": non-zero third texture coordinate is not supported");
  }
  return out;
}

}  // namespace

TexturedModel parse_obj(std::string_view text) {
  TexturedModel m;
  bool seen_geometry = false;
  std::size_t line_no = 0;

  for (std::string_view raw : detail::split_lines(text)) {
    ++line_no;
    if (detail::trim(raw).empty()) continue;

    std::string_view body = raw;
    if (const auto hash = body.find('#'); hash != std::string_view::npos) {
      body = body.substr(0, hash);
    }
    const auto toks = detail::split_ws(body);
    const std::string_view kw = toks.empty() ? std::string_view{} : toks[0];

    if (kw == "v") {
      m.vertices.push_back(parse_reals<3>(toks, line_no));
    } else if (kw == "vt") {
      m.texcoords.push_back(parse_reals<2>(toks, line_no, true));
    } else if (kw == "vn") {
      m.normals.push_back(parse_reals<3>(toks, line_no));
    } else if (kw == "f") {
      if (toks.size() < 4) {
        throw FormatError("line " + std::to_string(line_no) + ": face has " +
                          std::to_string(toks.size() - 1) +
                          " corners; at least 3 required");
      }
      Face f;
      f.reserve(toks.size() - 1);
      for (std::size_t i = 1; i < toks.size(); ++i) {
        f.push_back(parse_corner(toks[i], m, line_no));
      }
      m.faces.push_back(std::move(f));
    } else {
      m.passthrough.push_back({std::string(raw), !seen_geometry});
      continue;
    }
    seen_geometry = true;
  }

  m.validate();
  return m;
}

std::string write_obj(const TexturedModel& m) {
  std::string out;
  out.reserve(m.vertices.size() * 64 + m.corner_count() * 12);

  for (const auto& p : m.passthrough) {
    if (p.header) (out += p.text) += '\n';
  }
  for (const Vec3& v : m.vertices) {
    out += "v ";
    out += format_real(v[0]); out += ' ';
    out += format_real(v[1]); out += ' ';
    out += format_real(v[2]); out += '\n';
  }
  for (const Vec2& t : m.texcoords) {
    out += "vt ";
    out += format_real(t[0]); out += ' ';
    out += format_real(t[1]); out += '\n';
  }
  for (const Vec3& n : m.normals) {
    out += "vn ";
    out += format_real(n[0]); out += ' ';
    out += format_real(n[1]); out += ' ';
    out += format_real(n[2]); out += '\n';
  }
  for (const Face& f : m.faces) {
    out += 'f';
    for (const Corner& c : f) {
      out += ' ';
      out += std::to_string(c.vertex);
      if (c.texcoord || c.normal) {
        out += '/';
        if (c.texcoord) out += std::to_string(*c.texcoord);
        if (c.normal) (out += '/') += std::to_string(*c.normal);
      }
    }
    out += '\n';
  }
  for (const auto& p : m.passthrough) {
    if (!p.header) (out += p.text) += '\n';
  }
  return out;
}

TexturedModel load_obj(const std::filesystem::path& path) {
  try {
    return parse_obj(read_file(path));
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

}  // namespace lucrypt
