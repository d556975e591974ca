#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "lucrypt/formats.hpp"

namespace lucrypt {

namespace {

// Cursor over a PPM header: whitespace and '#' comments separate tokens.
class HeaderReader {
 public:
  explicit HeaderReader(std::string_view bytes) : bytes_(bytes) {}

  std::size_t next_uint(const char* what) {
    skip_separators();
    const std::size_t start = pos_;
    while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      ++pos_;
    }
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(bytes_.data() + start, bytes_.data() + pos_, v);
    if (start == pos_ || ec != std::errc()) {
      throw FormatError(std::string("PPM: bad ") + what);
    }
    return v;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  std::size_t raster_offset() {
    if (pos_ >= bytes_.size() || !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
      throw FormatError("PPM: missing separator before pixel data");
    }
    return pos_ + 1;
  }

 private:
  void skip_separators() {
    while (pos_ < bytes_.size()) {
      const char c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view bytes_;
  std::size_t pos_ = 2;
};

}  // namespace

RgbImage parse_ppm(std::string_view bytes) {
  if (bytes.size() < 2 || bytes.substr(0, 2) != "P6") {
    throw FormatError("PPM: expected magic 'P6'");
  }
  HeaderReader hdr(bytes);
  const std::size_t width = hdr.next_uint("width");
  const std::size_t height = hdr.next_uint("height");
  const std::size_t maxval = hdr.next_uint("maxval");
  if (width == 0 || height == 0) {
    throw FormatError("PPM: image dimensions must be positive");
  }
  if (maxval != 255) {
    throw FormatError("PPM: only maxval 255 is supported, got " + std::to_string(maxval));
  }
  const std::size_t offset = hdr.raster_offset();
  const std::size_t needed = width * height * 3;
  if (bytes.size() - offset < needed) {
    throw FormatError("PPM: truncated pixel data (" + std::to_string(bytes.size() - offset) +
                      " of " + std::to_string(needed) + " bytes)");
  }

  RgbImage img(width, height);
  const auto* p = reinterpret_cast<const std::uint8_t*>(bytes.data() + offset);
  for (Rgb& px : img.pixels) {
    px = {p[0], p[1], p[2]};
    p += 3;
  }
  return img;
}

std::string write_ppm(const RgbImage& img) {
  std::string out = "P6\n" + std::to_string(img.width) + ' ' +
                    std::to_string(img.height) + "\n255\n";
  out.reserve(out.size() + img.pixels.size() * 3);
  for (const Rgb& px : img.pixels) {
    out += static_cast<char>(px.r);
    out += static_cast<char>(px.g);
    out += static_cast<char>(px.b);
  }
  return out;
}

RgbImage load_ppm(const std::filesystem::path& path) {
  try {
    return parse_ppm(read_file(path));
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FormatError("cannot open '" + path.string() + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return std::move(ss).str();
}

void write_file(const std::filesystem::path& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw FormatError("cannot write '" + path.string() + "'");
  }
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) {
    throw FormatError("short write to '" + path.string() + "'");
  }
}

}  // namespace lucrypt
