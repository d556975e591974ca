#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lucrypt/chaos.hpp"

namespace lucrypt {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Vec3 = std::array<double, 3>;
using Vec2 = std::array<double, 2>;

/// One face slot. Indices are 1-based, as written in OBJ.
struct Corner {
  std::int64_t vertex = 0;
  std::optional<std::int64_t> texcoord;
  std::optional<std::int64_t> normal;

  friend bool operator==(const Corner&, const Corner&) = default;
};

using Face = std::vector<Corner>;

/// Opaque OBJ line kept verbatim. Lines seen before the first geometry
/// record form the header; the rest are re-emitted after the geometry.
struct PassthroughLine {
  std::string text;
  bool header = true;

  friend bool operator==(const PassthroughLine&, const PassthroughLine&) = default;
};

struct TexturedModel {
  std::vector<Vec3> vertices;
  std::vector<Vec2> texcoords;
  std::vector<Vec3> normals;
  std::vector<Face> faces;
  std::vector<PassthroughLine> passthrough;

  std::size_t corner_count() const;
  // Throws FormatError on out-of-range indices or faces with < 3 corners.
  void validate() const;

  friend bool operator==(const TexturedModel&, const TexturedModel&) = default;
};

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

struct RgbImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<Rgb> pixels;  // row-major

  RgbImage() = default;
  RgbImage(std::size_t w, std::size_t h, Rgb fill = {})
      : width(w), height(h), pixels(w * h, fill) {}

  Rgb& at(std::size_t x, std::size_t y) { return pixels[y * width + x]; }
  const Rgb& at(std::size_t x, std::size_t y) const { return pixels[y * width + x]; }

  friend bool operator==(const RgbImage&, const RgbImage&) = default;
};

/// The twelve secret reals: one Lu initial condition per keystream.
struct KeyBundle {
  LuKey vertices{-6.045, 2.668, 16.363};
  LuKey polygons{-5.045, 2.668, 16.363};
  LuKey texture1{-6.045, 2.668, 20.363};
  LuKey texture2{-5.045, 3.668, 16.363};

  static KeyBundle defaults() { return {}; }
  friend bool operator==(const KeyBundle&, const KeyBundle&) = default;
};

TexturedModel parse_obj(std::string_view text);
std::string write_obj(const TexturedModel& model);

RgbImage parse_ppm(std::string_view bytes);
std::string write_ppm(const RgbImage& img);

KeyBundle parse_keyfile(std::string_view text);
std::string write_keyfile(const KeyBundle& kb);

// 17 significant digits; parses back to the identical double.
std::string format_real(double v);
// Shortest string that parses back to the identical double.
std::string format_real_shortest(double v);

// File helpers; errors name the offending path.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view data);

TexturedModel load_obj(const std::filesystem::path& path);
RgbImage load_ppm(const std::filesystem::path& path);
KeyBundle load_keyfile(const std::filesystem::path& path);

}  // namespace lucrypt
