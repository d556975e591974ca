// Regenerates the bundled fixtures in data/:
//   torus.obj / torus.ppm     triangulated torus with texcoords and normals
//   terrain.obj / terrain.ppm quad heightfield patch
//   default.key               the default key bundle
//
// Usage: make_fixtures <data-dir>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numbers>
#include <random>
#include <vector>

#include "lucrypt/formats.hpp"

namespace {

using namespace lucrypt;

// Smooth value noise on a periodic lattice, summed over octaves.
class ValueNoise {
 public:
  explicit ValueNoise(std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (double& v : lattice_) v = u(rng);
  }

  double operator()(double x, double y) const {
    double sum = 0.0, amp = 0.5, freq = 4.0;
    for (int o = 0; o < 5; ++o) {
      sum += amp * sample(x * freq, y * freq, static_cast<int>(freq));
      amp *= 0.5;
      freq *= 2.0;
    }
    return sum;
  }

 private:
  static constexpr int kSize = 256;

  double at(int i, int j) const { return lattice_[(j & (kSize - 1)) * kSize + (i & (kSize - 1))]; }

  double sample(double x, double y, int period) const {
    const int x0 = static_cast<int>(std::floor(x)), y0 = static_cast<int>(std::floor(y));
    const double fx = x - x0, fy = y - y0;
    const double sx = fx * fx * (3 - 2 * fx), sy = fy * fy * (3 - 2 * fy);
    // wrap to the octave's period, offset so octaves read disjoint lattice rows
    auto w = [&](int i, int j) {
      return at(((i % period) + period) % period, ((j % period) + period) % period + period);
    };
    const double a = w(x0, y0) + sx * (w(x0 + 1, y0) - w(x0, y0));
    const double b = w(x0, y0 + 1) + sx * (w(x0 + 1, y0 + 1) - w(x0, y0 + 1));
    return a + sy * (b - a);
  }

  std::vector<double> lattice_ = std::vector<double>(kSize * kSize);
};

std::uint8_t clamp_byte(double v) {
  return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
}

RgbImage marble_texture(std::size_t edge, std::uint32_t seed) {
  const ValueNoise noise(seed);
  RgbImage img(edge, edge);
  for (std::size_t y = 0; y < edge; ++y) {
    for (std::size_t x = 0; x < edge; ++x) {
      const double u = static_cast<double>(x) / edge, v = static_cast<double>(y) / edge;
      const double n = noise(u, v);
      const double vein = 0.5 + 0.5 * std::sin(2 * std::numbers::pi * (3 * u + 4 * n));
      img.at(x, y) = {clamp_byte(90 + 150 * vein), clamp_byte(70 + 120 * vein * n + 40 * n),
                      clamp_byte(60 + 90 * n)};
    }
  }
  return img;
}

RgbImage terrain_texture(std::size_t edge, std::uint32_t seed) {
  const ValueNoise noise(seed);
  RgbImage img(edge, edge);
  for (std::size_t y = 0; y < edge; ++y) {
    for (std::size_t x = 0; x < edge; ++x) {
      const double h = noise(static_cast<double>(x) / edge, static_cast<double>(y) / edge);
      if (h < 0.42) {
        img.at(x, y) = {clamp_byte(30 + 40 * h), clamp_byte(60 + 90 * h), clamp_byte(140 + 160 * h)};
      } else if (h < 0.6) {
        img.at(x, y) = {clamp_byte(50 + 100 * h), clamp_byte(110 + 120 * h), clamp_byte(40 + 30 * h)};
      } else {
        img.at(x, y) = {clamp_byte(120 + 160 * h), clamp_byte(110 + 150 * h), clamp_byte(100 + 140 * h)};
      }
    }
  }
  return img;
}

TexturedModel torus(std::size_t rings, std::size_t sides) {
  constexpr double kMajor = 1.0, kMinor = 0.35;
  const double two_pi = 2 * std::numbers::pi;
  TexturedModel m;
  m.passthrough = {{"# torus fixture", true}, {"mtllib torus.mtl", true},
                   {"o torus", true}, {"usemtl marble", true}};
  for (std::size_t i = 0; i <= rings; ++i) {
    for (std::size_t j = 0; j <= sides; ++j) {
      const double u = two_pi * i / rings, v = two_pi * j / sides;
      if (i < rings && j < sides) {
        const double r = kMajor + kMinor * std::cos(v);
        m.vertices.push_back({r * std::cos(u), r * std::sin(u), kMinor * std::sin(v)});
        m.normals.push_back({std::cos(v) * std::cos(u), std::cos(v) * std::sin(u), std::sin(v)});
      }
      m.texcoords.push_back({static_cast<double>(i) / rings, static_cast<double>(j) / sides});
    }
  }
  auto vid = [&](std::size_t i, std::size_t j) {
    return static_cast<std::int64_t>((i % rings) * sides + (j % sides) + 1);
  };
  auto tid = [&](std::size_t i, std::size_t j) {
    return static_cast<std::int64_t>(i * (sides + 1) + j + 1);
  };
  for (std::size_t i = 0; i < rings; ++i) {
    for (std::size_t j = 0; j < sides; ++j) {
      const Corner a{vid(i, j), tid(i, j), vid(i, j)};
      const Corner b{vid(i + 1, j), tid(i + 1, j), vid(i + 1, j)};
      const Corner c{vid(i + 1, j + 1), tid(i + 1, j + 1), vid(i + 1, j + 1)};
      const Corner d{vid(i, j + 1), tid(i, j + 1), vid(i, j + 1)};
      m.faces.push_back({a, b, c});
      m.faces.push_back({a, c, d});
    }
  }
  return m;
}

TexturedModel terrain(std::size_t n, std::uint32_t seed) {
  const ValueNoise noise(seed);
  TexturedModel m;
  m.passthrough = {{"# terrain fixture", true}, {"mtllib terrain.mtl", true},
                   {"g terrain", true}, {"usemtl ground", true}, {"s 1", true}};
  for (std::size_t y = 0; y <= n; ++y) {
    for (std::size_t x = 0; x <= n; ++x) {
      const double u = static_cast<double>(x) / n, v = static_cast<double>(y) / n;
      m.vertices.push_back({10.0 * u, 10.0 * v, 3.0 * noise(u, v)});
      m.texcoords.push_back({u, v});
    }
  }
  auto id = [&](std::size_t x, std::size_t y) {
    return static_cast<std::int64_t>(y * (n + 1) + x + 1);
  };
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      Face f;
      for (auto [cx, cy] : {std::pair{x, y}, {x + 1, y}, {x + 1, y + 1}, {x, y + 1}}) {
        f.push_back({id(cx, cy), id(cx, cy), std::nullopt});
      }
      m.faces.push_back(std::move(f));
    }
  }
  m.passthrough.push_back({"# end of terrain", false});
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: make_fixtures <data-dir>\n");
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  write_file(dir / "torus.obj", write_obj(torus(96, 48)));
  write_file(dir / "torus.ppm", write_ppm(marble_texture(128, 7)));
  write_file(dir / "terrain.obj", write_obj(terrain(64, 11)));
  write_file(dir / "terrain.ppm", write_ppm(terrain_texture(96, 11)));
  write_file(dir / "default.key", write_keyfile(KeyBundle::defaults()));
  return 0;
}
