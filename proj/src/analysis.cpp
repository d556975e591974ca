#include "lucrypt/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>

#include "lucrypt/cipher.hpp"

namespace lucrypt::analysis {

namespace {

struct Bounds {
  Vec3 lo{};
  Vec3 hi{};
};

Bounds bounding_box(std::span<const Vec3> vertices) {
  Bounds b{vertices.front(), vertices.front()};
  for (const Vec3& v : vertices) {
    for (int a = 0; a < 3; ++a) {
      b.lo[a] = std::min(b.lo[a], v[a]);
      b.hi[a] = std::max(b.hi[a], v[a]);
    }
  }
  return b;
}

std::size_t bin_of(double v, double lo, double hi, std::size_t bins) {
  const double extent = hi - lo;
  if (!(extent > 0.0)) return 0;
  const double t = (v - lo) / extent * static_cast<double>(bins);
  if (!(t > 0.0)) return 0;
  return std::min(static_cast<std::size_t>(t), bins - 1);
}

bool close_relative(double a, double b, double tol) {
  if (a == b) return true;
  return std::fabs(a - b) <= tol * std::max(std::fabs(a), std::fabs(b));
}

}  // namespace

std::size_t OccupancyLattice::total_occupied() const {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), 1));
}

std::vector<std::vector<std::size_t>> OccupancyLattice::column_counts(int axis) const {
  if (axis < 0 || axis > 2) throw AnalysisError("axis must be 0, 1 or 2");
  const std::size_t r = resolution_;
  std::vector<std::vector<std::size_t>> counts(r, std::vector<std::size_t>(r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = 0; k < r; ++k) {
        if (!occupied(i, j, k)) continue;
        switch (axis) {
          case 0: ++counts[j][k]; break;
          case 1: ++counts[i][k]; break;
          default: ++counts[i][j]; break;
        }
      }
    }
  }
  return counts;
}

OccupancyLattice occupancy(std::span<const Vec3> vertices, std::size_t resolution) {
  if (resolution == 0) throw AnalysisError("lattice resolution must be at least 1");
  if (vertices.empty()) throw AnalysisError("occupancy of an empty vertex set");

  const Bounds b = bounding_box(vertices);
  OccupancyLattice lattice(resolution);
  for (const Vec3& v : vertices) {
    lattice.mark(bin_of(v[0], b.lo[0], b.hi[0], resolution),
                 bin_of(v[1], b.lo[1], b.hi[1], resolution),
                 bin_of(v[2], b.lo[2], b.hi[2], resolution));
  }
  return lattice;
}

std::array<AxisHistogram, 3> coordinate_histogram(std::span<const Vec3> vertices,
                                                  std::size_t bins) {
  if (bins == 0) throw AnalysisError("histogram needs at least one bin");
  std::array<AxisHistogram, 3> h;
  for (auto& axis : h) axis.counts.assign(bins, 0);
  if (vertices.empty()) return h;

  const Bounds b = bounding_box(vertices);
  for (int a = 0; a < 3; ++a) {
    h[a].min = b.lo[a];
    h[a].max = b.hi[a];
  }
  for (const Vec3& v : vertices) {
    for (int a = 0; a < 3; ++a) ++h[a].counts[bin_of(v[a], b.lo[a], b.hi[a], bins)];
  }
  return h;
}

double byte_entropy(const RgbImage& img) {
  std::array<std::size_t, 256> hist{};
  for (const Rgb& p : img.pixels) {
    ++hist[p.r];
    ++hist[p.g];
    ++hist[p.b];
  }
  const double total = static_cast<double>(img.pixels.size() * 3);
  if (total == 0.0) return 0.0;
  double h = 0.0;
  for (std::size_t c : hist) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / total;
    h -= p * std::log2(p);
  }
  return std::max(h, 0.0);
}

double pearson(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.empty()) {
    throw AnalysisError("pearson: inputs must be non-empty and equal length");
  }
  const double n = static_cast<double>(a.size());
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  if (saa == 0.0 || sbb == 0.0) return 0.0;
  return sab / std::sqrt(saa * sbb);
}

DiffReport diff_models(const TexturedModel& model_a, const RgbImage& tex_a,
                       const TexturedModel& model_b, const RgbImage& tex_b, double tol) {
  DiffReport r;

  const auto& va = model_a.vertices;
  const auto& vb = model_b.vertices;
  const std::size_t nv = std::max(va.size(), vb.size());
  if (nv > 0) {
    std::size_t match = 0;
    for (std::size_t i = 0; i < std::min(va.size(), vb.size()); ++i) {
      if (close_relative(va[i][0], vb[i][0], tol) && close_relative(va[i][1], vb[i][1], tol) &&
          close_relative(va[i][2], vb[i][2], tol)) {
        ++match;
      }
    }
    r.vertex_match_fraction = static_cast<double>(match) / static_cast<double>(nv);
  }

  r.faces_equal = model_a.faces == model_b.faces;
  std::vector<Corner> ca, cb;
  for (const Face& f : model_a.faces) ca.insert(ca.end(), f.begin(), f.end());
  for (const Face& f : model_b.faces) cb.insert(cb.end(), f.begin(), f.end());
  const std::size_t nc = std::max(ca.size(), cb.size());
  if (nc > 0) {
    std::size_t match = 0;
    for (std::size_t i = 0; i < std::min(ca.size(), cb.size()); ++i) match += ca[i] == cb[i];
    r.corner_match_fraction = static_cast<double>(match) / static_cast<double>(nc);
  }

  if (tex_a.width != tex_b.width || tex_a.height != tex_b.height) {
    r.texture_byte_match_fraction = 0.0;
  } else if (!tex_a.pixels.empty()) {
    std::size_t match = 0;
    for (std::size_t i = 0; i < tex_a.pixels.size(); ++i) {
      const Rgb& p = tex_a.pixels[i];
      const Rgb& q = tex_b.pixels[i];
      match += (p.r == q.r) + (p.g == q.g) + (p.b == q.b);
    }
    r.texture_byte_match_fraction =
        static_cast<double>(match) / static_cast<double>(3 * tex_a.pixels.size());
  }
  return r;
}

std::pair<TexturedModel, RgbImage> synthesize_model(std::size_t vertex_count,
                                                    std::size_t texture_edge,
                                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  std::uniform_real_distribution<double> uv(0.0, 1.0);
  std::uniform_int_distribution<int> byte(0, 255);

  TexturedModel m;
  m.vertices.resize(vertex_count);
  m.texcoords.resize(vertex_count);
  for (std::size_t i = 0; i < vertex_count; ++i) {
    m.vertices[i] = {coord(rng), coord(rng), coord(rng)};
    m.texcoords[i] = {uv(rng), uv(rng)};
  }
  if (vertex_count > 0) {
    std::uniform_int_distribution<std::int64_t> idx(1, static_cast<std::int64_t>(vertex_count));
    m.faces.resize(2 * vertex_count);
    for (Face& f : m.faces) {
      for (int c = 0; c < 3; ++c) {
        const std::int64_t v = idx(rng);
        f.push_back({v, v, std::nullopt});
      }
    }
  }

  RgbImage tex(texture_edge, texture_edge);
  for (Rgb& p : tex.pixels) {
    p = {static_cast<std::uint8_t>(byte(rng)), static_cast<std::uint8_t>(byte(rng)),
         static_cast<std::uint8_t>(byte(rng))};
  }
  return {std::move(m), std::move(tex)};
}

std::vector<BenchRow> bench(std::span<const std::size_t> vertex_counts, std::size_t repeats) {
  using clock = std::chrono::steady_clock;
  const KeyBundle keys = KeyBundle::defaults();
  std::vector<BenchRow> rows;
  rows.reserve(vertex_counts.size());

  for (std::size_t n : vertex_counts) {
    const auto [model, tex] = synthesize_model(n, 256, 0x5eed + n);
    BenchRow row{n, std::numeric_limits<double>::infinity(),
                 std::numeric_limits<double>::infinity()};
    for (std::size_t rep = 0; rep < std::max<std::size_t>(repeats, 1); ++rep) {
      const auto t0 = clock::now();
      const CipherText ct = encrypt_model(model, tex, keys);
      const auto t1 = clock::now();
      const auto plain = decrypt_model(ct, keys);
      const auto t2 = clock::now();
      row.encrypt_seconds =
          std::min(row.encrypt_seconds, std::chrono::duration<double>(t1 - t0).count());
      row.decrypt_seconds =
          std::min(row.decrypt_seconds, std::chrono::duration<double>(t2 - t1).count());
      if (plain.first.vertices.size() != n) throw AnalysisError("bench round trip failed");
    }
    rows.push_back(row);
  }
  return rows;
}

double KeySpace::bits() const {
  return static_cast<double>(key_values * decimal_digits) * std::log2(10.0);
}

long KeySpace::rounded_bits() const { return std::lround(bits()); }

}  // namespace lucrypt::analysis
