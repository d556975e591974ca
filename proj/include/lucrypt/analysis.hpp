#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "lucrypt/formats.hpp"

namespace lucrypt::analysis {

class AnalysisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultResolution = 64;

/// Boolean R x R x R voxel grid over the bounding box of a vertex set.
class OccupancyLattice {
 public:
  explicit OccupancyLattice(std::size_t resolution)
      : resolution_(resolution), cells_(resolution * resolution * resolution, 0) {}

  std::size_t resolution() const { return resolution_; }
  bool occupied(std::size_t i, std::size_t j, std::size_t k) const {
    return cells_[index(i, j, k)] != 0;
  }
  void mark(std::size_t i, std::size_t j, std::size_t k) { cells_[index(i, j, k)] = 1; }
  std::size_t total_occupied() const;

  // counts[a][b] = occupied cells in the column running along `axis`
  // (0 = x, 1 = y, 2 = z), indexed by the two remaining axes in order.
  std::vector<std::vector<std::size_t>> column_counts(int axis) const;
  std::vector<std::vector<std::size_t>> per_column_z() const { return column_counts(2); }

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
    return (i * resolution_ + j) * resolution_ + k;
  }

  std::size_t resolution_;
  std::vector<std::uint8_t> cells_;
};

// Cells span the bounding box; a vertex on the max face lands in the last
// cell, and an axis with zero extent collapses to cell 0.
OccupancyLattice occupancy(std::span<const Vec3> vertices,
                           std::size_t resolution = kDefaultResolution);

struct AxisHistogram {
  double min = 0.0;
  double max = 0.0;
  std::vector<std::size_t> counts;
};

std::array<AxisHistogram, 3> coordinate_histogram(std::span<const Vec3> vertices,
                                                  std::size_t bins);

/// Shannon entropy in bits of the byte histogram over every channel byte.
double byte_entropy(const RgbImage& img);

double pearson(std::span<const double> a, std::span<const double> b);

struct DiffReport {
  double vertex_match_fraction = 1.0;
  bool faces_equal = true;
  // Fraction of flattened face corners equal position by position.
  double corner_match_fraction = 1.0;
  double texture_byte_match_fraction = 1.0;
};

DiffReport diff_models(const TexturedModel& model_a, const RgbImage& tex_a,
                       const TexturedModel& model_b, const RgbImage& tex_b, double tol);

struct BenchRow {
  std::size_t vertex_count = 0;
  double encrypt_seconds = 0.0;
  double decrypt_seconds = 0.0;
};

/// Random model with `vertex_count` vertices, 2 * vertex_count triangles and
/// a texture of the given edge length.
std::pair<TexturedModel, RgbImage> synthesize_model(std::size_t vertex_count,
                                                    std::size_t texture_edge,
                                                    std::uint64_t seed);

// Best of `repeats` timings per size, default keys, 256x256 texture.
std::vector<BenchRow> bench(std::span<const std::size_t> vertex_counts,
                            std::size_t repeats = 3);

struct KeySpace {
  std::size_t key_values = 12;
  std::size_t decimal_digits = 15;

  double log10_size() const { return static_cast<double>(key_values * decimal_digits); }
  double bits() const;
  // Whole-bit strength reported to users.
  long rounded_bits() const;
};

}  // namespace lucrypt::analysis
