#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "lucrypt/chaos.hpp"
#include "lucrypt/formats.hpp"
#include "lucrypt/kernels.hpp"

namespace lucrypt {

using kernels::Direction;

/// Which kernel family runs the data-parallel loops.
enum class Backend { Serial, Parallel };

/// Corner permutation: position r of the ciphertext holds plaintext corner
/// forward[r].
struct PermutationPlan {
  std::vector<std::size_t> forward;

  std::size_t length() const { return forward.size(); }
  bool is_permutation() const;
  std::vector<std::size_t> inverse() const;
};

struct CipherText {
  TexturedModel model;
  RgbImage texture;
};

// --- vertices -------------------------------------------------------------
// Coordinate j of the flattened vertex list is scaled by multipliers[j].
void apply_vertex_multipliers(std::span<Vec3> vertices, std::span<const double> multipliers,
                              Direction dir, Backend backend = Backend::Parallel);
std::vector<double> vertex_multipliers(const LuKey& key, std::size_t vertex_count,
                                       Backend backend = Backend::Parallel);

std::vector<Vec3> encrypt_vertices(std::span<const Vec3> vertices, const LuKey& key,
                                   Backend backend = Backend::Parallel);
std::vector<Vec3> decrypt_vertices(std::span<const Vec3> vertices, const LuKey& key,
                                   Backend backend = Backend::Parallel);

// --- polygons -------------------------------------------------------------
// Stable ascending argsort of the sort keys.
PermutationPlan plan_from_sort_keys(std::span<const double> sort_keys,
                                    Backend backend = Backend::Parallel);
// Sort keys are the unit-quantized polygons keystream.
PermutationPlan plan_from_key(const LuKey& key, std::size_t corner_count,
                              Backend backend = Backend::Parallel);

// Flattens corners, permutes them, and regroups into the original arities.
std::vector<Face> permute_corners(std::span<const Face> faces, const PermutationPlan& plan,
                                  Direction dir);

std::vector<Face> encrypt_polygons(std::span<const Face> faces, const LuKey& key,
                                   Backend backend = Backend::Parallel);
std::vector<Face> decrypt_polygons(std::span<const Face> faces, const LuKey& key,
                                   Backend backend = Backend::Parallel);

// --- texture --------------------------------------------------------------
// Byte order is the R plane, then G, then B, each row-major.
std::vector<std::uint8_t> to_planes(const RgbImage& img);
RgbImage from_planes(std::size_t width, std::size_t height, std::span<const std::uint8_t> planes);

// key_bytes / mask_bits are indexed like to_planes().
RgbImage apply_texture_cipher(const RgbImage& img, std::span<const std::uint8_t> key_bytes,
                              std::span<const std::uint8_t> mask_bits, Direction dir,
                              Backend backend = Backend::Parallel);

RgbImage encrypt_texture(const RgbImage& img, const LuKey& key_image, const LuKey& mask,
                         Backend backend = Backend::Parallel);
RgbImage decrypt_texture(const RgbImage& img, const LuKey& key_image, const LuKey& mask,
                         Backend backend = Backend::Parallel);

// --- whole model ----------------------------------------------------------
CipherText encrypt_model(const TexturedModel& model, const RgbImage& texture,
                         const KeyBundle& keys, Backend backend = Backend::Parallel);
std::pair<TexturedModel, RgbImage> decrypt_model(const CipherText& ct, const KeyBundle& keys,
                                                 Backend backend = Backend::Parallel);

}  // namespace lucrypt
