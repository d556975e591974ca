#include "lucrypt/cipher.hpp"

#include <stdexcept>
#include <string>

namespace lucrypt {

namespace {

void quantize_multipliers(Backend b, std::span<const double> s, std::span<double> out) {
  b == Backend::Serial ? kernels::serial::quantize_multipliers(s, out)
                       : kernels::omp::quantize_multipliers(s, out);
}

void quantize_units(Backend b, std::span<const double> s, std::span<double> out) {
  b == Backend::Serial ? kernels::serial::quantize_units(s, out)
                       : kernels::omp::quantize_units(s, out);
}

void quantize_bytes(Backend b, std::span<const double> s, std::span<std::uint8_t> out) {
  b == Backend::Serial ? kernels::serial::quantize_bytes(s, out)
                       : kernels::omp::quantize_bytes(s, out);
}

void quantize_bits(Backend b, std::span<const double> s, std::span<std::uint8_t> out) {
  b == Backend::Serial ? kernels::serial::quantize_bits(s, out)
                       : kernels::omp::quantize_bits(s, out);
}

std::span<double> flat(std::span<Vec3> v) {
  // std::array<double, 3> has no padding, so the list is 3N contiguous doubles
  static_assert(sizeof(Vec3) == 3 * sizeof(double));
  return {reinterpret_cast<double*>(v.data()), v.size() * 3};
}

std::vector<Vec3> transform_vertices(std::span<const Vec3> vertices, const LuKey& key,
                                     Direction dir, Backend backend) {
  std::vector<Vec3> out(vertices.begin(), vertices.end());
  if (out.empty()) return out;
  const auto m = vertex_multipliers(key, out.size(), backend);
  apply_vertex_multipliers(out, m, dir, backend);
  return out;
}

RgbImage transform_texture(const RgbImage& img, const LuKey& key_image, const LuKey& mask,
                           Direction dir, Backend backend) {
  const std::size_t n = img.pixels.size() * 3;
  if (n == 0) return img;
  const Keystream ks = generate_stream(key_image, n);
  const Keystream ms = generate_stream(mask, n);
  std::vector<std::uint8_t> key_bytes(n), mask_bits(n);
  quantize_bytes(backend, ks.values(), key_bytes);
  quantize_bits(backend, ms.values(), mask_bits);
  return apply_texture_cipher(img, key_bytes, mask_bits, dir, backend);
}

}  // namespace

bool PermutationPlan::is_permutation() const {
  std::vector<bool> seen(forward.size(), false);
  for (std::size_t i : forward) {
    if (i >= forward.size() || seen[i]) return false;
    seen[i] = true;
  }
  return true;
}

std::vector<std::size_t> PermutationPlan::inverse() const {
  std::vector<std::size_t> inv(forward.size());
  for (std::size_t r = 0; r < forward.size(); ++r) inv[forward[r]] = r;
  return inv;
}

void apply_vertex_multipliers(std::span<Vec3> vertices, std::span<const double> multipliers,
                              Direction dir, Backend backend) {
  const auto coords = flat(vertices);
  backend == Backend::Serial ? kernels::serial::scale(coords, multipliers, dir)
                             : kernels::omp::scale(coords, multipliers, dir);
}

std::vector<double> vertex_multipliers(const LuKey& key, std::size_t vertex_count,
                                       Backend backend) {
  if (vertex_count == 0) return {};
  const Keystream ks = generate_stream(key, 3 * vertex_count);
  std::vector<double> m(ks.size());
  quantize_multipliers(backend, ks.values(), m);
  return m;
}

std::vector<Vec3> encrypt_vertices(std::span<const Vec3> vertices, const LuKey& key,
                                   Backend backend) {
  return transform_vertices(vertices, key, Direction::Encrypt, backend);
}

std::vector<Vec3> decrypt_vertices(std::span<const Vec3> vertices, const LuKey& key,
                                   Backend backend) {
  return transform_vertices(vertices, key, Direction::Decrypt, backend);
}

PermutationPlan plan_from_sort_keys(std::span<const double> sort_keys, Backend backend) {
  return {backend == Backend::Serial ? kernels::serial::argsort(sort_keys)
                                     : kernels::omp::argsort(sort_keys)};
}

PermutationPlan plan_from_key(const LuKey& key, std::size_t corner_count, Backend backend) {
  if (corner_count == 0) return {};
  const Keystream ks = generate_stream(key, corner_count);
  std::vector<double> units(ks.size());
  quantize_units(backend, ks.values(), units);
  return plan_from_sort_keys(units, backend);
}

std::vector<Face> permute_corners(std::span<const Face> faces, const PermutationPlan& plan,
                                  Direction dir) {
  std::vector<Corner> corners;
  for (const Face& f : faces) corners.insert(corners.end(), f.begin(), f.end());
  if (corners.size() != plan.length()) {
    throw std::invalid_argument("permutation plan length " + std::to_string(plan.length()) +
                                " does not match corner count " +
                                std::to_string(corners.size()));
  }

  std::vector<Corner> moved(corners.size());
  for (std::size_t r = 0; r < corners.size(); ++r) {
    if (dir == Direction::Encrypt) {
      moved[r] = corners[plan.forward[r]];
    } else {
      moved[plan.forward[r]] = corners[r];
    }
  }

  std::vector<Face> out;
  out.reserve(faces.size());
  auto it = moved.begin();
  for (const Face& f : faces) {
    out.emplace_back(it, it + static_cast<std::ptrdiff_t>(f.size()));
    it += static_cast<std::ptrdiff_t>(f.size());
  }
  return out;
}

std::vector<Face> encrypt_polygons(std::span<const Face> faces, const LuKey& key,
                                   Backend backend) {
  std::size_t n = 0;
  for (const Face& f : faces) n += f.size();
  return permute_corners(faces, plan_from_key(key, n, backend), Direction::Encrypt);
}

std::vector<Face> decrypt_polygons(std::span<const Face> faces, const LuKey& key,
                                   Backend backend) {
  std::size_t n = 0;
  for (const Face& f : faces) n += f.size();
  return permute_corners(faces, plan_from_key(key, n, backend), Direction::Decrypt);
}

std::vector<std::uint8_t> to_planes(const RgbImage& img) {
  const std::size_t n = img.pixels.size();
  std::vector<std::uint8_t> planes(3 * n);
  for (std::size_t i = 0; i < n; ++i) {
    planes[i] = img.pixels[i].r;
    planes[n + i] = img.pixels[i].g;
    planes[2 * n + i] = img.pixels[i].b;
  }
  return planes;
}

RgbImage from_planes(std::size_t width, std::size_t height,
                     std::span<const std::uint8_t> planes) {
  RgbImage img(width, height);
  const std::size_t n = img.pixels.size();
  if (planes.size() != 3 * n) {
    throw std::invalid_argument("plane data does not match image dimensions");
  }
  for (std::size_t i = 0; i < n; ++i) {
    img.pixels[i] = {planes[i], planes[n + i], planes[2 * n + i]};
  }
  return img;
}

RgbImage apply_texture_cipher(const RgbImage& img, std::span<const std::uint8_t> key_bytes,
                              std::span<const std::uint8_t> mask_bits, Direction dir,
                              Backend backend) {
  auto planes = to_planes(img);
  backend == Backend::Serial ? kernels::serial::dna_cipher(planes, key_bytes, mask_bits, dir)
                             : kernels::omp::dna_cipher(planes, key_bytes, mask_bits, dir);
  return from_planes(img.width, img.height, planes);
}

RgbImage encrypt_texture(const RgbImage& img, const LuKey& key_image, const LuKey& mask,
                         Backend backend) {
  return transform_texture(img, key_image, mask, Direction::Encrypt, backend);
}

RgbImage decrypt_texture(const RgbImage& img, const LuKey& key_image, const LuKey& mask,
                         Backend backend) {
  return transform_texture(img, key_image, mask, Direction::Decrypt, backend);
}

CipherText encrypt_model(const TexturedModel& model, const RgbImage& texture,
                         const KeyBundle& keys, Backend backend) {
  CipherText ct{model, {}};
  ct.model.vertices = encrypt_vertices(model.vertices, keys.vertices, backend);
  ct.model.faces = encrypt_polygons(model.faces, keys.polygons, backend);
  ct.texture = encrypt_texture(texture, keys.texture1, keys.texture2, backend);
  return ct;
}

std::pair<TexturedModel, RgbImage> decrypt_model(const CipherText& ct, const KeyBundle& keys,
                                                 Backend backend) {
  TexturedModel model = ct.model;
  RgbImage texture = decrypt_texture(ct.texture, keys.texture1, keys.texture2, backend);
  model.faces = decrypt_polygons(ct.model.faces, keys.polygons, backend);
  model.vertices = decrypt_vertices(ct.model.vertices, keys.vertices, backend);
  return {std::move(model), std::move(texture)};
}

}  // namespace lucrypt
