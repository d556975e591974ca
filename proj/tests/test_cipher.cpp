#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "lucrypt/analysis.hpp"
#include "lucrypt/cipher.hpp"

namespace {

using namespace lucrypt;

Face tri(std::int64_t a, std::int64_t b, std::int64_t c) {
  return {{a, {}, {}}, {b, {}, {}}, {c, {}, {}}};
}

std::vector<Corner> flatten(const std::vector<Face>& faces) {
  std::vector<Corner> out;
  for (const Face& f : faces) out.insert(out.end(), f.begin(), f.end());
  return out;
}

bool corner_less(const Corner& a, const Corner& b) {
  return std::tie(a.vertex, a.texcoord, a.normal) < std::tie(b.vertex, b.texcoord, b.normal);
}

double max_relative_error(const std::vector<Vec3>& a, const std::vector<Vec3>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (int k = 0; k < 3; ++k) {
      if (a[i][k] == b[i][k]) continue;
      worst = std::max(worst, std::fabs(a[i][k] - b[i][k]) / std::fabs(a[i][k]));
    }
  }
  return worst;
}

const KeyBundle kKeys = KeyBundle::defaults();

// --- vertices ---------------------------------------------------------------

TEST(Vertices, StubbedMultipliers) {
  std::vector<Vec3> v = {{2, 4, 8}};
  const std::vector<double> m = {1.5, 1.25, 1.75};
  apply_vertex_multipliers(v, m, Direction::Encrypt);
  EXPECT_EQ(v[0], (Vec3{3, 5, 14}));
  apply_vertex_multipliers(v, m, Direction::Decrypt, Backend::Serial);
  EXPECT_EQ(v[0], (Vec3{2, 4, 8}));
}

TEST(Vertices, EmptyStaysEmpty) {
  EXPECT_TRUE(encrypt_vertices({}, kKeys.vertices).empty());
  EXPECT_TRUE(decrypt_vertices({}, kKeys.vertices).empty());
}

TEST(Vertices, ZeroCoordinatesStayZero) {
  const std::vector<Vec3> v = {{0, 1, 2}, {3, 0, 0}};
  const auto e = encrypt_vertices(v, kKeys.vertices);
  EXPECT_EQ(e[0][0], 0.0);
  EXPECT_EQ(e[1][1], 0.0);
  EXPECT_EQ(e[1][2], 0.0);
}

TEST(Vertices, UsesTheInterleavedStream) {
  const std::vector<Vec3> v = {{1, 1, 1}, {1, 1, 1}};
  const auto e = encrypt_vertices(v, kKeys.vertices);
  const Keystream ks = generate_stream(kKeys.vertices, 6);
  for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(e[j / 3][j % 3], to_multiplier(ks[j]));
}

TEST(Vertices, RandomRoundTrip) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> d(-1e4, 1e4);
  std::vector<Vec3> v(5000);
  for (auto& p : v) p = {d(rng), d(rng), d(rng)};
  for (Backend b : {Backend::Serial, Backend::Parallel}) {
    const auto back = decrypt_vertices(encrypt_vertices(v, kKeys.vertices, b), kKeys.vertices, b);
    EXPECT_LT(max_relative_error(v, back), 1e-12);
  }
}

// --- polygons ---------------------------------------------------------------

TEST(Polygons, StubbedStreamExample) {
  const std::vector<Face> faces = {tri(1, 2, 3), tri(4, 5, 6)};
  const std::vector<double> lp = {0.9, 0.1, 0.5, 0.7, 0.3, 0.2};
  const PermutationPlan plan = plan_from_sort_keys(lp);
  EXPECT_EQ(plan.forward, (std::vector<std::size_t>{1, 5, 4, 2, 3, 0}));
  EXPECT_EQ(plan_from_sort_keys(lp, Backend::Serial).forward, plan.forward);

  const auto enc = permute_corners(faces, plan, Direction::Encrypt);
  EXPECT_EQ(enc, (std::vector<Face>{tri(2, 6, 5), tri(3, 4, 1)}));
  EXPECT_EQ(permute_corners(enc, plan, Direction::Decrypt), faces);
}

TEST(Polygons, PlanInverse) {
  const PermutationPlan plan{{1, 5, 4, 2, 3, 0}};
  EXPECT_TRUE(plan.is_permutation());
  const auto inv = plan.inverse();
  for (std::size_t r = 0; r < plan.length(); ++r) EXPECT_EQ(inv[plan.forward[r]], r);
  EXPECT_FALSE((PermutationPlan{{0, 0, 1}}).is_permutation());
}

TEST(Polygons, TinyCornerListsAreUnchanged) {
  const std::vector<Face> one = {{{7, {}, {}}}};
  EXPECT_EQ(permute_corners(one, plan_from_sort_keys(std::vector<double>{0.3}), Direction::Encrypt), one);
  EXPECT_TRUE(encrypt_polygons({}, kKeys.polygons).empty());
}

TEST(Polygons, PlanMismatchThrows) {
  const std::vector<Face> faces = {tri(1, 2, 3)};
  EXPECT_THROW(permute_corners(faces, PermutationPlan{{0, 1}}, Direction::Encrypt),
               std::invalid_argument);
}

TEST(Polygons, CornersTravelAsUnits) {
  const std::vector<Face> faces = {
      {{1, 11, 21}, {2, 12, 22}, {3, 13, 23}},
      {{4, 14, 24}, {5, 15, 25}, {6, 16, 26}, {7, 17, 27}},
  };
  const auto enc = encrypt_polygons(faces, kKeys.polygons);
  ASSERT_EQ(enc.size(), 2u);
  EXPECT_EQ(enc[0].size(), 3u);
  EXPECT_EQ(enc[1].size(), 4u);
  for (const Face& f : enc) {
    for (const Corner& c : f) {
      EXPECT_EQ(*c.texcoord, c.vertex + 10);
      EXPECT_EQ(*c.normal, c.vertex + 20);
    }
  }
  EXPECT_EQ(decrypt_polygons(enc, kKeys.polygons), faces);
}

TEST(Polygons, RandomRoundTripPreservesMultiset) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Face> faces;
    const int nf = 1 + static_cast<int>(rng() % 500);
    for (int f = 0; f < nf; ++f) {
      Face face;
      const int arity = 3 + static_cast<int>(rng() % 2);
      for (int c = 0; c < arity; ++c) {
        face.push_back({static_cast<std::int64_t>(1 + rng() % 300), std::nullopt, std::nullopt});
      }
      faces.push_back(std::move(face));
    }
    const auto enc = encrypt_polygons(faces, kKeys.polygons);
    auto a = flatten(faces), b = flatten(enc);
    std::sort(a.begin(), a.end(), corner_less);
    std::sort(b.begin(), b.end(), corner_less);
    ASSERT_EQ(a, b);
    ASSERT_EQ(decrypt_polygons(enc, kKeys.polygons, Backend::Serial), faces);
  }
}

// --- texture ----------------------------------------------------------------

RgbImage single(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  RgbImage img(1, 1);
  img.pixels[0] = {r, g, b};
  return img;
}

TEST(Texture, StubbedWorkedExamples) {
  const RgbImage plain = single(123, 123, 123);
  const std::vector<std::uint8_t> zero_key = {0, 0, 0};
  const std::vector<std::uint8_t> masks = {0, 1, 0};

  const RgbImage enc = apply_texture_cipher(plain, zero_key, masks, Direction::Encrypt);
  EXPECT_EQ(enc.pixels[0], (Rgb{209, 46, 209}));
  EXPECT_EQ(apply_texture_cipher(enc, zero_key, masks, Direction::Decrypt, Backend::Serial), plain);
}

TEST(Texture, CCCCKeyIsIdentity) {
  RgbImage img(16, 16);
  for (std::size_t i = 0; i < img.pixels.size(); ++i) {
    img.pixels[i] = {static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(255 - i),
                     static_cast<std::uint8_t>(i * 7)};
  }
  const std::vector<std::uint8_t> key(img.pixels.size() * 3, 170);
  const std::vector<std::uint8_t> mask(img.pixels.size() * 3, 0);
  EXPECT_EQ(apply_texture_cipher(img, key, mask, Direction::Encrypt), img);
}

TEST(Texture, PlanarLayout) {
  RgbImage img(2, 1);
  img.pixels = {{1, 2, 3}, {4, 5, 6}};
  EXPECT_EQ(to_planes(img), (std::vector<std::uint8_t>{1, 4, 2, 5, 3, 6}));
  EXPECT_EQ(from_planes(2, 1, to_planes(img)), img);
  EXPECT_THROW(from_planes(3, 1, to_planes(img)), std::invalid_argument);
}

TEST(Texture, KeyAndMaskComeFromTheirStreams) {
  const RgbImage plain = single(123, 0, 255);
  const Keystream k = generate_stream(kKeys.texture1, 3);
  const Keystream m = generate_stream(kKeys.texture2, 3);
  const std::vector<std::uint8_t> key = {to_byte(k[0]), to_byte(k[1]), to_byte(k[2])};
  const std::vector<std::uint8_t> mask = {to_bit(m[0]), to_bit(m[1]), to_bit(m[2])};
  EXPECT_EQ(encrypt_texture(plain, kKeys.texture1, kKeys.texture2),
            apply_texture_cipher(plain, key, mask, Direction::Encrypt, Backend::Serial));
}

TEST(Texture, RandomRoundTrip) {
  std::mt19937_64 rng(4);
  RgbImage img(77, 31);
  for (Rgb& p : img.pixels) {
    p = {static_cast<std::uint8_t>(rng()), static_cast<std::uint8_t>(rng()),
         static_cast<std::uint8_t>(rng())};
  }
  const RgbImage enc = encrypt_texture(img, kKeys.texture1, kKeys.texture2);
  EXPECT_EQ(enc.width, img.width);
  EXPECT_EQ(enc.height, img.height);
  EXPECT_NE(enc, img);
  EXPECT_EQ(decrypt_texture(enc, kKeys.texture1, kKeys.texture2), img);
  EXPECT_EQ(enc, encrypt_texture(img, kKeys.texture1, kKeys.texture2, Backend::Serial));
}

// --- whole model --------------------------------------------------------------

TEST(Model, EmptyModelWithOnePixel) {
  const CipherText ct = encrypt_model({}, single(10, 20, 30), kKeys);
  EXPECT_TRUE(ct.model.vertices.empty());
  EXPECT_TRUE(ct.model.faces.empty());
  EXPECT_EQ(ct.texture.pixels.size(), 1u);
  const auto [m, t] = decrypt_model(ct, kKeys);
  EXPECT_EQ(t, single(10, 20, 30));
}

TEST(Model, RoundTripPreservesStructure) {
  auto [model, tex] = analysis::synthesize_model(3000, 64, 17);
  model.normals = {{0, 0, 1}};
  model.passthrough = {{"o synthetic", true}};
  model.faces.push_back({{1, 1, 1}, {2, 2, 1}, {3, 3, 1}, {4, 4, 1}});

  const CipherText ct = encrypt_model(model, tex, kKeys);
  EXPECT_EQ(ct.model.vertices.size(), model.vertices.size());
  ASSERT_EQ(ct.model.faces.size(), model.faces.size());
  for (std::size_t i = 0; i < model.faces.size(); ++i) {
    EXPECT_EQ(ct.model.faces[i].size(), model.faces[i].size());
  }
  EXPECT_EQ(ct.model.texcoords, model.texcoords);
  EXPECT_EQ(ct.model.normals, model.normals);
  EXPECT_EQ(ct.model.passthrough, model.passthrough);
  EXPECT_NO_THROW(parse_obj(write_obj(ct.model)));
  EXPECT_NO_THROW(parse_ppm(write_ppm(ct.texture)));

  const auto [m, t] = decrypt_model(ct, kKeys);
  EXPECT_EQ(m.faces, model.faces);
  EXPECT_EQ(t, tex);
  EXPECT_LT(max_relative_error(model.vertices, m.vertices), 1e-12);
}

TEST(Model, SerialAndParallelBackendsProduceIdenticalCiphertext) {
  const auto [model, tex] = analysis::synthesize_model(2000, 48, 5);
  const CipherText a = encrypt_model(model, tex, kKeys, Backend::Serial);
  const CipherText b = encrypt_model(model, tex, kKeys, Backend::Parallel);
  EXPECT_EQ(a.model, b.model);
  EXPECT_EQ(a.texture, b.texture);
}

TEST(Model, PolygonsKeyOnlyAffectsFaceOrder) {
  const auto [model, tex] = analysis::synthesize_model(1000, 32, 8);
  KeyBundle other = kKeys;
  other.polygons.y0 += 1e-10;
  const CipherText a = encrypt_model(model, tex, kKeys);
  const CipherText b = encrypt_model(model, tex, other);
  EXPECT_EQ(a.model.vertices, b.model.vertices);
  EXPECT_EQ(a.texture, b.texture);
  EXPECT_NE(a.model.faces, b.model.faces);
}

TEST(Model, EncryptedTextureEntropyIsHigh) {
  const RgbImage tex = load_ppm(std::filesystem::path(LUCRYPT_DATA_DIR) / "torus.ppm");
  EXPECT_GT(analysis::byte_entropy(encrypt_texture(tex, kKeys.texture1, kKeys.texture2)), 7.9);
}

}  // namespace
