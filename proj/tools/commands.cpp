#include "commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "lucrypt/analysis.hpp"
#include "lucrypt/cipher.hpp"
#include "lucrypt/formats.hpp"

namespace lucrypt::cli {

namespace {

namespace fs = std::filesystem;

std::string fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

void require_inputs(const CommandConfig& cfg) {
  if (cfg.model.empty() || cfg.texture.empty() || cfg.key.empty() || cfg.out_dir.empty()) {
    throw std::invalid_argument(cfg.subcommand +
                                " requires --model, --texture, --key and --out");
  }
}

std::string output_stem(const fs::path& model, const char* strip_suffix) {
  std::string stem = model.stem().string();
  const std::string suffix = strip_suffix;
  if (!suffix.empty() && stem.size() > suffix.size() &&
      stem.compare(stem.size() - suffix.size(), suffix.size(), suffix) == 0) {
    stem.resize(stem.size() - suffix.size());
  }
  return stem;
}

void report_model(std::ostream& out, const TexturedModel& m, const RgbImage& tex) {
  out << "vertices\t" << m.vertices.size() << '\n'
      << "faces\t" << m.faces.size() << '\n'
      << "texture_width\t" << tex.width << '\n'
      << "texture_height\t" << tex.height << '\n';
}

template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    err << "lucrypt: " << e.what() << '\n';
    return 1;
  }
}

int transform(const CommandConfig& cfg, std::ostream& out, std::ostream& err, bool encrypt) {
  return guarded(err, [&] {
    require_inputs(cfg);
    const KeyBundle keys = load_keyfile(cfg.key);
    const TexturedModel model = load_obj(cfg.model);
    const RgbImage tex = load_ppm(cfg.texture);
    if (!fs::is_directory(cfg.out_dir)) fs::create_directories(cfg.out_dir);

    const auto t0 = std::chrono::steady_clock::now();
    TexturedModel result_model;
    RgbImage result_tex;
    if (encrypt) {
      CipherText ct = encrypt_model(model, tex, keys);
      result_model = std::move(ct.model);
      result_tex = std::move(ct.texture);
    } else {
      auto plain = decrypt_model({model, tex}, keys);
      result_model = std::move(plain.first);
      result_tex = std::move(plain.second);
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const std::string stem = output_stem(cfg.model, encrypt ? "" : ".enc");
    const std::string tag = encrypt ? ".enc" : ".dec";
    const fs::path obj_path = cfg.out_dir / (stem + tag + ".obj");
    const fs::path ppm_path = cfg.out_dir / (stem + tag + ".ppm");
    write_file(obj_path, write_obj(result_model));
    write_file(ppm_path, write_ppm(result_tex));

    report_model(out, result_model, result_tex);
    out << "seconds\t" << fixed(elapsed) << '\n'
        << "model_out\t" << obj_path.string() << '\n'
        << "texture_out\t" << ppm_path.string() << '\n';
    return 0;
  });
}

void analyze_occupancy(const CommandConfig& cfg, std::ostream& out) {
  if (cfg.inputs.size() != 1) throw std::invalid_argument("occupancy takes one model path");
  const TexturedModel m = load_obj(cfg.inputs[0]);
  const auto lattice = analysis::occupancy(m.vertices, cfg.resolution);
  const auto counts = lattice.per_column_z();
  out << "i\tj\tz_count\n";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    for (std::size_t j = 0; j < counts[i].size(); ++j) {
      out << i << '\t' << j << '\t' << counts[i][j] << '\n';
    }
  }
}

void analyze_histogram(const CommandConfig& cfg, std::ostream& out) {
  if (cfg.inputs.size() != 1) throw std::invalid_argument("histogram takes one model path");
  const TexturedModel m = load_obj(cfg.inputs[0]);
  const auto hist = analysis::coordinate_histogram(m.vertices, cfg.bins);
  constexpr char kAxes[3] = {'x', 'y', 'z'};
  out << "axis\tbin\tlo\thi\tcount\n";
  for (int a = 0; a < 3; ++a) {
    const auto& h = hist[a];
    const double width = (h.max - h.min) / static_cast<double>(cfg.bins);
    for (std::size_t b = 0; b < h.counts.size(); ++b) {
      out << kAxes[a] << '\t' << b << '\t' << format_real_shortest(h.min + width * b) << '\t'
          << format_real_shortest(h.min + width * (b + 1)) << '\t' << h.counts[b] << '\n';
    }
  }
}

void analyze_entropy(const CommandConfig& cfg, std::ostream& out) {
  if (cfg.inputs.empty()) throw std::invalid_argument("entropy takes one or more PPM paths");
  for (const auto& path : cfg.inputs) {
    const double h = analysis::byte_entropy(load_ppm(path));
    if (cfg.inputs.size() == 1) {
      out << fixed(h) << '\n';
    } else {
      out << path << '\t' << fixed(h) << '\n';
    }
  }
}

void analyze_diff(const CommandConfig& cfg, std::ostream& out) {
  if (cfg.inputs.size() != 4) {
    throw std::invalid_argument("diff takes <a.obj> <a.ppm> <b.obj> <b.ppm>");
  }
  const auto r = analysis::diff_models(load_obj(cfg.inputs[0]), load_ppm(cfg.inputs[1]),
                                       load_obj(cfg.inputs[2]), load_ppm(cfg.inputs[3]),
                                       cfg.tol);
  out << "vertex_match_fraction\t" << fixed(r.vertex_match_fraction) << '\n'
      << "faces_equal\t" << (r.faces_equal ? "true" : "false") << '\n'
      << "corner_match_fraction\t" << fixed(r.corner_match_fraction) << '\n'
      << "texture_byte_match_fraction\t" << fixed(r.texture_byte_match_fraction) << '\n';
}

}  // namespace

int run_encrypt(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  return transform(cfg, out, err, true);
}

int run_decrypt(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  return transform(cfg, out, err, false);
}

int run_analyze(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (cfg.mode == "occupancy") {
      analyze_occupancy(cfg, out);
    } else if (cfg.mode == "histogram") {
      analyze_histogram(cfg, out);
    } else if (cfg.mode == "entropy") {
      analyze_entropy(cfg, out);
    } else if (cfg.mode == "diff") {
      analyze_diff(cfg, out);
    } else {
      throw std::invalid_argument("unknown analysis mode '" + cfg.mode + "'");
    }
    return 0;
  });
}

int run_bench(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (cfg.sizes.empty()) throw std::invalid_argument("bench requires --sizes");
    const auto rows = analysis::bench(cfg.sizes);
    out << "vertices\tencrypt_seconds\tdecrypt_seconds\n";
    for (const auto& r : rows) {
      out << r.vertex_count << '\t' << fixed(r.encrypt_seconds) << '\t'
          << fixed(r.decrypt_seconds) << '\n';
    }
    return 0;
  });
}

int run_info(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const KeyBundle keys = cfg.key.empty() ? KeyBundle::defaults() : load_keyfile(cfg.key);
    const LuParams params;
    const analysis::KeySpace space;
    out << "key_values\t" << space.key_values << '\n'
        << "key_precision_digits\t" << space.decimal_digits << '\n'
        << "key_space_log10\t" << fixed(space.log10_size(), 0) << '\n'
        << "key_space_bits\t" << space.rounded_bits() << '\n'
        << "key_space_bits_exact\t" << fixed(space.bits(), 4) << '\n'
        << "params\ta=" << format_real_shortest(params.a)
        << " b=" << format_real_shortest(params.b) << " c=" << format_real_shortest(params.c)
        << '\n';
    const std::pair<const char*, const LuKey*> named[] = {{"vertices", &keys.vertices},
                                                          {"polygons", &keys.polygons},
                                                          {"texture1", &keys.texture1},
                                                          {"texture2", &keys.texture2}};
    for (const auto& [label, k] : named) {
      out << "key\t" << label << '\t' << format_real_shortest(k->x0) << '\t'
          << format_real_shortest(k->y0) << '\t' << format_real_shortest(k->z0) << '\n';
    }
    return 0;
  });
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chaos-based encryption of textured 3D models", "lucrypt"};
  app.require_subcommand(1);
  CommandConfig cfg;

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--model", cfg.model, "OBJ model")->required();
    sub->add_option("--texture", cfg.texture, "P6 PPM texture")->required();
    sub->add_option("--key", cfg.key, "key file")->required();
    sub->add_option("--out", cfg.out_dir, "output directory")->required();
  };
  auto* enc = app.add_subcommand("encrypt", "Encrypt a textured model");
  add_io(enc);
  auto* dec = app.add_subcommand("decrypt", "Decrypt a textured model");
  add_io(dec);

  auto* ana = app.add_subcommand("analyze", "Security metrics as TSV");
  ana->add_option("--mode", cfg.mode, "occupancy|histogram|entropy|diff")
      ->required()
      ->check(CLI::IsMember({"occupancy", "histogram", "entropy", "diff"}));
  ana->add_option("--resolution", cfg.resolution, "lattice resolution")
      ->check(CLI::PositiveNumber);
  ana->add_option("--bins", cfg.bins, "histogram bins")->check(CLI::PositiveNumber);
  ana->add_option("--tol", cfg.tol, "relative vertex tolerance for diff");
  ana->add_option("inputs", cfg.inputs, "input files")->required();

  auto* ben = app.add_subcommand("bench", "Encrypt/decrypt timing vs vertex count");
  ben->add_option("--sizes", cfg.sizes, "comma-separated vertex counts")
      ->required()
      ->delimiter(',');

  auto* inf = app.add_subcommand("info", "Key space summary");
  inf->add_option("--key", cfg.key, "key file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    if (const auto nl = msg.find('\n'); nl != std::string::npos) msg.resize(nl);
    err << "lucrypt: " << msg << '\n';
    return e.get_exit_code() == 0 ? 2 : e.get_exit_code();
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  if (*enc) return run_encrypt(cfg, out, err);
  if (*dec) return run_decrypt(cfg, out, err);
  if (*ana) return run_analyze(cfg, out, err);
  if (*ben) return run_bench(cfg, out, err);
  return run_info(cfg, out, err);
}

}  // namespace lucrypt::cli
