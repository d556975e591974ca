#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace lucrypt::cli {

struct CommandConfig {
  std::string subcommand;
  std::filesystem::path model;
  std::filesystem::path texture;
  std::filesystem::path key;
  std::filesystem::path out_dir;

  std::string mode;
  std::size_t resolution = 64;
  std::size_t bins = 16;
  double tol = 1e-9;
  std::vector<std::string> inputs;
  std::vector<std::size_t> sizes;
};

// Each returns the process exit status. Results go to `out` as TSV; a single
// diagnostic line goes to `err` on failure.
int run_encrypt(const CommandConfig& cfg, std::ostream& out, std::ostream& err);
int run_decrypt(const CommandConfig& cfg, std::ostream& out, std::ostream& err);
int run_analyze(const CommandConfig& cfg, std::ostream& out, std::ostream& err);
int run_bench(const CommandConfig& cfg, std::ostream& out, std::ostream& err);
int run_info(const CommandConfig& cfg, std::ostream& out, std::ostream& err);

// Parses argv and dispatches.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace lucrypt::cli
