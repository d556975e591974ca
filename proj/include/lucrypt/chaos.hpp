#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lucrypt {

/// Parameters of the Lu system. The defaults put the system on its strange
/// attractor and are fixed for every cipher phase; they are not key material.
struct LuParams {
  double a = 36.0;
  double b = 3.0;
  double c = 20.0;

  friend bool operator==(const LuParams&, const LuParams&) = default;
};

struct LuState {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  bool finite() const;
  friend bool operator==(const LuState&, const LuState&) = default;
};

/// Initial condition of one Lu trajectory; one of the four secret triples.
struct LuKey {
  double x0 = 0.0;
  double y0 = 0.0;
  double z0 = 0.0;

  LuState state() const { return {x0, y0, z0}; }
  friend bool operator==(const LuKey&, const LuKey&) = default;
};

class KeystreamError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kStepSize = 0.001;
inline constexpr std::size_t kBurnIn = 10000;
inline constexpr double kQuantizerScale = 1.0e4;

/// Right-hand side of the Lu system.
LuState lu_derivative(const LuState& s, const LuParams& p);

/// One classical RK4 step. Throws KeystreamError if the result is not finite.
LuState lu_step(const LuState& s, const LuParams& p, double h);

/// Trajectory samples emitted after burn-in, x/y/z interleaved per step.
class Keystream {
 public:
  Keystream(LuKey origin, std::vector<double> values)
      : origin_(origin), values_(std::move(values)) {}

  const LuKey& origin() const { return origin_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

  std::size_t cursor() const { return cursor_; }
  bool exhausted() const { return cursor_ >= values_.size(); }
  // Throws KeystreamError when the stream is exhausted.
  double next();

 private:
  LuKey origin_;
  std::vector<double> values_;
  std::size_t cursor_ = 0;
};

Keystream generate_stream(const LuKey& key, std::size_t count,
                          const LuParams& params = {},
                          double step = kStepSize,
                          std::size_t burn_in = kBurnIn);

// Quantizers. All take a finite trajectory sample.
double to_unit(double v);        // frac(|v| * 1e4), in [0, 1)
double to_multiplier(double v);  // 1 + to_unit(v), in [1, 2)
std::uint8_t to_byte(double v);  // floor(to_unit(v) * 256), clamped to 255
std::uint8_t to_bit(double v);   // to_unit(v) >= 0.5

}  // namespace lucrypt
