#include "lucrypt/chaos.hpp"

#include <cmath>

namespace lucrypt {

bool LuState::finite() const {
  return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
}

LuState lu_derivative(const LuState& s, const LuParams& p) {
  return {p.a * (s.y - s.x), -s.x * s.z + p.c * s.y, s.x * s.y - p.b * s.z};
}

namespace {

LuState axpy(const LuState& s, double h, const LuState& d) {
  return {s.x + h * d.x, s.y + h * d.y, s.z + h * d.z};
}

}  // namespace

LuState lu_step(const LuState& s, const LuParams& p, double h) {
  const LuState k1 = lu_derivative(s, p);
  const LuState k2 = lu_derivative(axpy(s, 0.5 * h, k1), p);
  const LuState k3 = lu_derivative(axpy(s, 0.5 * h, k2), p);
  const LuState k4 = lu_derivative(axpy(s, h, k3), p);
  const double w = h / 6.0;
  LuState out{s.x + w * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x),
              s.y + w * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y),
              s.z + w * (k1.z + 2.0 * k2.z + 2.0 * k3.z + k4.z)};
  if (!out.finite()) {
    throw KeystreamError("Lu trajectory diverged to a non-finite state");
  }
  return out;
}

double Keystream::next() {
  if (exhausted()) {
    throw KeystreamError("keystream exhausted after " +
                         std::to_string(values_.size()) + " values");
  }
  return values_[cursor_++];
}

Keystream generate_stream(const LuKey& key, std::size_t count,
                          const LuParams& params, double step,
                          std::size_t burn_in) {
  if (count == 0) {
    throw KeystreamError("keystream length must be at least 1");
  }
  LuState s = key.state();
  if (!s.finite()) {
    throw KeystreamError("key contains a non-finite component");
  }
  for (std::size_t i = 0; i < burn_in; ++i) {
    s = lu_step(s, params, step);
  }

  std::vector<double> values;
  values.reserve(count);
  while (values.size() < count) {
    s = lu_step(s, params, step);
    for (double v : {s.x, s.y, s.z}) {
      if (values.size() == count) break;
      values.push_back(v);
    }
  }
  return Keystream(key, std::move(values));
}

double to_unit(double v) {
  const double scaled = std::fabs(v) * kQuantizerScale;
  const double u = scaled - std::floor(scaled);
  // frac can round up to exactly 1.0 for tiny negative remainders
  return u < 1.0 ? u : 0.0;
}

double to_multiplier(double v) { return 1.0 + to_unit(v); }

std::uint8_t to_byte(double v) {
  const double b = std::floor(to_unit(v) * 256.0);
  return static_cast<std::uint8_t>(b > 255.0 ? 255.0 : b);
}

std::uint8_t to_bit(double v) { return to_unit(v) >= 0.5 ? 1 : 0; }

}  // namespace lucrypt
