#pragma once

#include <numbers>

#include "phasespace/error.hpp"

namespace phasespace {

/// Action quantum and light speed. Planck's h is always derived from hbar.
class PhysicalConstants {
 public:
  PhysicalConstants() = default;
  PhysicalConstants(double hbar, double c) : hbar_(hbar), c_(c) {
    if (!(hbar > 0.0)) throw ConfigError("hbar must be positive");
    if (!(c > 0.0)) throw ConfigError("light speed c must be positive");
  }

  double hbar() const { return hbar_; }
  double c() const { return c_; }
  double h() const { return 2.0 * std::numbers::pi * hbar_; }

 private:
  double hbar_ = 1.0;
  double c_ = 1.0;
};

}  // namespace phasespace
