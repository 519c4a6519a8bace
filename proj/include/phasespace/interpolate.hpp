#pragma once

#include <cmath>
#include <cstddef>
#include <span>

#include "phasespace/grid.hpp"

namespace phasespace {

/// Four-point cubic Lagrange interpolation of uniformly spaced samples at
/// `x`. Samples outside the array count as zero, matching the
/// contained-state assumption used everywhere else.
template <typename T>
T cubic_interpolate(std::span<const T> samples, const UniformGrid& grid, double x) {
  const double u = (x - grid.min()) / grid.spacing();
  const double base = std::floor(u);
  const double f = u - base;
  const auto n = static_cast<std::ptrdiff_t>(samples.size());
  const auto i = static_cast<std::ptrdiff_t>(base);
  if (i < -2 || i > n) return T{};

  auto at = [&](std::ptrdiff_t k) -> T {
    return (k < 0 || k >= n) ? T{} : samples[static_cast<std::size_t>(k)];
  };
  const double wm1 = -f * (f - 1.0) * (f - 2.0) / 6.0;
  const double w0 = (f + 1.0) * (f - 1.0) * (f - 2.0) / 2.0;
  const double w1 = -(f + 1.0) * f * (f - 2.0) / 2.0;
  const double w2 = (f + 1.0) * f * (f - 1.0) / 6.0;
  return wm1 * at(i - 1) + w0 * at(i) + w1 * at(i + 1) + w2 * at(i + 2);
}

}  // namespace phasespace
