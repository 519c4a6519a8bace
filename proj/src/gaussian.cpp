#include "phasespace/gaussian.hpp"

#include <cmath>
#include <numbers>

#include "phasespace/error.hpp"

namespace phasespace {

using std::numbers::pi;

GaussianSpec::GaussianSpec(double a, double mass) : a_(a), mass_(mass) {
  if (!(a > 0.0) || !std::isfinite(a)) throw ConfigError("Gaussian width parameter a must be > 0");
  if (!(mass >= 0.0) || !std::isfinite(mass)) throw ConfigError("mass must be >= 0");
}

double GaussianSpec::position_amplitude(double x) const {
  return std::pow(a_ * a_ / pi, 0.25) * std::exp(-0.5 * a_ * a_ * x * x);
}

double GaussianSpec::momentum_amplitude(double p, const PhysicalConstants& k) const {
  const double w = a_ * k.hbar();
  return std::pow(1.0 / (pi * w * w), 0.25) * std::exp(-0.5 * p * p / (w * w));
}

double GaussianSpec::wigner(double x, double p, const PhysicalConstants& k) const {
  const double w = a_ * k.hbar();
  return 2.0 / k.h() * std::exp(-a_ * a_ * x * x - p * p / (w * w));
}

SampledState sample_gaussian(const GaussianSpec& spec, const UniformGrid& grid,
                             Representation rep, const PhysicalConstants& k) {
  std::vector<Complex> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    values[i] = rep == Representation::Position ? spec.position_amplitude(grid[i])
                                                : spec.momentum_amplitude(grid[i], k);
  }
  SampledState state(grid, std::move(values), rep);
  require_contained(state, "sample_gaussian");
  return state;
}

}  // namespace phasespace
