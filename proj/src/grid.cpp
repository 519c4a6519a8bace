#include "phasespace/grid.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "phasespace/error.hpp"

namespace phasespace {

UniformGrid::UniformGrid(std::size_t n, double min, double max)
    : n_(n), min_(min), max_(max), spacing_((max - min) / static_cast<double>(n)) {
  if (n < 8 || !std::has_single_bit(n)) {
    throw ConfigError("grid size must be a power of two >= 8, got " + std::to_string(n));
  }
  if (!std::isfinite(min) || !std::isfinite(max) || !(max > min)) {
    throw ConfigError("grid bounds must be finite with max > min");
  }
}

UniformGrid UniformGrid::centered(std::size_t n, double half_span) {
  return UniformGrid(n, -half_span, half_span);
}

std::vector<double> UniformGrid::points() const {
  std::vector<double> out(n_);
  for (std::size_t k = 0; k < n_; ++k) out[k] = (*this)[k];
  return out;
}

std::optional<std::size_t> UniformGrid::offset_in(const UniformGrid& parent) const {
  if (std::abs(spacing_ - parent.spacing_) > 1e-12 * parent.spacing_) return std::nullopt;
  const double shift = (min_ - parent.min_) / parent.spacing_;
  const double rounded = std::round(shift);
  if (std::abs(shift - rounded) > 1e-9 || rounded < 0.0) return std::nullopt;
  const auto offset = static_cast<std::size_t>(rounded);
  if (offset + n_ > parent.n_) return std::nullopt;
  return offset;
}

UniformGrid UniformGrid::refined(std::size_t factor) const {
  return UniformGrid(n_ * factor, min_, max_);
}

UniformGrid dual_grid(const UniformGrid& grid, double scale) {
  const double n = static_cast<double>(grid.size());
  const double spacing = 2.0 * std::numbers::pi * scale / (n * grid.spacing());
  const double half = 0.5 * n * spacing;
  return UniformGrid(grid.size(), -half, half);
}

}  // namespace phasespace
