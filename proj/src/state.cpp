#include "phasespace/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "phasespace/error.hpp"

namespace phasespace {

const char* to_string(Representation rep) {
  return rep == Representation::Position ? "position" : "momentum";
}

SampledState::SampledState(UniformGrid grid, std::vector<Complex> values, Representation rep)
    : grid_(grid), values_(std::move(values)), rep_(rep) {
  if (values_.size() != grid_.size()) {
    throw ConfigError("state has " + std::to_string(values_.size()) + " samples for a grid of " +
                      std::to_string(grid_.size()));
  }
}

double l2_norm(const SampledState& state) {
  double sum = 0.0;
  for (const Complex& v : state.values()) sum += std::norm(v);
  return std::sqrt(sum * state.grid().spacing());
}

SampledState normalize(const SampledState& state) {
  const double norm = l2_norm(state);
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw NormalizationError("cannot normalize a state with zero or non-finite norm");
  }
  std::vector<Complex> values(state.values().begin(), state.values().end());
  for (Complex& v : values) v /= norm;
  return SampledState(state.grid(), std::move(values), state.rep());
}

double boundary_ratio(const SampledState& state) {
  const auto values = state.values();
  double peak = 0.0;
  for (const Complex& v : values) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return 0.0;
  return std::max(std::abs(values.front()), std::abs(values.back())) / peak;
}

bool is_contained(const SampledState& state, double tolerance) {
  return boundary_ratio(state) < tolerance;
}

void require_contained(const SampledState& state, std::string_view context) {
  const double ratio = boundary_ratio(state);
  if (!(ratio < kBoundaryDecay)) {
    throw ContainmentError(std::string(context) + ": " + to_string(state.rep()) +
                           " state not contained by its grid (boundary/peak = " +
                           std::to_string(ratio) + ")");
  }
}

double max_abs_difference(const SampledState& a, const SampledState& b) {
  if (!(a.grid() == b.grid()) || a.rep() != b.rep()) {
    throw ConfigError("states live on different grids or representations");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

Complex inner_product(const SampledState& a, const SampledState& b) {
  if (!(a.grid() == b.grid()) || a.rep() != b.rep()) {
    throw ConfigError("states live on different grids or representations");
  }
  Complex sum{0.0, 0.0};
  for (std::size_t k = 0; k < a.size(); ++k) sum += std::conj(a[k]) * b[k];
  return sum * a.grid().spacing();
}

}  // namespace phasespace
