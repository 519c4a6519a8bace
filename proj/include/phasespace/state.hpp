#pragma once

#include <complex>
#include <span>
#include <string_view>
#include <vector>

#include "phasespace/grid.hpp"

namespace phasespace {

using Complex = std::complex<double>;

enum class Representation { Position, Momentum };

const char* to_string(Representation rep);

/// Complex wavefunction samples on a uniform axis, tagged with the
/// representation they live in. Immutable once built.
class SampledState {
 public:
  SampledState(UniformGrid grid, std::vector<Complex> values, Representation rep);

  const UniformGrid& grid() const { return grid_; }
  std::span<const Complex> values() const { return values_; }
  Representation rep() const { return rep_; }
  std::size_t size() const { return values_.size(); }
  const Complex& operator[](std::size_t k) const { return values_[k]; }

 private:
  UniformGrid grid_;
  std::vector<Complex> values_;
  Representation rep_;
};

/// sqrt(sum |v|^2 * spacing).
double l2_norm(const SampledState& state);

/// Throws NormalizationError for a zero (or non-finite) norm.
SampledState normalize(const SampledState& state);

/// Largest end-sample modulus divided by the peak modulus.
double boundary_ratio(const SampledState& state);

inline constexpr double kBoundaryDecay = 1e-8;

bool is_contained(const SampledState& state, double tolerance = kBoundaryDecay);

/// Throws ContainmentError naming `context` when the boundary-decay
/// invariant does not hold.
void require_contained(const SampledState& state, std::string_view context);

/// Max pointwise |a - b|; both states must share grid and representation.
double max_abs_difference(const SampledState& a, const SampledState& b);

/// Inner product sum conj(a) b * spacing.
Complex inner_product(const SampledState& a, const SampledState& b);

}  // namespace phasespace
