#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "phasespace/constants.hpp"
#include "phasespace/grid.hpp"
#include "phasespace/state.hpp"

namespace phasespace {

enum class Axis { X, P };

/// Real Wigner function samples W(x_i, p_j), stored row-major over x then p.
class WignerGrid {
 public:
  WignerGrid(UniformGrid x_axis, UniformGrid p_axis, std::vector<double> values,
             double imag_residue = 0.0);

  const UniformGrid& x_axis() const { return x_axis_; }
  const UniformGrid& p_axis() const { return p_axis_; }
  std::span<const double> values() const { return values_; }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * p_axis_.size() + j]; }
  double cell_area() const { return x_axis_.spacing() * p_axis_.spacing(); }

  /// Largest |Im| left over by the construction (the exact WDF is real).
  double imag_residue() const { return imag_residue_; }

 private:
  UniformGrid x_axis_;
  UniformGrid p_axis_;
  std::vector<double> values_;
  double imag_residue_;
};

/// W(x,p) = h^-1 int phi*(x - y/2) phi(x + y/2) exp(-i p y / hbar) dy.
///
/// Every x_axis sample must coincide with a sample of the state's grid; the
/// offset integral runs over the full state grid, with zeros beyond it. The
/// sum over offsets is evaluated directly on `p_axis` by a chirp transform,
/// so no resampling of the p axis is needed.
WignerGrid wigner_from_position(const SampledState& phi, const UniformGrid& x_axis,
                                const UniformGrid& p_axis, const PhysicalConstants& k = {});
WignerGrid wigner_from_position(const SampledState& phi, const UniformGrid& p_axis,
                                const PhysicalConstants& k = {});

/// W(x,p) = h^-1 int psi*(p - q/2) psi(p + q/2) exp(+i q x / hbar) dq.
/// Here the p_axis samples must coincide with samples of the state's grid.
WignerGrid wigner_from_momentum(const SampledState& psi, const UniformGrid& x_axis,
                                const UniformGrid& p_axis, const PhysicalConstants& k = {});

std::vector<double> marginal_x(const WignerGrid& w);  // int W dp
std::vector<double> marginal_p(const WignerGrid& w);  // int W dx

/// int int W dx dp over the grid.
double ps_integral(const WignerGrid& w);

inline constexpr double kPsNormalizationTolerance = 1e-4;

/// Phase-space averages. All three reject distributions whose integral is
/// off by more than kPsNormalizationTolerance.
double ps_mean(const WignerGrid& w, Axis which);
double ps_variance(const WignerGrid& w, Axis which);

void require_ps_normalized(const WignerGrid& w);

template <typename F>
double ps_expect(const WignerGrid& w, F&& f) {
  require_ps_normalized(w);
  double sum = 0.0;
  for (std::size_t i = 0; i < w.x_axis().size(); ++i) {
    const double x = w.x_axis()[i];
    for (std::size_t j = 0; j < w.p_axis().size(); ++j) sum += f(x, w.p_axis()[j]) * w(i, j);
  }
  return sum * w.cell_area();
}

/// h int int W^2 dx dp; 1 for a pure state.
double purity(const WignerGrid& w, const PhysicalConstants& k = {});

/// sqrt(var_x) * sqrt(var_p); bounded below by hbar/2.
double uncertainty_product(const WignerGrid& w);

/// int int |W1 - W2| dx dp on identical grids.
double l1_distance(const WignerGrid& a, const WignerGrid& b);

double max_abs_difference(const WignerGrid& a, const WignerGrid& b);

/// Phase-space area of the region where W >= max(W)/2. Descriptive only.
double half_max_area(const WignerGrid& w);

/// Quantum expectation values computed from the wavefunction itself:
/// <x> and <p> (and their variances) in either representation.
double quantum_mean(const SampledState& state, Axis which, const PhysicalConstants& k = {});
double quantum_variance(const SampledState& state, Axis which, const PhysicalConstants& k = {});

}  // namespace phasespace
