#pragma once

#include "phasespace/constants.hpp"
#include "phasespace/grid.hpp"
#include "phasespace/state.hpp"

namespace phasespace {

/// Minimum-uncertainty state centred at the phase-space origin.
///   position: (a^2/pi)^(1/4) exp(-a^2 x^2 / 2)
///   momentum: (1/(pi a^2 hbar^2))^(1/4) exp(-p^2 / (2 a^2 hbar^2))
/// `a` is an inverse length; `mass` is the particle mass carried along for
/// the transforms.
class GaussianSpec {
 public:
  GaussianSpec(double a, double mass);

  double a() const { return a_; }
  double mass() const { return mass_; }

  double position_amplitude(double x) const;
  double momentum_amplitude(double p, const PhysicalConstants& k) const;

  /// Closed-form Wigner function (2/h) exp(-a^2 x^2 - p^2/(a^2 hbar^2)).
  double wigner(double x, double p, const PhysicalConstants& k) const;

 private:
  double a_;
  double mass_;
};

/// Samples the closed form in the requested representation. Throws
/// ContainmentError when the grid does not contain the state.
SampledState sample_gaussian(const GaussianSpec& spec, const UniformGrid& grid,
                             Representation rep, const PhysicalConstants& k = {});

}  // namespace phasespace
