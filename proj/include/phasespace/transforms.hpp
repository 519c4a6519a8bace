#pragma once

#include <span>
#include <variant>
#include <vector>

#include "phasespace/constants.hpp"
#include "phasespace/gaussian.hpp"
#include "phasespace/state.hpp"
#include "phasespace/wigner.hpp"

namespace phasespace {

enum class Regime { Relativistic, Galilean };

const char* to_string(Regime regime);

struct TimeTranslation {
  double t;
};
struct SpaceTranslation {
  double x0;
};
/// Rapidity theta; the Galilean regime uses v = c tanh(theta).
struct Boost {
  double theta;
};

inline constexpr double kMaxRapidity = 5.0;

struct TransformSpec {
  std::variant<TimeTranslation, SpaceTranslation, Boost> kind;
  Regime regime = Regime::Relativistic;
};

/// omega_p = c sqrt(m^2 c^2 + p^2).
double energy(double p, double mass, const PhysicalConstants& k);

/// Boost velocity c tanh(theta).
double boost_velocity(double theta, const PhysicalConstants& k);

// All state transforms act on momentum-representation samples and return a
// new state on the same grid.

/// psi'(p) = exp(+i omega_p t / hbar) psi(p).
SampledState time_translate_relativistic(const SampledState& psi, double t, double mass,
                                         const PhysicalConstants& k = {});

/// psi'(p) = exp(+i p^2 t / (2 m hbar)) psi(p). Requires m > 0.
SampledState time_translate_galilean(const SampledState& psi, double t, double mass,
                                     const PhysicalConstants& k = {});

/// W'(x, p) = W(x + t p / m, p) by cubic interpolation along x. Throws
/// ContainmentError if more than kShearLostMass of |W| is pushed off the x axis.
WignerGrid time_translate_galilean(const WignerGrid& w, double t, double mass);

inline constexpr double kShearLostMass = 1e-5;

/// psi'(p) = exp(-i p x0 / hbar) psi(p); identical in both regimes.
SampledState space_translate(const SampledState& psi, double x0, const PhysicalConstants& k = {});

/// psi'(p) = J(p)^(1/2) psi(p cosh(theta) - sqrt(m^2 c^2 + p^2) sinh(theta)),
/// J(p) = cosh(theta) - p sinh(theta)/sqrt(m^2 c^2 + p^2).
/// Sampled inputs are refined spectrally by kBoostRefinement and then
/// interpolated with cubics.
SampledState boost_relativistic(const SampledState& psi, double theta, double mass,
                                const PhysicalConstants& k = {});
/// Closed-form variant: the Gaussian is evaluated at the mapped argument.
SampledState boost_relativistic(const GaussianSpec& spec, const UniformGrid& momentum_grid,
                                double theta, const PhysicalConstants& k = {});

/// psi'(p) = psi(p - m v), v = c tanh(theta).
SampledState boost_galilean(const SampledState& psi, double theta, double mass,
                            const PhysicalConstants& k = {});
SampledState boost_galilean(const GaussianSpec& spec, const UniformGrid& momentum_grid,
                            double theta, const PhysicalConstants& k = {});

inline constexpr std::size_t kBoostRefinement = 4;

/// Result of the direct quadrature of the time-translated Gaussian WDF.
struct QuadratureWigner {
  WignerGrid wigner;
  double convergence_delta;  // max change between step h and h/2
  double imag_residue;
  std::size_t nodes;         // nodes at the finer step
};

inline constexpr double kQuadratureConvergence = 1e-7;

/// Wigner function of the Gaussian after a relativistic time translation,
/// evaluated as a trapezoidal integral over the momentum offset p' in
/// [-15 a hbar, 15 a hbar] with no wavefunction sampling involved. The coarse
/// step keeps the fastest phase below pi/8 per node; the result is the h/2
/// sum and ConvergenceError is thrown if it differs from the h sum by more
/// than kQuadratureConvergence anywhere.
QuadratureWigner wigner_time_translate_direct(const GaussianSpec& spec, double t,
                                              const UniformGrid& x_axis, const UniformGrid& p_axis,
                                              const PhysicalConstants& k = {});

/// Applies one transform to a momentum-representation state.
SampledState apply(const TransformSpec& spec, const SampledState& psi, double mass,
                   const PhysicalConstants& k = {});

/// Applies `specs` as an operator product written left to right: the last
/// element acts first, as the rightmost factor of
/// U = exp(-iKc theta/hbar) exp(-iPx0/hbar) exp(iHt/hbar).
SampledState compose(std::span<const TransformSpec> specs, const SampledState& psi, double mass,
                     const PhysicalConstants& k = {});

/// Stable reordering into boost, space, time (time acts first).
std::vector<TransformSpec> canonical_order(std::span<const TransformSpec> specs);
bool is_canonical_order(std::span<const TransformSpec> specs);

}  // namespace phasespace
