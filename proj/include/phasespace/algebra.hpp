#pragma once

#include <Eigen/Dense>
#include <complex>

#include "phasespace/constants.hpp"
#include "phasespace/gaussian.hpp"
#include "phasespace/grid.hpp"
#include "phasespace/state.hpp"

namespace phasespace {

enum class GeneratorLabel { H, P, K, R, M, V };

const char* to_string(GeneratorLabel label);

/// Dense operator acting on momentum-representation samples of `grid`.
class OperatorMatrix {
 public:
  OperatorMatrix(UniformGrid grid, Eigen::MatrixXcd entries, GeneratorLabel label);

  const UniformGrid& grid() const { return grid_; }
  const Eigen::MatrixXcd& entries() const { return entries_; }
  GeneratorLabel label() const { return label_; }

  SampledState apply(const SampledState& psi) const;

 private:
  UniformGrid grid_;
  Eigen::MatrixXcd entries_;
  GeneratorLabel label_;
};

/// Fourier (periodic sinc) differentiation matrix on the grid. Exact for
/// trigonometric polynomials below the Nyquist mode, spectrally accurate for
/// smooth boundary-decaying samples.
Eigen::MatrixXd spectral_differentiation_matrix(const UniformGrid& grid);

/// Spinless one-dimensional generators in the momentum representation:
///   P = p, H = omega_p, R = i hbar d/dp,
///   K = i hbar (-omega_p/c^2 d/dp - p/(2 omega_p)),
///   M = c^-2 (H^2 - P^2 c^2)^(1/2), V = P c^2 / H.
struct Generators {
  OperatorMatrix H;
  OperatorMatrix P;
  OperatorMatrix K;
  OperatorMatrix R;
  OperatorMatrix M;
  OperatorMatrix V;
};

Generators build_generators(const UniformGrid& momentum_grid, double mass,
                            const PhysicalConstants& k = {});

/// ||[A,B] psi|| for an expected commutator of zero.
double commutator_residual(const OperatorMatrix& a, const OperatorMatrix& b,
                           const SampledState& psi);

/// ||([A,B] - coefficient*C) psi|| / ||coefficient*C psi||.
double commutator_residual(const OperatorMatrix& a, const OperatorMatrix& b,
                           std::complex<double> coefficient, const OperatorMatrix& c,
                           const SampledState& psi);

/// |<A phi, chi> - <phi, A chi>|.
double hermiticity_check(const OperatorMatrix& a, const SampledState& phi, const SampledState& chi);

/// Relative L2 deviation between the finite boost of the Gaussian and the
/// first-order generator step (1 - i theta c K / hbar) psi. O(theta^2).
double boost_generator_consistency(double theta, const GaussianSpec& spec,
                                   const UniformGrid& momentum_grid,
                                   const PhysicalConstants& k = {});

/// Max deviation between the time/space translation transforms and the
/// exponentials exp(i t H / hbar), exp(-i x0 P / hbar) of the diagonal
/// generators. Exact phase relations, so rounding-level.
double time_generator_consistency(double t, const SampledState& psi, const Generators& g,
                                  const PhysicalConstants& k = {});
double space_generator_consistency(double x0, const SampledState& psi, const Generators& g,
                                   const PhysicalConstants& k = {});

}  // namespace phasespace
