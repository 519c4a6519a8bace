#pragma once

#include <memory>
#include <span>
#include <vector>

#include "phasespace/constants.hpp"
#include "phasespace/grid.hpp"
#include "phasespace/state.hpp"

namespace phasespace {

/// Evaluates the uniform-to-uniform exponential sum
///
///   F_l = sum_k c_k exp(-i w_l s_k),   s_k = s0 + k ds,  w_l = w0 + l dw,
///
/// for arbitrary (non-dual) spacings with the Bluestein chirp-z factorisation:
/// lk = (l^2 + k^2 - (l-k)^2)/2 turns the sum into one linear convolution,
/// evaluated with zero-padded FFTs. The kernel spectrum is computed once per
/// instance; apply() reuses internal buffers, so one instance per thread.
class ChirpTransform {
 public:
  ChirpTransform(std::size_t in_count, std::size_t out_count, double s0, double ds, double w0,
                 double dw);
  ~ChirpTransform();
  ChirpTransform(ChirpTransform&&) noexcept;
  ChirpTransform& operator=(ChirpTransform&&) noexcept;

  std::size_t in_count() const;
  std::size_t out_count() const;

  void apply(std::span<const Complex> in, std::span<Complex> out);
  std::vector<Complex> operator()(std::span<const Complex> in);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// psi(p) = h^(-1/2) int phi(x) exp(-i p x / hbar) dx, evaluated on `target`.
SampledState to_momentum(const SampledState& position, const UniformGrid& target,
                         const PhysicalConstants& k = {});
/// As above onto the FFT-dual momentum axis of the position grid.
SampledState to_momentum(const SampledState& position, const PhysicalConstants& k = {});

/// phi(x) = h^(-1/2) int psi(p) exp(+i p x / hbar) dp, evaluated on `target`.
SampledState to_position(const SampledState& momentum, const UniformGrid& target,
                         const PhysicalConstants& k = {});
SampledState to_position(const SampledState& momentum, const PhysicalConstants& k = {});

/// Band-limited resampling of a state onto n*factor points over the same
/// span, via the conjugate representation on the dual grid.
SampledState spectral_refine(const SampledState& state, std::size_t factor,
                             const PhysicalConstants& k = {});

}  // namespace phasespace
