#include "phasespace/fourier.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <mutex>
#include <numbers>

#include "phasespace/error.hpp"

namespace phasespace {

namespace {

// FFTW planning is not thread-safe; execution on distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwBuffer {
  explicit FftwBuffer(std::size_t n)
      : data(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n))) {
    if (data == nullptr) throw std::bad_alloc();
  }
  ~FftwBuffer() { fftw_free(data); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;

  Complex* as_complex() { return reinterpret_cast<Complex*>(data); }
  fftw_complex* data;
};

struct PlanDeleter {
  void operator()(fftw_plan_s* p) const {
    std::scoped_lock lock(planner_mutex());
    fftw_destroy_plan(p);
  }
};
using Plan = std::unique_ptr<fftw_plan_s, PlanDeleter>;

Complex unit_phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

}  // namespace

struct ChirpTransform::Impl {
  std::size_t in_count;
  std::size_t out_count;
  std::size_t size;  // convolution length, power of two
  std::vector<Complex> in_chirp;
  std::vector<Complex> out_chirp;
  std::vector<Complex> kernel_spectrum;
  FftwBuffer work;
  Plan forward;
  Plan backward;

  Impl(std::size_t k_count, std::size_t l_count)
      : in_count(k_count),
        out_count(l_count),
        size(std::bit_ceil(k_count + l_count - 1)),
        work(size) {}
};

ChirpTransform::ChirpTransform(std::size_t in_count, std::size_t out_count, double s0, double ds,
                               double w0, double dw) {
  if (in_count == 0 || out_count == 0) throw ConfigError("chirp transform needs non-empty axes");
  impl_ = std::make_unique<Impl>(in_count, out_count);
  Impl& d = *impl_;
  const double theta = dw * ds;

  d.in_chirp.resize(in_count);
  for (std::size_t k = 0; k < in_count; ++k) {
    const double kk = static_cast<double>(k);
    d.in_chirp[k] = unit_phase(-(w0 * ds * kk + 0.5 * theta * kk * kk));
  }
  d.out_chirp.resize(out_count);
  for (std::size_t l = 0; l < out_count; ++l) {
    const double ll = static_cast<double>(l);
    d.out_chirp[l] = unit_phase(-(w0 * s0 + dw * s0 * ll + 0.5 * theta * ll * ll));
  }

  {
    std::scoped_lock lock(planner_mutex());
    d.forward.reset(fftw_plan_dft_1d(static_cast<int>(d.size), d.work.data, d.work.data,
                                     FFTW_FORWARD, FFTW_ESTIMATE));
    d.backward.reset(fftw_plan_dft_1d(static_cast<int>(d.size), d.work.data, d.work.data,
                                      FFTW_BACKWARD, FFTW_ESTIMATE));
  }

  // Kernel b_j = exp(+i theta j^2 / 2) for j in [-(K-1), L-1], wrapped.
  Complex* w = d.work.as_complex();
  std::fill(w, w + d.size, Complex{});
  for (std::size_t j = 0; j < out_count; ++j) {
    const double jj = static_cast<double>(j);
    w[j] = unit_phase(0.5 * theta * jj * jj);
  }
  for (std::size_t j = 1; j < in_count; ++j) {
    const double jj = static_cast<double>(j);
    w[d.size - j] = unit_phase(0.5 * theta * jj * jj);
  }
  fftw_execute(d.forward.get());
  const double inv = 1.0 / static_cast<double>(d.size);
  d.kernel_spectrum.assign(w, w + d.size);
  for (Complex& v : d.kernel_spectrum) v *= inv;
}

ChirpTransform::~ChirpTransform() = default;
ChirpTransform::ChirpTransform(ChirpTransform&&) noexcept = default;
ChirpTransform& ChirpTransform::operator=(ChirpTransform&&) noexcept = default;

std::size_t ChirpTransform::in_count() const { return impl_->in_count; }
std::size_t ChirpTransform::out_count() const { return impl_->out_count; }

void ChirpTransform::apply(std::span<const Complex> in, std::span<Complex> out) {
  Impl& d = *impl_;
  if (in.size() != d.in_count || out.size() != d.out_count) {
    throw ConfigError("chirp transform called with mismatched buffer sizes");
  }
  Complex* w = d.work.as_complex();
  for (std::size_t k = 0; k < d.in_count; ++k) w[k] = in[k] * d.in_chirp[k];
  std::fill(w + d.in_count, w + d.size, Complex{});
  fftw_execute(d.forward.get());
  for (std::size_t j = 0; j < d.size; ++j) w[j] *= d.kernel_spectrum[j];
  fftw_execute(d.backward.get());
  for (std::size_t l = 0; l < d.out_count; ++l) out[l] = w[l] * d.out_chirp[l];
}

std::vector<Complex> ChirpTransform::operator()(std::span<const Complex> in) {
  std::vector<Complex> out(impl_->out_count);
  apply(in, out);
  return out;
}

namespace {

// sign = -1 for x -> p, +1 for p -> x.
SampledState fourier(const SampledState& from, const UniformGrid& target, double sign,
                     Representation to, const PhysicalConstants& k) {
  const UniformGrid& g = from.grid();
  ChirpTransform chirp(g.size(), target.size(), g.min(), g.spacing(), -sign * target.min() / k.hbar(),
                       -sign * target.spacing() / k.hbar());
  std::vector<Complex> values = chirp(from.values());
  const double scale = g.spacing() / std::sqrt(k.h());
  for (Complex& v : values) v *= scale;
  return SampledState(target, std::move(values), to);
}

}  // namespace

SampledState to_momentum(const SampledState& position, const UniformGrid& target,
                         const PhysicalConstants& k) {
  if (position.rep() != Representation::Position) {
    throw ConfigError("to_momentum expects a position-representation state");
  }
  return fourier(position, target, -1.0, Representation::Momentum, k);
}

SampledState to_momentum(const SampledState& position, const PhysicalConstants& k) {
  return to_momentum(position, dual_grid(position.grid(), k.hbar()), k);
}

SampledState to_position(const SampledState& momentum, const UniformGrid& target,
                         const PhysicalConstants& k) {
  if (momentum.rep() != Representation::Momentum) {
    throw ConfigError("to_position expects a momentum-representation state");
  }
  return fourier(momentum, target, +1.0, Representation::Position, k);
}

SampledState to_position(const SampledState& momentum, const PhysicalConstants& k) {
  return to_position(momentum, dual_grid(momentum.grid(), k.hbar()), k);
}

SampledState spectral_refine(const SampledState& state, std::size_t factor,
                             const PhysicalConstants& k) {
  const UniformGrid fine = state.grid().refined(factor);
  if (state.rep() == Representation::Momentum) {
    return to_momentum(to_position(state, k), fine, k);
  }
  return to_position(to_momentum(state, k), fine, k);
}

}  // namespace phasespace
