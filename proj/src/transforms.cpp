#include "phasespace/transforms.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "phasespace/error.hpp"
#include "phasespace/fourier.hpp"
#include "phasespace/interpolate.hpp"

namespace phasespace {

using std::numbers::pi;

const char* to_string(Regime regime) {
  return regime == Regime::Relativistic ? "relativistic" : "galilean";
}

double energy(double p, double mass, const PhysicalConstants& k) {
  const double mc = mass * k.c();
  return k.c() * std::sqrt(mc * mc + p * p);
}

double boost_velocity(double theta, const PhysicalConstants& k) { return k.c() * std::tanh(theta); }

namespace {

void require_momentum(const SampledState& psi, const char* op) {
  if (psi.rep() != Representation::Momentum) {
    throw ConfigError(std::string(op) + " expects a momentum-representation state");
  }
}

void check_rapidity(double theta) {
  if (!std::isfinite(theta) || std::abs(theta) >= kMaxRapidity) {
    throw ConfigError("boost rapidity must satisfy |theta| < " + std::to_string(kMaxRapidity));
  }
}

void check_positive_mass(double mass, const char* op) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw ConfigError(std::string(op) + " requires a positive mass");
  }
}

template <typename PhaseFn>
SampledState multiply_phase(const SampledState& psi, PhaseFn&& phase) {
  std::vector<Complex> values(psi.values().begin(), psi.values().end());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] *= std::polar(1.0, phase(psi.grid()[i]));
  }
  return SampledState(psi.grid(), std::move(values), psi.rep());
}

// The position-space picture of a momentum state lives on the dual axis;
// a phase that moves it past the dual window wraps around.
void require_position_contained(const SampledState& psi, const PhysicalConstants& k,
                                const char* op) {
  require_contained(to_position(psi, k), op);
}

// psi'(p) = sqrt(J(p)) psi(arg(p)) from a spectrally refined copy of psi.
template <typename ArgFn, typename JacobianFn>
SampledState remap(const SampledState& psi, ArgFn&& arg, JacobianFn&& jacobian,
                   const PhysicalConstants& k, const char* op) {
  require_contained(psi, op);
  const SampledState fine = spectral_refine(psi, kBoostRefinement, k);
  std::vector<Complex> values(psi.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double p = psi.grid()[i];
    values[i] = std::sqrt(jacobian(p)) * cubic_interpolate(fine.values(), fine.grid(), arg(p));
  }
  SampledState out(psi.grid(), std::move(values), psi.rep());
  require_contained(out, op);
  return out;
}

}  // namespace

SampledState time_translate_relativistic(const SampledState& psi, double t, double mass,
                                         const PhysicalConstants& k) {
  require_momentum(psi, "time_translate_relativistic");
  return multiply_phase(psi, [&](double p) { return energy(p, mass, k) * t / k.hbar(); });
}

SampledState time_translate_galilean(const SampledState& psi, double t, double mass,
                                     const PhysicalConstants& k) {
  require_momentum(psi, "time_translate_galilean");
  check_positive_mass(mass, "time_translate_galilean");
  SampledState out =
      multiply_phase(psi, [&](double p) { return p * p * t / (2.0 * mass * k.hbar()); });
  require_position_contained(out, k, "time_translate_galilean");
  return out;
}

WignerGrid time_translate_galilean(const WignerGrid& w, double t, double mass) {
  check_positive_mass(mass, "time_translate_galilean");
  const UniformGrid& xs = w.x_axis();
  const UniformGrid& ps = w.p_axis();
  const std::size_t nx = xs.size();
  const std::size_t np = ps.size();

  // A source sample at (x, p) lands at x - t p / m.
  double total = 0.0;
  double lost = 0.0;
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < np; ++j) {
      const double target = xs[i] - t * ps[j] / mass;
      const double mag = std::abs(w(i, j));
      total += mag;
      if (target < xs.min() || target > xs[nx - 1]) lost += mag;
    }
  }
  if (total > 0.0 && lost / total > kShearLostMass) {
    throw ContainmentError("Galilean shear pushes " + std::to_string(lost / total) +
                           " of the Wigner function off the x axis");
  }

  std::vector<double> column(nx);
  std::vector<double> values(nx * np);
  for (std::size_t j = 0; j < np; ++j) {
    for (std::size_t i = 0; i < nx; ++i) column[i] = w(i, j);
    const double shift = t * ps[j] / mass;
    for (std::size_t i = 0; i < nx; ++i) {
      values[i * np + j] = cubic_interpolate<double>(column, xs, xs[i] + shift);
    }
  }
  return WignerGrid(xs, ps, std::move(values));
}

SampledState space_translate(const SampledState& psi, double x0, const PhysicalConstants& k) {
  require_momentum(psi, "space_translate");
  SampledState out = multiply_phase(psi, [&](double p) { return -p * x0 / k.hbar(); });
  require_position_contained(out, k, "space_translate");
  return out;
}

SampledState boost_relativistic(const SampledState& psi, double theta, double mass,
                                const PhysicalConstants& k) {
  require_momentum(psi, "boost_relativistic");
  check_rapidity(theta);
  const double ch = std::cosh(theta);
  const double sh = std::sinh(theta);
  const double mc = mass * k.c();
  return remap(
      psi, [&](double p) { return p * ch - std::sqrt(mc * mc + p * p) * sh; },
      [&](double p) { return ch - p * sh / std::sqrt(mc * mc + p * p); }, k,
      "boost_relativistic");
}

SampledState boost_relativistic(const GaussianSpec& spec, const UniformGrid& momentum_grid,
                                double theta, const PhysicalConstants& k) {
  check_rapidity(theta);
  const double ch = std::cosh(theta);
  const double sh = std::sinh(theta);
  const double mc = spec.mass() * k.c();
  std::vector<Complex> values(momentum_grid.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double p = momentum_grid[i];
    const double root = std::sqrt(mc * mc + p * p);
    const double jacobian = ch - p * sh / root;
    values[i] = std::sqrt(jacobian) * spec.momentum_amplitude(p * ch - root * sh, k);
  }
  return SampledState(momentum_grid, std::move(values), Representation::Momentum);
}

SampledState boost_galilean(const SampledState& psi, double theta, double mass,
                            const PhysicalConstants& k) {
  require_momentum(psi, "boost_galilean");
  check_rapidity(theta);
  const double shift = mass * boost_velocity(theta, k);
  return remap(
      psi, [&](double p) { return p - shift; }, [](double) { return 1.0; }, k, "boost_galilean");
}

SampledState boost_galilean(const GaussianSpec& spec, const UniformGrid& momentum_grid,
                            double theta, const PhysicalConstants& k) {
  check_rapidity(theta);
  const double shift = spec.mass() * boost_velocity(theta, k);
  std::vector<Complex> values(momentum_grid.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = spec.momentum_amplitude(momentum_grid[i] - shift, k);
  }
  return SampledState(momentum_grid, std::move(values), Representation::Momentum);
}

QuadratureWigner wigner_time_translate_direct(const GaussianSpec& spec, double t,
                                              const UniformGrid& x_axis, const UniformGrid& p_axis,
                                              const PhysicalConstants& k) {
  const double hbar = k.hbar();
  const double a = spec.a();
  const double width = a * hbar;
  const double mc = spec.mass() * k.c();
  const double half_range = 15.0 * width;

  const double x_reach = std::max(std::abs(x_axis.min()), std::abs(x_axis[x_axis.size() - 1]));
  const double fastest = x_reach + std::abs(t) * k.c();
  const double coarse_step = fastest > 0.0 ? pi * hbar / (8.0 * fastest) : half_range;
  const auto coarse_intervals =
      static_cast<std::size_t>(std::ceil(2.0 * half_range / coarse_step));
  const std::size_t fine_intervals = 2 * coarse_intervals;
  const double h = 2.0 * half_range / static_cast<double>(fine_intervals);
  const std::size_t nodes = fine_intervals + 1;

  const std::size_t n_even = coarse_intervals + 1;
  const std::size_t n_odd = coarse_intervals;
  const Eigen::Index nx = static_cast<Eigen::Index>(x_axis.size());
  const Eigen::Index np = static_cast<Eigen::Index>(p_axis.size());

  // phase[i, node] = exp(i p' x_i / hbar); integrand[node, j] carries the
  // Gaussian envelope, the energy-difference phase and the trapezoid weight.
  Eigen::MatrixXcd phase_even(nx, static_cast<Eigen::Index>(n_even));
  Eigen::MatrixXcd phase_odd(nx, static_cast<Eigen::Index>(n_odd));
  Eigen::MatrixXcd integrand_even(static_cast<Eigen::Index>(n_even), np);
  Eigen::MatrixXcd integrand_odd(static_cast<Eigen::Index>(n_odd), np);

  for (std::size_t node = 0; node < nodes; ++node) {
    const double q = -half_range + static_cast<double>(node) * h;
    const double weight = (node == 0 || node + 1 == nodes) ? 0.5 : 1.0;
    const double envelope = weight * std::exp(-q * q / (4.0 * width * width));
    const auto col = static_cast<Eigen::Index>(node / 2);
    for (Eigen::Index i = 0; i < nx; ++i) {
      const Complex e = std::polar(1.0, q * x_axis[static_cast<std::size_t>(i)] / hbar);
      (node % 2 == 0 ? phase_even : phase_odd)(i, col) = e;
    }
    for (Eigen::Index j = 0; j < np; ++j) {
      const double p = p_axis[static_cast<std::size_t>(j)];
      const double hi = std::sqrt(mc * mc + (p + 0.5 * q) * (p + 0.5 * q));
      const double lo = std::sqrt(mc * mc + (p - 0.5 * q) * (p - 0.5 * q));
      const Complex g = std::polar(envelope, t * k.c() / hbar * (hi - lo));
      (node % 2 == 0 ? integrand_even : integrand_odd)(col, j) = g;
    }
  }

  const Eigen::MatrixXcd sum_even = phase_even * integrand_even;
  const Eigen::MatrixXcd sum_odd = phase_odd * integrand_odd;

  const double prefactor = 1.0 / (2.0 * hbar * hbar * std::pow(pi, 1.5) * a);
  std::vector<double> values(x_axis.size() * p_axis.size());
  double delta = 0.0;
  double imag = 0.0;
  for (Eigen::Index i = 0; i < nx; ++i) {
    for (Eigen::Index j = 0; j < np; ++j) {
      const double p = p_axis[static_cast<std::size_t>(j)];
      const double outer = prefactor * std::exp(-p * p / (width * width));
      const Complex fine = outer * h * (sum_even(i, j) + sum_odd(i, j));
      const Complex coarse = outer * 2.0 * h * sum_even(i, j);
      values[static_cast<std::size_t>(i) * p_axis.size() + static_cast<std::size_t>(j)] =
          fine.real();
      delta = std::max(delta, std::abs(fine.real() - coarse.real()));
      imag = std::max(imag, std::abs(fine.imag()));
    }
  }
  if (delta > kQuadratureConvergence) {
    throw ConvergenceError("time-translation quadrature changed by " + std::to_string(delta) +
                           " under step halving");
  }
  return QuadratureWigner{WignerGrid(x_axis, p_axis, std::move(values), imag), delta, imag, nodes};
}

SampledState apply(const TransformSpec& spec, const SampledState& psi, double mass,
                   const PhysicalConstants& k) {
  const bool rel = spec.regime == Regime::Relativistic;
  return std::visit(
      [&](const auto& op) -> SampledState {
        using T = std::decay_t<decltype(op)>;
        if constexpr (std::is_same_v<T, TimeTranslation>) {
          return rel ? time_translate_relativistic(psi, op.t, mass, k)
                     : time_translate_galilean(psi, op.t, mass, k);
        } else if constexpr (std::is_same_v<T, SpaceTranslation>) {
          return space_translate(psi, op.x0, k);
        } else {
          return rel ? boost_relativistic(psi, op.theta, mass, k)
                     : boost_galilean(psi, op.theta, mass, k);
        }
      },
      spec.kind);
}

SampledState compose(std::span<const TransformSpec> specs, const SampledState& psi, double mass,
                     const PhysicalConstants& k) {
  SampledState state = psi;
  for (auto it = specs.rbegin(); it != specs.rend(); ++it) state = apply(*it, state, mass, k);
  return state;
}

namespace {

int canonical_rank(const TransformSpec& s) {
  // Leftmost factor first: boost, space translation, time translation.
  return static_cast<int>(2 - s.kind.index());
}

}  // namespace

std::vector<TransformSpec> canonical_order(std::span<const TransformSpec> specs) {
  std::vector<TransformSpec> out(specs.begin(), specs.end());
  std::stable_sort(out.begin(), out.end(), [](const TransformSpec& a, const TransformSpec& b) {
    return canonical_rank(a) < canonical_rank(b);
  });
  return out;
}

bool is_canonical_order(std::span<const TransformSpec> specs) {
  return std::is_sorted(specs.begin(), specs.end(),
                        [](const TransformSpec& a, const TransformSpec& b) {
                          return canonical_rank(a) < canonical_rank(b);
                        });
}

}  // namespace phasespace
