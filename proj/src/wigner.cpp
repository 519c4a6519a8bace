#include "phasespace/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "phasespace/error.hpp"
#include "phasespace/fourier.hpp"

namespace phasespace {

WignerGrid::WignerGrid(UniformGrid x_axis, UniformGrid p_axis, std::vector<double> values,
                       double imag_residue)
    : x_axis_(x_axis), p_axis_(p_axis), values_(std::move(values)), imag_residue_(imag_residue) {
  if (values_.size() != x_axis_.size() * p_axis_.size()) {
    throw ConfigError("Wigner grid value count does not match its axes");
  }
}

namespace {

std::size_t aligned_offset(const UniformGrid& axis, const UniformGrid& state_grid,
                           const char* what) {
  const auto offset = axis.offset_in(state_grid);
  if (!offset) {
    throw ConfigError(std::string(what) +
                      " axis must be a sub-grid of the state grid (same spacing, aligned samples)");
  }
  return *offset;
}

// Fills `corr` with conj(f[c-k]) f[c+k] for k = -(n-1)..(n-1), zero where
// either index leaves the array.
void centred_correlation(std::span<const Complex> f, std::size_t centre,
                         std::span<Complex> corr) {
  const auto n = static_cast<std::ptrdiff_t>(f.size());
  const auto c = static_cast<std::ptrdiff_t>(centre);
  std::fill(corr.begin(), corr.end(), Complex{});
  const std::ptrdiff_t reach = std::min(c, n - 1 - c);
  for (std::ptrdiff_t k = -reach; k <= reach; ++k) {
    corr[static_cast<std::size_t>(k + n - 1)] =
        std::conj(f[static_cast<std::size_t>(c - k)]) * f[static_cast<std::size_t>(c + k)];
  }
}

}  // namespace

WignerGrid wigner_from_position(const SampledState& phi, const UniformGrid& x_axis,
                                const UniformGrid& p_axis, const PhysicalConstants& k) {
  if (phi.rep() != Representation::Position) {
    throw ConfigError("wigner_from_position expects a position-representation state");
  }
  require_contained(phi, "wigner_from_position");
  const UniformGrid& g = phi.grid();
  const std::size_t offset = aligned_offset(x_axis, g, "x");
  const std::size_t n = g.size();
  const double dx = g.spacing();

  ChirpTransform chirp(2 * n - 1, p_axis.size(), -static_cast<double>(n - 1) * dx, dx,
                       2.0 * p_axis.min() / k.hbar(), 2.0 * p_axis.spacing() / k.hbar());
  std::vector<Complex> corr(2 * n - 1);
  std::vector<Complex> row(p_axis.size());
  std::vector<double> values(x_axis.size() * p_axis.size());
  const double scale = 2.0 * dx / k.h();
  double imag = 0.0;
  for (std::size_t i = 0; i < x_axis.size(); ++i) {
    centred_correlation(phi.values(), offset + i, corr);
    chirp.apply(corr, row);
    for (std::size_t j = 0; j < p_axis.size(); ++j) {
      values[i * p_axis.size() + j] = scale * row[j].real();
      imag = std::max(imag, std::abs(scale * row[j].imag()));
    }
  }
  return WignerGrid(x_axis, p_axis, std::move(values), imag);
}

WignerGrid wigner_from_position(const SampledState& phi, const UniformGrid& p_axis,
                                const PhysicalConstants& k) {
  return wigner_from_position(phi, phi.grid(), p_axis, k);
}

WignerGrid wigner_from_momentum(const SampledState& psi, const UniformGrid& x_axis,
                                const UniformGrid& p_axis, const PhysicalConstants& k) {
  if (psi.rep() != Representation::Momentum) {
    throw ConfigError("wigner_from_momentum expects a momentum-representation state");
  }
  require_contained(psi, "wigner_from_momentum");
  const UniformGrid& g = psi.grid();
  const std::size_t offset = aligned_offset(p_axis, g, "p");
  const std::size_t n = g.size();
  const double dp = g.spacing();

  ChirpTransform chirp(2 * n - 1, x_axis.size(), -static_cast<double>(n - 1) * dp, dp,
                       -2.0 * x_axis.min() / k.hbar(), -2.0 * x_axis.spacing() / k.hbar());
  std::vector<Complex> corr(2 * n - 1);
  std::vector<Complex> column(x_axis.size());
  std::vector<double> values(x_axis.size() * p_axis.size());
  const double scale = 2.0 * dp / k.h();
  double imag = 0.0;
  for (std::size_t j = 0; j < p_axis.size(); ++j) {
    centred_correlation(psi.values(), offset + j, corr);
    chirp.apply(corr, column);
    for (std::size_t i = 0; i < x_axis.size(); ++i) {
      values[i * p_axis.size() + j] = scale * column[i].real();
      imag = std::max(imag, std::abs(scale * column[i].imag()));
    }
  }
  return WignerGrid(x_axis, p_axis, std::move(values), imag);
}

std::vector<double> marginal_x(const WignerGrid& w) {
  std::vector<double> out(w.x_axis().size(), 0.0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < w.p_axis().size(); ++j) sum += w(i, j);
    out[i] = sum * w.p_axis().spacing();
  }
  return out;
}

std::vector<double> marginal_p(const WignerGrid& w) {
  std::vector<double> out(w.p_axis().size(), 0.0);
  for (std::size_t i = 0; i < w.x_axis().size(); ++i) {
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += w(i, j);
  }
  for (double& v : out) v *= w.x_axis().spacing();
  return out;
}

double ps_integral(const WignerGrid& w) {
  double sum = 0.0;
  for (double v : w.values()) sum += v;
  return sum * w.cell_area();
}

void require_ps_normalized(const WignerGrid& w) {
  const double total = ps_integral(w);
  if (!(std::abs(total - 1.0) <= kPsNormalizationTolerance)) {
    throw NormalizationError("Wigner function integrates to " + std::to_string(total) +
                             ", expected 1");
  }
}

double ps_mean(const WignerGrid& w, Axis which) {
  return ps_expect(w, [which](double x, double p) { return which == Axis::X ? x : p; });
}

double ps_variance(const WignerGrid& w, Axis which) {
  const double mean = ps_mean(w, which);
  return ps_expect(w, [which, mean](double x, double p) {
    const double d = (which == Axis::X ? x : p) - mean;
    return d * d;
  });
}

double purity(const WignerGrid& w, const PhysicalConstants& k) {
  double sum = 0.0;
  for (double v : w.values()) sum += v * v;
  return k.h() * sum * w.cell_area();
}

double uncertainty_product(const WignerGrid& w) {
  return std::sqrt(ps_variance(w, Axis::X)) * std::sqrt(ps_variance(w, Axis::P));
}

namespace {

void require_same_axes(const WignerGrid& a, const WignerGrid& b) {
  if (!(a.x_axis() == b.x_axis()) || !(a.p_axis() == b.p_axis())) {
    throw ConfigError("Wigner grids are sampled on different axes");
  }
}

}  // namespace

double l1_distance(const WignerGrid& a, const WignerGrid& b) {
  require_same_axes(a, b);
  double sum = 0.0;
  for (std::size_t k = 0; k < a.values().size(); ++k) {
    sum += std::abs(a.values()[k] - b.values()[k]);
  }
  return sum * a.cell_area();
}

double max_abs_difference(const WignerGrid& a, const WignerGrid& b) {
  require_same_axes(a, b);
  double worst = 0.0;
  for (std::size_t k = 0; k < a.values().size(); ++k) {
    worst = std::max(worst, std::abs(a.values()[k] - b.values()[k]));
  }
  return worst;
}

double half_max_area(const WignerGrid& w) {
  const double peak = *std::max_element(w.values().begin(), w.values().end());
  const auto cells = std::count_if(w.values().begin(), w.values().end(),
                                   [peak](double v) { return v >= 0.5 * peak; });
  return static_cast<double>(cells) * w.cell_area();
}

namespace {

// First and second moments of |f|^2 along the state's own axis.
std::pair<double, double> axis_moments(const SampledState& s) {
  double m0 = 0.0;
  double m1 = 0.0;
  double m2 = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double q = s.grid()[i];
    const double rho = std::norm(s[i]);
    m0 += rho;
    m1 += q * rho;
    m2 += q * q * rho;
  }
  const double mean = m1 / m0;
  return {mean, m2 / m0 - mean * mean};
}

SampledState in_representation_of(const SampledState& s, Axis which, const PhysicalConstants& k) {
  const bool want_position = which == Axis::X;
  if (want_position == (s.rep() == Representation::Position)) return s;
  return want_position ? to_position(s, k) : to_momentum(s, k);
}

}  // namespace

double quantum_mean(const SampledState& state, Axis which, const PhysicalConstants& k) {
  return axis_moments(in_representation_of(state, which, k)).first;
}

double quantum_variance(const SampledState& state, Axis which, const PhysicalConstants& k) {
  return axis_moments(in_representation_of(state, which, k)).second;
}

}  // namespace phasespace
