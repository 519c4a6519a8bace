#include "phasespace/algebra.hpp"

#include <cmath>
#include <numbers>

#include "phasespace/error.hpp"
#include "phasespace/transforms.hpp"

namespace phasespace {

const char* to_string(GeneratorLabel label) {
  switch (label) {
    case GeneratorLabel::H: return "H";
    case GeneratorLabel::P: return "P";
    case GeneratorLabel::K: return "K";
    case GeneratorLabel::R: return "R";
    case GeneratorLabel::M: return "M";
    case GeneratorLabel::V: return "V";
  }
  return "?";
}

OperatorMatrix::OperatorMatrix(UniformGrid grid, Eigen::MatrixXcd entries, GeneratorLabel label)
    : grid_(grid), entries_(std::move(entries)), label_(label) {
  const auto n = static_cast<Eigen::Index>(grid_.size());
  if (entries_.rows() != n || entries_.cols() != n) {
    throw ConfigError("operator matrix shape does not match its grid");
  }
}

namespace {

Eigen::VectorXcd as_vector(const SampledState& s) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i) v(static_cast<Eigen::Index>(i)) = s[i];
  return v;
}

SampledState as_state(const UniformGrid& grid, const Eigen::VectorXcd& v) {
  return SampledState(grid, std::vector<Complex>(v.data(), v.data() + v.size()),
                      Representation::Momentum);
}

void check_operand(const OperatorMatrix& a, const SampledState& psi) {
  if (psi.rep() != Representation::Momentum || !(psi.grid() == a.grid())) {
    throw ConfigError("operator applied to a state on a different momentum grid");
  }
}

double l2(const UniformGrid& grid, const Eigen::VectorXcd& v) {
  return std::sqrt(v.squaredNorm() * grid.spacing());
}

Eigen::VectorXcd commutator_action(const OperatorMatrix& a, const OperatorMatrix& b,
                                   const SampledState& psi) {
  check_operand(a, psi);
  check_operand(b, psi);
  const Eigen::VectorXcd v = as_vector(psi);
  return a.entries() * (b.entries() * v) - b.entries() * (a.entries() * v);
}

}  // namespace

SampledState OperatorMatrix::apply(const SampledState& psi) const {
  check_operand(*this, psi);
  return as_state(grid_, entries_ * as_vector(psi));
}

Eigen::MatrixXd spectral_differentiation_matrix(const UniformGrid& grid) {
  const auto n = static_cast<Eigen::Index>(grid.size());
  const double scale = std::numbers::pi / grid.span();
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      if (j == k) continue;
      const auto diff = j - k;
      const double sign = (diff % 2 == 0) ? 1.0 : -1.0;
      d(j, k) = scale * sign / std::tan(std::numbers::pi * static_cast<double>(diff) /
                                        static_cast<double>(n));
    }
  }
  return d;
}

Generators build_generators(const UniformGrid& momentum_grid, double mass,
                            const PhysicalConstants& k) {
  if (!(mass > 0.0) || !std::isfinite(mass)) throw ConfigError("generators need a positive mass");
  const auto n = static_cast<Eigen::Index>(momentum_grid.size());
  const double c = k.c();
  const Complex i_hbar{0.0, k.hbar()};

  Eigen::VectorXd p(n);
  Eigen::VectorXd omega(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    p(j) = momentum_grid[static_cast<std::size_t>(j)];
    omega(j) = energy(p(j), mass, k);
  }
  const Eigen::MatrixXcd d = spectral_differentiation_matrix(momentum_grid).cast<Complex>();

  Eigen::VectorXd mass_diag(n);
  Eigen::VectorXd velocity(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    mass_diag(j) = std::sqrt(omega(j) * omega(j) - p(j) * p(j) * c * c) / (c * c);
    velocity(j) = p(j) * c * c / omega(j);
  }

  auto diag = [](const Eigen::VectorXd& v) -> Eigen::MatrixXcd {
    return v.cast<Complex>().asDiagonal();
  };
  const Eigen::MatrixXcd boost =
      i_hbar * (-(diag(omega / (c * c)) * d) - diag(p.cwiseQuotient(2.0 * omega)));

  return Generators{
      OperatorMatrix(momentum_grid, diag(omega), GeneratorLabel::H),
      OperatorMatrix(momentum_grid, diag(p), GeneratorLabel::P),
      OperatorMatrix(momentum_grid, boost, GeneratorLabel::K),
      OperatorMatrix(momentum_grid, i_hbar * d, GeneratorLabel::R),
      OperatorMatrix(momentum_grid, diag(mass_diag), GeneratorLabel::M),
      OperatorMatrix(momentum_grid, diag(velocity), GeneratorLabel::V),
  };
}

double commutator_residual(const OperatorMatrix& a, const OperatorMatrix& b,
                           const SampledState& psi) {
  return l2(psi.grid(), commutator_action(a, b, psi));
}

double commutator_residual(const OperatorMatrix& a, const OperatorMatrix& b,
                           std::complex<double> coefficient, const OperatorMatrix& c,
                           const SampledState& psi) {
  check_operand(c, psi);
  const Eigen::VectorXcd expected = coefficient * (c.entries() * as_vector(psi));
  return l2(psi.grid(), commutator_action(a, b, psi) - expected) / l2(psi.grid(), expected);
}

double hermiticity_check(const OperatorMatrix& a, const SampledState& phi,
                         const SampledState& chi) {
  return std::abs(inner_product(a.apply(phi), chi) - inner_product(phi, a.apply(chi)));
}

double boost_generator_consistency(double theta, const GaussianSpec& spec,
                                   const UniformGrid& momentum_grid, const PhysicalConstants& k) {
  const SampledState psi = sample_gaussian(spec, momentum_grid, Representation::Momentum, k);
  const SampledState boosted = boost_relativistic(spec, momentum_grid, theta, k);
  const Generators g = build_generators(momentum_grid, spec.mass(), k);
  const Eigen::VectorXcd v = as_vector(psi);
  const Eigen::VectorXcd step = v - Complex{0.0, theta * k.c() / k.hbar()} * (g.K.entries() * v);
  return l2(momentum_grid, as_vector(boosted) - step) / l2(momentum_grid, as_vector(boosted));
}

namespace {

double diagonal_exponential_deviation(const OperatorMatrix& gen, Complex factor,
                                      const SampledState& psi, const SampledState& transformed) {
  check_operand(gen, psi);
  double worst = 0.0;
  for (std::size_t j = 0; j < psi.size(); ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    const Complex expected = std::exp(factor * gen.entries()(jj, jj)) * psi[j];
    worst = std::max(worst, std::abs(expected - transformed[j]));
  }
  return worst;
}

}  // namespace

double time_generator_consistency(double t, const SampledState& psi, const Generators& g,
                                  const PhysicalConstants& k) {
  const double mass = g.M.entries()(0, 0).real();
  return diagonal_exponential_deviation(g.H, Complex{0.0, t / k.hbar()}, psi,
                                        time_translate_relativistic(psi, t, mass, k));
}

double space_generator_consistency(double x0, const SampledState& psi, const Generators& g,
                                   const PhysicalConstants& k) {
  return diagonal_exponential_deviation(g.P, Complex{0.0, -x0 / k.hbar()}, psi,
                                        space_translate(psi, x0, k));
}

}  // namespace phasespace
