#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "phasespace/error.hpp"
#include "phasespace/fourier.hpp"
#include "phasespace/gaussian.hpp"
#include "phasespace/wigner.hpp"
#include "support.hpp"

using namespace phasespace;

namespace {

const UniformGrid kWideX = UniformGrid::centered(1024, 16.0);
const UniformGrid kWideP = UniformGrid::centered(1024, 16.0);
const UniformGrid kX = UniformGrid::centered(512, 8.0);
const UniformGrid kP = UniformGrid::centered(512, 8.0);

double closed_form_error(const WignerGrid& w, const GaussianSpec& g, const PhysicalConstants& k) {
  double worst = 0.0;
  for (std::size_t i = 0; i < w.x_axis().size(); ++i) {
    for (std::size_t j = 0; j < w.p_axis().size(); ++j) {
      worst = std::max(worst, std::abs(w(i, j) - g.wigner(w.x_axis()[i], w.p_axis()[j], k)));
    }
  }
  return worst;
}

std::vector<double> densities(const SampledState& s, const UniformGrid& window) {
  const std::size_t off = *window.offset_in(s.grid());
  std::vector<double> out(window.size());
  for (std::size_t i = 0; i < window.size(); ++i) out[i] = std::norm(s[off + i]);
  return out;
}

// Momentum packets broad enough that their position content stays well
// inside the 16-wide window.
std::vector<testing::Packet> window_packets(std::mt19937_64& rng) {
  auto packets = testing::random_packets(rng, 3, 1.5);
  for (auto& p : packets) p.width = std::max(p.width, 0.8);
  return packets;
}

double max_diff(std::span<const double> a, std::span<const double> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

TEST_CASE("gaussian WDF matches the closed form from both representations") {
  const GaussianSpec g(1.0, 2.0);
  const SampledState phi = sample_gaussian(g, kWideX, Representation::Position);
  const SampledState psi = sample_gaussian(g, kWideP, Representation::Momentum);
  const WignerGrid wx = wigner_from_position(phi, kX, kP);
  const WignerGrid wp = wigner_from_momentum(psi, kX, kP);
  CHECK(closed_form_error(wx, g, {}) < 1e-12);
  CHECK(closed_form_error(wp, g, {}) < 1e-12);
  CHECK(wp(256, 256) == doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-13));
  CHECK(wp.imag_residue() < 1e-12);
}

TEST_CASE("gaussian WDF with non-unit constants") {
  const PhysicalConstants k(0.6, 3.0);
  const GaussianSpec g(1.4, 1.0);
  const UniformGrid x = UniformGrid::centered(256, 8.0 / 1.4);
  const UniformGrid p = UniformGrid::centered(256, 8.0 * 1.4 * 0.6);
  const SampledState psi =
      sample_gaussian(g, UniformGrid::centered(512, 16.0 * 1.4 * 0.6), Representation::Momentum, k);
  const WignerGrid w = wigner_from_momentum(psi, x, p, k);
  CHECK(closed_form_error(w, g, k) < 1e-12);
  CHECK(purity(w, k) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(uncertainty_product(w) == doctest::Approx(0.3).epsilon(1e-9));
}

TEST_CASE("WDF agrees with a term-by-term direct sum") {
  std::mt19937_64 rng(21);
  const UniformGrid x = UniformGrid::centered(128, 12.0);
  const UniformGrid window = UniformGrid::centered(32, 3.0);
  const UniformGrid p(32, -4.1, 3.7);  // not aligned with any FFT axis
  for (int trial = 0; trial < 3; ++trial) {
    const SampledState phi = testing::sample_packets(testing::random_packets(rng), x, Representation::Position);
    const WignerGrid w = wigner_from_position(phi, window, p);
    const auto direct = testing::direct_wigner_position(phi, *window.offset_in(x), window.size(), p);
    CHECK(max_diff(w.values(), direct) < 1e-12);
  }
}

TEST_CASE("position and momentum forms agree on random superpositions") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 4; ++trial) {
    const SampledState psi =
        testing::sample_packets(window_packets(rng), kWideP, Representation::Momentum);
    const SampledState phi = to_position(psi, kWideX);
    const WignerGrid wp = wigner_from_momentum(psi, kX, kP);
    const WignerGrid wx = wigner_from_position(phi, kX, kP);
    INFO("trial " << trial);
    CHECK(max_abs_difference(wp, wx) < 1e-10);
    CHECK(std::max(wp.imag_residue(), wx.imag_residue()) < 1e-12);
  }
}

TEST_CASE("WDF invariants on random superpositions") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 4; ++trial) {
    const SampledState psi =
        testing::sample_packets(window_packets(rng), kWideP, Representation::Momentum);
    const SampledState phi = to_position(psi, kWideX);
    const WignerGrid w = wigner_from_momentum(psi, kX, kP);
    INFO("trial " << trial);
    CHECK(ps_integral(w) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(purity(w) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(uncertainty_product(w) >= 0.5 - 1e-6);
    CHECK(max_diff(marginal_x(w), densities(phi, kX)) < 1e-10);
    CHECK(max_diff(marginal_p(w), densities(psi, kP)) < 1e-10);
    CHECK(ps_mean(w, Axis::X) == doctest::Approx(quantum_mean(psi, Axis::X)).epsilon(1e-8));
    CHECK(ps_mean(w, Axis::P) == doctest::Approx(quantum_mean(psi, Axis::P)).epsilon(1e-8));
    CHECK(ps_variance(w, Axis::X) == doctest::Approx(quantum_variance(phi, Axis::X)).epsilon(1e-8));
    CHECK(ps_variance(w, Axis::P) == doctest::Approx(quantum_variance(phi, Axis::P)).epsilon(1e-8));
  }
}

TEST_CASE("separated superposition has negative regions") {
  const std::vector<testing::Packet> cat{{-3.0, 0.0, 1.0, 1.0}, {3.0, 0.0, 1.0, 1.0}};
  const SampledState phi = testing::sample_packets(cat, kWideX, Representation::Position);
  const WignerGrid w = wigner_from_position(phi, kX, kP);
  const double lowest = *std::min_element(w.values().begin(), w.values().end());
  CHECK(lowest < -0.1);
  CHECK(purity(w) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("half-maximum area of the gaussian") {
  const SampledState psi = sample_gaussian(GaussianSpec(1.0, 1.0), kWideP, Representation::Momentum);
  const WignerGrid w = wigner_from_momentum(psi, kX, kP);
  CHECK(half_max_area(w) == doctest::Approx(std::numbers::pi * std::log(2.0)).epsilon(0.01));
}

TEST_CASE("WDF argument checks") {
  const SampledState psi = sample_gaussian(GaussianSpec(1.0, 1.0), kWideP, Representation::Momentum);
  CHECK_THROWS_AS(wigner_from_momentum(psi, kX, UniformGrid::centered(512, 7.9)), ConfigError);
  CHECK_THROWS_AS(wigner_from_position(psi, kX, kP), ConfigError);

  std::vector<double> half(16 * 16, 0.5 / 64.0);
  const WignerGrid off(UniformGrid::centered(16, 4.0), UniformGrid::centered(16, 4.0), half);
  CHECK(ps_integral(off) == doctest::Approx(0.5));
  CHECK_THROWS_AS(ps_mean(off, Axis::X), NormalizationError);
  CHECK_THROWS_AS(uncertainty_product(off), NormalizationError);
  CHECK_THROWS_AS(WignerGrid(kX, kP, std::vector<double>(3)), ConfigError);
}

TEST_CASE("distances between grids") {
  const UniformGrid g = UniformGrid::centered(16, 4.0);
  std::vector<double> a(256, 0.0), b(256, 0.0);
  b[17] = 2.0;
  const WignerGrid wa(g, g, a), wb(g, g, b);
  CHECK(l1_distance(wa, wb) == doctest::Approx(2.0 * 0.25));
  CHECK(max_abs_difference(wa, wb) == 2.0);
  CHECK(l1_distance(wa, wa) == 0.0);
}
