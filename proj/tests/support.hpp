#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "phasespace/constants.hpp"
#include "phasespace/grid.hpp"
#include "phasespace/state.hpp"
#include "phasespace/wigner.hpp"

namespace testing {

using phasespace::Complex;
using phasespace::PhysicalConstants;
using phasespace::Representation;
using phasespace::SampledState;
using phasespace::UniformGrid;

struct Packet {
  double centre;
  double kick;   // carrier in the conjugate variable
  double width;
  Complex weight;
};

/// Random superposition of a few Gaussians with centres and kicks in
/// [-reach, reach] and widths in [0.5, max_width].
inline std::vector<Packet> random_packets(std::mt19937_64& rng, int count = 3, double reach = 2.0,
                                          double max_width = 1.4) {
  std::uniform_real_distribution<double> pos(-reach, reach);
  std::uniform_real_distribution<double> width(0.5, max_width);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> mag(0.3, 1.0);
  std::vector<Packet> out;
  for (int i = 0; i < count; ++i) {
    const double c = pos(rng);
    const double k = pos(rng);
    out.push_back({c, k, width(rng), std::polar(mag(rng), phase(rng))});
  }
  return out;
}

/// Samples sum w exp(-(u - centre)^2 / (2 width^2)) exp(i kick u / hbar),
/// normalised on the grid. Throws ContainmentError if the grid is too small.
inline SampledState sample_packets(const std::vector<Packet>& packets, const UniformGrid& grid,
                                   Representation rep, const PhysicalConstants& k = {}) {
  const double sign = rep == Representation::Position ? 1.0 : -1.0;
  std::vector<Complex> v(grid.size());
  for (const Packet& g : packets) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double u = grid[i];
      const double d = (u - g.centre) / g.width;
      v[i] += g.weight * std::exp(-0.5 * d * d) * std::polar(1.0, sign * g.kick * u / k.hbar());
    }
  }
  SampledState s = phasespace::normalize(SampledState(grid, std::move(v), rep));
  phasespace::require_contained(s, "test packet");
  return s;
}

/// Direct O(N^2) evaluation of h^-1/2 sum f(u_k) exp(sign i v u_k / hbar) du.
inline std::vector<Complex> direct_fourier(const SampledState& s, const UniformGrid& target, double sign,
                                           const PhysicalConstants& k = {}) {
  std::vector<Complex> out(target.size());
  const double scale = s.grid().spacing() / std::sqrt(k.h());
  for (std::size_t l = 0; l < target.size(); ++l) {
    Complex acc{};
    for (std::size_t j = 0; j < s.size(); ++j) {
      acc += s[j] * std::polar(1.0, sign * target[l] * s.grid()[j] / k.hbar());
    }
    out[l] = acc * scale;
  }
  return out;
}

/// Direct evaluation of W(x, p) = h^-1 int phi*(x - y/2) phi(x + y/2)
/// exp(-i p y / hbar) dy with y = 2 m dx, summed term by term with no
/// transform machinery. Rows are the state grid points starting at x_offset.
inline std::vector<double> direct_wigner_position(const SampledState& phi, std::size_t x_offset,
                                                  std::size_t x_count, const UniformGrid& p_axis,
                                                  const PhysicalConstants& k = {}) {
  const auto n = static_cast<std::ptrdiff_t>(phi.size());
  const double dx = phi.grid().spacing();
  std::vector<double> out(x_count * p_axis.size());
  for (std::size_t i = 0; i < x_count; ++i) {
    const auto c = static_cast<std::ptrdiff_t>(x_offset + i);
    for (std::size_t j = 0; j < p_axis.size(); ++j) {
      Complex acc{};
      for (std::ptrdiff_t m = -n; m <= n; ++m) {
        if (c - m < 0 || c - m >= n || c + m < 0 || c + m >= n) continue;
        acc += std::conj(phi[static_cast<std::size_t>(c - m)]) * phi[static_cast<std::size_t>(c + m)] *
               std::polar(1.0, -2.0 * p_axis[j] * static_cast<double>(m) * dx / k.hbar());
      }
      out[i * p_axis.size() + j] = acc.real() * 2.0 * dx / k.h();
    }
  }
  return out;
}

}  // namespace testing
