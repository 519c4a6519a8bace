#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>

#include "phasespace/error.hpp"
#include "phasespace/fourier.hpp"
#include "phasespace/gaussian.hpp"
#include "phasespace/interpolate.hpp"
#include "phasespace/output.hpp"
#include "support.hpp"

using namespace phasespace;

namespace {

double max_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("phasespace_core_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("grid layout") {
  const UniformGrid g = UniformGrid::centered(512, 8.0);
  CHECK(g.size() == 512);
  CHECK(g.min() == -8.0);
  CHECK(g.max() == 8.0);
  CHECK(g.spacing() == doctest::Approx(1.0 / 32.0));
  CHECK(g[256] == 0.0);
  CHECK(g.points().back() == doctest::Approx(8.0 - 1.0 / 32.0));
  CHECK(g.refined(4).size() == 2048);
  CHECK(g.refined(4).spacing() == doctest::Approx(g.spacing() / 4));

  CHECK_THROWS_AS(UniformGrid(100, -1.0, 1.0), ConfigError);
  CHECK_THROWS_AS(UniformGrid(4, -1.0, 1.0), ConfigError);
  CHECK_THROWS_AS(UniformGrid(16, 1.0, 1.0), ConfigError);
  CHECK_THROWS_AS(UniformGrid(16, 0.0, INFINITY), ConfigError);
}

TEST_CASE("grid alignment") {
  const UniformGrid parent = UniformGrid::centered(1024, 16.0);
  const UniformGrid window = UniformGrid::centered(512, 8.0);
  REQUIRE(window.offset_in(parent).has_value());
  CHECK(*window.offset_in(parent) == 256);
  CHECK_FALSE(UniformGrid::centered(512, 7.9).offset_in(parent).has_value());
  CHECK_FALSE(UniformGrid::centered(256, 8.0).offset_in(parent).has_value());
}

TEST_CASE("dual grid spacing") {
  const UniformGrid x = UniformGrid::centered(256, 10.0);
  const UniformGrid p = dual_grid(x, 0.5);
  CHECK(p.size() == 256);
  CHECK(p.spacing() == doctest::Approx(2.0 * std::numbers::pi * 0.5 / (256 * x.spacing())));
  CHECK(p[128] == doctest::Approx(0.0));
}

TEST_CASE("physical constants") {
  const PhysicalConstants k(0.5, 3.0);
  CHECK(k.h() == doctest::Approx(std::numbers::pi));
  CHECK(PhysicalConstants{}.hbar() == 1.0);
  CHECK_THROWS_AS(PhysicalConstants(0.0, 1.0), ConfigError);
  CHECK_THROWS_AS(PhysicalConstants(1.0, -1.0), ConfigError);
}

TEST_CASE("state helpers") {
  const UniformGrid g = UniformGrid::centered(64, 8.0);
  CHECK_THROWS_AS(SampledState(g, std::vector<Complex>(10), Representation::Position), ConfigError);
  CHECK_THROWS_AS(normalize(SampledState(g, std::vector<Complex>(64), Representation::Position)),
                  NormalizationError);

  std::vector<Complex> flat(64, Complex{1.0, 0.0});
  const SampledState box(g, flat, Representation::Position);
  CHECK(l2_norm(box) == doctest::Approx(4.0));
  CHECK(l2_norm(normalize(box)) == doctest::Approx(1.0));
  CHECK(boundary_ratio(box) == 1.0);
  CHECK_FALSE(is_contained(box));
  CHECK_THROWS_AS(require_contained(box, "box"), ContainmentError);

  const SampledState other(g, flat, Representation::Momentum);
  CHECK_THROWS_AS(max_abs_difference(box, other), ConfigError);
  CHECK(inner_product(box, box).real() == doctest::Approx(16.0));
  CHECK(to_string(Representation::Momentum) == std::string("momentum"));
}

TEST_CASE("gaussian samples") {
  const PhysicalConstants k(0.7, 1.0);
  const GaussianSpec g(1.3, 2.0);
  const UniformGrid x = UniformGrid::centered(512, 10.0);
  const UniformGrid p = UniformGrid::centered(512, 10.0);
  CHECK(l2_norm(sample_gaussian(g, x, Representation::Position, k)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(l2_norm(sample_gaussian(g, p, Representation::Momentum, k)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(g.wigner(0.0, 0.0, k) == doctest::Approx(1.0 / (std::numbers::pi * k.hbar())));
  CHECK_THROWS_AS(sample_gaussian(g, UniformGrid::centered(64, 2.0), Representation::Position, k),
                  ContainmentError);
  CHECK_THROWS_AS(GaussianSpec(0.0, 1.0), ConfigError);
  CHECK_THROWS_AS(GaussianSpec(1.0, -1.0), ConfigError);
}

TEST_CASE("gaussian transforms to its closed form") {
  for (double hbar : {1.0, 0.4}) {
    const PhysicalConstants k(hbar, 1.0);
    const GaussianSpec g(0.8, 2.0);
    const SampledState phi = sample_gaussian(g, UniformGrid::centered(1024, 16.0), Representation::Position, k);
    const UniformGrid target = UniformGrid::centered(512, 8.0 * 0.8 * hbar);
    const SampledState psi = to_momentum(phi, target, k);
    const SampledState expected = sample_gaussian(g, target, Representation::Momentum, k);
    CHECK(max_abs_difference(psi, expected) < 1e-12);
  }
}

TEST_CASE("chirp transform matches the direct sum on random axes") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::uniform_real_distribution<double> step(0.01, 0.3);
  std::normal_distribution<double> val;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t in = 8 + rng() % 120;
    const std::size_t out = 8 + rng() % 120;
    const double s0 = u(rng), ds = step(rng), w0 = u(rng), dw = step(rng);
    std::vector<Complex> c(in);
    for (auto& z : c) z = {val(rng), val(rng)};
    ChirpTransform chirp(in, out, s0, ds, w0, dw);
    const std::vector<Complex> got = chirp(c);
    std::vector<Complex> want(out);
    for (std::size_t l = 0; l < out; ++l) {
      for (std::size_t j = 0; j < in; ++j) {
        want[l] += c[j] * std::polar(1.0, -(w0 + l * dw) * (s0 + j * ds));
      }
    }
    INFO("trial " << trial);
    CHECK(max_diff(got, want) < 1e-11);
  }
}

TEST_CASE("fourier transforms match the direct sum for random superpositions") {
  std::mt19937_64 rng(11);
  const PhysicalConstants k(0.9, 1.0);
  const UniformGrid x = UniformGrid::centered(256, 12.0);
  for (int trial = 0; trial < 5; ++trial) {
    const SampledState phi = testing::sample_packets(testing::random_packets(rng), x, Representation::Position, k);
    const UniformGrid target(64, -3.3, 2.9);  // arbitrary, not the dual axis
    const SampledState psi = to_momentum(phi, target, k);
    CHECK(max_diff(psi.values(), testing::direct_fourier(phi, target, -1.0, k)) < 1e-12);

    const SampledState back = to_position(to_momentum(phi, dual_grid(x, k.hbar()), k), x, k);
    CHECK(max_abs_difference(back, phi) < 1e-10);
  }
}

TEST_CASE("fourier preserves the norm and checks representations") {
  std::mt19937_64 rng(3);
  const UniformGrid p = UniformGrid::centered(512, 10.0);
  const SampledState psi = testing::sample_packets(testing::random_packets(rng), p, Representation::Momentum);
  const SampledState phi = to_position(psi);
  CHECK(l2_norm(phi) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(phi.rep() == Representation::Position);
  CHECK_THROWS_AS(to_momentum(psi), ConfigError);
  CHECK_THROWS_AS(to_position(phi), ConfigError);
}

TEST_CASE("spectral refinement reproduces the band-limited state") {
  const GaussianSpec g(1.0, 1.0);
  const UniformGrid p = UniformGrid::centered(256, 12.0);
  const SampledState psi = sample_gaussian(g, p, Representation::Momentum);
  const SampledState fine = spectral_refine(psi, 4);
  REQUIRE(fine.size() == 1024);
  CHECK(max_abs_difference(fine, sample_gaussian(g, p.refined(4), Representation::Momentum)) < 1e-12);
}

TEST_CASE("cubic interpolation is exact for cubics") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  const UniformGrid g = UniformGrid::centered(64, 4.0);
  for (int trial = 0; trial < 10; ++trial) {
    const double a0 = coef(rng), a1 = coef(rng), a2 = coef(rng), a3 = coef(rng);
    auto f = [&](double x) { return a0 + x * (a1 + x * (a2 + x * a3)); };
    std::vector<double> samples(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) samples[i] = f(g[i]);
    std::uniform_real_distribution<double> where(-3.5, 3.5);
    for (int q = 0; q < 20; ++q) {
      const double x = where(rng);
      CHECK(cubic_interpolate<double>(samples, g, x) == doctest::Approx(f(x)).epsilon(1e-12));
    }
  }
  const std::vector<double> ones(g.size(), 1.0);
  CHECK(cubic_interpolate<double>(ones, g, 100.0) == 0.0);
}

TEST_CASE("number formatting round-trips") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  std::uniform_int_distribution<int> expo(-300, 300);
  for (int i = 0; i < 1000; ++i) {
    const double v = std::ldexp(mant(rng), expo(rng));
    CHECK(std::stod(format_double(v)) == v);
  }
  CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("CSV round trip is exact") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> val;
  const UniformGrid x = UniformGrid::centered(16, 2.0);
  const UniformGrid p = UniformGrid::centered(8, 3.0);
  std::vector<double> values(16 * 8);
  for (double& v : values) v = val(rng) * 1e-3;
  const WignerGrid w(x, p, values);
  const auto dir = scratch_dir("csv");

  write_wigner_csv(dir / "w.csv", w);
  const CsvTable plain = read_csv(dir / "w.csv");
  CHECK(plain.header == std::vector<std::string>{"x", "p", "w"});
  REQUIRE(plain.rows.size() == values.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      const auto& row = plain.rows[i * p.size() + j];
      CHECK(row[0] == x[i]);
      CHECK(row[1] == p[j]);
      CHECK(row[2] == w(i, j));
    }
  }

  write_wigner_csv(dir / "scaled.csv", w, 2.0, 0.25);
  const CsvTable scaled = read_csv(dir / "scaled.csv");
  CHECK(scaled.header == std::vector<std::string>{"x", "p", "w", "X", "P"});
  CHECK(scaled.rows[9][3] == scaled.rows[9][0] * 2.0);
  CHECK(scaled.rows[9][4] == scaled.rows[9][1] * 0.25);

  std::ofstream(dir / "bad.csv") << "x,p,w\n1,2,zz\n";
  CHECK_THROWS_AS(read_csv(dir / "bad.csv"), Error);
  CHECK_THROWS_AS(read_csv(dir / "missing.csv"), Error);
}

TEST_CASE("PGM heatmap layout and mapping") {
  const UniformGrid x = UniformGrid::centered(8, 1.0);
  const UniformGrid p = UniformGrid::centered(16, 1.0);
  std::vector<double> values(8 * 16);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 16; ++j) values[i * 16 + j] = static_cast<double>(j) - 3.0;
  }
  const auto dir = scratch_dir("pgm");
  const PgmRange range = write_wigner_pgm(dir / "w.pgm", WignerGrid(x, p, values));
  CHECK(range.min == -3.0);
  CHECK(range.max == 12.0);
  const PgmImage img = read_pgm(dir / "w.pgm");
  CHECK(img.width == 8);
  CHECK(img.height == 16);
  CHECK(img.pixels.front() == 255);  // top-left: largest p
  CHECK(img.pixels.back() == 0);
  CHECK(img.pixels[15 * 8 + 3] == 0);

  const std::vector<double> flat(8 * 16, 0.25);
  write_wigner_pgm(dir / "flat.pgm", WignerGrid(x, p, flat));
  CHECK(read_pgm(dir / "flat.pgm").pixels.size() == 128);
}

TEST_CASE("metadata round trip") {
  const auto dir = scratch_dir("meta");
  const Metadata meta{{"figure", "fig1"}, {"w_max", format_double(1.0 / std::numbers::pi)}};
  write_metadata(dir / "m.meta", meta);
  CHECK(read_metadata(dir / "m.meta") == meta);
}
