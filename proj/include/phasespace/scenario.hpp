#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phasespace/constants.hpp"
#include "phasespace/gaussian.hpp"
#include "phasespace/grid.hpp"
#include "phasespace/output.hpp"
#include "phasespace/state.hpp"
#include "phasespace/transforms.hpp"
#include "phasespace/wigner.hpp"

namespace phasespace {

/// Every physical and numerical knob of a run. Spans are in normalised units
/// X = a x and P = p/(a hbar); the defaults reproduce the reference figures.
struct ScenarioConfig {
  PhysicalConstants constants{};
  double a = 1.0;
  double mass = 2.0;
  double t = 4.0;
  double x0 = 1.0;
  double theta = 0.15;
  std::size_t grid_n = 512;
  double x_span = 8.0;
  double p_span = 8.0;
  Regime regime = Regime::Relativistic;
  bool oracle = false;
  std::filesystem::path out_dir = ".";

  /// Throws ConfigError.
  void validate() const;

  GaussianSpec gaussian() const { return GaussianSpec(a, mass); }

  /// Phase-space window the Wigner function is reported on (grid_n each).
  UniformGrid x_window() const;
  UniformGrid p_window() const;

  /// Wavefunction grids: twice the window span at the same spacing, so
  /// transformed states stay contained while the window stays aligned.
  UniformGrid position_grid() const;
  UniformGrid momentum_grid() const;
};

enum class Figure { Gaussian, TimeRelativistic, TimeGalilean, Space, BoostRelativistic, BoostGalilean };

/// fig1, fig2a, fig2b, fig3, fig4a, fig4b; fig2 and fig4 pick a/b by regime.
std::optional<Figure> parse_figure(std::string_view name, Regime regime);
std::string figure_name(Figure figure);

struct FigureResult {
  Figure figure;
  SampledState state;  // momentum representation
  WignerGrid wigner;
  Metadata metadata;
  std::vector<std::string> audit_failures;
};

FigureResult compute_figure(Figure figure, const ScenarioConfig& cfg);

struct FigurePaths {
  std::filesystem::path csv;
  std::filesystem::path pgm;
  std::filesystem::path meta;
};

/// Writes <out_dir>/<name>.csv, .pgm and .meta.
FigurePaths write_figure(const FigureResult& result, const ScenarioConfig& cfg);

/// One invariant or threshold evaluation.
struct Check {
  std::string name;
  double value;
  std::string criterion;
  bool pass;
};

Check at_most(std::string name, double value, double limit);
Check at_least(std::string name, double value, double limit);
Check within(std::string name, double value, double lo, double hi);
Check failed(std::string name, std::string_view reason);

/// Gaussian plus each singly transformed state, momentum representation.
struct CorpusState {
  std::string name;
  SampledState psi;
  double norm_tolerance;  // analytic/phase 1e-8, interpolated 1e-4
};
std::vector<CorpusState> build_corpus(const ScenarioConfig& cfg);

/// Minimum of l1_distance(target, W(x + s p, p)) over shear coefficients
/// s in [0, max_coefficient].
struct ShearFit {
  double coefficient;
  double distance;
};
ShearFit best_galilean_shear(const WignerGrid& target, const WignerGrid& initial,
                             double max_coefficient);

/// l1 distances between relativistic and Galilean results as c grows over
/// `speeds` with v = c0 tanh(theta) and t held fixed.
struct GalileanLimit {
  std::vector<double> speeds;
  std::vector<double> time_distance;
  std::vector<double> boost_distance;
};
GalileanLimit galilean_limit(const ScenarioConfig& cfg, const std::vector<double>& speeds);

std::vector<Check> verify_checks(const ScenarioConfig& cfg);
std::vector<Check> commutator_checks(const ScenarioConfig& cfg);

/// Exit codes: 0 all good, 1 invariant failure, 2 configuration error.
int run_figure(Figure figure, const ScenarioConfig& cfg, std::ostream& log);
int run_verify(const ScenarioConfig& cfg, std::ostream& report);
int run_commutators(const ScenarioConfig& cfg, std::ostream& report);

void print_checks(const std::vector<Check>& checks, std::ostream& out);

}  // namespace phasespace
