#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "phasespace/error.hpp"
#include "phasespace/scenario.hpp"

using namespace phasespace;

namespace {

struct Flags {
  double hbar = 1.0;
  double c = 1.0;
  ScenarioConfig cfg;
  std::string out = ".";
};

void add_flags(CLI::App& cmd, Flags& f) {
  cmd.add_option("--hbar", f.hbar, "Reduced Planck constant")->capture_default_str();
  cmd.add_option("--c", f.c, "Speed of light")->capture_default_str();
  cmd.add_option("--a", f.cfg.a, "Inverse Gaussian width")->capture_default_str();
  cmd.add_option("--mass", f.cfg.mass, "Particle mass")->capture_default_str();
  cmd.add_option("--t", f.cfg.t, "Time translation")->capture_default_str();
  cmd.add_option("--x0", f.cfg.x0, "Space translation")->capture_default_str();
  cmd.add_option("--theta", f.cfg.theta, "Boost rapidity")->capture_default_str();
  cmd.add_option("--grid-n", f.cfg.grid_n, "Window points per axis (power of two)")
      ->capture_default_str();
  cmd.add_option("--x-span", f.cfg.x_span, "Half-width of the X = a x window")->capture_default_str();
  cmd.add_option("--p-span", f.cfg.p_span, "Half-width of the P = p/(a hbar) window")
      ->capture_default_str();
  cmd.add_option("--regime", f.cfg.regime, "rel or gal")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Regime>{{"rel", Regime::Relativistic}, {"gal", Regime::Galilean}}))
      ->default_str("rel");
  cmd.add_flag("--oracle", f.cfg.oracle, "Add the direct-quadrature cross-check");
  cmd.add_option("--out", f.out, "Output directory")->capture_default_str();
}

ScenarioConfig finish(const Flags& f) {
  ScenarioConfig cfg = f.cfg;
  cfg.constants = PhysicalConstants(f.hbar, f.c);
  cfg.out_dir = f.out;
  cfg.validate();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Phase-space (Wigner) simulations of relativistic and Galilean transforms"};
  app.require_subcommand(1);

  Flags figure_flags, verify_flags, comm_flags;
  std::string figure;
  auto* fig_cmd = app.add_subcommand("figure", "Write CSV, PGM and metadata for one figure");
  fig_cmd->add_option("name", figure, "fig1 fig2a fig2b fig3 fig4a fig4b (fig2/fig4 follow --regime)")
      ->required();
  add_flags(*fig_cmd, figure_flags);
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant audit");
  add_flags(*verify_cmd, verify_flags);
  auto* comm_cmd = app.add_subcommand("commutators", "Run the generator algebra checks");
  add_flags(*comm_cmd, comm_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (fig_cmd->parsed()) {
      const ScenarioConfig cfg = finish(figure_flags);
      const auto which = parse_figure(figure, cfg.regime);
      if (!which) throw ConfigError("unknown figure '" + figure + "'");
      return run_figure(*which, cfg, std::cout);
    }
    if (verify_cmd->parsed()) return run_verify(finish(verify_flags), std::cout);
    return run_commutators(finish(comm_flags), std::cout);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
