// flagsbs: command-line front end for divisor classification, GZ sphere
// checks, the moduli cubic and the acceptance suite.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "flagsbs/harness/commands.hpp"

using namespace flagsbs;
using namespace flagsbs::harness;

namespace {

int emit(const CommandResult& result) {
  std::cout << result.report.dump(2) << "\n";
  if (!result.diagnostics.empty()) std::cerr << result.diagnostics << (result.diagnostics.back() == '\n' ? "" : "\n");
  return result.exit_code;
}

int parse_failure(const std::string& message) {
  std::cout << nlohmann::json{{"error", "ParseError"}, {"message", message}}.dump(2) << "\n";
  std::cerr << "parse error: " << message << "\n";
  return kExitParse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Divisor strata, GZ sphere checks and the moduli cubic on the flag variety F3"};
  app.require_subcommand(1);

  std::string input_path;
  double tol = kDefaultTol;
  int samples = 1000;
  int grid = 24;
  std::uint64_t seed = 0;
  std::string z_text, x_text, ensemble_text = "ginibre";
  int count = 1000;
  double clearance_threshold = 0.4;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--input", input_path, "divisor JSON file")->required();
  };
  auto add_tol = [&](CLI::App* cmd) {
    cmd->add_option("--tol", tol, "relative tolerance for rank and multiplicity decisions")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  auto* classify = app.add_subcommand("classify", "stratum, eigenvalues and sphere-class centers");
  add_input(classify);
  add_tol(classify);

  auto* spheres = app.add_subcommand("spheres", "clearance, lagrangian residual and class of S0, S1, S2");
  add_input(spheres);
  add_tol(spheres);
  spheres->add_option("--samples", samples, "points of S^3 for the lagrangian test")->capture_default_str();
  spheres->add_option("--grid", grid, "clearance grid size per Hopf coordinate")->capture_default_str();
  spheres->add_option("--seed", seed)->capture_default_str();

  auto* fiber = app.add_subcommand("fiber", "point of D over [x] via the fiber solver");
  add_input(fiber);
  add_tol(fiber);
  fiber->add_option("--x", x_text, "x as \"re,im re,im re,im\" or a JSON array of [re, im] pairs")->required();

  auto* moduli = app.add_subcommand("moduli", "points of Y over the divisor, or membership of (A, z)");
  add_input(moduli);
  add_tol(moduli);
  moduli->add_option("--z", z_text, "eigenvalue coordinate as \"re,im\"");

  auto* sample = app.add_subcommand("sample", "stratum frequencies over a random ensemble");
  add_tol(sample);
  sample->add_option("--count", count)->capture_default_str();
  sample->add_option("--samples", count, "alias of --count");
  sample->add_option("--seed", seed)->capture_default_str();
  sample->add_option("--ensemble", ensemble_text, "ginibre | diag2 | jordan2 | jordan3 | rank1")
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run the acceptance suite on built-in data");
  add_tol(verify);
  verify->add_option("--seed", seed)->capture_default_str();
  verify->add_option("--samples", samples, "random samples per statistical criterion")
      ->capture_default_str();
  verify->add_option("--grid", grid)->capture_default_str();
  verify->add_option("--clearance-threshold", clearance_threshold)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*sample) {
      const auto ensemble = parse_ensemble(ensemble_text);
      if (!ensemble) return parse_failure("unknown ensemble \"" + ensemble_text + "\"");
      if (count < 1) return parse_failure("--count must be at least 1");
      return emit(cmd_sample(count, seed, *ensemble, tol));
    }
    if (*verify) {
      AcceptanceConfig config;
      config.tol = tol;
      config.seed = seed;
      config.random_samples = samples;
      config.clearance_grid = grid;
      config.clearance_threshold = clearance_threshold;
      return emit(cmd_verify(config));
    }

    const DivisorInput input = load_divisor(input_path);
    if (*classify) return emit(cmd_classify(input, tol));
    if (*spheres) {
      if (samples < 1 || grid < 8) return parse_failure("--samples must be >= 1 and --grid >= 8");
      return emit(cmd_spheres(input, samples, grid, seed, tol));
    }
    if (*fiber) return emit(cmd_fiber(input, parse_point_flag(x_text), tol));
    if (*moduli) {
      std::optional<Complex> z;
      if (!z_text.empty()) z = parse_complex_flag(z_text);
      return emit(cmd_moduli(input, z, tol));
    }
  } catch (const ParseError& e) {
    return parse_failure(e.what());
  } catch (const Error& e) {
    std::cout << nlohmann::json{{"error", "NumericalFailure"}, {"message", e.what()}}.dump(2) << "\n";
    std::cerr << e.what() << "\n";
    return kExitDegenerate;
  }
  return kExitParse;
}
