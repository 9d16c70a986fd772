#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "flagsbs/harness/acceptance.hpp"
#include "flagsbs/harness/ensembles.hpp"
#include "flagsbs/harness/io.hpp"

namespace flagsbs::harness {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitParse = 2,
  kExitInvalidDivisor = 3,
  kExitDegenerate = 4,
};

struct CommandResult {
  nlohmann::json report;
  int exit_code = kExitOk;
  std::string diagnostics;  // for stderr
};

CommandResult cmd_classify(const DivisorInput& input, double tol);

CommandResult cmd_spheres(const DivisorInput& input, int samples, int grid, std::uint64_t seed,
                          double tol);

/// fiber_solve over the point x; EigenPoint is reported with exit code 4.
CommandResult cmd_fiber(const DivisorInput& input, const ProjectivePoint& x, double tol);

CommandResult cmd_moduli(const DivisorInput& input, std::optional<Complex> z, double tol);

/// Stratum frequencies over `count` draws of the ensemble.
CommandResult cmd_sample(int count, std::uint64_t seed, Ensemble ensemble, double tol);

CommandResult cmd_verify(const AcceptanceConfig& config);

}  // namespace flagsbs::harness
