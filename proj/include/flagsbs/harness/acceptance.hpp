#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flagsbs/types.hpp"

namespace flagsbs::harness {

/// Thresholds and sample sizes of the acceptance suite. Defaults are the
/// exit criteria; overriding them is for experiments and for exercising the
/// failure path.
struct AcceptanceConfig {
  double tol = kDefaultTol;         // decisions on the worked example and representatives
  double sample_tol = kDefaultTol;  // decisions on random samples
  double clearance_threshold = 0.4;
  int clearance_grid = 24;
  int lagrangian_samples = 1000;
  double lagrangian_bound = 1e-10;
  double holomorphic_floor = 1e-2;
  int random_samples = 1000;
  double delta_floor = 1e-6;
  double discriminant_threshold = 1e-8;
  double oracle_cluster_tol = 1e-3;
  double fiber_margin_floor = 1e-4;
  double fiber_residual_bound = 1e-10;
  int equivariance_trials = 200;
  double equivariance_tol = 1e-8;
  double point_tol = 1e-10;
  std::uint64_t seed = 0;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& config);

}  // namespace flagsbs::harness
