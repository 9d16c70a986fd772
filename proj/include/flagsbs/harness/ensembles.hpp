#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "flagsbs/eigen_core.hpp"
#include "flagsbs/random.hpp"

namespace flagsbs::harness {

enum class Ensemble {
  kGinibre,  // trace-normalized Ginibre, stratum 1 almost surely
  kDiag2,    // conjugates of diag(1, 1, -2), stratum 2
  kJordan2,  // conjugates of a 2x2 Jordan cell plus a simple eigenvalue, stratum 3
  kJordan3,  // conjugates of the full nilpotent Jordan cell, stratum 4
  kRank1,    // conjugates of the rank-one nilpotent, stratum 5
};

std::optional<Ensemble> parse_ensemble(std::string_view name);
std::string_view ensemble_name(Ensemble e);

/// Stratum every draw of the ensemble must land in (1 for Ginibre).
Stratum target_stratum(Ensemble e);

/// x0 y0 - x1 y1 + i x2 y2, the worked example divisor before normalization.
Mat3c worked_example_raw();

/// Handcrafted representative of stratum 1..5.
Mat3c stratum_representative(int stratum);

/// Random invertible matrix with 2-norm condition number at most max_condition.
Mat3c random_conjugator(CounterRng& rng, double max_condition = 100.0);

/// One draw: t * g R g^{-1} for the ensemble's representative R, random
/// complex t and conjugator g; Ginibre draws are used as is. Normalized.
TracelessMatrix draw(Ensemble e, CounterRng& rng);

}  // namespace flagsbs::harness
