#include "flagsbs/harness/ensembles.hpp"

#include <stdexcept>

#include <Eigen/LU>
#include <Eigen/SVD>

namespace flagsbs::harness {

std::optional<Ensemble> parse_ensemble(std::string_view name) {
  if (name == "ginibre") return Ensemble::kGinibre;
  if (name == "diag2") return Ensemble::kDiag2;
  if (name == "jordan2") return Ensemble::kJordan2;
  if (name == "jordan3") return Ensemble::kJordan3;
  if (name == "rank1") return Ensemble::kRank1;
  return std::nullopt;
}

std::string_view ensemble_name(Ensemble e) {
  switch (e) {
    case Ensemble::kGinibre: return "ginibre";
    case Ensemble::kDiag2: return "diag2";
    case Ensemble::kJordan2: return "jordan2";
    case Ensemble::kJordan3: return "jordan3";
    case Ensemble::kRank1: return "rank1";
  }
  return "?";
}

Stratum target_stratum(Ensemble e) {
  switch (e) {
    case Ensemble::kGinibre: return Stratum::kDistinct;
    case Ensemble::kDiag2: return Stratum::kDoubleSemisimple;
    case Ensemble::kJordan2: return Stratum::kDoubleJordan;
    case Ensemble::kJordan3: return Stratum::kNilpotentFull;
    case Ensemble::kRank1: return Stratum::kNilpotentRankOne;
  }
  return Stratum::kDistinct;
}

Mat3c worked_example_raw() {
  Mat3c m = Mat3c::Zero();
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  m(2, 2) = Complex(0, 1);
  return m;
}

Mat3c stratum_representative(int stratum) {
  Mat3c m = Mat3c::Zero();
  switch (stratum) {
    case 1:
      return normalize_divisor_matrix(worked_example_raw()).matrix();
    case 2:
      m.diagonal() << 1.0, 1.0, -2.0;
      return m;
    case 3:
      m(0, 0) = m(0, 1) = m(1, 1) = 1.0;
      m(2, 2) = -2.0;
      return m;
    case 4:
      m(0, 1) = m(1, 2) = 1.0;
      return m;
    case 5:
      m(0, 1) = 1.0;
      return m;
    default:
      throw std::out_of_range("stratum must be in 1..5");
  }
}

Mat3c random_conjugator(CounterRng& rng, double max_condition) {
  for (;;) {
    const Mat3c g = random_ginibre(rng);
    const Vec3 sv = Eigen::JacobiSVD<Mat3c>(g).singularValues();
    if (sv(2) > 0 && sv(0) / sv(2) <= max_condition) return g;
  }
}

TracelessMatrix draw(Ensemble e, CounterRng& rng) {
  if (e == Ensemble::kGinibre) return normalize_divisor_matrix(random_ginibre(rng));
  const Mat3c rep = stratum_representative(stratum_number(target_stratum(e)));
  const Mat3c g = random_conjugator(rng);
  Complex t = rng.complex_normal();
  while (std::abs(t) < 1e-3) t = rng.complex_normal();
  return normalize_divisor_matrix(t * (g * rep * g.inverse()));
}

}  // namespace flagsbs::harness
