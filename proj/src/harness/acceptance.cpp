#include "flagsbs/harness/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "flagsbs/eigen_core.hpp"
#include "flagsbs/flag_geometry.hpp"
#include "flagsbs/harness/ensembles.hpp"
#include "flagsbs/harness/reference.hpp"
#include "flagsbs/moduli_space.hpp"

namespace flagsbs::harness {

namespace {

constexpr Ensemble kAllEnsembles[] = {Ensemble::kGinibre, Ensemble::kDiag2, Ensemble::kJordan2,
                                      Ensemble::kJordan3, Ensemble::kRank1};

TracelessMatrix worked_divisor() { return normalize_divisor_matrix(worked_example_raw()); }

const std::vector<ProjectivePoint>& coordinate_points() {
  static const std::vector<ProjectivePoint> pts{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}};
  return pts;
}

CriterionResult worked_example(const AcceptanceConfig& cfg) {
  CriterionResult r{1, "worked example: normalization, stratum 1, centers at coordinate points", true, ""};
  std::ostringstream detail;
  const auto a = worked_divisor();
  const Complex i(0, 1);
  Mat3c expected = Mat3c::Zero();
  expected.diagonal() << 1.0 - i / 3.0, -1.0 - i / 3.0, 2.0 * i / 3.0;
  const double norm_err = (a.matrix() - expected).norm();
  r.passed &= norm_err <= 1e-12;

  const auto report = classify_stratum(a, cfg.tol);
  r.passed &= report.stratum == Stratum::kDistinct && report.sphere_class_count == 3;
  double worst = 0;
  for (const auto& c : coordinate_points()) {
    double best = 1e300;
    for (const auto& p : report.centers) best = std::min(best, p.distance(c));
    worst = std::max(worst, best);
  }
  r.passed &= report.centers.size() == 3 && worst <= cfg.point_tol;
  detail << "normalization error " << norm_err << ", stratum " << stratum_number(report.stratum)
         << ", count " << report.sphere_class_count << ", center mismatch " << worst;
  r.detail = detail.str();
  return r;
}

CriterionResult disjointness(const AcceptanceConfig& cfg) {
  CriterionResult r{2, "disjointness: clearance of S0, S1, S2 above threshold", true, ""};
  std::ostringstream detail;
  const auto a = worked_divisor();
  detail << "threshold " << cfg.clearance_threshold << ";";
  for (const auto& s : GZSphere::all()) {
    const double c = clearance_search(a, s, cfg.clearance_grid).minimum;
    const bool ok = c > cfg.clearance_threshold;
    r.passed &= ok;
    detail << " S" << s.index() << " " << c << (ok ? "" : " (FAIL)");
  }
  r.detail = detail.str();
  return r;
}

CriterionResult lagrangian(const AcceptanceConfig& cfg) {
  CriterionResult r{3, "lagrangian: pullback of omega vanishes, holomorphic pair positive", true, ""};
  std::ostringstream detail;
  for (const auto& s : GZSphere::all()) {
    const double res = lagrangian_residual(s, cfg.lagrangian_samples, cfg.seed);
    const double hol = holomorphic_pair_value(s, cfg.lagrangian_samples, cfg.seed);
    r.passed &= res < cfg.lagrangian_bound && hol > cfg.holomorphic_floor;
    detail << "S" << s.index() << " residual " << res << " holomorphic " << hol << "; ";
  }
  r.detail = detail.str();
  return r;
}

CriterionResult homology(const AcceptanceConfig& cfg) {
  CriterionResult r{4, "homology classes (1,0), (0,1), (1,1), pairwise distinct", true, ""};
  const auto report = classify_stratum(worked_divisor(), cfg.tol);
  const HomologyClass expected[] = {{1, 0}, {0, 1}, {1, 1}};
  std::ostringstream detail;
  std::vector<HomologyClass> got;
  for (const auto& s : GZSphere::all()) {
    const HomologyClass h = homology_class(s, report.centers, cfg.tol);
    got.push_back(h);
    r.passed &= h == expected[s.index()];
    detail << "S" << s.index() << " -> (" << h.m << "," << h.n << ") ";
  }
  r.passed &= !(got[0] == got[1]) && !(got[0] == got[2]) && !(got[1] == got[2]);
  r.detail = detail.str();
  return r;
}

CriterionResult stratum_table(const AcceptanceConfig& cfg) {
  CriterionResult r{5, "stratum table of the five representatives", true, ""};
  const int counts[] = {3, 1, 1, 0, 0};
  const bool reducible[] = {false, true, false, false, true};
  std::ostringstream detail;
  for (int s = 1; s <= 5; ++s) {
    const auto a = normalize_divisor_matrix(stratum_representative(s));
    const auto report = classify_stratum(a, cfg.tol);
    const bool ok = stratum_number(report.stratum) == s && report.sphere_class_count == counts[s - 1] &&
                    report.reducible == reducible[s - 1] && is_reducible(a, cfg.tol) == reducible[s - 1];
    r.passed &= ok;
    detail << "rep" << s << " -> stratum " << stratum_number(report.stratum) << " count "
           << report.sphere_class_count << " reducible " << report.reducible << "; ";
  }
  r.detail = detail.str();
  return r;
}

CriterionResult moduli_consistency(const AcceptanceConfig& cfg) {
  CriterionResult r{6, "moduli points match sphere counts; generic fiber has 3 points off Delta", true, ""};
  CounterRng rng(cfg.seed, 6);
  int mismatched = 0, short_fibers = 0, near_delta = 0;
  double least_delta = 1e300;
  for (int n = 0; n < cfg.random_samples; ++n) {
    const auto a = draw(Ensemble::kGinibre, rng);
    const auto report = classify_stratum_unchecked(a, cfg.sample_tol);
    if (int(moduli_points(a, cfg.sample_tol).size()) != report.sphere_class_count) ++mismatched;
    const auto fiber = covering_fiber(a, cfg.sample_tol);
    if (fiber.size() != 3) ++short_fibers;
    for (const auto& p : fiber) {
      const double d = delta_residual(a, p.z);
      least_delta = std::min(least_delta, d);
      if (!(d > cfg.delta_floor)) ++near_delta;
    }
  }
  r.passed = mismatched == 0 && short_fibers == 0 && near_delta == 0;
  std::ostringstream detail;
  detail << cfg.random_samples << " Ginibre samples: " << mismatched << " count mismatches, "
         << short_fibers << " fibers != 3, " << near_delta << " points with delta_residual <= "
         << cfg.delta_floor << " (min " << least_delta << ")";
  r.detail = detail.str();
  return r;
}

CriterionResult discriminant_oracle(const AcceptanceConfig& cfg) {
  CriterionResult r{7, "discriminant test agrees with brute-force root clustering", true, ""};
  CounterRng rng(cfg.seed, 7);
  std::vector<Mat3c> matrices;
  for (int n = 0; n < cfg.random_samples; ++n)
    matrices.push_back(draw(kAllEnsembles[n % 5], rng).matrix());
  for (int s = 1; s <= 5; ++s) matrices.push_back(stratum_representative(s));

  int disagree = 0, repeated = 0;
  for (const Mat3c& raw : matrices) {
    const Mat3c unit = raw / raw.norm();
    const auto a = normalize_divisor_matrix(unit);
    const CharCubic c = char_cubic(a);
    const double scale = a.norm();
    const bool by_disc = std::abs(discriminant(c)) <
                         cfg.discriminant_threshold * std::pow(discriminant_scale(c, scale), 3);
    const auto roots = reference::durand_kerner(c.a, c.b);
    const bool by_oracle = reference::distinct_root_count(roots, cfg.oracle_cluster_tol, scale) < 3;
    const bool by_library = cubic_roots(c, cfg.discriminant_threshold, scale).has_repeated();
    if (by_disc != by_oracle || by_disc != by_library) ++disagree;
    repeated += by_disc ? 1 : 0;
  }
  r.passed = disagree == 0;
  std::ostringstream detail;
  detail << matrices.size() << " matrices (" << repeated << " with a repeated root): " << disagree
         << " disagreements";
  r.detail = detail.str();
  return r;
}

CriterionResult fiber_solver(const AcceptanceConfig& cfg) {
  CriterionResult r{8, "fiber solver residuals; EigenPoint on every center", true, ""};
  CounterRng rng(cfg.seed, 8);
  double worst = 0;
  int missing_error = 0, centers = 0;
  for (int n = 0; n < cfg.random_samples; ++n) {
    const auto a = draw(Ensemble::kGinibre, rng);
    ProjectivePoint x;
    do {
      x = ProjectivePoint(Vec3c(rng.complex_normal(), rng.complex_normal(), rng.complex_normal()));
    } while (fiber_margin(a, x) <= cfg.fiber_margin_floor);
    const FlagPoint p = fiber_solve(a, x, cfg.sample_tol);
    worst = std::max({worst, incidence_residual(p), divisor_residual(a, p)});

    for (const auto& c : classify_stratum_unchecked(a, cfg.sample_tol).centers) {
      ++centers;
      try {
        (void)fiber_solve(a, c, cfg.sample_tol);
        ++missing_error;
      } catch (const EigenPoint&) {
      }
    }
  }
  r.passed = worst < cfg.fiber_residual_bound && missing_error == 0;
  std::ostringstream detail;
  detail << "max residual " << worst << "; " << missing_error << " of " << centers
         << " centers solved without EigenPoint";
  r.detail = detail.str();
  return r;
}

CriterionResult equivariance(const AcceptanceConfig& cfg) {
  CriterionResult r{9, "equivariance under scaling and similarity", true, ""};
  CounterRng rng(cfg.seed, 9);
  int cubic_fail = 0, scale_fail = 0, similarity_fail = 0;
  double worst_cubic = 0;
  for (int n = 0; n < cfg.equivariance_trials; ++n) {
    const Ensemble e = kAllEnsembles[n % 5];
    const auto a = draw(e, rng);
    Complex t = rng.complex_normal();
    while (std::abs(t) < 1e-2) t = rng.complex_normal();
    const auto ta = a.scaled(t);
    const CharCubic c = char_cubic(a), tc = char_cubic(ta);
    const double s = a.norm();
    const double err = std::max(std::abs(tc.a - t * t * c.a) / (std::norm(t) * s * s),
                                std::abs(tc.b - t * t * t * c.b) / std::pow(std::abs(t) * s, 3));
    worst_cubic = std::max(worst_cubic, err);
    if (err > cfg.equivariance_tol) ++cubic_fail;

    const auto base = classify_stratum_unchecked(a, cfg.equivariance_tol);
    const auto scaled = classify_stratum_unchecked(ta, cfg.equivariance_tol);
    if (base.stratum != scaled.stratum || base.sphere_class_count != scaled.sphere_class_count)
      ++scale_fail;

    const Mat3c g = random_conjugator(rng);
    const auto conj = classify_stratum_unchecked(
        normalize_divisor_matrix(g * a.matrix() * g.inverse()), cfg.equivariance_tol);
    if (base.stratum != conj.stratum || base.sphere_class_count != conj.sphere_class_count)
      ++similarity_fail;
  }
  r.passed = cubic_fail == 0 && scale_fail == 0 && similarity_fail == 0;
  std::ostringstream detail;
  detail << cfg.equivariance_trials << " trials: cubic scaling max rel err " << worst_cubic << ", "
         << scale_fail << " stratum changes under scaling, " << similarity_fail
         << " under similarity";
  r.detail = detail.str();
  return r;
}

template <typename F>
CriterionResult guarded(int id, const char* name, F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return {id, name, false, std::string("exception: ") + e.what()};
  }
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg) {
  return {
      guarded(1, "worked example", [&] { return worked_example(cfg); }),
      guarded(2, "disjointness", [&] { return disjointness(cfg); }),
      guarded(3, "lagrangian", [&] { return lagrangian(cfg); }),
      guarded(4, "homology", [&] { return homology(cfg); }),
      guarded(5, "stratum table", [&] { return stratum_table(cfg); }),
      guarded(6, "moduli consistency", [&] { return moduli_consistency(cfg); }),
      guarded(7, "discriminant oracle", [&] { return discriminant_oracle(cfg); }),
      guarded(8, "fiber solver", [&] { return fiber_solver(cfg); }),
      guarded(9, "equivariance", [&] { return equivariance(cfg); }),
  };
}

}  // namespace flagsbs::harness
