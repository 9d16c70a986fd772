#include "flagsbs/harness/commands.hpp"

#include <array>
#include <sstream>

#include "flagsbs/eigen_core.hpp"
#include "flagsbs/flag_geometry.hpp"
#include "flagsbs/moduli_space.hpp"

namespace flagsbs::harness {

using nlohmann::json;

namespace {

json eigenvalues_to_json(const EigenvalueSet& set) {
  json items = json::array();
  for (const auto& ev : set.items)
    items.push_back({{"lambda", complex_to_json(ev.lambda)},
                     {"alg_mult", ev.alg_mult},
                     {"geom_mult", ev.geom_mult}});
  return items;
}

json stratum_to_json(const StratumReport& r) {
  json centers = json::array();
  for (std::size_t k = 0; k < r.centers.size(); ++k)
    centers.push_back({{"eigenvalue", complex_to_json(r.center_eigenvalues[k])},
                       {"point", point_to_json(r.centers[k])}});
  return {{"stratum", stratum_number(r.stratum)},
          {"sphere_class_count", r.sphere_class_count},
          {"eigenvalues", eigenvalues_to_json(r.eigenvalues)},
          {"centers", std::move(centers)},
          {"reducible", r.reducible},
          {"margin", r.margin},
          {"on_delta", r.eigenvalues.has_repeated()}};
}

json header(const DivisorInput& input, const TracelessMatrix& a) {
  json h{{"matrix", matrix_to_json(a.matrix())}};
  if (input.label) h["label"] = *input.label;
  return h;
}

// Normalization failure is shared by every divisor command.
template <typename F>
CommandResult with_divisor(const DivisorInput& input, F&& body) {
  try {
    return body(normalize_divisor_matrix(input.matrix));
  } catch (const ZeroDivisor& e) {
    CommandResult out;
    out.report = {{"error", "ZeroDivisor"}, {"message", e.what()}};
    if (input.label) out.report["label"] = *input.label;
    out.exit_code = kExitInvalidDivisor;
    out.diagnostics = e.what();
    return out;
  }
}

json moduli_point_to_json(const TracelessMatrix& a, const ModuliPoint& p) {
  return {{"z", complex_to_json(p.z)},
          {"multiplicity", p.multiplicity},
          {"y_residual", y_residual(a, p.z)},
          {"delta_residual", delta_residual(a, p.z)}};
}

}  // namespace

CommandResult cmd_classify(const DivisorInput& input, double tol) {
  return with_divisor(input, [&](const TracelessMatrix& a) {
    CommandResult out;
    out.report = header(input, a);
    out.report["tol"] = tol;
    try {
      out.report.update(stratum_to_json(classify_stratum(a, tol)));
      out.report["degenerate"] = false;
    } catch (const Degenerate& e) {
      out.report.update(stratum_to_json(e.report()));
      out.report["degenerate"] = true;
      out.report["candidate_strata"] = {stratum_number(e.report().stratum),
                                        stratum_number(e.alternative().stratum)};
      out.report["alternative"] = stratum_to_json(e.alternative());
      out.exit_code = kExitDegenerate;
      out.diagnostics = e.what();
    }
    return out;
  });
}

CommandResult cmd_spheres(const DivisorInput& input, int samples, int grid, std::uint64_t seed,
                          double tol) {
  return with_divisor(input, [&](const TracelessMatrix& a) {
    CommandResult out;
    const StratumReport report = classify_stratum_unchecked(a, tol);
    out.report = header(input, a);
    out.report.update({{"tol", tol},
                       {"samples", samples},
                       {"grid", grid},
                       {"seed", seed},
                       {"stratum", stratum_number(report.stratum)},
                       {"expected_classes", report.sphere_class_count}});
    const bool stratum1 = report.stratum == Stratum::kDistinct;
    if (!stratum1)
      out.report["note"] = "divisor is not in stratum 1; homology classes are not assigned";

    json spheres = json::array();
    std::vector<HomologyClass> classes;
    for (const auto& s : GZSphere::all()) {
      json entry{{"index", s.index()}};
      const ClearanceResult c = clearance_search(a, s, grid);
      entry["clearance"] = c.minimum;
      entry["clearance_point"] = {{"x", point_to_json(c.point.x)}, {"y", point_to_json(c.point.y)}};
      if (c.minimum > 0 && c.minimum < 10.0 * tol)
        entry["warning"] = "Inconclusive: clearance neither certifies disjointness nor intersection";
      entry["lagrangian_residual"] = lagrangian_residual(s, samples, seed);
      entry["holomorphic_pair_value"] = holomorphic_pair_value(s, samples, seed);
      entry["homology_class"] = nullptr;
      if (stratum1) {
        try {
          const HomologyClass h = homology_class(s, report.centers, tol);
          entry["homology_class"] = {h.m, h.n};
          classes.push_back(h);
        } catch (const AmbiguousSign& e) {
          entry["warning"] = std::string("AmbiguousSign: ") + e.what();
        }
      }
      spheres.push_back(std::move(entry));
    }
    out.report["spheres"] = std::move(spheres);
    const bool distinct = classes.size() == 3 && !(classes[0] == classes[1]) &&
                          !(classes[0] == classes[2]) && !(classes[1] == classes[2]);
    out.report["classes_distinct"] = distinct;
    return out;
  });
}

CommandResult cmd_fiber(const DivisorInput& input, const ProjectivePoint& x, double tol) {
  return with_divisor(input, [&](const TracelessMatrix& a) {
    CommandResult out;
    out.report = header(input, a);
    out.report["tol"] = tol;
    out.report["x"] = point_to_json(x);
    out.report["fiber_margin"] = fiber_margin(a, x);
    try {
      const FlagPoint p = fiber_solve(a, x, tol);
      out.report["y"] = point_to_json(p.y);
      out.report["incidence_residual"] = incidence_residual(p);
      out.report["divisor_residual"] = divisor_residual(a, p);
    } catch (const EigenPoint& e) {
      out.report["y"] = nullptr;
      out.report["error"] = "EigenPoint";
      out.report["message"] = e.what();
      out.exit_code = kExitDegenerate;
      out.diagnostics = e.what();
    }
    return out;
  });
}

CommandResult cmd_moduli(const DivisorInput& input, std::optional<Complex> z, double tol) {
  return with_divisor(input, [&](const TracelessMatrix& a) {
    CommandResult out;
    out.report = header(input, a);
    out.report["tol"] = tol;
    if (!z) {
      json fiber = json::array(), points = json::array();
      for (const auto& p : covering_fiber(a, tol)) fiber.push_back(moduli_point_to_json(a, p));
      for (const auto& p : moduli_points(a, tol)) points.push_back(moduli_point_to_json(a, p));
      out.report["covering_fiber"] = std::move(fiber);
      out.report["moduli_points"] = std::move(points);
      return out;
    }
    out.report["z"] = complex_to_json(*z);
    out.report["y_residual"] = y_residual(a, *z);
    try {
      const double d = delta_residual(a, *z, kOnYThreshold);
      out.report["on_y"] = true;
      out.report["delta_residual"] = d;
      out.report["on_delta"] = d <= kOnYThreshold;
    } catch (const NotOnY& e) {
      out.report["on_y"] = false;
      out.report["delta_residual"] = nullptr;
      out.report["on_delta"] = false;
      out.report["error"] = "NotOnY";
    }
    return out;
  });
}

CommandResult cmd_sample(int count, std::uint64_t seed, Ensemble ensemble, double tol) {
  CommandResult out;
  CounterRng rng(seed);
  std::array<int, 5> freq{};
  int degenerate = 0;
  double margin_sum = 0;
  for (int n = 0; n < count; ++n) {
    const auto a = draw(ensemble, rng);
    const StratumReport r = classify_stratum_unchecked(a, tol);
    ++freq[stratum_number(r.stratum) - 1];
    margin_sum += r.margin;
    if (r.margin < kDegenerateFactor * tol) ++degenerate;
  }
  json frequencies = json::object();
  for (int s = 0; s < 5; ++s) frequencies[std::to_string(s + 1)] = freq[s];
  const int target = stratum_number(target_stratum(ensemble));
  out.report = {{"ensemble", std::string(ensemble_name(ensemble))},
                {"count", count},
                {"seed", seed},
                {"tol", tol},
                {"frequencies", std::move(frequencies)},
                {"mean_margin", count > 0 ? margin_sum / count : 0.0},
                {"degenerate", degenerate},
                {"target_stratum", target},
                {"all_on_target", freq[target - 1] == count}};
  return out;
}

CommandResult cmd_verify(const AcceptanceConfig& config) {
  CommandResult out;
  const auto results = run_acceptance(config);
  json criteria = json::array();
  std::ostringstream table;
  bool all = true;
  for (const auto& r : results) {
    all &= r.passed;
    criteria.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    table << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << "\n      " << r.detail
          << "\n";
  }
  out.report = {{"passed", all},
                {"tol", config.tol},
                {"seed", config.seed},
                {"clearance_threshold", config.clearance_threshold},
                {"criteria", std::move(criteria)}};
  out.exit_code = all ? kExitOk : kExitVerificationFailed;
  out.diagnostics = table.str();
  return out;
}

}  // namespace flagsbs::harness
