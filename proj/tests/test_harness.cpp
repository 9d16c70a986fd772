#include <doctest.h>

#include <cmath>
#include <set>

#include "flagsbs/harness/commands.hpp"
#include "flagsbs/random.hpp"

using namespace flagsbs;
using namespace flagsbs::harness;
using nlohmann::json;

namespace {

DivisorInput diag_input(Complex d0, Complex d1, Complex d2) {
  DivisorInput in;
  in.matrix = Mat3c::Zero();
  in.matrix.diagonal() << d0, d1, d2;
  return in;
}

DivisorInput worked_input() {
  DivisorInput in{worked_example_raw(), std::string("worked example")};
  return in;
}

DivisorInput representative_input(int s) { return DivisorInput{stratum_representative(s), std::nullopt}; }

int frequency_total(const json& report) {
  int total = 0;
  for (const auto& [key, value] : report["frequencies"].items()) total += value.get<int>();
  return total;
}

}  // namespace

TEST_CASE("divisor JSON round trip") {
  CounterRng rng(5);
  for (int n = 0; n < 20; ++n) {
    DivisorInput in{random_ginibre(rng), std::string("g") + std::to_string(n)};
    const DivisorInput out = parse_divisor_text(divisor_to_json(in).dump());
    CHECK((out.matrix - in.matrix).norm() == 0.0);
    CHECK(out.label == in.label);
  }
  const DivisorInput unlabeled = parse_divisor_text(divisor_to_json(worked_input()).dump());
  CHECK(unlabeled.matrix == worked_example_raw());
}

TEST_CASE("malformed divisor input raises ParseError") {
  const char* bad[] = {
      "",
      "[1, 2, 3]",
      "{\"label\": \"x\"}",
      "{\"matrix\": [[[1,0],[0,0],[0,0]],[[0,0],[1,0],[0,0]]]}",
      "{\"matrix\": [[[1,0],[0,0]],[[0,0],[1,0],[0,0]],[[0,0],[0,0],[1,0]]]}",
      "{\"matrix\": [[\"1\",[0,0],[0,0]],[[0,0],[1,0],[0,0]],[[0,0],[0,0],[1,0]]]}",
      "{\"matrix\": [[[1,0,0],[0,0],[0,0]],[[0,0],[1,0],[0,0]],[[0,0],[0,0],[1,0]]]}",
      "{\"matrix\": [[[1,0],[0,0],[0,0]],[[0,0],[1,0],[0,0]],[[0,0],[0,0],[1,0]]], \"label\": 3}",
  };
  for (const char* text : bad) CHECK_THROWS_AS(parse_divisor_text(text), ParseError);
  CHECK_THROWS_AS(load_divisor("/nonexistent/divisor.json"), ParseError);
}

TEST_CASE("--z flag parsing") {
  CHECK(parse_complex_flag("1,0") == Complex(1, 0));
  CHECK(parse_complex_flag("-0.5,2e-3") == Complex(-0.5, 2e-3));
  for (const char* bad : {"", "1", "1,", ",1", "a,b", "1,2,3", "nan,0", "1;2"})
    CHECK_THROWS_AS(parse_complex_flag(bad), ParseError);
}

TEST_CASE("--x flag parsing") {
  const ProjectivePoint expected(Vec3c(1, Complex(0, 2), -1));
  CHECK(parse_point_flag("1,0 0,2 -1,0").approx_equal(expected, 1e-15));
  CHECK(parse_point_flag(" [[1,0],[0,2],[-1,0]]").approx_equal(expected, 1e-15));
  for (const char* bad : {"", "1,0 0,0", "1,0 0,0 0,0 0,0", "0,0 0,0 0,0", "[[1,0],[0,0]", "x,0 1,0 1,0"})
    CHECK_THROWS_AS(parse_point_flag(bad), ParseError);
}

TEST_CASE("point JSON round trip keeps the canonical representative") {
  CounterRng rng(6);
  for (int n = 0; n < 50; ++n) {
    const ProjectivePoint p(Vec3c(rng.complex_normal(), rng.complex_normal(), rng.complex_normal()));
    CHECK(point_from_json(point_to_json(p)).approx_equal(p, 1e-15));
  }
  CHECK_THROWS_AS(point_from_json(json::parse("[[0,0],[0,0],[0,0]]")), Error);
  CHECK_THROWS_AS(point_from_json(json::parse("[[1,0],[0,0]]")), ParseError);
}

TEST_CASE("classify command") {
  const CommandResult worked = cmd_classify(worked_input(), kDefaultTol);
  CHECK(worked.exit_code == kExitOk);
  CHECK(worked.report["stratum"] == 1);
  CHECK(worked.report["sphere_class_count"] == 3);
  CHECK(worked.report["centers"].size() == 3);
  CHECK(worked.report["reducible"] == false);
  CHECK(worked.report["on_delta"] == false);
  CHECK(worked.report["degenerate"] == false);
  CHECK(worked.report["label"] == "worked example");

  const CommandResult identity = cmd_classify(diag_input(1, 1, 1), kDefaultTol);
  CHECK(identity.exit_code == kExitInvalidDivisor);
  CHECK(identity.report["error"] == "ZeroDivisor");

  const CommandResult dbl = cmd_classify(diag_input(1, 1, -2), kDefaultTol);
  CHECK(dbl.exit_code == kExitOk);
  CHECK(dbl.report["stratum"] == 2);
  CHECK(dbl.report["reducible"] == true);
  CHECK(dbl.report["on_delta"] == true);

  const CommandResult near = cmd_classify(diag_input(1, 1.001, -2.001), 1e-6);
  CHECK(near.exit_code == kExitDegenerate);
  CHECK(near.report["degenerate"] == true);
  CHECK(near.report["candidate_strata"].size() == 2);
  CHECK(near.report["candidate_strata"][0] == 1);
  CHECK(near.report["candidate_strata"][1] != 1);
  CHECK(near.report.contains("alternative"));
}

TEST_CASE("classify report fields and multiplicities over the representatives") {
  const int expected_distinct[] = {3, 2, 2, 1, 1};
  for (int s = 1; s <= 5; ++s) {
    const json r = cmd_classify(representative_input(s), kDefaultTol).report;
    CHECK(r["stratum"] == s);
    CHECK(r["eigenvalues"].size() == std::size_t(expected_distinct[s - 1]));
    int alg = 0;
    for (const auto& ev : r["eigenvalues"]) {
      alg += ev["alg_mult"].get<int>();
      CHECK(ev["geom_mult"].get<int>() >= 1);
      CHECK(ev["geom_mult"].get<int>() <= ev["alg_mult"].get<int>());
    }
    CHECK(alg == 3);
    CHECK(r["centers"].size() == r["sphere_class_count"].get<std::size_t>());
    for (const char* key : {"matrix", "margin", "reducible", "on_delta", "tol"}) CHECK(r.contains(key));
  }
}

TEST_CASE("spheres command on the worked example") {
  const CommandResult out = cmd_spheres(worked_input(), 1000, 24, 0, kDefaultTol);
  CHECK(out.exit_code == kExitOk);
  const json& spheres = out.report["spheres"];
  REQUIRE(spheres.size() == 3);
  const json expected = json::parse("[[1,0],[0,1],[1,1]]");
  for (int i = 0; i < 3; ++i) {
    CHECK(spheres[i]["index"] == i);
    CHECK(spheres[i]["homology_class"] == expected[i]);
    CHECK(spheres[i]["lagrangian_residual"].get<double>() < 1e-10);
    CHECK(spheres[i]["holomorphic_pair_value"].get<double>() > 1e-2);
    CHECK(spheres[i]["clearance"].get<double>() > 0.3);
  }
  // S0 and S1 sit at sqrt(2)/2 / |A|, S2 at 1/2 / |A| with |A| = sqrt(8/3)
  const double norm = std::sqrt(8.0 / 3.0);
  CHECK(spheres[0]["clearance"].get<double>() == doctest::Approx(std::sqrt(0.5) / norm).epsilon(1e-8));
  CHECK(spheres[1]["clearance"].get<double>() == doctest::Approx(std::sqrt(0.5) / norm).epsilon(1e-8));
  CHECK(spheres[2]["clearance"].get<double>() == doctest::Approx(0.5 / norm).epsilon(1e-8));
  CHECK(out.report["classes_distinct"] == true);
  CHECK_FALSE(out.report.contains("note"));
}

TEST_CASE("spheres command lagrangian residual is seed independent") {
  for (std::uint64_t seed : {1u, 2u}) {
    const json r = cmd_spheres(worked_input(), 1000, 8, seed, kDefaultTol).report;
    CHECK(r["seed"] == seed);
    CHECK(r["spheres"][2]["lagrangian_residual"].get<double>() < 1e-10);
  }
}

TEST_CASE("spheres command outside stratum 1 is informational") {
  const CommandResult out = cmd_spheres(representative_input(4), 100, 8, 0, kDefaultTol);
  CHECK(out.exit_code == kExitOk);
  CHECK(out.report["stratum"] == 4);
  CHECK(out.report["expected_classes"] == 0);
  CHECK(out.report.contains("note"));
  CHECK(out.report["classes_distinct"] == false);
  for (const auto& s : out.report["spheres"]) {
    CHECK(s["homology_class"].is_null());
    CHECK(s["clearance"].get<double>() >= 0.0);
  }
}

TEST_CASE("fiber command") {
  const Vec3c ones(1, 1, 1);
  const CommandResult out = cmd_fiber(worked_input(), ProjectivePoint(ones), kDefaultTol);
  CHECK(out.exit_code == kExitOk);
  CHECK(out.report["incidence_residual"].get<double>() < 1e-12);
  CHECK(out.report["divisor_residual"].get<double>() < 1e-12);
  CHECK(out.report["fiber_margin"].get<double>() > 1e-4);

  const CommandResult center = cmd_fiber(worked_input(), ProjectivePoint(Vec3c(0, 0, 1)), kDefaultTol);
  CHECK(center.exit_code == kExitDegenerate);
  CHECK(center.report["error"] == "EigenPoint");
  CHECK(center.report["y"].is_null());
}

TEST_CASE("moduli command") {
  const json worked = cmd_moduli(worked_input(), std::nullopt, kDefaultTol).report;
  CHECK(worked["moduli_points"].size() == 3);
  CHECK(worked["covering_fiber"].size() == 3);

  const json off = cmd_moduli(diag_input(1, -1, 0), Complex(1), kDefaultTol).report;
  CHECK(off["on_y"] == true);
  CHECK(off["on_delta"] == false);

  const json on = cmd_moduli(diag_input(1, 1, -2), Complex(1), kDefaultTol).report;
  CHECK(on["on_y"] == true);
  CHECK(on["on_delta"] == true);

  const CommandResult miss = cmd_moduli(diag_input(1, -1, 0), Complex(0.5), kDefaultTol);
  CHECK(miss.exit_code == kExitOk);
  CHECK(miss.report["on_y"] == false);
  CHECK(miss.report["error"] == "NotOnY");
  CHECK(miss.report["delta_residual"].is_null());

  CHECK(cmd_moduli(diag_input(2, 2, 2), std::nullopt, kDefaultTol).exit_code == kExitInvalidDivisor);
}

TEST_CASE("sample command frequencies") {
  const json ginibre = cmd_sample(1000, 42, Ensemble::kGinibre, kDefaultTol).report;
  CHECK(ginibre["frequencies"]["1"] == 1000);
  CHECK(frequency_total(ginibre) == 1000);
  CHECK(ginibre["all_on_target"] == true);

  const json rank1 = cmd_sample(100, 7, Ensemble::kRank1, kDefaultTol).report;
  CHECK(rank1["frequencies"]["5"] == 100);
  CHECK(rank1["ensemble"] == "rank1");
  CHECK(rank1["seed"] == 7);

  for (std::uint64_t seed : {0u, 3u, 99u}) {
    const json one = cmd_sample(1, seed, Ensemble::kGinibre, kDefaultTol).report;
    CHECK(frequency_total(one) == 1);
  }
  for (const auto e : {Ensemble::kDiag2, Ensemble::kJordan2, Ensemble::kJordan3}) {
    const json r = cmd_sample(200, 11, e, kDefaultTol).report;
    CHECK(frequency_total(r) == 200);
    CHECK(r["all_on_target"] == true);
  }
}

TEST_CASE("ensemble names") {
  for (const char* name : {"ginibre", "diag2", "jordan2", "jordan3", "rank1"}) {
    const auto e = parse_ensemble(name);
    REQUIRE(e.has_value());
    CHECK(ensemble_name(*e) == name);
  }
  CHECK_FALSE(parse_ensemble("gue").has_value());
}

TEST_CASE("command output is byte identical across runs") {
  CHECK(cmd_sample(300, 9, Ensemble::kJordan2, kDefaultTol).report.dump() ==
        cmd_sample(300, 9, Ensemble::kJordan2, kDefaultTol).report.dump());
  CHECK(cmd_spheres(worked_input(), 200, 10, 4, kDefaultTol).report.dump() ==
        cmd_spheres(worked_input(), 200, 10, 4, kDefaultTol).report.dump());
  CHECK(cmd_classify(representative_input(3), kDefaultTol).report.dump() ==
        cmd_classify(representative_input(3), kDefaultTol).report.dump());
  CHECK(cmd_sample(50, 1, Ensemble::kGinibre, kDefaultTol).report.dump() !=
        cmd_sample(50, 2, Ensemble::kGinibre, kDefaultTol).report.dump());
}

TEST_CASE("verify command failure path") {
  AcceptanceConfig forced;
  forced.clearance_threshold = 1.0;
  forced.random_samples = 50;
  forced.equivariance_trials = 20;
  forced.lagrangian_samples = 100;
  const CommandResult out = cmd_verify(forced);
  CHECK(out.exit_code == kExitVerificationFailed);
  CHECK(out.report["passed"] == false);
  REQUIRE(out.report["criteria"].size() == 9);
  CHECK(out.report["criteria"][1]["passed"] == false);
  CHECK(out.diagnostics.find("FAIL  [2]") != std::string::npos);

  std::set<int> ids;
  for (const auto& c : out.report["criteria"]) ids.insert(c["id"].get<int>());
  CHECK(ids.size() == 9);
}

TEST_CASE("coarse tolerance keeps the worked-example criteria passing") {
  AcceptanceConfig coarse;
  coarse.tol = 1e-2;
  coarse.random_samples = 100;
  coarse.equivariance_trials = 50;
  for (const auto& r : run_acceptance(coarse))
    if (r.id != 2) CHECK_MESSAGE(r.passed, r.id, ": ", r.detail);
}
