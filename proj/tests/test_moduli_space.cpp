#include <doctest.h>

#include <cmath>

#include "flagsbs/harness/ensembles.hpp"
#include "flagsbs/moduli_space.hpp"
#include "flagsbs/random.hpp"
#include "oracles.hpp"

using namespace flagsbs;

namespace {

TracelessMatrix diag_divisor(Complex d0, Complex d1, Complex d2) {
  Mat3c m = Mat3c::Zero();
  m.diagonal() << d0, d1, d2;
  return normalize_divisor_matrix(m);
}

TracelessMatrix rep(int s) { return normalize_divisor_matrix(harness::stratum_representative(s)); }

bool has_z(const std::vector<ModuliPoint>& pts, Complex z) {
  for (const auto& p : pts)
    if (std::abs(p.z - z) < 1e-9) return true;
  return false;
}

}  // namespace

TEST_CASE("y_residual") {
  const auto a = diag_divisor(1.0, -1.0, 0.0);
  CHECK(y_residual(a, 1.0) < 1e-16);
  // |det diag(-1, -3, -2)| / (sqrt 2 + 2)^3
  CHECK(y_residual(a, 2.0) == doctest::Approx(6.0 / std::pow(std::sqrt(2.0) + 2.0, 3)));

  CounterRng rng(1);
  for (int n = 0; n < 100; ++n) {
    const auto b = normalize_divisor_matrix(random_ginibre(rng));
    const Complex z = rng.complex_normal(), t = rng.complex_normal();
    CHECK(y_residual(b.scaled(t), t * z) == doctest::Approx(y_residual(b, z)).epsilon(1e-10));
  }
}

TEST_CASE("delta_residual") {
  const auto a = diag_divisor(1.0, -1.0, 0.0);
  CHECK(delta_residual(a, 1.0) == doctest::Approx(2.0 / std::pow(std::sqrt(2.0) + 1.0, 2)));
  CHECK(delta_residual(diag_divisor(1.0, 1.0, -2.0), 1.0) < 1e-15);
  CHECK(delta_residual(rep(4), 0.0) == 0.0);
  CHECK_THROWS_AS(delta_residual(a, 2.0), NotOnY);
}

TEST_CASE("covering_fiber examples") {
  const auto f1 = covering_fiber(diag_divisor(1.0, -1.0, 0.0));
  REQUIRE(f1.size() == 3);
  CHECK(has_z(f1, 1.0));
  CHECK(has_z(f1, -1.0));
  CHECK(has_z(f1, 0.0));

  const auto f2 = covering_fiber(diag_divisor(1.0, 1.0, -2.0));
  REQUIRE(f2.size() == 2);
  CHECK(has_z(f2, 1.0));
  CHECK(has_z(f2, -2.0));

  const auto f4 = covering_fiber(rep(4));
  REQUIRE(f4.size() == 1);
  CHECK(f4[0].z == Complex(0));
  CHECK(f4[0].multiplicity == 3);
}

TEST_CASE("moduli_points examples") {
  CHECK(moduli_points(rep(1)).size() == 3);
  const auto m2 = moduli_points(diag_divisor(1.0, 1.0, -2.0));
  REQUIRE(m2.size() == 1);
  CHECK(std::abs(m2[0].z + 2.0) < 1e-12);
  CHECK(moduli_points(rep(5)).empty());
}

TEST_CASE("moduli points agree with stratum counts and lie on Y minus Delta") {
  CounterRng rng(17);
  using harness::Ensemble;
  for (Ensemble e : {Ensemble::kGinibre, Ensemble::kDiag2, Ensemble::kJordan2, Ensemble::kJordan3,
                     Ensemble::kRank1}) {
    for (int n = 0; n < 200; ++n) {
      const auto a = harness::draw(e, rng);
      const auto report = classify_stratum(a);
      const auto pts = moduli_points(a);
      CHECK(int(pts.size()) == report.sphere_class_count);
      for (const auto& p : pts) {
        CHECK(y_residual(a, p.z) <= 1e-10);
        CHECK(delta_residual(a, p.z) > 1e-6);
      }
      const auto fiber = covering_fiber(a);
      const bool on_delta = std::any_of(fiber.begin(), fiber.end(), [&](const ModuliPoint& p) {
        return delta_residual(a, p.z) < 1e-6;
      });
      const auto c = char_cubic(a);
      const bool small_disc = std::abs(discriminant(c)) <= 1e-8 * std::pow(a.norm(), 6);
      CHECK(on_delta == small_disc);
      CHECK(on_delta == (stratum_number(report.stratum) >= 2));
    }
  }
}

TEST_CASE("moduli points are projective under joint scaling") {
  CounterRng rng(23);
  for (int n = 0; n < 100; ++n) {
    const auto a = normalize_divisor_matrix(random_ginibre(rng));
    const Complex t = rng.complex_normal();
    const auto p = moduli_points(a), q = moduli_points(a.scaled(t));
    REQUIRE(p.size() == q.size());
    for (const auto& pp : p) {
      bool found = false;
      for (const auto& qq : q) found |= same_moduli_point(pp, qq, 1e-9);
      CHECK(found);
    }
  }
}
