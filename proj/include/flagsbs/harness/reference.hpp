#pragma once

// Reference computations used by the tests and the acceptance suite. None of
// these share code paths with the core: no companion matrices, no SVD, no
// principal-minor formulas.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "flagsbs/types.hpp"

namespace flagsbs::reference {

/// Coefficients c0..c3 of det(A - zI) by sampling at four points and solving
/// the Vandermonde system.
inline Eigen::Vector4cd char_poly_by_interpolation(const Mat3c& a) {
  const std::array<Complex, 4> nodes{Complex(0), Complex(1), Complex(-1), Complex(0, 2)};
  Eigen::Matrix4cd vandermonde;
  Eigen::Vector4cd values;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) vandermonde(r, c) = std::pow(nodes[r], c);
    values(r) = (a - nodes[r] * Mat3c::Identity()).determinant();
  }
  return vandermonde.fullPivLu().solve(values);
}

/// Durand-Kerner iteration for z^3 + a z - b.
inline std::array<Complex, 3> durand_kerner(Complex a, Complex b, int iterations = 2000) {
  auto p = [&](Complex z) { return z * z * z + a * z - b; };
  const double radius = 1.0 + std::max(std::sqrt(std::abs(a)), std::cbrt(std::abs(b)));
  std::array<Complex, 3> z{radius * std::polar(1.0, 0.4), radius * std::polar(1.0, 0.4 + 2.1),
                           radius * std::polar(1.0, 0.4 + 4.2)};
  for (int it = 0; it < iterations; ++it) {
    for (int i = 0; i < 3; ++i) {
      Complex denom = 1.0;
      for (int j = 0; j < 3; ++j)
        if (j != i) denom *= z[i] - z[j];
      if (std::abs(denom) == 0) continue;
      z[i] -= p(z[i]) / denom;
    }
  }
  return z;
}

/// Product of squared root differences of the monic cubic with these roots.
inline Complex discriminant_from_roots(const std::array<Complex, 3>& r) {
  const Complex d = (r[0] - r[1]) * (r[0] - r[2]) * (r[1] - r[2]);
  return d * d;
}

/// Number of distinct roots after clustering at distance rel_tol * scale.
/// scale defaults to the largest root modulus; pass the matrix norm when the
/// roots may all be near zero.
inline int distinct_root_count(const std::array<Complex, 3>& r, double rel_tol, double scale = 0) {
  if (scale <= 0)
    for (const auto& z : r) scale = std::max(scale, std::abs(z));
  const double cut = rel_tol * std::max(scale, 1e-300);
  const bool c01 = std::abs(r[0] - r[1]) <= cut;
  const bool c02 = std::abs(r[0] - r[2]) <= cut;
  const bool c12 = std::abs(r[1] - r[2]) <= cut;
  const int links = int(c01) + int(c02) + int(c12);
  if (links >= 2) return 1;
  return 3 - links;
}

/// Searches for lambda with A - lambda I = v w^T (all 2x2 minors vanish).
/// Any such lambda is a root of the (0,1) principal minor, a quadratic.
inline bool has_rank_one_shift(const Mat3c& a, double rel_tol) {
  const Complex tr = a(0, 0) + a(1, 1);
  const Complex det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  const Complex disc = std::sqrt(tr * tr - 4.0 * det);
  const double scale2 = a.squaredNorm();
  for (const Complex lambda : {0.5 * (tr + disc), 0.5 * (tr - disc)}) {
    const Mat3c m = a - lambda * Mat3c::Identity();
    double worst = 0;
    for (int r0 = 0; r0 < 3; ++r0)
      for (int r1 = r0 + 1; r1 < 3; ++r1)
        for (int c0 = 0; c0 < 3; ++c0)
          for (int c1 = c0 + 1; c1 < 3; ++c1)
            worst = std::max(worst, std::abs(m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0)));
    if (worst <= rel_tol * scale2 && m.norm() > rel_tol * std::sqrt(scale2)) return true;
  }
  return false;
}

/// Null vector of the 3x3 matrix m known to have rank 2, via the cross
/// product of two independent rows (no conjugation).
inline Vec3c kernel_by_cross(const Mat3c& m) {
  Vec3c best = Vec3c::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const Vec3c u = m.row(i).transpose(), v = m.row(j).transpose();
      const Vec3c c(u(1) * v(2) - u(2) * v(1), u(2) * v(0) - u(0) * v(2), u(0) * v(1) - u(1) * v(0));
      if (c.norm() > best.norm()) best = c;
    }
  return best;
}

}  // namespace flagsbs::reference
