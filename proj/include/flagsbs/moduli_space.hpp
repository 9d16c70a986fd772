#pragma once

#include <vector>

#include "flagsbs/eigen_core.hpp"
#include "flagsbs/types.hpp"

namespace flagsbs {

/// Point (A, z) of the cubic Y = { det(A - zI) = 0 } in CP^8, up to joint scale.
struct ModuliPoint {
  TracelessMatrix matrix;
  Complex z;
  int multiplicity = 1;  // algebraic multiplicity of z as an eigenvalue of A
};

/// Membership threshold for "on Y" decisions in delta_residual.
inline constexpr double kOnYThreshold = 1e-8;

/// |det(A - zI)| / (|A| + |z|)^3; homogeneous of degree 0.
template <typename Real>
Real y_residual(const Mat3cT<Real>& a, ComplexT<Real> z) {
  const Real scale = a.norm() + std::abs(z);
  const Mat3cT<Real> shifted = a - z * Mat3cT<Real>::Identity();
  return std::abs(shifted.determinant()) / (scale * scale * scale);
}

double y_residual(const TracelessMatrix& a, Complex z);

/// |3 z^2 + a| / (|A| + |z|)^2 for (A, z) on Y; zero exactly on the
/// ramification divisor. Throws NotOnY when y_residual exceeds on_y_threshold.
double delta_residual(const TracelessMatrix& a, Complex z, double on_y_threshold = kOnYThreshold);

/// Fiber of the 3:1 cover Y -> |L| over A: one point per distinct eigenvalue.
std::vector<ModuliPoint> covering_fiber(const TracelessMatrix& a, double tol = kDefaultTol);

/// Points of Y minus the ramification divisor over A (simple eigenvalues).
std::vector<ModuliPoint> moduli_points(const TracelessMatrix& a, double tol = kDefaultTol);

/// Joint-scale equality (A, z) ~ (tA, tz).
bool same_moduli_point(const ModuliPoint& p, const ModuliPoint& q, double tol);

}  // namespace flagsbs
