#pragma once

#include <cmath>

#include "flagsbs/types.hpp"

namespace flagsbs {

/// Unit-norm representative whose first coordinate of largest modulus is real
/// and positive. Equality of points is up to nonzero complex scale.
template <typename Derived>
Vec3cT<typename Derived::RealScalar> canonicalize(const Eigen::MatrixBase<Derived>& v) {
  using Real = typename Derived::RealScalar;
  Vec3cT<Real> out = v;
  const Real norm = out.norm();
  if (norm == Real(0)) return out;
  out /= norm;
  Real largest = 0;
  for (int i = 0; i < 3; ++i) largest = std::max(largest, std::abs(out(i)));
  // Near-ties resolve to the first index so the choice is stable under rounding.
  const Real cutoff = largest * (Real(1) - Real(64) * Eigen::NumTraits<Real>::epsilon());
  for (int i = 0; i < 3; ++i) {
    if (std::abs(out(i)) >= cutoff) {
      out *= std::conj(out(i)) / std::abs(out(i));
      out(i) = std::abs(out(i));
      break;
    }
  }
  return out;
}

class ProjectivePoint {
 public:
  ProjectivePoint() : coords_(Vec3c::UnitX()) {}
  explicit ProjectivePoint(const Vec3c& homogeneous) : coords_(canonicalize(homogeneous)) {}
  ProjectivePoint(Complex x0, Complex x1, Complex x2) : ProjectivePoint(Vec3c(x0, x1, x2)) {}

  const Vec3c& coords() const { return coords_; }
  Complex operator[](int i) const { return coords_(i); }

  /// |<p, q>| for unit representatives; 1 means the same projective point.
  double overlap(const ProjectivePoint& other) const {
    return std::abs(coords_.dot(other.coords_));
  }

  /// sin of the Fubini-Study angle, computed as the norm of the component of
  /// this point orthogonal to `other` (no cancellation near zero).
  double distance(const ProjectivePoint& other) const {
    const Vec3c& q = other.coords_;
    return (coords_ - q * q.dot(coords_)).norm();
  }

  bool approx_equal(const ProjectivePoint& other, double tol) const {
    return distance(other) <= tol;
  }

 private:
  Vec3c coords_;
};

}  // namespace flagsbs
