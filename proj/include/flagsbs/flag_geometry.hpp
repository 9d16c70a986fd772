#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "flagsbs/eigen_core.hpp"
#include "flagsbs/projective.hpp"
#include "flagsbs/types.hpp"

namespace flagsbs {

/// A point ([x], [y]) of CP^2 x CP^2; lies on the flag variety when
/// sum x_i y_i = 0.
struct FlagPoint {
  ProjectivePoint x;
  ProjectivePoint y;
};

/// Lagrangian sphere S_i = { [x] x [eps_0 conj x_0 : eps_1 conj x_1 : eps_2 conj x_2] }
/// with eps_i = -1 and the other two signs +1.
class GZSphere {
 public:
  explicit GZSphere(int index);

  int index() const { return index_; }
  const std::array<double, 3>& signs() const { return signs_; }

  /// Slots of C^3 filled by the two components of u, in increasing order.
  std::array<int, 2> free_slots() const;

  static std::array<GZSphere, 3> all() { return {GZSphere(0), GZSphere(1), GZSphere(2)}; }

 private:
  int index_;
  std::array<double, 3> signs_;
};

struct HomologyClass {
  int m = 0;
  int n = 0;
  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
};

/// |sum x_i y_i| with unit representatives.
double incidence_residual(const FlagPoint& p);

/// |sum a_ij x_i y_j| / |A|_F with unit representatives.
double divisor_residual(const TracelessMatrix& a, const FlagPoint& p);

/// |x cross (A^T x)| / |A|_F for unit x; zero exactly at eigen-points of A^T.
double fiber_margin(const TracelessMatrix& a, const ProjectivePoint& x);

/// The unique point of D over [x]: y ~ x cross (A^T x) (no conjugation).
/// Throws EigenPoint when fiber_margin(a, x) <= tol.
FlagPoint fiber_solve(const TracelessMatrix& a, const ProjectivePoint& x,
                      double tol = kDefaultTol);

/// Homogeneous x of the sphere over u in S^3: 1 at the sphere index, u elsewhere.
Vec3c gz_lift(const GZSphere& s, const Vec2c& u);

FlagPoint gz_embed(const GZSphere& s, const Vec2c& u);

/// Fubini-Study form in an affine chart of CP^2 at z, evaluated on (xi, eta).
double fubini_study_chart(const Vec2c& z, const Vec2c& xi, const Vec2c& eta);

/// Pullback of omega_FS,x + omega_FS,y under gz_embed at u on tangent vectors
/// xi, eta of S^3 (differentials taken exactly).
double gz_pullback(const GZSphere& s, const Vec2c& u, const Vec2c& xi, const Vec2c& eta);

/// Quaternionic parallelization of S^3: {iu, (-conj u1, conj u0), (-i conj u1, i conj u0)}.
std::array<Vec2c, 3> s3_frame(const Vec2c& u);

/// Max |pullback| over seeded random points of S^3 and all frame pairs.
double lagrangian_residual(const GZSphere& s, int sample_count, std::uint64_t seed);

/// Min of omega_FS,x(xi, i xi) over the same samples and unit frame vectors;
/// strictly positive because the form is Kahler.
double holomorphic_pair_value(const GZSphere& s, int sample_count, std::uint64_t seed);

/// Point of S^3 in Hopf coordinates (cos t e^{i p}, sin t e^{i q}).
Vec2c hopf_point(double t, double p, double q);

struct ClearanceResult {
  double minimum = 0;
  Vec2c argmin = Vec2c::Zero();
  FlagPoint point;
};

/// Grid search over grid^3 Hopf coordinates followed by Nelder-Mead from the
/// best grid node. Numerical minimum, not a certified bound.
ClearanceResult clearance_search(const TracelessMatrix& a, const GZSphere& s, int grid = 24);

/// Minimum of divisor_residual over the sphere. Throws Inconclusive when the
/// minimum lies in (0, 10 tol).
double clearance(const TracelessMatrix& a, const GZSphere& s, int grid = 24,
                 double tol = kDefaultTol);

/// (-|x_i|^2 + sum_{j != i} |x_j|^2) / |x|^2, in [-1, 1].
double f_eval(int i, const ProjectivePoint& x);

/// Class of S_s in H_3 of the complement of a stratum-1 divisor with the given
/// three centers. Basis: centers sorted by decreasing |c_0|, then |c_1|, then
/// |c_2| of their unit representatives are p1, p2, p3, and the sphere
/// surrounding p1, p2, p3 is (1,0), (0,1), (1,1).
HomologyClass homology_class(const GZSphere& s, const std::vector<ProjectivePoint>& centers,
                             double tol = kDefaultTol);

}  // namespace flagsbs
