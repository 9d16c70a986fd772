#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include <Eigen/LU>

#include "flagsbs/errors.hpp"
#include "flagsbs/projective.hpp"
#include "flagsbs/types.hpp"

namespace flagsbs {

/// Divisor in |L| as a traceless 3x3 matrix of the bilinear form
/// sum a_ij x_i y_j. Only obtainable through normalize_divisor_matrix.
class TracelessMatrix {
 public:
  const Mat3c& matrix() const { return a_; }
  Complex operator()(int i, int j) const { return a_(i, j); }
  double norm() const { return a_.norm(); }

  /// Same divisor, different representative.
  TracelessMatrix scaled(Complex t) const;

  /// Projective equality: A ~ tB for some nonzero t.
  bool same_divisor(const TracelessMatrix& other, double tol) const;

 private:
  explicit TracelessMatrix(const Mat3c& a) : a_(a) {}
  friend TracelessMatrix normalize_divisor_matrix(const Mat3c& raw);

  Mat3c a_;
};

/// Subtracts trace(raw)/3 from the diagonal; throws ZeroDivisor when nothing
/// is left, i.e. raw is a multiple of the identity (the incidence form).
TracelessMatrix normalize_divisor_matrix(const Mat3c& raw);

/// det(A - zI) = -z^3 - a z + b for traceless A.
struct CharCubic {
  Complex a;
  Complex b;

  /// z^3 + a z - b, the sign-normalized characteristic polynomial.
  Complex evaluate(Complex z) const { return z * z * z + a * z - b; }
  /// 3 z^2 + a.
  Complex derivative(Complex z) const { return 3.0 * z * z + a; }
};

/// Sum of the principal 2x2 minors (second elementary symmetric function).
template <typename Derived>
typename Derived::Scalar principal_minor_sum(const Eigen::MatrixBase<Derived>& m) {
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0) +
         m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
}

template <typename Real>
CharCubic char_cubic(const Mat3cT<Real>& m) {
  return CharCubic{principal_minor_sum(m), m.determinant()};
}

CharCubic char_cubic(const TracelessMatrix& a);

/// -4a^3 - 27b^2; vanishes exactly when z^3 + az - b has a repeated root.
inline Complex discriminant(const CharCubic& c) {
  return -4.0 * c.a * c.a * c.a - 27.0 * c.b * c.b;
}

/// Relative floor of discriminant_scale against scale^2.
inline constexpr double kDiscriminantFloor = 1e-4;

/// Degree-2 normalizer for the discriminant: max(|a|, |b|^(2/3)), the
/// squared root magnitude, floored at kDiscriminantFloor * scale^2.
/// Unlike scale^2 it is invariant under similarity.
inline double discriminant_scale(const CharCubic& c, double scale) {
  return std::max({std::abs(c.a), std::pow(std::abs(c.b), 2.0 / 3.0),
                   kDiscriminantFloor * scale * scale});
}

struct Eigenvalue {
  Complex lambda;
  int alg_mult = 1;
  int geom_mult = 1;  // 0 until filled in by classify_stratum
};

struct EigenvalueSet {
  std::vector<Eigenvalue> items;  // ordered lexicographically by (Re, Im)
  double scale = 0;

  int distinct() const { return static_cast<int>(items.size()); }
  bool has_repeated() const { return items.size() < 3; }
};

/// Roots of z^3 + a z - b, clustered by multiplicity.
///
/// Roots come from the companion matrix. Two roots are merged when their
/// distance is at most tol * scale or when the relative discriminant
/// |disc| / discriminant_scale^3 is at most tol; all three are merged when additionally
/// max(|a| / scale^2, |b| / scale^3) <= tol. Backward-error tests are needed
/// because a root of multiplicity m is only accurate to O(eps^(1/m)).
/// `scale` is the matrix norm when called from the classifier; when zero it
/// is derived from the coefficients.
EigenvalueSet cubic_roots(const CharCubic& c, double tol = kDefaultTol, double scale = 0);

/// Orthonormal basis of the null space of (A^T - lambda I), i.e. the points
/// x with x A = lambda x. Throws NotAnEigenvalue if the space is empty.
std::vector<ProjectivePoint> eigen_points(const TracelessMatrix& a, Complex lambda,
                                          double tol = kDefaultTol);

/// Singular values of (A^T - lambda I) / |A|, descending.
Vec3 relative_singular_values(const TracelessMatrix& a, Complex lambda);

enum class Stratum : int {
  kDistinct = 1,         // three simple eigenvalues
  kDoubleSemisimple = 2, // double eigenvalue with a 2-dim eigenspace
  kDoubleJordan = 3,     // double eigenvalue in a 2x2 Jordan cell
  kNilpotentFull = 4,    // one 3x3 Jordan cell
  kNilpotentRankOne = 5, // 2x2 Jordan cell plus a zero
};

inline int stratum_number(Stratum s) { return static_cast<int>(s); }

struct StratumReport {
  Stratum stratum = Stratum::kDistinct;
  int sphere_class_count = 0;
  std::vector<ProjectivePoint> centers;  // one per simple eigenvalue, same order
  std::vector<Complex> center_eigenvalues;
  EigenvalueSet eigenvalues;
  double margin = 0;
  bool reducible = false;
};

/// Classification is unreliable at the requested tolerance. Carries the
/// classification made at that tolerance and the one obtained by flipping
/// the binding decision.
class Degenerate : public Error {
 public:
  Degenerate(const std::string& what, StratumReport report, StratumReport alternative)
      : Error(what), report_(std::move(report)), alternative_(std::move(alternative)) {}
  const StratumReport& report() const { return report_; }
  const StratumReport& alternative() const { return alternative_; }

 private:
  StratumReport report_;
  StratumReport alternative_;
};

/// Nonzero decision statistics below this multiple of tol raise Degenerate.
inline constexpr double kDegenerateFactor = 10.0;

/// Jordan-type stratum of A. Throws Degenerate when the margin is below
/// kDegenerateFactor * tol.
StratumReport classify_stratum(const TracelessMatrix& a, double tol = kDefaultTol);

/// Same as classify_stratum but never throws Degenerate.
StratumReport classify_stratum_unchecked(const TracelessMatrix& a, double tol = kDefaultTol);

/// Some eigenvalue has geometric multiplicity >= 2, i.e. A - lambda I has
/// rank one and the divisor splits into two components.
bool is_reducible(const TracelessMatrix& a, double tol = kDefaultTol);

}  // namespace flagsbs
