#include "flagsbs/eigen_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace flagsbs {

namespace {

bool lex_less(Complex lhs, Complex rhs) {
  if (lhs.real() != rhs.real()) return lhs.real() < rhs.real();
  return lhs.imag() < rhs.imag();
}

void sort_items(std::vector<Eigenvalue>& items) {
  std::sort(items.begin(), items.end(),
            [](const Eigenvalue& l, const Eigenvalue& r) { return lex_less(l.lambda, r.lambda); });
}

struct RootAnalysis {
  EigenvalueSet set;
  double triple_stat = 0;  // max(|a|/s^2, |b|/s^3)
  double disc_stat = 0;    // |disc| / discriminant_scale^3
};

RootAnalysis analyze_roots(const CharCubic& c, double tol, double scale) {
  RootAnalysis out;
  double s = scale;
  if (!(s > 0)) s = std::max(std::sqrt(std::abs(c.a)), std::cbrt(std::abs(c.b)));
  out.set.scale = s;
  if (s == 0) {
    out.set.items = {{Complex(0), 3, 0}};
    return out;
  }
  out.triple_stat = std::max(std::abs(c.a) / (s * s), std::abs(c.b) / (s * s * s));
  out.disc_stat = std::abs(discriminant(c)) / std::pow(discriminant_scale(c, s), 3);

  Mat3c companion = Mat3c::Zero();
  companion(1, 0) = 1.0;
  companion(2, 1) = 1.0;
  companion(0, 2) = c.b;
  companion(1, 2) = -c.a;
  Eigen::ComplexEigenSolver<Mat3c> solver(companion, false);
  const Vec3c roots = solver.eigenvalues();

  std::array<double, 3> gaps{std::abs(roots(0) - roots(1)), std::abs(roots(0) - roots(2)),
                             std::abs(roots(1) - roots(2))};
  const bool all_close = *std::max_element(gaps.begin(), gaps.end()) <= tol * s;
  if (out.triple_stat <= tol || all_close) {
    out.set.items = {{Complex(0), 3, 0}};
    return out;
  }

  const auto closest = std::min_element(gaps.begin(), gaps.end()) - gaps.begin();
  if (out.disc_stat <= tol || gaps[closest] <= tol * s) {
    // closest pair (i, j) and the remaining simple root k
    static constexpr std::array<std::array<int, 3>, 3> kPairs{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
    const auto [i, j, k] = kPairs[closest];
    out.set.items = {{0.5 * (roots(i) + roots(j)), 2, 0}, {roots(k), 1, 0}};
  } else {
    out.set.items = {{roots(0), 1, 0}, {roots(1), 1, 0}, {roots(2), 1, 0}};
  }
  sort_items(out.set.items);
  return out;
}

Eigen::JacobiSVD<Mat3c> shifted_svd(const TracelessMatrix& a, Complex lambda) {
  const Mat3c shifted = a.matrix().transpose() - lambda * Mat3c::Identity();
  return Eigen::JacobiSVD<Mat3c>(shifted, Eigen::ComputeFullV);
}

struct Decisions {
  StratumReport report;
  double margin = std::numeric_limits<double>::infinity();
};

Decisions decide(const TracelessMatrix& a, double tol) {
  Decisions d;
  const double s = a.norm();
  RootAnalysis roots = analyze_roots(char_cubic(a), tol, s);
  auto note = [&d](double stat) { d.margin = std::min(d.margin, stat); };

  const int distinct = roots.set.distinct();
  if (distinct == 3) note(roots.disc_stat);
  if (distinct > 1) note(roots.triple_stat);

  for (Eigenvalue& ev : roots.set.items) {
    const Vec3 sv = relative_singular_values(a, ev.lambda);
    int rank = 0;
    for (int i = 0; i < 3; ++i) rank += sv(i) > tol ? 1 : 0;
    const int geom = 3 - rank;
    if (geom == 3) throw InvariantError("geometric multiplicity 3 for a nonzero traceless matrix");
    if (rank > 0) note(sv(rank - 1));
    ev.geom_mult = std::clamp(geom, 1, ev.alg_mult);
  }

  StratumReport& r = d.report;
  const auto& items = roots.set.items;
  if (distinct == 3) {
    r.stratum = Stratum::kDistinct;
  } else if (distinct == 2) {
    const Eigenvalue& dbl = items[0].alg_mult == 2 ? items[0] : items[1];
    r.stratum = dbl.geom_mult == 2 ? Stratum::kDoubleSemisimple : Stratum::kDoubleJordan;
  } else {
    r.stratum = items[0].geom_mult == 2 ? Stratum::kNilpotentRankOne : Stratum::kNilpotentFull;
  }
  for (const Eigenvalue& ev : items) {
    if (ev.alg_mult != 1) continue;
    const auto pts = eigen_points(a, ev.lambda, tol);
    r.centers.push_back(pts.front());
    r.center_eigenvalues.push_back(ev.lambda);
  }
  r.sphere_class_count = static_cast<int>(r.centers.size());
  r.reducible = std::any_of(items.begin(), items.end(),
                            [](const Eigenvalue& ev) { return ev.geom_mult >= 2; });
  r.eigenvalues = std::move(roots.set);
  r.margin = d.margin;
  return d;
}

}  // namespace

TracelessMatrix TracelessMatrix::scaled(Complex t) const { return TracelessMatrix(t * a_); }

bool TracelessMatrix::same_divisor(const TracelessMatrix& other, double tol) const {
  // Best t in least squares: t = <other, this> / |other|^2.
  const Complex t = other.a_.cwiseProduct(a_.conjugate()).sum() / a_.squaredNorm();
  return (other.a_ - t * a_).norm() <= tol * other.norm();
}

TracelessMatrix normalize_divisor_matrix(const Mat3c& raw) {
  if (!raw.allFinite()) throw ZeroDivisor("divisor matrix has non-finite entries");
  const Mat3c shifted = raw - (raw.trace() / 3.0) * Mat3c::Identity();
  if (shifted.norm() <= 1e-12 * (1.0 + raw.norm())) {
    throw ZeroDivisor("matrix is a multiple of the identity and defines no divisor");
  }
  return TracelessMatrix(shifted);
}

CharCubic char_cubic(const TracelessMatrix& a) { return char_cubic<double>(a.matrix()); }

EigenvalueSet cubic_roots(const CharCubic& c, double tol, double scale) {
  return analyze_roots(c, tol, scale).set;
}

Vec3 relative_singular_values(const TracelessMatrix& a, Complex lambda) {
  return shifted_svd(a, lambda).singularValues() / a.norm();
}

std::vector<ProjectivePoint> eigen_points(const TracelessMatrix& a, Complex lambda, double tol) {
  const auto svd = shifted_svd(a, lambda);
  const Vec3 sv = svd.singularValues() / a.norm();
  std::vector<ProjectivePoint> basis;
  for (int i = 0; i < 3; ++i) {
    if (sv(i) <= tol) basis.emplace_back(Vec3c(svd.matrixV().col(i)));
  }
  if (basis.empty()) {
    std::ostringstream msg;
    msg << "no null vector of A^T - lambda I at tol " << tol << " (smallest relative singular value "
        << sv(2) << ")";
    throw NotAnEigenvalue(msg.str());
  }
  return basis;
}

StratumReport classify_stratum_unchecked(const TracelessMatrix& a, double tol) {
  return decide(a, tol).report;
}

StratumReport classify_stratum(const TracelessMatrix& a, double tol) {
  Decisions d = decide(a, tol);
  if (d.margin >= kDegenerateFactor * tol) return std::move(d.report);

  // Re-deciding just above the binding statistic flips that decision.
  StratumReport alternative = d.report;
  try {
    alternative = decide(a, d.margin * 1.5).report;
  } catch (const InvariantError&) {
  }
  std::ostringstream msg;
  msg << "classification margin " << d.margin << " below " << kDegenerateFactor << " * tol; strata "
      << stratum_number(d.report.stratum) << " and " << stratum_number(alternative.stratum)
      << " are both plausible";
  throw Degenerate(msg.str(), std::move(d.report), std::move(alternative));
}

bool is_reducible(const TracelessMatrix& a, double tol) {
  return classify_stratum_unchecked(a, tol).reducible;
}

}  // namespace flagsbs
