#include "flagsbs/flag_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "flagsbs/random.hpp"
#include "nelder_mead.hpp"

namespace flagsbs {

namespace {

Vec3c bilinear_cross(const Vec3c& u, const Vec3c& v) {
  return Vec3c(u(1) * v(2) - u(2) * v(1), u(2) * v(0) - u(0) * v(2), u(0) * v(1) - u(1) * v(0));
}

// Affine chart coordinates at X (dividing by X_c) and their differential along dX.
struct ChartJet {
  Vec2c z;
  Vec2c dz;
};

ChartJet chart_jet(const Vec3c& X, const Vec3c& dX, int c) {
  ChartJet jet;
  int k = 0;
  for (int i = 0; i < 3; ++i) {
    if (i == c) continue;
    jet.z(k) = X(i) / X(c);
    jet.dz(k) = (dX(i) * X(c) - X(i) * dX(c)) / (X(c) * X(c));
    ++k;
  }
  return jet;
}

Vec3c lift_tangent(const GZSphere& s, const Vec2c& xi) {
  Vec3c d = Vec3c::Zero();
  const auto slots = s.free_slots();
  d(slots[0]) = xi(0);
  d(slots[1]) = xi(1);
  return d;
}

Vec3c sign_conjugate(const GZSphere& s, const Vec3c& v) {
  Vec3c out;
  for (int i = 0; i < 3; ++i) out(i) = s.signs()[i] * std::conj(v(i));
  return out;
}

}  // namespace

GZSphere::GZSphere(int index) : index_(index), signs_{1.0, 1.0, 1.0} {
  if (index < 0 || index > 2) throw std::out_of_range("sphere index must be 0, 1 or 2");
  signs_[index] = -1.0;
}

std::array<int, 2> GZSphere::free_slots() const {
  switch (index_) {
    case 0: return {1, 2};
    case 1: return {0, 2};
    default: return {0, 1};
  }
}

double incidence_residual(const FlagPoint& p) {
  return std::abs(p.x.coords().cwiseProduct(p.y.coords()).sum());
}

double divisor_residual(const TracelessMatrix& a, const FlagPoint& p) {
  const Complex value = p.x.coords().cwiseProduct(a.matrix() * p.y.coords()).sum();
  return std::abs(value) / a.norm();
}

double fiber_margin(const TracelessMatrix& a, const ProjectivePoint& x) {
  const Vec3c& v = x.coords();
  return bilinear_cross(v, a.matrix().transpose() * v).norm() / a.norm();
}

FlagPoint fiber_solve(const TracelessMatrix& a, const ProjectivePoint& x, double tol) {
  const Vec3c& v = x.coords();
  const Vec3c y = bilinear_cross(v, a.matrix().transpose() * v);
  const double margin = y.norm() / a.norm();
  if (margin <= tol) {
    std::ostringstream msg;
    msg << "x is an eigen-point of A^T (|x cross A^T x| / |A| = " << margin << ")";
    throw EigenPoint(msg.str());
  }
  return FlagPoint{x, ProjectivePoint(y)};
}

Vec3c gz_lift(const GZSphere& s, const Vec2c& u) {
  Vec3c x = lift_tangent(s, u);
  x(s.index()) = 1.0;
  return x;
}

FlagPoint gz_embed(const GZSphere& s, const Vec2c& u) {
  const Vec3c x = gz_lift(s, u);
  return FlagPoint{ProjectivePoint(x), ProjectivePoint(sign_conjugate(s, x))};
}

double fubini_study_chart(const Vec2c& z, const Vec2c& xi, const Vec2c& eta) {
  // <a, b> = sum a_i conj(b_i) = b.dot(a) in Eigen's convention.
  const double rho = 1.0 + z.squaredNorm();
  const Complex numerator = rho * xi.dot(eta) - z.dot(eta) * xi.dot(z);
  return (numerator / (rho * rho)).imag();
}

double gz_pullback(const GZSphere& s, const Vec2c& u, const Vec2c& xi, const Vec2c& eta) {
  const Vec3c X = gz_lift(s, u);
  const Vec3c dXi = lift_tangent(s, xi);
  const Vec3c dEta = lift_tangent(s, eta);
  const Vec3c Y = sign_conjugate(s, X);
  const int c = s.index();

  const ChartJet x_xi = chart_jet(X, dXi, c), x_eta = chart_jet(X, dEta, c);
  const ChartJet y_xi = chart_jet(Y, sign_conjugate(s, dXi), c);
  const ChartJet y_eta = chart_jet(Y, sign_conjugate(s, dEta), c);
  return fubini_study_chart(x_xi.z, x_xi.dz, x_eta.dz) +
         fubini_study_chart(y_xi.z, y_xi.dz, y_eta.dz);
}

std::array<Vec2c, 3> s3_frame(const Vec2c& u) {
  const Complex i(0, 1);
  return {Vec2c(i * u(0), i * u(1)), Vec2c(-std::conj(u(1)), std::conj(u(0))),
          Vec2c(-i * std::conj(u(1)), i * std::conj(u(0)))};
}

double lagrangian_residual(const GZSphere& s, int sample_count, std::uint64_t seed) {
  if (sample_count < 1) throw std::invalid_argument("sample_count must be at least 1");
  CounterRng rng(seed, 0x1a9);
  double worst = 0;
  for (int n = 0; n < sample_count; ++n) {
    const Vec2c u = random_unit_c2(rng);
    const auto frame = s3_frame(u);
    for (int p = 0; p < 3; ++p)
      for (int q = p + 1; q < 3; ++q)
        worst = std::max(worst, std::abs(gz_pullback(s, u, frame[p], frame[q])));
  }
  return worst;
}

double holomorphic_pair_value(const GZSphere& s, int sample_count, std::uint64_t seed) {
  if (sample_count < 1) throw std::invalid_argument("sample_count must be at least 1");
  CounterRng rng(seed, 0x1a9);
  const Complex i(0, 1);
  double least = std::numeric_limits<double>::infinity();
  for (int n = 0; n < sample_count; ++n) {
    const Vec2c u = random_unit_c2(rng);
    const Vec3c X = gz_lift(s, u);
    for (const Vec2c& xi : s3_frame(u)) {
      const ChartJet a = chart_jet(X, lift_tangent(s, xi), s.index());
      const ChartJet b = chart_jet(X, lift_tangent(s, Vec2c(i * xi)), s.index());
      least = std::min(least, fubini_study_chart(a.z, a.dz, b.dz));
    }
  }
  return least;
}

Vec2c hopf_point(double t, double p, double q) {
  return Vec2c(std::cos(t) * std::polar(1.0, p), std::sin(t) * std::polar(1.0, q));
}

ClearanceResult clearance_search(const TracelessMatrix& a, const GZSphere& s, int grid) {
  if (grid < 8) throw std::invalid_argument("clearance grid must be at least 8");
  auto residual = [&](double t, double p, double q) {
    return divisor_residual(a, gz_embed(s, hopf_point(t, p, q)));
  };

  const double dt = 0.5 * std::numbers::pi / (grid - 1);
  const double dp = 2.0 * std::numbers::pi / grid;
  Eigen::Vector3d best(0, 0, 0);
  double best_value = std::numeric_limits<double>::infinity();
  for (int k = 0; k < grid; ++k)
    for (int j = 0; j < grid; ++j)
      for (int l = 0; l < grid; ++l) {
        const double v = residual(k * dt, j * dp, l * dp);
        if (v < best_value) best_value = v, best = Eigen::Vector3d(k * dt, j * dp, l * dp);
      }

  const auto refined = detail::nelder_mead<3>(
      [&](const Eigen::Vector3d& w) { return residual(w(0), w(1), w(2)); }, best, dt);

  ClearanceResult out;
  const Eigen::Vector3d& w = refined.value < best_value ? refined.x : best;
  out.minimum = std::min(refined.value, best_value);
  out.argmin = hopf_point(w(0), w(1), w(2));
  out.point = gz_embed(s, out.argmin);
  return out;
}

double clearance(const TracelessMatrix& a, const GZSphere& s, int grid, double tol) {
  const ClearanceResult r = clearance_search(a, s, grid);
  if (r.minimum > 0 && r.minimum < 10.0 * tol) {
    std::ostringstream msg;
    msg << "clearance minimum " << r.minimum << " for S" << s.index()
        << " neither certifies disjointness nor intersection";
    throw Inconclusive(msg.str(), r.minimum);
  }
  return r.minimum;
}

double f_eval(int i, const ProjectivePoint& x) {
  if (i < 0 || i > 2) throw std::out_of_range("F index must be 0, 1 or 2");
  const Vec3c& c = x.coords();
  return 1.0 - 2.0 * std::norm(c(i)) / c.squaredNorm();
}

HomologyClass homology_class(const GZSphere& s, const std::vector<ProjectivePoint>& centers,
                             double tol) {
  if (centers.size() != 3) throw std::invalid_argument("homology_class needs exactly three centers");

  std::vector<ProjectivePoint> ordered = centers;
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const ProjectivePoint& l, const ProjectivePoint& r) {
                     for (int i = 0; i < 3; ++i) {
                       const double dl = std::abs(l[i]), dr = std::abs(r[i]);
                       if (std::abs(dl - dr) > 1e-9) return dl > dr;
                     }
                     return false;
                   });

  int inside = -1;
  for (int k = 0; k < 3; ++k) {
    const double f = f_eval(s.index(), ordered[k]);
    if (std::abs(f) < tol) {
      std::ostringstream msg;
      msg << "center " << k << " lies on the projection of S" << s.index() << " (F = " << f << ")";
      throw AmbiguousSign(msg.str());
    }
    if (f < 0) {
      if (inside >= 0) throw AmbiguousSign("more than one center inside the sphere projection");
      inside = k;
    }
  }
  if (inside < 0) throw AmbiguousSign("no center inside the sphere projection");

  static constexpr std::array<HomologyClass, 3> kBasis{{{1, 0}, {0, 1}, {1, 1}}};
  return kBasis[inside];
}

}  // namespace flagsbs
