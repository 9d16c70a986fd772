#include "flagsbs/moduli_space.hpp"

#include <algorithm>
#include <sstream>

namespace flagsbs {

double y_residual(const TracelessMatrix& a, Complex z) { return y_residual<double>(a.matrix(), z); }

double delta_residual(const TracelessMatrix& a, Complex z, double on_y_threshold) {
  const double on_y = y_residual(a, z);
  if (on_y > on_y_threshold) {
    std::ostringstream msg;
    msg << "(A, z) is not on Y: residual " << on_y;
    throw NotOnY(msg.str(), on_y);
  }
  const double scale = a.norm() + std::abs(z);
  return std::abs(char_cubic(a).derivative(z)) / (scale * scale);
}

std::vector<ModuliPoint> covering_fiber(const TracelessMatrix& a, double tol) {
  const EigenvalueSet roots = cubic_roots(char_cubic(a), tol, a.norm());
  std::vector<ModuliPoint> fiber;
  fiber.reserve(roots.items.size());
  for (const Eigenvalue& ev : roots.items) fiber.push_back({a, ev.lambda, ev.alg_mult});
  return fiber;
}

std::vector<ModuliPoint> moduli_points(const TracelessMatrix& a, double tol) {
  std::vector<ModuliPoint> fiber = covering_fiber(a, tol);
  std::erase_if(fiber, [](const ModuliPoint& p) { return p.multiplicity != 1; });
  return fiber;
}

bool same_moduli_point(const ModuliPoint& p, const ModuliPoint& q, double tol) {
  // Best joint scale t minimizing |q - t p| over the 9 homogeneous coordinates.
  const Mat3c& pa = p.matrix.matrix();
  const Mat3c& qa = q.matrix.matrix();
  const double denom = pa.squaredNorm() + std::norm(p.z);
  const Complex t = (qa.cwiseProduct(pa.conjugate()).sum() + q.z * std::conj(p.z)) / denom;
  const double err = std::sqrt((qa - t * pa).squaredNorm() + std::norm(q.z - t * p.z));
  return err <= tol * std::sqrt(qa.squaredNorm() + std::norm(q.z));
}

}  // namespace flagsbs
