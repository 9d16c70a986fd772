#include "flagsbs/random.hpp"

#include <cmath>
#include <numbers>

namespace flagsbs {

double CounterRng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

Complex CounterRng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) * std::numbers::sqrt2 * 0.5;
}

Vec2c random_unit_c2(CounterRng& rng) {
  Vec2c u;
  do {
    u(0) = rng.complex_normal();
    u(1) = rng.complex_normal();
  } while (u.norm() < 1e-6);
  return u / u.norm();
}

Mat3c random_ginibre(CounterRng& rng) {
  Mat3c m;
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) m(i, j) = rng.complex_normal();
  return m;
}

}  // namespace flagsbs
