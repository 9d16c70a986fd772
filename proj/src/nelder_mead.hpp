#pragma once

#include <algorithm>
#include <array>
#include <numeric>

#include <Eigen/Core>

namespace flagsbs::detail {

template <int N>
struct SimplexResult {
  Eigen::Matrix<double, N, 1> x;
  double value;
  int iterations;
};

/// Standard Nelder-Mead (reflection 1, expansion 2, contraction 1/2, shrink 1/2).
/// Stops when the value spread and the simplex diameter are both small.
template <int N, typename F>
SimplexResult<N> nelder_mead(F&& f, const Eigen::Matrix<double, N, 1>& start, double step,
                             int max_iterations = 4000, double ftol = 1e-15,
                             double xtol = 1e-10) {
  using Vec = Eigen::Matrix<double, N, 1>;
  std::array<Vec, N + 1> pts;
  std::array<double, N + 1> vals;
  pts[0] = start;
  for (int i = 0; i < N; ++i) {
    pts[i + 1] = start;
    pts[i + 1](i) += step;
  }
  for (int i = 0; i <= N; ++i) vals[i] = f(pts[i]);

  std::array<int, N + 1> order;
  int it = 0;
  for (; it < max_iterations; ++it) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return vals[a] < vals[b]; });
    const int best = order[0], worst = order[N], second = order[N - 1];
    double diameter = 0;
    for (int i = 1; i <= N; ++i) diameter = std::max(diameter, (pts[order[i]] - pts[best]).norm());
    // Both conditions: equal values alone can come from a flat direction.
    if (vals[worst] - vals[best] <= ftol * (1.0 + std::abs(vals[best])) && diameter <= xtol) break;

    Vec centroid = Vec::Zero();
    for (int i = 0; i < N; ++i) centroid += pts[order[i]];
    centroid /= N;

    const Vec reflected = centroid + (centroid - pts[worst]);
    const double fr = f(reflected);
    if (fr < vals[best]) {
      const Vec expanded = centroid + 2.0 * (centroid - pts[worst]);
      const double fe = f(expanded);
      if (fe < fr) {
        pts[worst] = expanded, vals[worst] = fe;
      } else {
        pts[worst] = reflected, vals[worst] = fr;
      }
      continue;
    }
    if (fr < vals[second]) {
      pts[worst] = reflected, vals[worst] = fr;
      continue;
    }
    const bool outside = fr < vals[worst];
    const Vec contracted = outside ? Vec(centroid + 0.5 * (reflected - centroid))
                                   : Vec(centroid + 0.5 * (pts[worst] - centroid));
    const double fc = f(contracted);
    if (fc < (outside ? fr : vals[worst])) {
      pts[worst] = contracted, vals[worst] = fc;
      continue;
    }
    for (int i = 0; i <= N; ++i) {
      if (i == best) continue;
      pts[i] = pts[best] + 0.5 * (pts[i] - pts[best]);
      vals[i] = f(pts[i]);
    }
  }
  const auto best = std::min_element(vals.begin(), vals.end()) - vals.begin();
  return {pts[best], vals[best], it};
}

}  // namespace flagsbs::detail
