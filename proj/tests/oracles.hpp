// Test-only oracles, deliberately independent of the library's map
// implementations: a Taylor scaling-and-squaring matrix exponential, random
// samplers, finite differences, and a bisection inverse.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "vecpose/se3.hpp"

namespace oracles {

template <int N>
Eigen::Matrix<double, N, N> expm(const Eigen::Matrix<double, N, N>& a) {
  using Mat = Eigen::Matrix<double, N, N>;
  int squarings = 0;
  double norm = a.cwiseAbs().colwise().sum().maxCoeff();
  while (norm > 0.25) {
    norm /= 2.0;
    ++squarings;
  }
  const Mat b = a / std::ldexp(1.0, squarings);
  Mat term = Mat::Identity();
  Mat sum = Mat::Identity();
  for (int k = 1; k <= 40; ++k) {
    term = term * b / double(k);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-22) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

inline Eigen::Vector3d random_unit_vector(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::Vector3d v;
  do {
    for (int i = 0; i < 3; ++i) v[i] = normal(rng);
  } while (v.norm() < 1e-9);
  return v.normalized();
}

/// Rotation parameter vector with |varphi| < angle_cap for the given kernel.
inline Eigen::Vector3d random_rot_vector(std::mt19937_64& rng, const vecpose::GeneratingFunction& gen,
                                         double angle_cap) {
  std::uniform_real_distribution<double> u(0.0, angle_cap);
  return gen.eval_phi(u(rng)) * random_unit_vector(rng);
}

inline Eigen::Vector3d random_box(std::mt19937_64& rng, double half_width) {
  std::uniform_real_distribution<double> u(-half_width, half_width);
  return {u(rng), u(rng), u(rng)};
}

/// Central difference of a scalar function.
template <typename F>
double central_diff(F&& f, double x, double h = 1e-6) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// Bisection inverse of a strictly increasing function on [lo, hi].
template <typename F>
double bisect_increasing(F&& f, double target, double lo, double hi, int iters = 200) {
  for (int i = 0; i < iters; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace oracles
