#pragma once

#include <Eigen/Core>
#include <cmath>

namespace vecpose {

/// Dense matrix exponential by scaling-and-squaring with a Taylor kernel.
/// Accurate to roughly machine precision for the small fixed sizes used here.
template <typename Scalar, int N>
Eigen::Matrix<Scalar, N, N> matrix_exp(const Eigen::Matrix<Scalar, N, N>& a) {
  using Mat = Eigen::Matrix<Scalar, N, N>;
  int squarings = 0;
  Scalar norm = a.template lpNorm<1>();
  while (norm > Scalar(0.25)) {
    norm /= Scalar(2);
    ++squarings;
  }
  const Mat b = a / std::ldexp(1.0, squarings);
  Mat term = Mat::Identity();
  Mat sum = Mat::Identity();
  for (int k = 1; k <= 30; ++k) {
    term = term * b / Scalar(k);
    sum += term;
    if (term.template lpNorm<1>() < Scalar(1e-20)) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

}  // namespace vecpose
