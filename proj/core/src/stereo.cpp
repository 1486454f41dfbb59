#include "vecpose/stereo.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace vecpose {

Eigen::Matrix4d StereoRig::parameter_matrix() const {
  Eigen::Matrix4d m;
  m << f, 0.0, cu, f * b / 2.0,
       0.0, f, cv, 0.0,
       f, 0.0, cu, -f * b / 2.0,
       0.0, f, cv, 0.0;
  return m;
}

Eigen::Vector4d stereo_project(const StereoRig& rig, const Eigen::Vector3d& point) {
  if (!(point.z() > 0.0)) throw DomainError("stereo_project: point is not in front of the camera");
  const Eigen::Vector4d h(point.x(), point.y(), point.z(), 1.0);
  return rig.parameter_matrix() * (h / point.z());
}

Eigen::Vector4d stereo_project_noisy(const StereoRig& rig, const Eigen::Vector3d& point,
                                     std::mt19937_64& rng) {
  Eigen::Vector4d y = stereo_project(rig, point);
  Eigen::LLT<Eigen::Matrix4d> llt(rig.noise_cov);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("stereo_project_noisy: noise covariance is not positive definite");
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::Vector4d z;
  for (int i = 0; i < 4; ++i) z[i] = normal(rng);
  return y + llt.matrixL() * z;
}

Eigen::Vector4d stereo_backproject(const StereoRig& rig, const Eigen::Vector4d& y) {
  const double disparity = y[0] - y[2];
  if (!(disparity > 0.0)) throw DomainError("stereo_backproject: non-positive disparity");
  const double z = rig.f * rig.b / disparity;
  const double x = z * (0.5 * (y[0] + y[2]) - rig.cu) / rig.f;
  const double yy = z * (0.5 * (y[1] + y[3]) - rig.cv) / rig.f;
  return {x, yy, z, 1.0};
}

Eigen::Matrix<double, 3, 4> stereo_backproject_jacobian(const StereoRig& rig,
                                                        const Eigen::Vector4d& y) {
  const double disparity = y[0] - y[2];
  if (!(disparity > 0.0)) throw DomainError("stereo_backproject_jacobian: non-positive disparity");
  const double z = rig.f * rig.b / disparity;
  const double x = z * (0.5 * (y[0] + y[2]) - rig.cu) / rig.f;
  const double yy = z * (0.5 * (y[1] + y[3]) - rig.cv) / rig.f;
  Eigen::Matrix<double, 3, 4> jac;
  jac << -x / disparity + z / (2.0 * rig.f), 0.0, x / disparity + z / (2.0 * rig.f), 0.0,
         -yy / disparity, z / (2.0 * rig.f), yy / disparity, z / (2.0 * rig.f),
         -z / disparity, 0.0, z / disparity, 0.0;
  return jac;
}

Eigen::Matrix4d stereo_weight(const StereoRig& rig, const Eigen::Vector4d& y_p,
                              const Eigen::Vector4d& y_q) {
  const auto g_p = stereo_backproject_jacobian(rig, y_p);
  const auto g_q = stereo_backproject_jacobian(rig, y_q);
  const Eigen::Matrix3d cov =
      g_p * rig.noise_cov * g_p.transpose() + g_q * rig.noise_cov * g_q.transpose();
  Eigen::LDLT<Eigen::Matrix3d> ldlt(cov);
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive())
    throw std::runtime_error("stereo_weight: propagated covariance is singular");
  Eigen::Matrix4d w = Eigen::Matrix4d::Zero();
  w.topLeftCorner<3, 3>() = ldlt.solve(Eigen::Matrix3d::Identity());
  return w;
}

}  // namespace vecpose
