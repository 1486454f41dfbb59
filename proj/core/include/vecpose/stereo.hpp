#pragma once

#include <random>

#include "vecpose/alignment.hpp"

namespace vecpose {

/// Rectified stereo rig.  Image coordinates stack as (u_l, v_l, u_r, v_r).
struct StereoRig {
  double f = 200.0;   // focal length [px]
  double b = 0.25;    // baseline [m]
  double cu = 0.0;    // principal point u [px]
  double cv = 0.0;    // principal point v [px]
  Eigen::Matrix4d noise_cov = 0.25 * 0.25 * Eigen::Matrix4d::Identity();  // [px^2]

  /// Combined parameter matrix: y = M (1/z) (x, y, z, 1)^T.
  Eigen::Matrix4d parameter_matrix() const;
};

/// Noise-free projection.  Throws DomainError for z <= 0.
Eigen::Vector4d stereo_project(const StereoRig& rig, const Eigen::Vector3d& point);

/// Projection plus one zero-mean Gaussian draw with the rig's covariance.
Eigen::Vector4d stereo_project_noisy(const StereoRig& rig, const Eigen::Vector3d& point,
                                     std::mt19937_64& rng);

/// Midpoint inverse model: depth from disparity, elevation from the averaged
/// v coordinates.  Throws DomainError for non-positive disparity.
Eigen::Vector4d stereo_backproject(const StereoRig& rig, const Eigen::Vector4d& y);

/// Jacobian of the backprojected Euclidean point with respect to y.
Eigen::Matrix<double, 3, 4> stereo_backproject_jacobian(const StereoRig& rig,
                                                        const Eigen::Vector4d& y);

/// Residual weight for one pair from first-order propagation of the image
/// noise through both backprojections.  The 3x3 block is the inverse of the
/// summed covariance; the homogeneous row and column are zero.
Eigen::Matrix4d stereo_weight(const StereoRig& rig, const Eigen::Vector4d& y_p,
                              const Eigen::Vector4d& y_q);

}  // namespace vecpose
