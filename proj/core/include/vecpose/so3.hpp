#pragma once

#include <Eigen/Core>

#include "vecpose/generating_function.hpp"

namespace vecpose {

/// Skew-symmetric (cross-product) matrix of a 3-vector.
inline Eigen::Matrix3d hat3(const Eigen::Vector3d& v) {
  Eigen::Matrix3d m;
  m << 0.0, -v.z(), v.y(), v.z(), 0.0, -v.x(), -v.y(), v.x(), 0.0;
  return m;
}

/// Inverse of hat3 on (the antisymmetric part of) a 3x3 matrix.
inline Eigen::Vector3d vee3(const Eigen::Matrix3d& m) {
  return {m(2, 1), m(0, 2), m(1, 0)};
}

/// Rotation parameter vector phi = phi(varphi) * axis, tagged with its kernel.
struct RotationVector3 {
  Eigen::Vector3d v = Eigen::Vector3d::Zero();
  GeneratingFunction gen = GeneratingFunction::rotation_vector();
};

/// Coefficients of the two-factor form (1 - lambda v^)^-1 (1 + gamma v^).
/// The factors may be applied in either order.
struct CayleyFactors {
  double gamma = 0.5;
  double lambda = 0.5;
};

/// Series map from a rotation parameter vector to a rotation matrix.
Eigen::Matrix3d rot_from_vec(const RotationVector3& phi);

/// Jacobian J such that omega = J * dphi/dt with omega^ = (dC/dt) C^T.
Eigen::Matrix3d rot_jacobian(const RotationVector3& phi);

/// Closed-form inverse of rot_jacobian.  Throws SingularityError near the
/// angles where the Jacobian loses rank (varphi -> 2k pi, k != 0).
Eigen::Matrix3d rot_jacobian_inv(const RotationVector3& phi);

/// gamma/lambda pair factoring the rotation map at the given angle.
CayleyFactors cayley_factors(const GeneratingFunction& gen, double varphi);

/// Evaluates the two-factor form (1 - lambda v^)^-1 (1 + gamma v^).
Eigen::Matrix3d rot_factor(const RotationVector3& phi);

/// (1 - v^/2m)^-m (1 + v^/2m)^m.  Matches the series map of the 2m tan(./2m)
/// kernel on the same vector.
Eigen::Matrix3d rot_cayley_higher(const Eigen::Vector3d& phi_vec, int m);

/// Inverse map: angle from the trace, axis from the antisymmetric part (or the
/// symmetric part near a half turn).  Returns varphi in [0, pi] with the sign
/// convention folded into the axis; throws DomainError when the recovered
/// angle is outside the kernel's validity range.
RotationVector3 vec_from_rot(const Eigen::Matrix3d& C, const GeneratingFunction& gen);

/// Vector-level compounding equivalent to C(phi2) * C(phi1).  Throws
/// DomainError if the compound angle leaves the validity range; no angle
/// wrapping is attempted.
RotationVector3 compound_rot(const RotationVector3& phi1, const RotationVector3& phi2);

}  // namespace vecpose
