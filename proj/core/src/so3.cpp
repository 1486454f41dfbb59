#include "vecpose/so3.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vecpose {

namespace {

constexpr double kPi = std::numbers::pi;

double angle_of(const RotationVector3& phi) {
  return phi.gen.eval_phi_inverse(phi.v.norm());
}

}  // namespace

Eigen::Matrix3d rot_from_vec(const RotationVector3& phi) {
  const double varphi = angle_of(phi);
  const double q = detail::coef_q(phi.gen, varphi);
  const double half_nu_sq = 0.5 * detail::nu_sq(phi.gen, varphi);
  const Eigen::Matrix3d P = hat3(phi.v);
  return Eigen::Matrix3d::Identity() + q * P + half_nu_sq * P * P;
}

Eigen::Matrix3d rot_jacobian(const RotationVector3& phi) {
  const double varphi = angle_of(phi);
  const double a = detail::mu(phi.gen, varphi);
  const double b = 0.5 * detail::nu_sq(phi.gen, varphi);
  const double c = detail::screw_c(phi.gen, varphi);
  const Eigen::Matrix3d P = hat3(phi.v);
  return a * Eigen::Matrix3d::Identity() + b * P + c * P * P;
}

Eigen::Matrix3d rot_jacobian_inv(const RotationVector3& phi) {
  const double varphi = angle_of(phi);
  const double inv_mu = 1.0 / detail::mu(phi.gen, varphi);
  const double c = detail::jacobian_inv_c(phi.gen, varphi);  // throws near 2k pi
  const Eigen::Matrix3d P = hat3(phi.v);
  return inv_mu * Eigen::Matrix3d::Identity() - 0.5 * P - c * P * P;
}

CayleyFactors cayley_factors(const GeneratingFunction& gen, double varphi) {
  if (!(std::abs(varphi) < gen.validity_half_width()))
    throw DomainError("cayley_factors: angle outside the validity range of " + gen.name());
  const double eps = detail::eps_checked(gen, varphi);
  const double nu_sq = detail::nu_sq(gen, varphi);
  const double q = detail::coef_q(gen, varphi);
  const double phi = gen.eval_phi(varphi);
  CayleyFactors f;
  f.gamma = 0.5 * eps;
  f.lambda = q - 0.5 * eps * (1.0 - 0.5 * phi * phi * nu_sq);
  return f;
}

Eigen::Matrix3d rot_factor(const RotationVector3& phi) {
  const double varphi = angle_of(phi);
  const CayleyFactors f = cayley_factors(phi.gen, varphi);
  const Eigen::Matrix3d P = hat3(phi.v);
  const Eigen::Matrix3d lhs = Eigen::Matrix3d::Identity() - f.lambda * P;
  const Eigen::Matrix3d rhs = Eigen::Matrix3d::Identity() + f.gamma * P;
  return lhs.partialPivLu().solve(rhs);
}

Eigen::Matrix3d rot_cayley_higher(const Eigen::Vector3d& phi_vec, int m) {
  if (m < 1) throw ConstraintError("rot_cayley_higher: order must be positive");
  const Eigen::Matrix3d P = hat3(phi_vec) / (2.0 * m);
  const Eigen::Matrix3d A = Eigen::Matrix3d::Identity() - P;
  const Eigen::Matrix3d B = Eigen::Matrix3d::Identity() + P;
  Eigen::Matrix3d num = Eigen::Matrix3d::Identity();
  Eigen::Matrix3d den = Eigen::Matrix3d::Identity();
  for (int i = 0; i < m; ++i) {
    num = num * B;
    den = den * A;
  }
  // det(1 - v^/2m) = 1 + |v/2m|^2, always invertible for a skew argument.
  return den.partialPivLu().solve(num);
}

RotationVector3 vec_from_rot(const Eigen::Matrix3d& C, const GeneratingFunction& gen) {
  if ((C * C.transpose() - Eigen::Matrix3d::Identity()).norm() > 1e-6 ||
      std::abs(C.determinant() - 1.0) > 1e-6)
    throw DomainError("vec_from_rot: input is not a rotation matrix");

  const Eigen::Vector3d w = vee3(C - C.transpose());  // = 2 sin(varphi) * axis
  const double s = 0.5 * w.norm();                    // = sin(varphi) on [0, pi]
  const double ct = std::clamp(0.5 * (C.trace() - 1.0), -1.0, 1.0);
  // atan2 keeps full precision at both ends, where acos of the trace does not.
  const double varphi = std::atan2(std::min(s, 1.0), ct);
  if (!(varphi < gen.validity_half_width()))
    throw DomainError("vec_from_rot: rotation angle outside the validity range of " + gen.name());

  RotationVector3 out;
  out.gen = gen;

  if (varphi < 1e-6) {
    // phi(varphi)/(2 sin varphi) -> 1/2; cubic corrections are below 1e-18 here.
    out.v = 0.5 * w;
    return out;
  }
  if (s > 1e-6) {
    out.v = (gen.eval_phi(varphi) / (2.0 * s)) * w;
    return out;
  }

  // Near a half turn: the symmetric part is a a^T up to O((pi - varphi)^2).
  const Eigen::Matrix3d S = 0.25 * (C + C.transpose()) + 0.5 * Eigen::Matrix3d::Identity();
  int i = 0;
  S.diagonal().maxCoeff(&i);
  Eigen::Vector3d axis;
  const double ai = std::sqrt(std::max(S(i, i), 0.0));
  for (int j = 0; j < 3; ++j) axis[j] = (j == i) ? ai : S(j, i) / ai;
  axis.normalize();
  // The antisymmetric part still carries the sign while sin(varphi) is
  // resolvable; otherwise fall back to the first-nonzero-positive convention.
  if (w.norm() > 1e-8) {
    if (w.dot(axis) < 0.0) axis = -axis;
  } else {
    for (int j = 0; j < 3; ++j) {
      if (std::abs(axis[j]) > 1e-12) {
        if (axis[j] < 0.0) axis = -axis;
        break;
      }
    }
  }
  out.v = gen.eval_phi(varphi) * axis;
  return out;
}

RotationVector3 compound_rot(const RotationVector3& phi1, const RotationVector3& phi2) {
  if (phi1.gen != phi2.gen)
    throw ConstraintError("compound_rot: operands use different generating functions");
  const GeneratingFunction& gen = phi1.gen;
  const double vp1 = angle_of(phi1);
  const double vp2 = angle_of(phi2);
  const double nu1 = detail::nu(gen, vp1);
  const double nu2 = detail::nu(gen, vp2);
  const double ie1 = detail::inv_eps(gen, vp1);
  const double ie2 = detail::inv_eps(gen, vp2);

  // cos(varphi/2) of the compound rotation; clamp to absorb rounding drift.
  const double arg = nu1 * nu2 * (ie1 * ie2 - 0.25 * phi1.v.dot(phi2.v));
  const double varphi = 2.0 * std::acos(std::clamp(arg, -1.0, 1.0));
  if (!(varphi < gen.validity_half_width()))
    throw DomainError("compound_rot: compound angle outside the validity range of " + gen.name());
  const double nuc = detail::nu(gen, varphi);
  if (std::abs(nuc) < 1e-12)
    throw SingularityError("compound_rot: compounding formula singular at a full turn");

  RotationVector3 out;
  out.gen = gen;
  out.v = (nu1 * nu2 / nuc) *
          (ie2 * phi1.v + ie1 * phi2.v - 0.5 * hat3(phi1.v) * phi2.v);
  return out;
}

}  // namespace vecpose
