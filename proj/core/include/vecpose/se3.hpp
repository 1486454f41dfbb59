#pragma once

#include <Eigen/Core>
#include <string>
#include <string_view>

#include "vecpose/so3.hpp"

namespace vecpose {

using Vector6d = Eigen::Matrix<double, 6, 1>;
using Matrix6d = Eigen::Matrix<double, 6, 6>;

/// 4x4 lift of a pose vector xi = (rho, phi).
inline Eigen::Matrix4d hat6(const Vector6d& xi) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m.topLeftCorner<3, 3>() = hat3(xi.tail<3>());
  m.topRightCorner<3, 1>() = xi.head<3>();
  return m;
}

/// 6x6 lift of a pose vector: [[phi^, rho^], [0, phi^]].
inline Matrix6d curlyhat6(const Vector6d& xi) {
  Matrix6d m = Matrix6d::Zero();
  const Eigen::Matrix3d P = hat3(xi.tail<3>());
  m.topLeftCorner<3, 3>() = P;
  m.topRightCorner<3, 3>() = hat3(xi.head<3>());
  m.bottomRightCorner<3, 3>() = P;
  return m;
}

/// Selects the free parameter of the pose mapping, i.e. the coupling matrix
/// D(phi) relating the translational parameters to the Euclidean translation.
struct CouplingChoice {
  enum class Kind {
    Screw,             // a = mu: constant screw axis, D = J, commutative adjoint
    CayleyFactorable,  // c = nu^2 eps / 4: admits the two-factor form
    Explicit,          // caller-supplied a and c, validated at evaluation time
  };

  Kind kind = Kind::Screw;
  double a = 0.0;  // Explicit only
  double c = 0.0;  // Explicit only

  static CouplingChoice screw() { return {}; }
  static CouplingChoice cayley_factorable() { return {Kind::CayleyFactorable, 0.0, 0.0}; }
  static CouplingChoice explicit_ac(double a, double c) { return {Kind::Explicit, a, c}; }

  std::string name() const;
  static CouplingChoice parse(std::string_view name);

  friend bool operator==(const CouplingChoice& x, const CouplingChoice& y) {
    return x.kind == y.kind && (x.kind != Kind::Explicit || (x.a == y.a && x.c == y.c));
  }
  friend bool operator!=(const CouplingChoice& x, const CouplingChoice& y) { return !(x == y); }
};

/// Pose parameter vector xi = (rho, phi) tagged with kernel and coupling.
struct PoseVector6 {
  Eigen::Vector3d rho = Eigen::Vector3d::Zero();
  Eigen::Vector3d phi = Eigen::Vector3d::Zero();
  GeneratingFunction gen = GeneratingFunction::rotation_vector();
  CouplingChoice coupling = CouplingChoice::screw();

  Vector6d vec() const {
    Vector6d xi;
    xi << rho, phi;
    return xi;
  }
  static PoseVector6 from_vec(const Vector6d& xi, const GeneratingFunction& gen,
                              const CouplingChoice& coupling) {
    return {xi.head<3>(), xi.tail<3>(), gen, coupling};
  }
};

/// Scalar coefficients of T = 1 + a xi^ + b xi^^2 + c xi^^3.
struct PoseCoefficients {
  double a = 1.0;
  double b = 0.5;
  double c = 0.0;
};

/// Scalar coefficients of the 6x6 series in xi-curlyhat (up to quartic).
struct AdjointCoefficients {
  double d = 1.0;
  double e = 0.5;
  double f = 0.0;
  double g = 0.0;
};

/// a, b, c at the given angle for the given coupling.  Explicit couplings are
/// checked against a - phi^2 c = nu^2/eps (ConstraintError on violation).
PoseCoefficients pose_coefficients(const GeneratingFunction& gen, const CouplingChoice& coupling,
                                   double varphi);

/// Coupling matrix D = a 1 + b phi^ + c phi^^2.  Equals rot_jacobian for the
/// screw coupling.
Eigen::Matrix3d coupling_matrix(const Eigen::Vector3d& phi, const GeneratingFunction& gen,
                                const CouplingChoice& coupling);

/// Series map from a pose vector to a 4x4 transformation matrix.
Eigen::Matrix4d pose_from_vec(const PoseVector6& xi);

/// 6x6 adjoint of a 4x4 transformation matrix.
Matrix6d adjoint_of(const Eigen::Matrix4d& T);

/// Rigid inverse [[C^T, -C^T r], [0, 1]].
Eigen::Matrix4d pose_inverse(const Eigen::Matrix4d& T);

/// d, e, f, g for the 6x6 series map, derived from the coupling's a, b, c.
AdjointCoefficients adjoint_series_coefficients(const GeneratingFunction& gen,
                                                const CouplingChoice& coupling, double varphi);

/// Series map from a pose vector to the 6x6 adjoint.  For the screw coupling
/// this equals adjoint_of(pose_from_vec(xi)).
Matrix6d adjoint_from_vec(const PoseVector6& xi);

/// (1 - xi^/2m)^-m (1 + xi^/2m)^m on the 4x4 lift.
Eigen::Matrix4d pose_cayley_higher(const Vector6d& xi, int m);

/// (1 - xi-curlyhat/2m)^-m (1 + xi-curlyhat/2m)^m on the 6x6 lift.  For m = 1
/// this equals the cgr/screw adjoint series.
Matrix6d adjoint_cayley_higher(const Vector6d& xi, int m);

/// d, e, f, g that make the 6x6 series factor as
/// (1 - lambda xi-curlyhat)^-1 (1 + gamma xi-curlyhat).
AdjointCoefficients adjoint_factor_coefficients(const GeneratingFunction& gen, double varphi);

/// Two-factor pose map (1 - lambda xi^)^-1 (1 + gamma xi^); equals the series
/// map under the Cayley-factorable coupling.
Eigen::Matrix4d pose_factor(const Vector6d& xi, const GeneratingFunction& gen);

/// Inverse pose by flipping the signs in the factorization.
Eigen::Matrix4d pose_factor_inverse(const Vector6d& xi, const GeneratingFunction& gen);

/// Two-factor adjoint map on the 6x6 lift.
Matrix6d adjoint_factor(const Vector6d& xi, const GeneratingFunction& gen);

/// Series map built from the factorable d, e, f, g (for cross-checks).
Matrix6d adjoint_factor_series(const Vector6d& xi, const GeneratingFunction& gen);

/// Inverse map: phi via vec_from_rot, then rho = D(phi)^-1 r.  Throws
/// SingularityError when D is singular at the recovered angle.
PoseVector6 vec_from_pose(const Eigen::Matrix4d& T, const GeneratingFunction& gen,
                          const CouplingChoice& coupling);

/// Vector-level compounding equivalent to T(xi2) * T(xi1).
PoseVector6 compound_pose(const PoseVector6& xi1, const PoseVector6& xi2);

}  // namespace vecpose
