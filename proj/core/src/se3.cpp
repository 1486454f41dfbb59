#include "vecpose/se3.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace vecpose {

namespace {

// Rank guard for the 3x3 coupling solves.
Eigen::Vector3d solve_coupling(const Eigen::Matrix3d& D, const Eigen::Vector3d& r) {
  Eigen::FullPivLU<Eigen::Matrix3d> lu(D);
  lu.setThreshold(1e-12);
  if (!lu.isInvertible())
    throw SingularityError("coupling matrix is singular at the recovered angle");
  return lu.solve(r);
}

}  // namespace

std::string CouplingChoice::name() const {
  switch (kind) {
    case Kind::Screw:
      return "screw";
    case Kind::CayleyFactorable:
      return "cayley";
    case Kind::Explicit: {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "explicit:%.17g,%.17g", a, c);
      return buf;
    }
  }
  return "?";
}

CouplingChoice CouplingChoice::parse(std::string_view name) {
  if (name == "screw") return screw();
  if (name == "cayley") return cayley_factorable();
  if (name.substr(0, 9) == "explicit:") {
    const std::string body(name.substr(9));
    double a = 0.0, c = 0.0;
    char extra = 0;
    if (std::sscanf(body.c_str(), "%lf,%lf%c", &a, &c, &extra) != 2)
      throw ConstraintError("explicit coupling expects explicit:<a>,<c>");
    return explicit_ac(a, c);
  }
  throw ConstraintError("unknown coupling: " + std::string(name));
}

PoseCoefficients pose_coefficients(const GeneratingFunction& gen, const CouplingChoice& coupling,
                                   double varphi) {
  if (!(std::abs(varphi) < gen.validity_half_width()))
    throw DomainError("pose_coefficients: angle outside the validity range of " + gen.name());
  PoseCoefficients k;
  k.b = 0.5 * detail::nu_sq(gen, varphi);
  switch (coupling.kind) {
    case CouplingChoice::Kind::Screw:
      k.a = detail::mu(gen, varphi);
      k.c = detail::screw_c(gen, varphi);
      break;
    case CouplingChoice::Kind::CayleyFactorable: {
      const double phi = gen.eval_phi(varphi);
      k.c = 0.25 * detail::nu_sq(gen, varphi) * detail::eps_checked(gen, varphi);
      k.a = detail::coef_q(gen, varphi) + phi * phi * k.c;
      break;
    }
    case CouplingChoice::Kind::Explicit: {
      const double phi = gen.eval_phi(varphi);
      const double q = detail::coef_q(gen, varphi);
      if (std::abs(coupling.a - phi * phi * coupling.c - q) > 1e-9)
        throw ConstraintError("explicit coupling violates a - phi^2 c = nu^2/eps at varphi = " +
                              std::to_string(varphi));
      k.a = coupling.a;
      k.c = coupling.c;
      break;
    }
  }
  return k;
}

Eigen::Matrix3d coupling_matrix(const Eigen::Vector3d& phi, const GeneratingFunction& gen,
                                const CouplingChoice& coupling) {
  const double varphi = gen.eval_phi_inverse(phi.norm());
  const PoseCoefficients k = pose_coefficients(gen, coupling, varphi);
  const Eigen::Matrix3d P = hat3(phi);
  return k.a * Eigen::Matrix3d::Identity() + k.b * P + k.c * P * P;
}

Eigen::Matrix4d pose_from_vec(const PoseVector6& xi) {
  Eigen::Matrix4d T = Eigen::Matrix4d::Identity();
  T.topLeftCorner<3, 3>() = rot_from_vec({xi.phi, xi.gen});
  T.topRightCorner<3, 1>() = coupling_matrix(xi.phi, xi.gen, xi.coupling) * xi.rho;
  return T;
}

Matrix6d adjoint_of(const Eigen::Matrix4d& T) {
  Matrix6d ad = Matrix6d::Zero();
  const Eigen::Matrix3d C = T.topLeftCorner<3, 3>();
  ad.topLeftCorner<3, 3>() = C;
  ad.bottomRightCorner<3, 3>() = C;
  ad.topRightCorner<3, 3>() = hat3(T.topRightCorner<3, 1>()) * C;
  return ad;
}

Eigen::Matrix4d pose_inverse(const Eigen::Matrix4d& T) {
  Eigen::Matrix4d inv = Eigen::Matrix4d::Identity();
  const Eigen::Matrix3d Ct = T.topLeftCorner<3, 3>().transpose();
  inv.topLeftCorner<3, 3>() = Ct;
  inv.topRightCorner<3, 1>() = -Ct * T.topRightCorner<3, 1>();
  return inv;
}

AdjointCoefficients adjoint_series_coefficients(const GeneratingFunction& gen,
                                                const CouplingChoice& coupling, double varphi) {
  const PoseCoefficients k = pose_coefficients(gen, coupling, varphi);
  const double phi = gen.eval_phi(varphi);
  const double phi2 = phi * phi;
  AdjointCoefficients ad;
  ad.f = 0.5 * (k.a * k.b - k.c);
  ad.g = 0.5 * (k.b * k.b - k.c * (k.a - phi2 * k.c));
  ad.d = k.a + phi2 * (ad.f - k.c);
  ad.e = phi2 * ad.g + k.b;
  return ad;
}

namespace {

Matrix6d adjoint_series(const Vector6d& xi, const AdjointCoefficients& ad) {
  const Matrix6d X = curlyhat6(xi);
  const Matrix6d X2 = X * X;
  return Matrix6d::Identity() + ad.d * X + ad.e * X2 + ad.f * X2 * X + ad.g * X2 * X2;
}

}  // namespace

Matrix6d adjoint_from_vec(const PoseVector6& xi) {
  const double varphi = xi.gen.eval_phi_inverse(xi.phi.norm());
  return adjoint_series(xi.vec(), adjoint_series_coefficients(xi.gen, xi.coupling, varphi));
}

Eigen::Matrix4d pose_cayley_higher(const Vector6d& xi, int m) {
  if (m < 1) throw ConstraintError("pose_cayley_higher: order must be positive");
  const Eigen::Matrix4d X = hat6(xi) / (2.0 * m);
  const Eigen::Matrix4d A = Eigen::Matrix4d::Identity() - X;
  const Eigen::Matrix4d B = Eigen::Matrix4d::Identity() + X;
  Eigen::Matrix4d num = Eigen::Matrix4d::Identity();
  Eigen::Matrix4d den = Eigen::Matrix4d::Identity();
  for (int i = 0; i < m; ++i) {
    num = num * B;
    den = den * A;
  }
  return den.partialPivLu().solve(num);
}

Matrix6d adjoint_cayley_higher(const Vector6d& xi, int m) {
  if (m < 1) throw ConstraintError("adjoint_cayley_higher: order must be positive");
  const Matrix6d X = curlyhat6(xi) / (2.0 * m);
  const Matrix6d A = Matrix6d::Identity() - X;
  const Matrix6d B = Matrix6d::Identity() + X;
  Matrix6d num = Matrix6d::Identity();
  Matrix6d den = Matrix6d::Identity();
  for (int i = 0; i < m; ++i) {
    num = num * B;
    den = den * A;
  }
  return den.partialPivLu().solve(num);
}

AdjointCoefficients adjoint_factor_coefficients(const GeneratingFunction& gen, double varphi) {
  if (!(std::abs(varphi) < gen.validity_half_width()))
    throw DomainError("adjoint_factor_coefficients: angle outside the validity range");
  const double eps = detail::eps_checked(gen, varphi);
  const double nu_sq = detail::nu_sq(gen, varphi);
  const double q = detail::coef_q(gen, varphi);
  const double phi = gen.eval_phi(varphi);
  const double phi2 = phi * phi;
  AdjointCoefficients ad;
  ad.f = nu_sq * eps / (4.0 + phi2 * eps * eps);
  ad.d = phi2 * ad.f + q;
  ad.e = 0.5 * eps * phi2 * ad.f + 0.5 * nu_sq;
  ad.g = 0.5 * eps * ad.f;
  return ad;
}

namespace {

template <int N>
Eigen::Matrix<double, N, N> two_factor(const Eigen::Matrix<double, N, N>& X,
                                       const CayleyFactors& f, bool inverse) {
  using Mat = Eigen::Matrix<double, N, N>;
  const double sign = inverse ? -1.0 : 1.0;
  const Mat lhs = Mat::Identity() - sign * f.lambda * X;
  const Mat rhs = Mat::Identity() + sign * f.gamma * X;
  return lhs.partialPivLu().solve(rhs);
}

}  // namespace

Eigen::Matrix4d pose_factor(const Vector6d& xi, const GeneratingFunction& gen) {
  const double varphi = gen.eval_phi_inverse(xi.tail<3>().norm());
  return two_factor<4>(hat6(xi), cayley_factors(gen, varphi), false);
}

Eigen::Matrix4d pose_factor_inverse(const Vector6d& xi, const GeneratingFunction& gen) {
  const double varphi = gen.eval_phi_inverse(xi.tail<3>().norm());
  return two_factor<4>(hat6(xi), cayley_factors(gen, varphi), true);
}

Matrix6d adjoint_factor(const Vector6d& xi, const GeneratingFunction& gen) {
  const double varphi = gen.eval_phi_inverse(xi.tail<3>().norm());
  return two_factor<6>(curlyhat6(xi), cayley_factors(gen, varphi), false);
}

Matrix6d adjoint_factor_series(const Vector6d& xi, const GeneratingFunction& gen) {
  const double varphi = gen.eval_phi_inverse(xi.tail<3>().norm());
  return adjoint_series(xi, adjoint_factor_coefficients(gen, varphi));
}

PoseVector6 vec_from_pose(const Eigen::Matrix4d& T, const GeneratingFunction& gen,
                          const CouplingChoice& coupling) {
  if ((T.row(3) - Eigen::RowVector4d(0, 0, 0, 1)).norm() > 1e-9)
    throw DomainError("vec_from_pose: bottom row is not (0, 0, 0, 1)");
  PoseVector6 out;
  out.gen = gen;
  out.coupling = coupling;
  out.phi = vec_from_rot(T.topLeftCorner<3, 3>(), gen).v;
  const Eigen::Matrix3d D = coupling_matrix(out.phi, gen, coupling);
  out.rho = solve_coupling(D, T.topRightCorner<3, 1>());
  return out;
}

PoseVector6 compound_pose(const PoseVector6& xi1, const PoseVector6& xi2) {
  if (xi1.gen != xi2.gen || xi1.coupling != xi2.coupling)
    throw ConstraintError("compound_pose: operands use different parameterizations");
  const GeneratingFunction& gen = xi1.gen;

  const RotationVector3 phi = compound_rot({xi1.phi, gen}, {xi2.phi, gen});
  const Eigen::Matrix3d C2 = rot_from_vec({xi2.phi, gen});
  const Eigen::Matrix3d D1 = coupling_matrix(xi1.phi, gen, xi1.coupling);
  const Eigen::Matrix3d D2 = coupling_matrix(xi2.phi, gen, xi2.coupling);
  const Eigen::Vector3d r = C2 * D1 * xi1.rho + D2 * xi2.rho;

  PoseVector6 out;
  out.gen = gen;
  out.coupling = xi1.coupling;
  out.phi = phi.v;
  out.rho = solve_coupling(coupling_matrix(phi.v, gen, out.coupling), r);
  return out;
}

}  // namespace vecpose
