#pragma once

#include <string>
#include <string_view>

#include "vecpose/errors.hpp"

namespace vecpose {

/// Scalar kernel phi(varphi) that warps the rotation angle into the length of
/// the parameter vector.  All kernels are odd, strictly increasing on their
/// validity range, and normalized so that phi(varphi)/varphi -> 1 at zero.
///
/// Three families cover the usual named parameterizations:
///   rotation vector            phi = varphi
///   2m tan(varphi/2m)          m=1 Cayley-Gibbs-Rodrigues, m=2 modified Rodrigues
///   2m sin(varphi/2m)          m=1 Euler-Rodrigues, m=2 Bauchau-Trainelli
class GeneratingFunction {
 public:
  enum class Kind { RotationVector, Tan, Sin };

  GeneratingFunction() = default;

  static GeneratingFunction rotation_vector() { return {Kind::RotationVector, 1}; }
  static GeneratingFunction cayley_gibbs_rodrigues() { return {Kind::Tan, 1}; }
  static GeneratingFunction modified_rodrigues() { return {Kind::Tan, 2}; }
  static GeneratingFunction euler_rodrigues() { return {Kind::Sin, 1}; }
  static GeneratingFunction bauchau_trainelli() { return {Kind::Sin, 2}; }
  static GeneratingFunction higher_order_tan(int m);
  static GeneratingFunction higher_order_sin(int m);

  Kind kind() const { return kind_; }
  int order() const { return m_; }

  /// phi(varphi).  Throws DomainError when |varphi| >= validity_half_width()
  /// (validity ranges are open intervals).
  double eval_phi(double varphi) const;

  /// Closed-form inverse of eval_phi.  Accepts the closure of the image; the
  /// boundary (e.g. phi = 2 for Euler-Rodrigues) maps to the limiting angle.
  /// Throws DomainError for phi outside the image.
  double eval_phi_inverse(double phi) const;

  /// Derivative d phi / d varphi (needed for the Jacobian coefficient).
  double dphi(double varphi) const;

  /// Half-width of the open validity interval |varphi| < w.
  double validity_half_width() const;

  /// Supremum of phi over the validity range (+infinity for tan kernels).
  double phi_sup() const;

  /// Canonical CLI name: rotvec, cgr, mrp, euler-rodrigues, bauchau-trainelli,
  /// tan:<m>, sin:<m>.
  std::string name() const;
  static GeneratingFunction parse(std::string_view name);

  friend bool operator==(const GeneratingFunction& a, const GeneratingFunction& b) {
    return a.kind_ == b.kind_ && a.m_ == b.m_;
  }
  friend bool operator!=(const GeneratingFunction& a, const GeneratingFunction& b) {
    return !(a == b);
  }

 private:
  GeneratingFunction(Kind kind, int m) : kind_(kind), m_(m) {}

  Kind kind_ = Kind::RotationVector;
  int m_ = 1;
};

/// The three trigonometric coefficient functions evaluated at one angle:
///   mu  = (d phi / d varphi)^-1
///   nu  = 2 sin(varphi/2) / phi(varphi)
///   eps = 2 tan(varphi/2) / phi(varphi)
/// At varphi = 0 all three equal 1 (by limit).
struct KernelScalars {
  double mu = 1.0;
  double nu = 1.0;
  double eps = 1.0;
  double varphi = 0.0;
};

/// Evaluates mu, nu, eps with a series fallback below the small-angle
/// threshold.  Throws DomainError outside the validity range and
/// SingularityError where eps is undefined (tan pole at varphi = odd pi).
KernelScalars kernel_scalars(const GeneratingFunction& gen, double varphi);

/// Below this |varphi| the 0/0 coefficient ratios switch to 4th-order series.
inline constexpr double kSmallAngle = 1e-4;

namespace detail {

// Series of phi(varphi)/varphi = 1 + p2 varphi^2 + p4 varphi^4 + ...
double series_p2(const GeneratingFunction& gen);
double series_p4(const GeneratingFunction& gen);
// Series of mu(varphi) = 1 + mu2 varphi^2 + mu4 varphi^4 + ...
double series_mu2(const GeneratingFunction& gen);
double series_mu4(const GeneratingFunction& gen);

double mu(const GeneratingFunction& gen, double varphi);
double nu(const GeneratingFunction& gen, double varphi);
double nu_sq(const GeneratingFunction& gen, double varphi);
// eps with a SingularityError guard on the tan pole.
double eps_checked(const GeneratingFunction& gen, double varphi);
// nu^2/eps = sin(varphi)/phi(varphi); finite on the whole validity range.
double coef_q(const GeneratingFunction& gen, double varphi);
// 1/eps = phi(varphi) cos(varphi/2) / (2 sin(varphi/2)); singular at varphi = 2k pi != 0.
double inv_eps(const GeneratingFunction& gen, double varphi);
// (mu - nu^2/eps) / phi(varphi)^2, the cubic coefficient of the screw coupling.
double screw_c(const GeneratingFunction& gen, double varphi);
// (1/eps - 1/mu) / phi(varphi)^2, the quadratic coefficient of the inverse Jacobian.
double jacobian_inv_c(const GeneratingFunction& gen, double varphi);

}  // namespace detail
}  // namespace vecpose
