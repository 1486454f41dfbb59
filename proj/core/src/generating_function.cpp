#include "vecpose/generating_function.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace vecpose {

namespace {
constexpr double kPi = std::numbers::pi;
// |cos(varphi/2)| below this counts as a tan pole (eps undefined).
constexpr double kTanPoleGuard = 1e-14;

// Closed-form evaluation without the range check.  Internal coefficient code
// reaches this with angles recovered from the closed image, where the
// boundary itself (e.g. varphi = pi for the sin kernels) is meaningful.
double phi_unchecked(const GeneratingFunction& gen, double varphi) {
  const double m = gen.order();
  switch (gen.kind()) {
    case GeneratingFunction::Kind::RotationVector:
      return varphi;
    case GeneratingFunction::Kind::Tan:
      return 2.0 * m * std::tan(varphi / (2.0 * m));
    case GeneratingFunction::Kind::Sin:
      return 2.0 * m * std::sin(varphi / (2.0 * m));
  }
  return 0.0;
}
}  // namespace

GeneratingFunction GeneratingFunction::higher_order_tan(int m) {
  if (m < 1) throw ConstraintError("higher_order_tan: order must be a positive integer");
  return {Kind::Tan, m};
}

GeneratingFunction GeneratingFunction::higher_order_sin(int m) {
  if (m < 1) throw ConstraintError("higher_order_sin: order must be a positive integer");
  return {Kind::Sin, m};
}

double GeneratingFunction::validity_half_width() const {
  switch (kind_) {
    case Kind::RotationVector:
      return 2.0 * kPi;
    case Kind::Tan:
    case Kind::Sin:
      // Monotonicity interval of the defining trig function.
      return m_ * kPi;
  }
  return 0.0;
}

double GeneratingFunction::phi_sup() const {
  switch (kind_) {
    case Kind::RotationVector:
      return 2.0 * kPi;
    case Kind::Tan:
      return std::numeric_limits<double>::infinity();
    case Kind::Sin:
      return 2.0 * m_;
  }
  return 0.0;
}

double GeneratingFunction::eval_phi(double varphi) const {
  if (!(std::abs(varphi) < validity_half_width()))
    throw DomainError("eval_phi: angle outside the open validity range of " + name());
  switch (kind_) {
    case Kind::RotationVector:
      return varphi;
    case Kind::Tan:
      return 2.0 * m_ * std::tan(varphi / (2.0 * m_));
    case Kind::Sin:
      return 2.0 * m_ * std::sin(varphi / (2.0 * m_));
  }
  return 0.0;
}

double GeneratingFunction::eval_phi_inverse(double phi) const {
  switch (kind_) {
    case Kind::RotationVector:
      if (std::abs(phi) > 2.0 * kPi)
        throw DomainError("eval_phi_inverse: |phi| exceeds 2*pi for the rotation vector");
      return phi;
    case Kind::Tan:
      return 2.0 * m_ * std::atan(phi / (2.0 * m_));
    case Kind::Sin: {
      const double s = phi / (2.0 * m_);
      if (std::abs(s) > 1.0)
        throw DomainError("eval_phi_inverse: phi outside the image of " + name());
      return 2.0 * m_ * std::asin(s);
    }
  }
  return 0.0;
}

double GeneratingFunction::dphi(double varphi) const {
  switch (kind_) {
    case Kind::RotationVector:
      return 1.0;
    case Kind::Tan: {
      const double c = std::cos(varphi / (2.0 * m_));
      return 1.0 / (c * c);
    }
    case Kind::Sin:
      return std::cos(varphi / (2.0 * m_));
  }
  return 1.0;
}

std::string GeneratingFunction::name() const {
  switch (kind_) {
    case Kind::RotationVector:
      return "rotvec";
    case Kind::Tan:
      if (m_ == 1) return "cgr";
      if (m_ == 2) return "mrp";
      return "tan:" + std::to_string(m_);
    case Kind::Sin:
      if (m_ == 1) return "euler-rodrigues";
      if (m_ == 2) return "bauchau-trainelli";
      return "sin:" + std::to_string(m_);
  }
  return "?";
}

GeneratingFunction GeneratingFunction::parse(std::string_view name) {
  if (name == "rotvec") return rotation_vector();
  if (name == "cgr") return cayley_gibbs_rodrigues();
  if (name == "mrp") return modified_rodrigues();
  if (name == "euler-rodrigues") return euler_rodrigues();
  if (name == "bauchau-trainelli") return bauchau_trainelli();
  auto parse_order = [&](std::string_view body) {
    int m = 0;
    for (char ch : body) {
      if (ch < '0' || ch > '9') throw ConstraintError("unknown generating function: " + std::string(name));
      m = 10 * m + (ch - '0');
      if (m > 1000) throw ConstraintError("generating function order out of range");
    }
    if (m < 1) throw ConstraintError("generating function order must be >= 1");
    return m;
  };
  if (name.substr(0, 4) == "tan:") return higher_order_tan(parse_order(name.substr(4)));
  if (name.substr(0, 4) == "sin:") return higher_order_sin(parse_order(name.substr(4)));
  throw ConstraintError("unknown generating function: " + std::string(name));
}

namespace detail {

double series_p2(const GeneratingFunction& gen) {
  const double m2 = double(gen.order()) * gen.order();
  switch (gen.kind()) {
    case GeneratingFunction::Kind::RotationVector:
      return 0.0;
    case GeneratingFunction::Kind::Tan:
      return 1.0 / (12.0 * m2);
    case GeneratingFunction::Kind::Sin:
      return -1.0 / (24.0 * m2);
  }
  return 0.0;
}

double series_p4(const GeneratingFunction& gen) {
  const double m4 = std::pow(double(gen.order()), 4);
  switch (gen.kind()) {
    case GeneratingFunction::Kind::RotationVector:
      return 0.0;
    case GeneratingFunction::Kind::Tan:
      return 1.0 / (120.0 * m4);
    case GeneratingFunction::Kind::Sin:
      return 1.0 / (1920.0 * m4);
  }
  return 0.0;
}

double series_mu2(const GeneratingFunction& gen) {
  const double m2 = double(gen.order()) * gen.order();
  switch (gen.kind()) {
    case GeneratingFunction::Kind::RotationVector:
      return 0.0;
    case GeneratingFunction::Kind::Tan:
      return -1.0 / (4.0 * m2);
    case GeneratingFunction::Kind::Sin:
      return 1.0 / (8.0 * m2);
  }
  return 0.0;
}

double series_mu4(const GeneratingFunction& gen) {
  const double m4 = std::pow(double(gen.order()), 4);
  switch (gen.kind()) {
    case GeneratingFunction::Kind::RotationVector:
      return 0.0;
    case GeneratingFunction::Kind::Tan:
      return 1.0 / (48.0 * m4);
    case GeneratingFunction::Kind::Sin:
      return 5.0 / (384.0 * m4);
  }
  return 0.0;
}

namespace {

// nu = 1 + nu2 x^2 + nu4 x^4, eps = 1 + e2 x^2 + e4 x^4 near x = 0.
double series_nu2(const GeneratingFunction& g) { return -1.0 / 24.0 - series_p2(g); }
double series_nu4(const GeneratingFunction& g) {
  const double p2 = series_p2(g);
  return 1.0 / 1920.0 + p2 / 24.0 + p2 * p2 - series_p4(g);
}
double series_eps2(const GeneratingFunction& g) { return 1.0 / 12.0 - series_p2(g); }
double series_eps4(const GeneratingFunction& g) {
  const double p2 = series_p2(g);
  return 1.0 / 120.0 - p2 / 12.0 + p2 * p2 - series_p4(g);
}
// q = nu^2/eps = sin(varphi)/phi(varphi) = 1 + q2 x^2 + q4 x^4 near x = 0.
double series_q2(const GeneratingFunction& g) { return -1.0 / 6.0 - series_p2(g); }
double series_q4(const GeneratingFunction& g) {
  const double an = series_nu2(g), bn = series_nu4(g);
  const double ae = series_eps2(g), be = series_eps4(g);
  return an * an + 2.0 * bn - 2.0 * an * ae + ae * ae - be;
}

}  // namespace

double mu(const GeneratingFunction& gen, double varphi) {
  if (std::abs(varphi) < kSmallAngle) {
    const double x2 = varphi * varphi;
    return 1.0 + x2 * (series_mu2(gen) + x2 * series_mu4(gen));
  }
  return 1.0 / gen.dphi(varphi);
}

double nu(const GeneratingFunction& gen, double varphi) {
  if (std::abs(varphi) < kSmallAngle) {
    const double x2 = varphi * varphi;
    return 1.0 + x2 * (series_nu2(gen) + x2 * series_nu4(gen));
  }
  return 2.0 * std::sin(varphi / 2.0) / phi_unchecked(gen, varphi);
}

double nu_sq(const GeneratingFunction& gen, double varphi) {
  const double n = nu(gen, varphi);
  return n * n;
}

double eps_checked(const GeneratingFunction& gen, double varphi) {
  if (std::abs(varphi) < kSmallAngle) {
    const double x2 = varphi * varphi;
    return 1.0 + x2 * (series_eps2(gen) + x2 * series_eps4(gen));
  }
  if (std::abs(std::cos(varphi / 2.0)) < kTanPoleGuard)
    throw SingularityError("eps undefined at varphi = " + std::to_string(varphi));
  return 2.0 * std::tan(varphi / 2.0) / phi_unchecked(gen, varphi);
}

double coef_q(const GeneratingFunction& gen, double varphi) {
  if (std::abs(varphi) < kSmallAngle) {
    const double x2 = varphi * varphi;
    return 1.0 + x2 * (series_q2(gen) + x2 * series_q4(gen));
  }
  return std::sin(varphi) / phi_unchecked(gen, varphi);
}

double inv_eps(const GeneratingFunction& gen, double varphi) {
  if (std::abs(varphi) < kSmallAngle) {
    const double x2 = varphi * varphi;
    const double e = 1.0 + x2 * (series_eps2(gen) + x2 * series_eps4(gen));
    return 1.0 / e;
  }
  const double s = std::sin(varphi / 2.0);
  if (std::abs(s) < 1e-9)
    throw SingularityError("1/eps singular near varphi = " + std::to_string(varphi));
  return phi_unchecked(gen, varphi) * std::cos(varphi / 2.0) / (2.0 * s);
}

double screw_c(const GeneratingFunction& gen, double varphi) {
  if (std::abs(varphi) < kSmallAngle) {
    const double c0 = series_mu2(gen) - series_q2(gen);
    const double c2 = (series_mu4(gen) - series_q4(gen)) - 2.0 * series_p2(gen) * c0;
    return c0 + c2 * varphi * varphi;
  }
  const double phi = phi_unchecked(gen, varphi);
  return (mu(gen, varphi) - coef_q(gen, varphi)) / (phi * phi);
}

double jacobian_inv_c(const GeneratingFunction& gen, double varphi) {
  if (std::abs(varphi) < kSmallAngle) {
    const double ae = series_eps2(gen), be = series_eps4(gen);
    const double am = series_mu2(gen), bm = series_mu4(gen);
    const double c0 = am - ae;
    const double c2 = (ae * ae - be) - (am * am - bm) - 2.0 * series_p2(gen) * c0;
    return c0 + c2 * varphi * varphi;
  }
  const double phi = phi_unchecked(gen, varphi);
  return (inv_eps(gen, varphi) - 1.0 / mu(gen, varphi)) / (phi * phi);
}

}  // namespace detail

KernelScalars kernel_scalars(const GeneratingFunction& gen, double varphi) {
  if (!(std::abs(varphi) < gen.validity_half_width()))
    throw DomainError("kernel_scalars: angle outside the validity range of " + gen.name());
  KernelScalars k;
  k.varphi = varphi;
  k.mu = detail::mu(gen, varphi);
  k.nu = detail::nu(gen, varphi);
  k.eps = detail::eps_checked(gen, varphi);
  return k;
}

}  // namespace vecpose
