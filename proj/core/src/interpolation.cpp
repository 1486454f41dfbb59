#include "vecpose/interpolation.hpp"

namespace vecpose {

std::vector<PoseVector6> interpolate_vectors(const InterpolationSpec& spec) {
  if (spec.steps < 2) throw ConstraintError("interpolate: steps must be >= 2");
  if (spec.xi_initial.gen != spec.xi_final.gen ||
      spec.xi_initial.coupling != spec.xi_final.coupling)
    throw ConstraintError("interpolate: endpoints use different parameterizations");

  std::vector<PoseVector6> out;
  out.reserve(spec.steps);
  for (int k = 0; k < spec.steps; ++k) {
    const double s = double(k) / double(spec.steps - 1);
    PoseVector6 xi = spec.xi_final;
    xi.rho = (1.0 - s) * spec.xi_final.rho + s * spec.xi_initial.rho;
    xi.phi = (1.0 - s) * spec.xi_final.phi + s * spec.xi_initial.phi;
    out.push_back(xi);
  }
  return out;
}

std::vector<Eigen::Matrix4d> interpolate(const InterpolationSpec& spec) {
  std::vector<Eigen::Matrix4d> out;
  out.reserve(spec.steps);
  for (const PoseVector6& xi : interpolate_vectors(spec)) out.push_back(pose_from_vec(xi));
  return out;
}

}  // namespace vecpose
