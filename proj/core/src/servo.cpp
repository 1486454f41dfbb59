#include "vecpose/servo.hpp"

#include <cmath>

namespace vecpose {

std::vector<ServoSample> servo_simulate(const ServoSpec& spec) {
  if (!(spec.dt > 0.0) || !(spec.duration >= spec.dt) || !(spec.gain > 0.0))
    throw ConstraintError("servo_simulate: require dt > 0, duration >= dt, gain > 0");

  const int n_steps = int(std::floor(spec.duration / spec.dt + 0.5)) + 1;
  std::vector<ServoSample> out;
  out.reserve(n_steps);

  PoseVector6 xi = PoseVector6::from_vec(spec.xi0, spec.gen, spec.coupling);
  for (int k = 0; k < n_steps; ++k) {
    const double t = k * spec.dt;
    Eigen::Matrix4d t_ref = Eigen::Matrix4d::Identity();
    t_ref(0, 3) = spec.ref_speed * t;

    const Eigen::Matrix4d pose = pose_from_vec(xi);
    const PoseVector6 err = vec_from_pose(pose * pose_inverse(t_ref), spec.gen, spec.coupling);
    out.push_back({t, pose, err.vec().norm()});

    xi.rho -= spec.gain * spec.dt * err.rho;
    xi.phi -= spec.gain * spec.dt * err.phi;
  }
  return out;
}

}  // namespace vecpose
