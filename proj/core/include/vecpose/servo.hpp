#pragma once

#include <vector>

#include "vecpose/se3.hpp"

namespace vecpose {

/// Proportional servo in pose-vector space onto a reference pose that slides
/// along the x axis at constant speed (identity reference orientation).
///
/// Each step recomputes the error vector from the group elements,
///   xi_error = inverse map of T(xi) T_ref(t)^-1,
/// then integrates d(xi)/dt = -gain * xi_error with explicit Euler.
struct ServoSpec {
  GeneratingFunction gen = GeneratingFunction::rotation_vector();
  CouplingChoice coupling = CouplingChoice::screw();
  double gain = 1.0;       // per second
  double dt = 0.01;        // seconds
  double duration = 10.0;  // seconds
  double ref_speed = 0.5;  // m/s along x
  Vector6d xi0 = Vector6d::Zero();
};

struct ServoSample {
  double t = 0.0;
  Eigen::Matrix4d pose = Eigen::Matrix4d::Identity();
  double error_norm = 0.0;
};

std::vector<ServoSample> servo_simulate(const ServoSpec& spec);

}  // namespace vecpose
