#pragma once

#include <vector>

#include "vecpose/se3.hpp"

namespace vecpose {

/// Straight-line blend xi(s) = (1 - s) xi_final + s xi_initial, s in [0, 1].
/// The ordering mirrors the defining formula: s = 0 lands on xi_final.
struct InterpolationSpec {
  PoseVector6 xi_initial;
  PoseVector6 xi_final;
  int steps = 2;  // number of samples, endpoints included
};

/// The blended vectors at steps uniformly spaced values of s.
std::vector<PoseVector6> interpolate_vectors(const InterpolationSpec& spec);

/// The blended vectors mapped through pose_from_vec.
std::vector<Eigen::Matrix4d> interpolate(const InterpolationSpec& spec);

}  // namespace vecpose
