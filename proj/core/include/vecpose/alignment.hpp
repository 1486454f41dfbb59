#pragma once

#include <string>
#include <vector>

#include "vecpose/se3.hpp"

namespace vecpose {

/// One correspondence: homogeneous points p (moving) and q (static) with a
/// symmetric PSD 4x4 weight on the residual q - T p.
struct WeightedPair {
  Eigen::Vector4d p = Eigen::Vector4d::UnitW();
  Eigen::Vector4d q = Eigen::Vector4d::UnitW();
  Eigen::Matrix4d weight = Eigen::Matrix4d::Identity();
};

struct AlignmentProblem {
  std::vector<WeightedPair> pairs;
};

/// The 4x6 matrix with xi^ p = odot(p) xi for every xi.
inline Eigen::Matrix<double, 4, 6> odot(const Eigen::Vector4d& p) {
  Eigen::Matrix<double, 4, 6> m = Eigen::Matrix<double, 4, 6>::Zero();
  m.topLeftCorner<3, 3>() = p.w() * Eigen::Matrix3d::Identity();
  m.topRightCorner<3, 3>() = -hat3(p.head<3>());
  return m;
}

/// Weighted sum-of-squares cost 1/2 sum e^T W e with e = q - T p.
double alignment_cost(const AlignmentProblem& problem, const Eigen::Matrix4d& T);

/// Update rule applied after each linear solve.
struct SolverConfig {
  enum class Update {
    ExpMap,  // rotation-vector series map (exponential)
    Gen,     // series map with an arbitrary kernel, screw coupling
    CayPer,  // first-order Cayley linearization and update
  };

  Update update = Update::ExpMap;
  GeneratingFunction gen = GeneratingFunction::rotation_vector();
  double tol = 1e-10;  // on xi^T xi
  int max_iters = 100;

  static SolverConfig expmap() { return {}; }
  static SolverConfig with_gen(const GeneratingFunction& g) {
    return {Update::Gen, g, 1e-10, 100};
  }
  static SolverConfig cayper() {
    return {Update::CayPer, GeneratingFunction::cayley_gibbs_rodrigues(), 1e-10, 100};
  }

  std::string name() const;
  static SolverConfig parse(std::string_view name);
};

struct SolverReport {
  Eigen::Matrix4d T_final = Eigen::Matrix4d::Identity();
  std::vector<double> cost_history;  // length = iterations + 1
  int iterations = 0;
  bool converged = false;
};

/// Gauss-Newton with the infinitesimal (identity-plus) error linearization;
/// the solved perturbation is mapped through the configured series map.
SolverReport solve_general(const AlignmentProblem& problem, const Eigen::Matrix4d& T_init,
                           const SolverConfig& config);

/// Cayley-linearized iteration.  From an identity operating point the first
/// solve is the one-shot weighted linear pose estimate; further iterations
/// refine the original cost, which is what cost_history reports.
SolverReport solve_cayper(const AlignmentProblem& problem, const Eigen::Matrix4d& T_init,
                          const SolverConfig& config);

/// Dispatch on config.update.
SolverReport solve(const AlignmentProblem& problem, const Eigen::Matrix4d& T_init,
                   const SolverConfig& config);

/// Gradient of the cost with respect to an infinitesimal left perturbation at
/// T; zero norm at stationary points.
Vector6d alignment_gradient(const AlignmentProblem& problem, const Eigen::Matrix4d& T);

/// Plain-text rows "px,py,pz,qx,qy,qz[,w00..w22]" with the optional 3x3 weight
/// block row-major; used for regression fixtures.
void save_problem_csv(const AlignmentProblem& problem, std::ostream& os);
AlignmentProblem load_problem_csv(std::istream& is);

}  // namespace vecpose
