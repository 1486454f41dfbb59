#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vecpose/stereo.hpp"

namespace vecpose {

/// Monte-Carlo benchmark: noisy stereo clouds of a fixed landmark pyramid are
/// aligned by every configured solver from one shared random initial guess per
/// trial.  Per-trial randomness derives from seed + trial index, so serial and
/// parallel runs produce identical reports.
struct ExperimentConfig {
  std::uint64_t seed = 42;
  int trials = 1000;
  std::vector<SolverConfig> solvers = {SolverConfig::expmap(), SolverConfig::cayper()};
  StereoRig rig;
  int threads = 1;
};

struct TrialSolverResult {
  std::string solver;
  bool failed = false;       // solver threw; cost fields not meaningful
  std::string error;
  double final_cost = 0.0;
  int iterations = 0;
  bool converged = false;
  bool success = false;      // final cost within 1% of the trial's best-known cost
  std::vector<double> cost_history;
};

struct TrialResult {
  int trial = 0;
  double best_cost = 0.0;    // best over all solvers plus a truth-initialized reference run
  std::vector<TrialSolverResult> solvers;
};

struct SolverSummary {
  std::string solver;
  double success_rate = 0.0;
  double failure_rate = 0.0;
  double mean_iterations = 0.0;
  int max_iterations = 0;
  std::vector<double> final_costs;  // NaN where the solver failed
};

struct ExperimentReport {
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<SolverSummary> per_solver;
  std::vector<TrialResult> per_trial;
};

/// The 12 fixed landmarks: four corners per depth plane at z = 5, 10, 15 m,
/// lateral extent shrinking with depth.
std::vector<Eigen::Vector3d> pyramid_landmarks();

/// Ground-truth cloud transform for a camera translated 1 m along +z.
Eigen::Matrix4d experiment_ground_truth();

/// Builds one trial's alignment problem and shared initial guess.
struct TrialData {
  AlignmentProblem problem;
  Eigen::Matrix4d T_init;
};
TrialData make_trial(const ExperimentConfig& config, int trial);

ExperimentReport run_experiment(const ExperimentConfig& config);

/// Schema: {seed, trials, per_solver: [{solver, success_rate, failure_rate,
/// mean_iterations, max_iterations, final_costs}], per_trial: [{trial,
/// best_cost, solvers: [{solver, failed, final_cost, iterations, converged,
/// success}]}]}; failed solvers carry final_cost null.
void write_report_json(const ExperimentReport& report, std::ostream& os);

/// Rows "trial,solver,iteration,cost", one per recorded cost value.
void write_cost_history_csv(const ExperimentReport& report, std::ostream& os);

}  // namespace vecpose
