#include "vecpose/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <thread>

#include <json.hpp>

namespace vecpose {

namespace {

constexpr double kSuccessRelTol = 0.01;

Eigen::Matrix4d draw_initial_guess(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::Vector3d axis;
  do {
    for (int i = 0; i < 3; ++i) axis[i] = normal(rng);
  } while (axis.norm() < 1e-12);
  axis.normalize();
  std::uniform_real_distribution<double> angle_dist(0.0, 0.9 * std::numbers::pi);
  const double angle = angle_dist(rng);
  std::uniform_real_distribution<double> trans_dist(-2.0, 2.0);
  Eigen::Matrix4d T = Eigen::Matrix4d::Identity();
  T.topLeftCorner<3, 3>() =
      rot_from_vec({angle * axis, GeneratingFunction::rotation_vector()});
  for (int i = 0; i < 3; ++i) T(i, 3) = trans_dist(rng);
  return T;
}

TrialResult run_trial(const ExperimentConfig& config, int trial) {
  const TrialData data = make_trial(config, trial);

  TrialResult result;
  result.trial = trial;

  for (const SolverConfig& solver : config.solvers) {
    TrialSolverResult r;
    r.solver = solver.name();
    try {
      const SolverReport report = solve(data.problem, data.T_init, solver);
      r.final_cost = report.cost_history.back();
      r.iterations = report.iterations;
      r.converged = report.converged;
      r.cost_history = report.cost_history;
    } catch (const std::exception& ex) {
      r.failed = true;
      r.error = ex.what();
      r.final_cost = std::numeric_limits<double>::quiet_NaN();
    }
    result.solvers.push_back(std::move(r));
  }

  // Best-known cost: truth-initialized reference run plus all solver finals.
  double best = std::numeric_limits<double>::infinity();
  try {
    const SolverReport ref =
        solve_general(data.problem, experiment_ground_truth(), SolverConfig::expmap());
    best = ref.cost_history.back();
  } catch (const std::exception&) {
  }
  for (const TrialSolverResult& r : result.solvers)
    if (!r.failed) best = std::min(best, r.final_cost);
  result.best_cost = best;
  for (TrialSolverResult& r : result.solvers)
    r.success = !r.failed && std::isfinite(best) && r.final_cost <= best * (1.0 + kSuccessRelTol);
  return result;
}

}  // namespace

std::vector<Eigen::Vector3d> pyramid_landmarks() {
  // Extents keep every landmark within ~+-60 px of the image center for the
  // default rig and every viewing ray within 30 degrees of the optical axis.
  static const double planes[3][2] = {{5.0, 1.5}, {10.0, 1.1}, {15.0, 0.5}};
  std::vector<Eigen::Vector3d> pts;
  pts.reserve(12);
  for (const auto& [z, extent] : planes) {
    pts.emplace_back(extent, extent, z);
    pts.emplace_back(-extent, extent, z);
    pts.emplace_back(-extent, -extent, z);
    pts.emplace_back(extent, -extent, z);
  }
  return pts;
}

Eigen::Matrix4d experiment_ground_truth() {
  Eigen::Matrix4d T = Eigen::Matrix4d::Identity();
  T(2, 3) = -1.0;  // camera moved +1 m along z, so coordinates shift by -1
  return T;
}

TrialData make_trial(const ExperimentConfig& config, int trial) {
  std::mt19937_64 rng(config.seed + std::uint64_t(trial));
  const Eigen::Matrix4d T_gt = experiment_ground_truth();

  TrialData data;
  for (const Eigen::Vector3d& landmark : pyramid_landmarks()) {
    const Eigen::Vector3d moved =
        T_gt.topLeftCorner<3, 3>() * landmark + T_gt.topRightCorner<3, 1>();
    const Eigen::Vector4d y_p = stereo_project_noisy(config.rig, landmark, rng);
    const Eigen::Vector4d y_q = stereo_project_noisy(config.rig, moved, rng);
    WeightedPair pair;
    pair.p = stereo_backproject(config.rig, y_p);
    pair.q = stereo_backproject(config.rig, y_q);
    pair.weight = stereo_weight(config.rig, y_p, y_q);
    data.problem.pairs.push_back(pair);
  }
  data.T_init = draw_initial_guess(rng);
  return data;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  if (config.trials < 1) throw ConstraintError("run_experiment: trials must be >= 1");

  ExperimentReport report;
  report.seed = config.seed;
  report.trials = config.trials;
  report.per_trial.resize(config.trials);

  const int n_threads = std::clamp(config.threads, 1, config.trials);
  if (n_threads == 1) {
    for (int t = 0; t < config.trials; ++t) report.per_trial[t] = run_trial(config, t);
  } else {
    std::vector<std::thread> workers;
    std::atomic<int> next{0};
    for (int w = 0; w < n_threads; ++w) {
      workers.emplace_back([&] {
        for (int t = next.fetch_add(1); t < config.trials; t = next.fetch_add(1))
          report.per_trial[t] = run_trial(config, t);
      });
    }
    for (std::thread& w : workers) w.join();
  }

  for (std::size_t s = 0; s < config.solvers.size(); ++s) {
    SolverSummary summary;
    summary.solver = config.solvers[s].name();
    long iter_sum = 0;
    int n_success = 0;
    for (const TrialResult& trial : report.per_trial) {
      const TrialSolverResult& r = trial.solvers[s];
      summary.final_costs.push_back(r.final_cost);
      summary.max_iterations = std::max(summary.max_iterations, r.iterations);
      iter_sum += r.iterations;
      n_success += r.success ? 1 : 0;
    }
    summary.success_rate = double(n_success) / config.trials;
    summary.failure_rate = double(config.trials - n_success) / config.trials;
    summary.mean_iterations = double(iter_sum) / config.trials;
    report.per_solver.push_back(std::move(summary));
  }
  return report;
}

void write_report_json(const ExperimentReport& report, std::ostream& os) {
  nlohmann::json j;
  j["seed"] = report.seed;
  j["trials"] = report.trials;
  j["per_solver"] = nlohmann::json::array();
  for (const SolverSummary& s : report.per_solver) {
    nlohmann::json js;
    js["solver"] = s.solver;
    js["success_rate"] = s.success_rate;
    js["failure_rate"] = s.failure_rate;
    js["mean_iterations"] = s.mean_iterations;
    js["max_iterations"] = s.max_iterations;
    nlohmann::json costs = nlohmann::json::array();
    for (double c : s.final_costs)
      costs.push_back(std::isfinite(c) ? nlohmann::json(c) : nlohmann::json(nullptr));
    js["final_costs"] = std::move(costs);
    j["per_solver"].push_back(std::move(js));
  }
  j["per_trial"] = nlohmann::json::array();
  for (const TrialResult& t : report.per_trial) {
    nlohmann::json jt;
    jt["trial"] = t.trial;
    jt["best_cost"] = t.best_cost;
    jt["solvers"] = nlohmann::json::array();
    for (const TrialSolverResult& r : t.solvers) {
      nlohmann::json jr;
      jr["solver"] = r.solver;
      jr["failed"] = r.failed;
      if (r.failed)
        jr["final_cost"] = nullptr;
      else
        jr["final_cost"] = r.final_cost;
      jr["iterations"] = r.iterations;
      jr["converged"] = r.converged;
      jr["success"] = r.success;
      jt["solvers"].push_back(std::move(jr));
    }
    j["per_trial"].push_back(std::move(jt));
  }
  os << j.dump(2) << '\n';
}

void write_cost_history_csv(const ExperimentReport& report, std::ostream& os) {
  os.precision(17);
  os << "trial,solver,iteration,cost\n";
  for (const TrialResult& t : report.per_trial) {
    for (const TrialSolverResult& r : t.solvers) {
      for (std::size_t i = 0; i < r.cost_history.size(); ++i)
        os << t.trial << ',' << r.solver << ',' << i << ',' << r.cost_history[i] << '\n';
    }
  }
}

}  // namespace vecpose
