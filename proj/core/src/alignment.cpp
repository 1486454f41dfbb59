#include "vecpose/alignment.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace vecpose {

namespace {

constexpr double kConditionLimit = 1e12;

// Solves the 6x6 normal equations with a spectral condition guard.
Vector6d solve_normal_equations(const Matrix6d& A, const Vector6d& b) {
  Eigen::SelfAdjointEigenSolver<Matrix6d> eig(A);
  const double lo = eig.eigenvalues().minCoeff();
  const double hi = eig.eigenvalues().maxCoeff();
  if (!(lo > 0.0) || hi / lo > kConditionLimit)
    throw DegenerateGeometryError("normal equations singular or condition number above 1e12");
  return A.ldlt().solve(b);
}

}  // namespace

double alignment_cost(const AlignmentProblem& problem, const Eigen::Matrix4d& T) {
  double cost = 0.0;
  for (const WeightedPair& pair : problem.pairs) {
    const Eigen::Vector4d e = pair.q - T * pair.p;
    cost += 0.5 * e.dot(pair.weight * e);
  }
  return cost;
}

Vector6d alignment_gradient(const AlignmentProblem& problem, const Eigen::Matrix4d& T) {
  Vector6d g = Vector6d::Zero();
  for (const WeightedPair& pair : problem.pairs) {
    const Eigen::Vector4d e = pair.q - T * pair.p;
    const auto G = odot(T * pair.p);
    g += G.transpose() * (pair.weight * e);
  }
  return g;
}

std::string SolverConfig::name() const {
  switch (update) {
    case Update::ExpMap:
      return "expmap";
    case Update::Gen:
      return "gen:" + gen.name();
    case Update::CayPer:
      return "cayper";
  }
  return "?";
}

SolverConfig SolverConfig::parse(std::string_view name) {
  if (name == "expmap") return expmap();
  if (name == "cayper") return cayper();
  if (name.substr(0, 4) == "gen:") return with_gen(GeneratingFunction::parse(name.substr(4)));
  throw ConstraintError("unknown solver: " + std::string(name));
}

SolverReport solve_general(const AlignmentProblem& problem, const Eigen::Matrix4d& T_init,
                           const SolverConfig& config) {
  if (config.update == SolverConfig::Update::CayPer)
    throw ConstraintError("solve_general does not accept the CayPer update");
  const GeneratingFunction gen = config.update == SolverConfig::Update::ExpMap
                                     ? GeneratingFunction::rotation_vector()
                                     : config.gen;

  SolverReport report;
  Eigen::Matrix4d T_op = T_init;
  report.cost_history.push_back(alignment_cost(problem, T_op));

  for (int iter = 0; iter < config.max_iters; ++iter) {
    Matrix6d A = Matrix6d::Zero();
    Vector6d b = Vector6d::Zero();
    for (const WeightedPair& pair : problem.pairs) {
      const Eigen::Vector4d tp = T_op * pair.p;
      const Eigen::Vector4d e_op = pair.q - tp;
      const auto G = odot(tp);
      A += G.transpose() * pair.weight * G;
      b += G.transpose() * (pair.weight * e_op);
    }
    const Vector6d xi = solve_normal_equations(A, b);

    T_op = pose_from_vec(PoseVector6::from_vec(xi, gen, CouplingChoice::screw())) * T_op;
    report.iterations = iter + 1;
    report.cost_history.push_back(alignment_cost(problem, T_op));
    if (xi.squaredNorm() < config.tol) {
      report.converged = true;
      break;
    }
  }
  report.T_final = T_op;
  return report;
}

SolverReport solve_cayper(const AlignmentProblem& problem, const Eigen::Matrix4d& T_init,
                          const SolverConfig& config) {
  SolverReport report;
  Eigen::Matrix4d T_op = T_init;
  report.cost_history.push_back(alignment_cost(problem, T_op));

  for (int iter = 0; iter < config.max_iters; ++iter) {
    Matrix6d A = Matrix6d::Zero();
    Vector6d b = Vector6d::Zero();
    for (const WeightedPair& pair : problem.pairs) {
      const Eigen::Vector4d tp = T_op * pair.p;
      const Eigen::Vector4d e_op = pair.q - tp;
      const auto H = odot(pair.q + tp);
      A += H.transpose() * pair.weight * H;
      b += H.transpose() * (pair.weight * e_op);
    }
    const Vector6d xi = 2.0 * solve_normal_equations(A, b);

    T_op = pose_cayley_higher(xi, 1) * T_op;
    report.iterations = iter + 1;
    report.cost_history.push_back(alignment_cost(problem, T_op));
    if (xi.squaredNorm() < config.tol) {
      report.converged = true;
      break;
    }
  }
  report.T_final = T_op;
  return report;
}

SolverReport solve(const AlignmentProblem& problem, const Eigen::Matrix4d& T_init,
                   const SolverConfig& config) {
  return config.update == SolverConfig::Update::CayPer ? solve_cayper(problem, T_init, config)
                                                       : solve_general(problem, T_init, config);
}

void save_problem_csv(const AlignmentProblem& problem, std::ostream& os) {
  os.precision(17);
  for (const WeightedPair& pair : problem.pairs) {
    os << pair.p.x() << ',' << pair.p.y() << ',' << pair.p.z() << ',' << pair.q.x() << ','
       << pair.q.y() << ',' << pair.q.z();
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) os << ',' << pair.weight(r, c);
    os << '\n';
  }
}

AlignmentProblem load_problem_csv(std::istream& is) {
  AlignmentProblem problem;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::vector<double> vals;
    std::string tok;
    while (std::getline(ss, tok, ',')) vals.push_back(std::stod(tok));
    if (vals.size() != 6 && vals.size() != 15)
      throw std::runtime_error("problem CSV rows need 6 or 15 fields");
    WeightedPair pair;
    pair.p << vals[0], vals[1], vals[2], 1.0;
    pair.q << vals[3], vals[4], vals[5], 1.0;
    pair.weight.setZero();
    if (vals.size() == 15) {
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) pair.weight(r, c) = vals[6 + 3 * r + c];
    } else {
      pair.weight.topLeftCorner<3, 3>().setIdentity();
    }
    problem.pairs.push_back(pair);
  }
  return problem;
}

}  // namespace vecpose
