// Command-line front end: closed-form table validation, pose interpolation,
// servo simulation, the pointcloud-alignment experiment, and one-shot
// vector/matrix conversions.  All numeric output uses 17 significant digits so
// doubles round-trip exactly.
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vecpose/experiment.hpp"
#include "vecpose/interpolation.hpp"
#include "vecpose/matrix_exp.hpp"
#include "vecpose/servo.hpp"

namespace fs = std::filesystem;
using namespace vecpose;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> parse_numbers(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw CLI::ValidationError("expected a list of numbers, got '" + tok + "'");
    }
  }
  return out;
}

std::vector<GeneratingFunction> table_gens() {
  return {GeneratingFunction::rotation_vector(),    GeneratingFunction::cayley_gibbs_rodrigues(),
          GeneratingFunction::modified_rodrigues(), GeneratingFunction::euler_rodrigues(),
          GeneratingFunction::bauchau_trainelli()};
}

std::string file_safe(std::string name) {
  std::replace(name.begin(), name.end(), ':', '_');
  return name;
}

// Accepts either 6 numbers (a pose vector) or 16 (a row-major 4x4 matrix).
PoseVector6 parse_pose(const std::string& text, const GeneratingFunction& gen,
                       const CouplingChoice& coupling) {
  const std::vector<double> vals = parse_numbers(text);
  if (vals.size() == 6) {
    Vector6d xi;
    for (int i = 0; i < 6; ++i) xi[i] = vals[i];
    return PoseVector6::from_vec(xi, gen, coupling);
  }
  if (vals.size() == 16) {
    Eigen::Matrix4d T;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) T(r, c) = vals[4 * r + c];
    return vec_from_pose(T, gen, coupling);
  }
  throw CLI::ValidationError("pose input needs 6 numbers (vector) or 16 (4x4 matrix)");
}

std::ofstream open_output(const fs::path& dir, const std::string& filename) {
  fs::create_directories(dir);
  std::ofstream os(dir / filename);
  if (!os) throw std::runtime_error("cannot open " + (dir / filename).string());
  os.precision(17);
  return os;
}

void write_trajectory_row(std::ostream& os, int step, double s_or_t, const Eigen::Matrix4d& T) {
  os << step << ',' << s_or_t << ',' << T(0, 3) << ',' << T(1, 3) << ',' << T(2, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) os << ',' << T(r, c);
}

// Same rows as the CSV writers, as an array of JSON objects.
nlohmann::json trajectory_row_json(int step, const char* tag, double s_or_t,
                                   const Eigen::Matrix4d& T) {
  nlohmann::json row;
  row["step"] = step;
  row[tag] = s_or_t;
  row["tx"] = T(0, 3);
  row["ty"] = T(1, 3);
  row["tz"] = T(2, 3);
  nlohmann::json rot = nlohmann::json::array();
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) rot.push_back(T(r, c));
  row["C"] = std::move(rot);
  return row;
}

template <typename Mat>
void print_matrix(const Mat& m) {
  std::cout.precision(17);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) std::cout << (c ? " " : "") << m(r, c);
    std::cout << '\n';
  }
}

// ---- check-tables ----------------------------------------------------------

Eigen::Matrix3d closed_form(const GeneratingFunction& gen, double vp, const Eigen::Vector3d& axis) {
  const Eigen::Matrix3d I = Eigen::Matrix3d::Identity();
  switch (gen.kind()) {
    case GeneratingFunction::Kind::RotationVector:
      return matrix_exp<double, 3>(hat3(vp * axis));
    case GeneratingFunction::Kind::Tan:
      return rot_cayley_higher(gen.eval_phi(vp) * axis, gen.order());
    case GeneratingFunction::Kind::Sin: {
      const Eigen::Matrix3d P = hat3(gen.eval_phi(vp) * axis);
      if (gen.order() == 1) return I + std::cos(vp / 2) * P + 0.5 * P * P;
      if (gen.order() == 2)
        return I + std::cos(vp / 2) * std::cos(vp / 4) * P +
               0.5 * std::cos(vp / 4) * std::cos(vp / 4) * P * P;
      // Generic fallback: axis-angle Rodrigues form.
      const Eigen::Matrix3d A = hat3(axis);
      return I + std::sin(vp) * A + (1.0 - std::cos(vp)) * A * A;
    }
  }
  return I;
}

int cmd_check_tables(const std::vector<std::string>& extra_gens, double tol) {
  std::vector<GeneratingFunction> gens = table_gens();
  for (const std::string& name : extra_gens) gens.push_back(GeneratingFunction::parse(name));

  std::mt19937_64 rng(1);
  bool ok = true;
  std::cout.precision(3);
  for (const auto& gen : gens) {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double vp = -0.9 * gen.validity_half_width() +
                        1.8 * gen.validity_half_width() * double(i) / 199.0;
      std::normal_distribution<double> normal(0.0, 1.0);
      Eigen::Vector3d axis;
      do {
        for (int k = 0; k < 3; ++k) axis[k] = normal(rng);
      } while (axis.norm() < 1e-12);
      axis.normalize();
      const Eigen::Matrix3d series = rot_from_vec({gen.eval_phi(vp) * axis, gen});
      worst = std::max(worst, (series - closed_form(gen, vp, axis)).cwiseAbs().maxCoeff());
    }
    const bool row_ok = worst < tol;
    ok = ok && row_ok;
    std::cout << gen.name() << ": max error " << std::scientific << worst << " "
              << (row_ok ? "ok" : "MISMATCH") << '\n';
  }
  return ok ? 0 : 2;
}

// ---- interp ----------------------------------------------------------------

struct InterpOptions {
  std::string gen = "rotvec";
  std::string coupling = "screw";
  std::string initial;
  std::string final_;
  int steps = 20;
  bool all_gens = false;
  bool swap_endpoints = false;
  std::string out = ".";
  std::string format = "csv";
};

int cmd_interp(const InterpOptions& opt) {
  const CouplingChoice coupling = CouplingChoice::parse(opt.coupling);
  std::vector<GeneratingFunction> gens;
  if (opt.all_gens)
    gens = table_gens();
  else
    gens.push_back(GeneratingFunction::parse(opt.gen));

  for (const auto& gen : gens) {
    InterpolationSpec spec;
    spec.xi_initial = parse_pose(opt.initial, gen, coupling);
    spec.xi_final = parse_pose(opt.final_, gen, coupling);
    if (opt.swap_endpoints) std::swap(spec.xi_initial, spec.xi_final);
    spec.steps = opt.steps;
    const auto path = interpolate(spec);

    std::ofstream os =
        open_output(opt.out, "interp_" + file_safe(gen.name()) + "." + opt.format);
    if (opt.format == "json") {
      nlohmann::json rows = nlohmann::json::array();
      for (std::size_t k = 0; k < path.size(); ++k)
        rows.push_back(
            trajectory_row_json(int(k), "s", double(k) / double(path.size() - 1), path[k]));
      os << rows.dump(2) << '\n';
    } else {
      os << "step,s,tx,ty,tz,C00,C01,C02,C10,C11,C12,C20,C21,C22\n";
      for (std::size_t k = 0; k < path.size(); ++k) {
        write_trajectory_row(os, int(k), double(k) / double(path.size() - 1), path[k]);
        os << '\n';
      }
    }
  }
  return 0;
}

// ---- servo -----------------------------------------------------------------

struct ServoOptions {
  std::string gen = "rotvec";
  std::string coupling = "screw";
  double gain = 1.0;
  double dt = 0.01;
  double duration = 10.0;
  double ref_speed = 0.5;
  std::string xi0 = "0 1 0.5 0 0 0.6";
  std::string out = ".";
  std::string format = "csv";
};

int cmd_servo(const ServoOptions& opt) {
  ServoSpec spec;
  spec.gen = GeneratingFunction::parse(opt.gen);
  spec.coupling = CouplingChoice::parse(opt.coupling);
  spec.gain = opt.gain;
  spec.dt = opt.dt;
  spec.duration = opt.duration;
  spec.ref_speed = opt.ref_speed;
  const std::vector<double> vals = parse_numbers(opt.xi0);
  if (vals.size() != 6) throw CLI::ValidationError("--xi0 needs 6 numbers");
  for (int i = 0; i < 6; ++i) spec.xi0[i] = vals[i];

  const auto samples = servo_simulate(spec);
  std::ofstream os =
      open_output(opt.out, "servo_" + file_safe(spec.gen.name()) + "." + opt.format);
  if (opt.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t k = 0; k < samples.size(); ++k) {
      nlohmann::json row = trajectory_row_json(int(k), "t", samples[k].t, samples[k].pose);
      row["error_norm"] = samples[k].error_norm;
      rows.push_back(std::move(row));
    }
    os << rows.dump(2) << '\n';
  } else {
    os << "step,t,tx,ty,tz,C00,C01,C02,C10,C11,C12,C20,C21,C22,error_norm\n";
    for (std::size_t k = 0; k < samples.size(); ++k) {
      write_trajectory_row(os, int(k), samples[k].t, samples[k].pose);
      os << ',' << samples[k].error_norm << '\n';
    }
  }
  return 0;
}

// ---- align -----------------------------------------------------------------

struct AlignOptions {
  std::uint64_t seed = 42;
  int trials = 1000;
  std::string solvers = "expmap,cayper";
  int threads = 1;
  std::string out = ".";
};

int cmd_align(const AlignOptions& opt) {
  ExperimentConfig config;
  config.seed = opt.seed;
  config.trials = opt.trials;
  config.threads = opt.threads;
  config.solvers.clear();
  std::stringstream ss(opt.solvers);
  std::string name;
  while (std::getline(ss, name, ',')) config.solvers.push_back(SolverConfig::parse(name));
  if (config.solvers.empty()) throw CLI::ValidationError("--solvers must name at least one solver");

  const ExperimentReport report = run_experiment(config);
  {
    std::ofstream os = open_output(opt.out, "align_report.json");
    write_report_json(report, os);
  }
  {
    std::ofstream os = open_output(opt.out, "align_costs.csv");
    write_cost_history_csv(report, os);
  }
  for (const SolverSummary& s : report.per_solver) {
    std::cout << s.solver << ": success rate " << 100.0 * s.success_rate << "%, mean iterations "
              << s.mean_iterations << ", max iterations " << s.max_iterations << '\n';
  }
  return 0;
}

// ---- map -------------------------------------------------------------------

struct MapOptions {
  std::string gen = "rotvec";
  std::string coupling = "screw";
  std::string to = "pose";
  std::string input;
};

int cmd_map(const MapOptions& opt) {
  const GeneratingFunction gen = GeneratingFunction::parse(opt.gen);
  const CouplingChoice coupling = CouplingChoice::parse(opt.coupling);
  std::string text = opt.input;
  if (text.empty()) {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  }
  if (opt.to == "pose") {
    print_matrix(pose_from_vec(parse_pose(text, gen, coupling)));
  } else if (opt.to == "adjoint") {
    print_matrix(adjoint_from_vec(parse_pose(text, gen, coupling)));
  } else if (opt.to == "vec") {
    const std::vector<double> vals = parse_numbers(text);
    if (vals.size() != 16) throw CLI::ValidationError("--to vec needs 16 numbers (4x4 matrix)");
    Eigen::Matrix4d T;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) T(r, c) = vals[4 * r + c];
    print_matrix(vec_from_pose(T, gen, coupling).vec().transpose());
  } else {
    throw CLI::ValidationError("--to must be pose, adjoint, or vec");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vectorial pose parameterizations: table checks, interpolation, servoing, "
               "pointcloud-alignment experiments"};
  app.require_subcommand(1);

  // check-tables
  auto* check = app.add_subcommand("check-tables",
                                   "Compare each kernel's closed form against the series map");
  std::vector<std::string> extra_gens;
  double check_tol = 1e-10;
  check->add_option("--gen", extra_gens, "Additional kernels to check (e.g. tan:3)");
  check->add_option("--tol", check_tol, "Per-row max-error threshold");

  // interp
  auto* interp = app.add_subcommand("interp", "Write interpolation trajectories as CSV");
  InterpOptions interp_opt;
  interp->add_option("--gen", interp_opt.gen, "Generating function");
  interp->add_option("--coupling", interp_opt.coupling, "screw, cayley, or explicit:<a>,<c>");
  interp->add_option("--initial", interp_opt.initial, "Initial pose (6 or 16 numbers)")
      ->required();
  interp->add_option("--final", interp_opt.final_, "Final pose (6 or 16 numbers)")->required();
  interp->add_option("--steps", interp_opt.steps, "Samples including endpoints")
      ->check(CLI::Range(2, 1000000));
  interp->add_flag("--all-gens", interp_opt.all_gens, "One file per named kernel");
  interp->add_flag("--swap-endpoints", interp_opt.swap_endpoints,
                   "Start from the initial pose instead of the final one");
  interp->add_option("--out", interp_opt.out, "Output directory");
  interp->add_option("--format", interp_opt.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  // servo
  auto* servo = app.add_subcommand("servo", "Simulate the pose servo and write CSV");
  ServoOptions servo_opt;
  servo->add_option("--gen", servo_opt.gen, "Generating function");
  servo->add_option("--coupling", servo_opt.coupling, "Coupling choice");
  servo->add_option("--gain", servo_opt.gain, "Control gain")->check(CLI::PositiveNumber);
  servo->add_option("--dt", servo_opt.dt, "Time step [s]")->check(CLI::PositiveNumber);
  servo->add_option("--duration", servo_opt.duration, "Duration [s]")->check(CLI::PositiveNumber);
  servo->add_option("--ref-speed", servo_opt.ref_speed, "Reference speed along x [m/s]");
  servo->add_option("--xi0", servo_opt.xi0, "Initial pose vector (6 numbers)");
  servo->add_option("--out", servo_opt.out, "Output directory");
  servo->add_option("--format", servo_opt.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  // align
  auto* align = app.add_subcommand("align", "Run the alignment experiment, write JSON + CSV");
  AlignOptions align_opt;
  align->add_option("--trials", align_opt.trials, "Number of trials")->check(CLI::PositiveNumber);
  align->add_option("--seed", align_opt.seed, "Base random seed");
  align->add_option("--solvers", align_opt.solvers, "Comma list: expmap, cayper, gen:<name>");
  align->add_option("--threads", align_opt.threads, "Worker threads")
      ->check(CLI::Range(1, 256));
  align->add_option("--out", align_opt.out, "Output directory");

  // map
  auto* map = app.add_subcommand("map", "Convert between pose vectors and matrices");
  MapOptions map_opt;
  map->add_option("--gen", map_opt.gen, "Generating function");
  map->add_option("--coupling", map_opt.coupling, "Coupling choice");
  map->add_option("--to", map_opt.to, "pose, adjoint, or vec")->required();
  map->add_option("input", map_opt.input, "Numbers (reads stdin when omitted)");

  try {
    app.parse(argc, argv);
    if (check->parsed()) return cmd_check_tables(extra_gens, check_tol);
    if (interp->parsed()) return cmd_interp(interp_opt);
    if (servo->parsed()) return cmd_servo(servo_opt);
    if (align->parsed()) return cmd_align(align_opt);
    if (map->parsed()) return cmd_map(map_opt);
    return 1;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const SingularityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
