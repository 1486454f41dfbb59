#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "vecpose/experiment.hpp"
#include "vecpose/matrix_exp.hpp"

using namespace vecpose;

namespace {

constexpr double kPi = std::numbers::pi;

GeneratingFunction gen_for(int index) {
  switch (index) {
    case 0: return GeneratingFunction::rotation_vector();
    case 1: return GeneratingFunction::cayley_gibbs_rodrigues();
    case 2: return GeneratingFunction::modified_rodrigues();
    case 3: return GeneratingFunction::euler_rodrigues();
    default: return GeneratingFunction::bauchau_trainelli();
  }
}

PoseVector6 sample_pose(const GeneratingFunction& gen) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  PoseVector6 xi;
  xi.gen = gen;
  Eigen::Vector3d axis(u(rng), u(rng), u(rng));
  axis.normalize();
  xi.phi = gen.eval_phi(0.8) * axis;
  xi.rho << u(rng), u(rng), u(rng);
  return xi;
}

void BM_RotFromVec(benchmark::State& state) {
  const auto gen = gen_for(int(state.range(0)));
  const PoseVector6 xi = sample_pose(gen);
  for (auto _ : state) benchmark::DoNotOptimize(rot_from_vec({xi.phi, gen}));
  state.SetLabel(gen.name());
}
BENCHMARK(BM_RotFromVec)->DenseRange(0, 4);

void BM_RotExpOracle(benchmark::State& state) {
  const PoseVector6 xi = sample_pose(GeneratingFunction::rotation_vector());
  const Eigen::Matrix3d P = hat3(xi.phi);
  for (auto _ : state) benchmark::DoNotOptimize(matrix_exp<double, 3>(P));
}
BENCHMARK(BM_RotExpOracle);

void BM_PoseFromVec(benchmark::State& state) {
  const auto gen = gen_for(int(state.range(0)));
  const PoseVector6 xi = sample_pose(gen);
  for (auto _ : state) benchmark::DoNotOptimize(pose_from_vec(xi));
  state.SetLabel(gen.name());
}
BENCHMARK(BM_PoseFromVec)->DenseRange(0, 4);

void BM_AdjointFromVec(benchmark::State& state) {
  const PoseVector6 xi = sample_pose(gen_for(int(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(adjoint_from_vec(xi));
  state.SetLabel(xi.gen.name());
}
BENCHMARK(BM_AdjointFromVec)->DenseRange(0, 4);

void BM_VecFromPose(benchmark::State& state) {
  const PoseVector6 xi = sample_pose(GeneratingFunction::modified_rodrigues());
  const Eigen::Matrix4d T = pose_from_vec(xi);
  for (auto _ : state)
    benchmark::DoNotOptimize(vec_from_pose(T, xi.gen, xi.coupling));
}
BENCHMARK(BM_VecFromPose);

void BM_PoseCayley(benchmark::State& state) {
  const PoseVector6 xi = sample_pose(GeneratingFunction::cayley_gibbs_rodrigues());
  const Vector6d v = xi.vec();
  for (auto _ : state) benchmark::DoNotOptimize(pose_cayley_higher(v, 1));
}
BENCHMARK(BM_PoseCayley);

void BM_CompoundPose(benchmark::State& state) {
  const PoseVector6 x1 = sample_pose(GeneratingFunction::rotation_vector());
  PoseVector6 x2 = x1;
  x2.rho.reverseInPlace();
  for (auto _ : state) benchmark::DoNotOptimize(compound_pose(x1, x2));
}
BENCHMARK(BM_CompoundPose);

void BM_SolverIteration(benchmark::State& state) {
  ExperimentConfig config;
  config.seed = 3;
  const TrialData data = make_trial(config, 0);
  const bool cayper = state.range(0) == 1;
  SolverConfig solver = cayper ? SolverConfig::cayper() : SolverConfig::expmap();
  solver.max_iters = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(solve(data.problem, data.T_init, solver));
  state.SetLabel(cayper ? "cayper" : "expmap");
}
BENCHMARK(BM_SolverIteration)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
