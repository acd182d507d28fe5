#include <benchmark/benchmark.h>

#include <complex>

#include "momentum_lab/bench.hpp"
#include "momentum_lab/certificates.hpp"
#include "momentum_lab/polynomial.hpp"
#include "momentum_lab/schedules.hpp"

namespace {

using namespace momentum_lab;

void BM_build_p_and_sturm_chain(benchmark::State& state) {
  const rational kappa(100);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sturm_chain(build_p(kappa)));
  }
}
BENCHMARK(BM_build_p_and_sturm_chain);

void BM_sturm_window_count(benchmark::State& state) {
  const SturmChain chain = sturm_chain(build_p(rational(100)));
  const rational lo(9, 11);
  const rational hi(8585786, 10000000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_roots(chain, lo, hi));
  }
}
BENCHMARK(BM_sturm_window_count);

void BM_rho_c2m_kappa_1e4(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(rho_c2m(1e4));
  }
}
BENCHMARK(BM_rho_c2m_kappa_1e4);

void BM_worst_case_rate(benchmark::State& state) {
  const AlgorithmParams params = schedule(Method::C2M, 1.0, 100.0).params;
  for (auto _ : state) {
    benchmark::DoNotOptimize(worst_case_rate(params));
  }
}
BENCHMARK(BM_worst_case_rate);

void BM_fdi_sweep_8192(benchmark::State& state) {
  const AlgorithmParams params = schedule(Method::C2M, 1.0, 100.0).params;
  const Multiplier multiplier{params.m, params.L, Multiplier::Kind::UnitDelay};
  for (auto _ : state) {
    double max_value = -1e300;
    for (int j = 0; j < 8192; ++j) {
      const double theta = 3.141592653589793 * j / 8191.0;
      max_value = std::max(max_value, fdi_value(params, multiplier, std::polar(1.0, theta)));
    }
    benchmark::DoNotOptimize(max_value);
  }
}
BENCHMARK(BM_fdi_sweep_8192);

void BM_certify_c2m(benchmark::State& state) {
  const AlgorithmParams params = schedule(Method::C2M, 1.0, 100.0).params;
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify(params));
  }
}
BENCHMARK(BM_certify_c2m);

void BM_tmm_gradient(benchmark::State& state) {
  const FunctionOracle oracle = make_tmm_oracle(tmm_reference_spec());
  Eigen::VectorXd x(2);
  x << -50.0, -120.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle.gradient(x));
  }
}
BENCHMARK(BM_tmm_gradient);

void BM_run_c2m_10k_iters(benchmark::State& state) {
  const FunctionOracle oracle = make_tmm_oracle(tmm_reference_spec());
  const AlgorithmParams params = schedule(Method::C2M, oracle.m, oracle.L).params;
  const Eigen::VectorXd x0 = Eigen::VectorXd::Zero(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run(params, oracle, x0, 10000, 0.0));
  }
}
BENCHMARK(BM_run_c2m_10k_iters);

void BM_estimate_rate_10k(benchmark::State& state) {
  const FunctionOracle oracle = make_tmm_oracle(tmm_reference_spec());
  const AlgorithmParams params = schedule(Method::C2M, oracle.m, oracle.L).params;
  const Trajectory traj = run(params, oracle, Eigen::VectorXd::Zero(2), 10000, 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_rate(traj, 0.5, 1e-12));
  }
}
BENCHMARK(BM_estimate_rate_10k);

}  // namespace

BENCHMARK_MAIN();
