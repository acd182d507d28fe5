#pragma once

#include <Eigen/Dense>
#include <optional>
#include <utility>
#include <vector>

#include "momentum_lab/algorithm.hpp"
#include "momentum_lab/schedules.hpp"

namespace momentum_lab {

// Scalar hinge used by the worst-case family:
//   g(w) = (1/2) w^2 exp(-r / w)  for w > 0,   g(w) = 0 for w <= 0,
//   g'(w) = exp(-r / w) (w + r/2) for w > 0,   g'(w) = 0 otherwise.
// g is C^2 with g'' in [0, 1), rising monotonically from flat (curvature 0)
// to quadratic (curvature -> 1) as w grows; r > 0 controls how sharp the
// transition is.  Returns (value, derivative).
std::pair<double, double> tmm_scalar_g(double w, double r);

// The smooth worst-case objective
//   f(x) = (L - m) * sum_i g(a_i^T x - b_i) + (m/2) ||x||^2
// on R^dimension.  Each coordinate direction crosses a single hinge, so the
// local curvature along a_i sweeps from m to m + (L - m) ||a_i||^2 as the
// iterate passes the hinge — the curvature pattern that drives momentum
// methods through their worst-case behavior.
struct TmmWorstCaseSpec {
  double m = 0.0;
  double L = 0.0;
  double r = 0.0;
  int dimension = 0;
  std::vector<std::pair<Eigen::VectorXd, double>> terms;  // (a_i, b_i)
};

// Canonical two-term configuration on R^2: r = 1e-3,
// a_1 = (1, 0) with b_1 = -100, a_2 = (0, 0.002) with b_2 = -100.
// Both hinges separate the start x_0 = 0 from the minimizer, so every method
// must traverse the full curvature transition of each.
TmmWorstCaseSpec tmm_reference_spec(double m = 1e-3, double L = 1.0);

// Builds the oracle for a worst-case spec.  Validates r > 0, 0 < m <= L,
// dimension >= 1, and that every a_i has the right size.  The stacked rows
// a_i^T must have spectral norm at most 1 (+1e-9 slack;
// std::invalid_argument otherwise) so that f is L-smooth; a norm below
// 1 - 1e-9 leaves slack to the smoothness bound and triggers a warning on
// stderr.  The minimizer is located once (gradient descent to high accuracy,
// then Newton polish with the analytic Hessian) and cached on the returned
// oracle; location failure is a std::runtime_error.
FunctionOracle make_tmm_oracle(const TmmWorstCaseSpec& spec);

// Diagonal quadratic (1/2) sum_i eigs[i] (x_i - x_star_i)^2 with exact
// gradient and known minimizer.  All eigenvalues must be positive.
FunctionOracle make_quadratic_oracle(const std::vector<double>& eigs,
                                     const Eigen::VectorXd& x_star);

// One method's result within an experiment.
struct MethodRun {
  MethodSchedule schedule;
  Trajectory trajectory;
  std::optional<double> estimated_rate;  // absent when the noise floor is hit
                                         // too early to fit a slope
  bool diverged = false;
};

// A side-by-side experiment plus the designed reference rates of the
// closed-form tunings for this (m, L) class.
struct ExperimentResult {
  std::vector<MethodRun> runs;
  double rate_gd = 0.0;
  double rate_hb = 0.0;
  double rate_tm = 0.0;
};

// Runs every requested method from x_0 (with x_{-1} = x_0) for `iters`
// steps on the oracle, estimating observed rates over the trailing half of
// the valid samples with a relative noise floor of 1e-12 * errors[0].
// Methods run in parallel; results are ordered as requested and fully
// deterministic.
ExperimentResult run_experiment(const std::vector<Method>& methods, const FunctionOracle& oracle,
                                const Eigen::VectorXd& x0, int iters);

}  // namespace momentum_lab
