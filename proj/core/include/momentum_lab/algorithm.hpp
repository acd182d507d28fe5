#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace momentum_lab {

// The method family implemented here is the three-parameter momentum iteration
//   y_k     = x_k + eta * (x_k - x_{k-1})
//   u_k     = grad f(y_k)
//   x_{k+1} = x_k + beta * (x_k - x_{k-1}) - alpha * u_k
// with x_{-1} = x_0 by default.  Gradient descent (eta = beta = 0), the
// heavy-ball method (eta = 0), and the triple-momentum method are special
// cases of the parameterization.
enum class Method { GD, HB, TM, C2M, Custom };

std::string_view method_name(Method method);              // "gd", "hb", ...
std::optional<Method> method_from_string(std::string_view name);

// Parameters of one concrete iteration on the class of m-strongly-convex,
// L-smooth functions, together with the convergence rate rho the tuning is
// designed to achieve.
struct AlgorithmParams {
  double alpha = 0.0;  // step size, > 0
  double beta = 0.0;   // state momentum
  double eta = 0.0;    // gradient-extrapolation momentum
  double m = 1.0;      // strong-convexity modulus, 0 < m <= L
  double L = 1.0;      // smoothness modulus
  double rho = 0.0;    // designed convergence rate, 0 <= rho < 1
  Method method_tag = Method::Custom;

  double kappa() const { return L / m; }
  // Throws std::invalid_argument when a field is outside its admissible range.
  void validate() const;
};

// Linear-system view of the iteration: state xi_k = (x_k, x_{k-1}) per
// coordinate, xi_{k+1} = A xi_k + B u_k, y_k = C xi_k, with
//   A = [[1+beta, -beta], [1, 0]],  B = [-alpha, 0]^T,  C = [1+eta, -eta].
struct StateSpace {
  Eigen::Matrix2d A;
  Eigen::Vector2d B;
  Eigen::RowVector2d C;
};

StateSpace make_state_space(const AlgorithmParams& params);

// Transfer function of the iteration from gradient input to extrapolated
// output,
//   g(z) = -alpha ((1+eta) z - eta) / ((z - 1)(z - beta)),
// equal to C (zI - A)^{-1} B.  Throws std::domain_error at the poles
// z = 1 and z = beta.
std::complex<double> transfer_g(const AlgorithmParams& params, std::complex<double> z);

// Analytic derivative dg/dz (same pole preconditions).
std::complex<double> transfer_g_derivative(const AlgorithmParams& params, std::complex<double> z);

// A differentiable objective presented to the iteration.  `value` and
// `gradient` must be consistent: a central finite-difference check with step
// 1e-5 should match `gradient` to about 1e-6 relative accuracy at generic
// points.  `minimizer`, when present, enables exact error tracking.
struct FunctionOracle {
  int dimension = 0;
  std::function<double(const Eigen::VectorXd&)> value;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> gradient;
  std::optional<Eigen::VectorXd> minimizer;
  double m = 0.0;  // strong-convexity modulus of the objective
  double L = 0.0;  // smoothness modulus of the objective
};

// Max relative error between `oracle.gradient` and a central finite difference
// of `oracle.value` with step h, over the coordinates at x.
double check_gradient(const FunctionOracle& oracle, const Eigen::VectorXd& x, double h = 1e-5);

// Record of one run.  iterates[k] is x_k (iterates[0] = x_0).  When the
// oracle's minimizer is known, errors[k] = ||x_k - x*||; otherwise errors[k]
// is the gradient norm ||grad f(x_k)|| measured at the iterate.  All recorded
// errors are finite and nonnegative; divergence truncates the record instead.
struct Trajectory {
  std::vector<Eigen::VectorXd> iterates;
  std::vector<double> errors;
  long gradient_evaluations = 0;
  // Index the first non-finite or overflowing (norm > 1e150) iterate would
  // have had; the trajectory ends at the last finite iterate before it.
  std::optional<std::size_t> diverged_at;
};

// Runs the iteration from (x0, x_minus1) for at most max_iters steps.
// Stops early when the error measure drops to stop_tol or below: distance to
// the minimizer when the oracle provides one, the norm of the current gradient
// u_k otherwise.  Throws std::invalid_argument on dimension mismatches or
// max_iters < 0.
Trajectory run(const AlgorithmParams& params, const FunctionOracle& oracle,
               const Eigen::VectorXd& x0, const Eigen::VectorXd& x_minus1, int max_iters,
               double stop_tol);

// Same with the canonical initialization x_{-1} = x_0.
Trajectory run(const AlgorithmParams& params, const FunctionOracle& oracle,
               const Eigen::VectorXd& x0, int max_iters, double stop_tol);

// Observed linear convergence rate: exp of the least-squares slope of
// log(errors[k]) against k over the trailing `window_fraction` of the valid
// samples.  A sample is valid when its error is strictly below errors[0] and
// strictly above the noise floor
//   max(1e-300, 100 * eps * errors[0], relative_floor * errors[0]).
// At least 10 valid samples are required (std::runtime_error otherwise);
// window_fraction must lie in (0, 1].
double estimate_rate(const Trajectory& trajectory, double window_fraction = 0.5,
                     double relative_floor = 0.0);

}  // namespace momentum_lab
