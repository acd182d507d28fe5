#include "momentum_lab/algorithm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace momentum_lab {

namespace {

constexpr double kDivergenceNorm = 1e150;

}  // namespace

std::string_view method_name(Method method) {
  switch (method) {
    case Method::GD: return "gd";
    case Method::HB: return "hb";
    case Method::TM: return "tm";
    case Method::C2M: return "c2m";
    case Method::Custom: return "custom";
  }
  return "custom";
}

std::optional<Method> method_from_string(std::string_view name) {
  if (name == "gd") return Method::GD;
  if (name == "hb") return Method::HB;
  if (name == "tm") return Method::TM;
  if (name == "c2m") return Method::C2M;
  if (name == "custom") return Method::Custom;
  return std::nullopt;
}

void AlgorithmParams::validate() const {
  const auto bad = [](double v) { return !std::isfinite(v); };
  if (bad(alpha) || bad(beta) || bad(eta) || bad(m) || bad(L) || bad(rho)) {
    throw std::invalid_argument("AlgorithmParams: non-finite field");
  }
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("AlgorithmParams: alpha must be positive");
  }
  if (!(m > 0.0) || !(L >= m)) {
    throw std::invalid_argument("AlgorithmParams: requires 0 < m <= L");
  }
  if (!(rho >= 0.0) || !(rho < 1.0)) {
    throw std::invalid_argument("AlgorithmParams: requires 0 <= rho < 1");
  }
}

StateSpace make_state_space(const AlgorithmParams& params) {
  StateSpace ss;
  ss.A << 1.0 + params.beta, -params.beta, 1.0, 0.0;
  ss.B << -params.alpha, 0.0;
  ss.C << 1.0 + params.eta, -params.eta;
  return ss;
}

std::complex<double> transfer_g(const AlgorithmParams& params, std::complex<double> z) {
  const std::complex<double> one{1.0, 0.0};
  const std::complex<double> beta{params.beta, 0.0};
  if (z == one || z == beta) {
    throw std::domain_error("transfer_g: z coincides with a pole");
  }
  const std::complex<double> numerator = -params.alpha * ((1.0 + params.eta) * z - params.eta);
  return numerator / ((z - one) * (z - beta));
}

std::complex<double> transfer_g_derivative(const AlgorithmParams& params, std::complex<double> z) {
  const std::complex<double> one{1.0, 0.0};
  const std::complex<double> beta{params.beta, 0.0};
  if (z == one || z == beta) {
    throw std::domain_error("transfer_g_derivative: z coincides with a pole");
  }
  const std::complex<double> n = -params.alpha * ((1.0 + params.eta) * z - params.eta);
  const std::complex<double> np = std::complex<double>{-params.alpha * (1.0 + params.eta), 0.0};
  const std::complex<double> d = (z - one) * (z - beta);
  const std::complex<double> dp = 2.0 * z - (1.0 + params.beta);
  return (np * d - n * dp) / (d * d);
}

double check_gradient(const FunctionOracle& oracle, const Eigen::VectorXd& x, double h) {
  if (!(h > 0.0)) {
    throw std::invalid_argument("check_gradient: h must be positive");
  }
  if (x.size() != oracle.dimension) {
    throw std::invalid_argument("check_gradient: dimension mismatch");
  }
  const Eigen::VectorXd g = oracle.gradient(x);
  double worst = 0.0;
  Eigen::VectorXd probe = x;
  for (int i = 0; i < x.size(); ++i) {
    probe(i) = x(i) + h;
    const double fp = oracle.value(probe);
    probe(i) = x(i) - h;
    const double fm = oracle.value(probe);
    probe(i) = x(i);
    const double fd = (fp - fm) / (2.0 * h);
    worst = std::max(worst, std::abs(fd - g(i)) / std::max(1.0, std::abs(g(i))));
  }
  return worst;
}

Trajectory run(const AlgorithmParams& params, const FunctionOracle& oracle,
               const Eigen::VectorXd& x0, const Eigen::VectorXd& x_minus1, int max_iters,
               double stop_tol) {
  params.validate();
  if (oracle.dimension <= 0) {
    throw std::invalid_argument("run: oracle dimension must be positive");
  }
  if (x0.size() != oracle.dimension || x_minus1.size() != oracle.dimension) {
    throw std::invalid_argument("run: initial point dimension mismatch");
  }
  if (oracle.minimizer && oracle.minimizer->size() != oracle.dimension) {
    throw std::invalid_argument("run: minimizer dimension mismatch");
  }
  if (max_iters < 0) {
    throw std::invalid_argument("run: max_iters must be nonnegative");
  }

  Trajectory traj;
  traj.iterates.reserve(static_cast<std::size_t>(max_iters) + 1);
  traj.errors.reserve(static_cast<std::size_t>(max_iters) + 1);

  const auto error_at = [&](const Eigen::VectorXd& x) -> double {
    if (oracle.minimizer) {
      return (x - *oracle.minimizer).norm();
    }
    ++traj.gradient_evaluations;
    return oracle.gradient(x).norm();
  };

  double err = error_at(x0);
  if (!std::isfinite(err)) {
    traj.diverged_at = 0;
    return traj;
  }
  traj.iterates.push_back(x0);
  traj.errors.push_back(err);
  if (err <= stop_tol) {
    return traj;
  }

  Eigen::VectorXd x_prev = x_minus1;
  Eigen::VectorXd x_cur = x0;
  for (int k = 0; k < max_iters; ++k) {
    const Eigen::VectorXd y = x_cur + params.eta * (x_cur - x_prev);
    const Eigen::VectorXd u = oracle.gradient(y);
    ++traj.gradient_evaluations;
    Eigen::VectorXd x_next = x_cur + params.beta * (x_cur - x_prev) - params.alpha * u;
    if (!x_next.allFinite() || x_next.norm() > kDivergenceNorm) {
      traj.diverged_at = traj.iterates.size();
      break;
    }
    err = error_at(x_next);
    if (!std::isfinite(err)) {
      traj.diverged_at = traj.iterates.size();
      break;
    }
    traj.iterates.push_back(x_next);
    traj.errors.push_back(err);
    x_prev = std::move(x_cur);
    x_cur = std::move(x_next);
    if (err <= stop_tol) {
      break;
    }
  }
  return traj;
}

Trajectory run(const AlgorithmParams& params, const FunctionOracle& oracle,
               const Eigen::VectorXd& x0, int max_iters, double stop_tol) {
  return run(params, oracle, x0, x0, max_iters, stop_tol);
}

double estimate_rate(const Trajectory& trajectory, double window_fraction, double relative_floor) {
  if (!(window_fraction > 0.0) || !(window_fraction <= 1.0)) {
    throw std::invalid_argument("estimate_rate: window_fraction must lie in (0, 1]");
  }
  if (!(relative_floor >= 0.0)) {
    throw std::invalid_argument("estimate_rate: relative_floor must be nonnegative");
  }
  const auto& errors = trajectory.errors;
  if (errors.empty() || !(errors.front() > 0.0)) {
    throw std::runtime_error("estimate_rate: trajectory has no positive initial error");
  }
  const double err0 = errors.front();
  const double eps = std::numeric_limits<double>::epsilon();
  const double floor = std::max({1e-300, 100.0 * eps * err0, relative_floor * err0});

  std::vector<std::pair<std::size_t, double>> samples;  // (k, log(errors[k]))
  for (std::size_t k = 1; k < errors.size(); ++k) {
    if (errors[k] < err0 && errors[k] > floor) {
      samples.emplace_back(k, std::log(errors[k]));
    }
  }
  if (samples.size() < 10) {
    throw std::runtime_error("estimate_rate: fewer than 10 samples above the noise floor");
  }
  std::size_t take = static_cast<std::size_t>(
      std::ceil(window_fraction * static_cast<double>(samples.size())));
  take = std::clamp<std::size_t>(take, 10, samples.size());
  const std::size_t first = samples.size() - take;

  double mean_k = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = first; i < samples.size(); ++i) {
    mean_k += static_cast<double>(samples[i].first);
    mean_y += samples[i].second;
  }
  mean_k /= static_cast<double>(take);
  mean_y /= static_cast<double>(take);
  double cov = 0.0;
  double var = 0.0;
  for (std::size_t i = first; i < samples.size(); ++i) {
    const double dk = static_cast<double>(samples[i].first) - mean_k;
    cov += dk * (samples[i].second - mean_y);
    var += dk * dk;
  }
  if (!(var > 0.0)) {
    throw std::runtime_error("estimate_rate: degenerate sample window");
  }
  return std::exp(cov / var);
}

}  // namespace momentum_lab
