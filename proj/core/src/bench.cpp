#include "momentum_lab/bench.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

#include "momentum_lab/parallel.hpp"

namespace momentum_lab {

namespace {

// Second derivative of the scalar hinge (used for the Newton polish only):
// g''(w) = exp(-r/w) (1 + r/w + r^2/(2 w^2)) for w > 0.
double tmm_scalar_g2(double w, double r) {
  if (w <= 0.0) {
    return 0.0;
  }
  const double t = r / w;
  if (t > 700.0) {
    return 0.0;
  }
  return std::exp(-t) * (1.0 + t + 0.5 * t * t);
}

void validate_spec(const TmmWorstCaseSpec& spec) {
  if (!(spec.r > 0.0) || !std::isfinite(spec.r)) {
    throw std::invalid_argument("make_tmm_oracle: requires r > 0");
  }
  if (!(spec.m > 0.0) || !(spec.L >= spec.m)) {
    throw std::invalid_argument("make_tmm_oracle: requires 0 < m <= L");
  }
  if (spec.dimension < 1) {
    throw std::invalid_argument("make_tmm_oracle: requires dimension >= 1");
  }
  for (const auto& [a, b] : spec.terms) {
    (void)b;
    if (a.size() != spec.dimension) {
      throw std::invalid_argument("make_tmm_oracle: term direction has wrong dimension");
    }
  }
  if (!spec.terms.empty()) {
    Eigen::MatrixXd stacked(static_cast<Eigen::Index>(spec.terms.size()), spec.dimension);
    for (std::size_t i = 0; i < spec.terms.size(); ++i) {
      stacked.row(static_cast<Eigen::Index>(i)) = spec.terms[i].first.transpose();
    }
    const double norm = stacked.jacobiSvd().singularValues()(0);
    if (norm > 1.0 + 1e-9) {
      throw std::invalid_argument(
          "make_tmm_oracle: stacked directions have spectral norm > 1, smoothness bound violated");
    }
    if (norm < 1.0 - 1e-9) {
      std::cerr << "make_tmm_oracle: stacked direction norm " << norm
                << " < 1; curvature never reaches L\n";
    }
  }
}

Eigen::VectorXd tmm_gradient(const TmmWorstCaseSpec& spec, const Eigen::VectorXd& x) {
  Eigen::VectorXd g = spec.m * x;
  for (const auto& [a, b] : spec.terms) {
    const double w = a.dot(x) - b;
    g += (spec.L - spec.m) * tmm_scalar_g(w, spec.r).second * a;
  }
  return g;
}

Eigen::MatrixXd tmm_hessian(const TmmWorstCaseSpec& spec, const Eigen::VectorXd& x) {
  Eigen::MatrixXd h = spec.m * Eigen::MatrixXd::Identity(spec.dimension, spec.dimension);
  for (const auto& [a, b] : spec.terms) {
    const double w = a.dot(x) - b;
    h += (spec.L - spec.m) * tmm_scalar_g2(w, spec.r) * (a * a.transpose());
  }
  return h;
}

Eigen::VectorXd locate_minimizer(const TmmWorstCaseSpec& spec) {
  // Gradient descent with the midpoint step is a global contraction on this
  // strongly convex objective; run it until the gradient is small, then let a
  // few Newton steps with the analytic Hessian polish to machine precision.
  Eigen::VectorXd x = Eigen::VectorXd::Zero(spec.dimension);
  const double step = 2.0 / (spec.m + spec.L);
  const long max_iters = 2'000'000;
  for (long k = 0; k < max_iters; ++k) {
    const Eigen::VectorXd g = tmm_gradient(spec, x);
    if (g.norm() <= 1e-12 * std::max(1.0, spec.m * x.norm())) {
      break;
    }
    x -= step * g;
  }
  for (int k = 0; k < 50; ++k) {
    const Eigen::VectorXd g = tmm_gradient(spec, x);
    const Eigen::VectorXd candidate = x - tmm_hessian(spec, x).ldlt().solve(g);
    if (tmm_gradient(spec, candidate).norm() >= g.norm()) {
      break;
    }
    x = candidate;
  }
  if (!(tmm_gradient(spec, x).norm() <= 1e-12 * std::max(1.0, spec.m * x.norm()))) {
    throw std::runtime_error("make_tmm_oracle: minimizer location failed");
  }
  return x;
}

}  // namespace

std::pair<double, double> tmm_scalar_g(double w, double r) {
  if (w <= 0.0) {
    return {0.0, 0.0};
  }
  const double t = r / w;
  if (t > 700.0) {
    return {0.0, 0.0};  // exp underflows; the hinge is numerically flat here
  }
  const double e = std::exp(-t);
  return {0.5 * w * w * e, e * (w + 0.5 * r)};
}

TmmWorstCaseSpec tmm_reference_spec(double m, double L) {
  TmmWorstCaseSpec spec;
  spec.m = m;
  spec.L = L;
  spec.r = 1e-3;
  spec.dimension = 2;
  Eigen::VectorXd a1(2), a2(2);
  a1 << 1.0, 0.0;
  a2 << 0.0, 0.002;
  spec.terms.emplace_back(a1, -100.0);
  spec.terms.emplace_back(a2, -100.0);
  return spec;
}

FunctionOracle make_tmm_oracle(const TmmWorstCaseSpec& spec) {
  validate_spec(spec);
  FunctionOracle oracle;
  oracle.dimension = spec.dimension;
  oracle.m = spec.m;
  oracle.L = spec.L;
  oracle.value = [spec](const Eigen::VectorXd& x) {
    double f = 0.5 * spec.m * x.squaredNorm();
    for (const auto& [a, b] : spec.terms) {
      f += (spec.L - spec.m) * tmm_scalar_g(a.dot(x) - b, spec.r).first;
    }
    return f;
  };
  oracle.gradient = [spec](const Eigen::VectorXd& x) { return tmm_gradient(spec, x); };
  oracle.minimizer = locate_minimizer(spec);
  return oracle;
}

FunctionOracle make_quadratic_oracle(const std::vector<double>& eigs,
                                     const Eigen::VectorXd& x_star) {
  if (eigs.empty() || static_cast<Eigen::Index>(eigs.size()) != x_star.size()) {
    throw std::invalid_argument("make_quadratic_oracle: eigs/x_star size mismatch");
  }
  Eigen::VectorXd lambda(x_star.size());
  for (std::size_t i = 0; i < eigs.size(); ++i) {
    if (!(eigs[i] > 0.0)) {
      throw std::invalid_argument("make_quadratic_oracle: eigenvalues must be positive");
    }
    lambda(static_cast<Eigen::Index>(i)) = eigs[i];
  }
  FunctionOracle oracle;
  oracle.dimension = static_cast<int>(x_star.size());
  oracle.m = lambda.minCoeff();
  oracle.L = lambda.maxCoeff();
  oracle.minimizer = x_star;
  oracle.value = [lambda, x_star](const Eigen::VectorXd& x) {
    return 0.5 * lambda.cwiseProduct((x - x_star).cwiseAbs2()).sum();
  };
  oracle.gradient = [lambda, x_star](const Eigen::VectorXd& x) {
    return lambda.cwiseProduct(x - x_star).eval();
  };
  return oracle;
}

ExperimentResult run_experiment(const std::vector<Method>& methods, const FunctionOracle& oracle,
                                const Eigen::VectorXd& x0, int iters) {
  if (!(oracle.m > 0.0) || !(oracle.L >= oracle.m)) {
    throw std::invalid_argument("run_experiment: oracle lacks a valid (m, L) class");
  }
  ExperimentResult result;
  result.rate_gd = schedule(Method::GD, oracle.m, oracle.L).params.rho;
  result.rate_hb = schedule(Method::HB, oracle.m, oracle.L).params.rho;
  result.rate_tm = schedule(Method::TM, oracle.m, oracle.L).params.rho;

  result.runs.resize(methods.size());
  parallel_for(methods.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      MethodRun& mr = result.runs[i];
      mr.schedule = schedule(methods[i], oracle.m, oracle.L);
      mr.trajectory = run(mr.schedule.params, oracle, x0, iters, 0.0);
      mr.diverged = mr.trajectory.diverged_at.has_value();
      try {
        mr.estimated_rate = estimate_rate(mr.trajectory, 0.5, 1e-12);
      } catch (const std::runtime_error&) {
        mr.estimated_rate = std::nullopt;
      }
    }
  });
  return result;
}

}  // namespace momentum_lab
