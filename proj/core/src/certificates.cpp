#include "momentum_lab/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "momentum_lab/parallel.hpp"
#include "momentum_lab/schedules.hpp"

namespace momentum_lab {

namespace {

constexpr double kJuryTolerance = -1e-12;
constexpr std::size_t kFdiGridSize = 8192;

double radius_from_quadratic(double a1, double a0) {
  const double disc = a1 * a1 - 4.0 * a0;
  if (disc >= 0.0) {
    const double s = std::sqrt(disc);
    return std::max(std::abs((-a1 + s) / 2.0), std::abs((-a1 - s) / 2.0));
  }
  return std::sqrt(a0);  // complex pair: a0 > 0 whenever disc < 0
}

// Golden-section maximization on [lo, hi] for a unimodal-on-bracket function.
template <typename F>
std::pair<double, double> golden_max(const F& f, double lo, double hi, double tol) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int iter = 0; iter < 200 && (b - a) > tol; ++iter) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  const double q = 0.5 * (a + b);
  return {f(q), q};
}

}  // namespace

std::pair<double, double> closed_loop_char_poly(const AlgorithmParams& params, double q) {
  const double a1 = q * params.alpha * (1.0 + params.eta) - (1.0 + params.beta);
  const double a0 = params.beta - q * params.alpha * params.eta;
  return {a1, a0};
}

double closed_loop_spectral_radius(const AlgorithmParams& params, double q) {
  const auto [a1, a0] = closed_loop_char_poly(params, q);
  return radius_from_quadratic(a1, a0);
}

JuryReport jury_rho_disk(const AlgorithmParams& params, double rho) {
  if (!(rho >= 0.0) || !(rho < 1.0)) {
    throw std::invalid_argument("jury_rho_disk: requires 0 <= rho < 1");
  }
  const double alpha = params.alpha;
  const double beta = params.beta;
  const double eta = params.eta;
  JuryReport report;
  std::size_t idx = 0;
  for (double q : {params.m, params.L}) {
    report.margins[idx++] = (1.0 - rho) * (beta - rho) + alpha * (eta * rho - eta + rho) * q;
    report.margins[idx++] = (1.0 + rho) * (beta + rho) - alpha * (eta * rho + eta + rho) * q;
    report.margins[idx++] = rho * rho + beta - alpha * eta * q;
    report.margins[idx++] = rho * rho - beta + alpha * eta * q;
  }
  report.pass = std::all_of(report.margins.begin(), report.margins.end(),
                            [](double v) { return v >= kJuryTolerance; });
  return report;
}

std::pair<double, double> worst_case_rate(const AlgorithmParams& params) {
  const double m = params.m;
  const double L = params.L;
  const auto radius = [&params](double q) { return closed_loop_spectral_radius(params, q); };
  if (L == m) {
    return {radius(m), m};
  }

  std::vector<double> candidate_q = {m, L};

  // Gains where the eigenvalues switch between a real pair and a complex
  // pair: roots of the discriminant, a quadratic in q.
  {
    const double ae = params.alpha * (1.0 + params.eta);
    const double A2 = ae * ae;
    const double A1 = -2.0 * ae * (1.0 + params.beta) + 4.0 * params.alpha * params.eta;
    const double A0 = (1.0 - params.beta) * (1.0 - params.beta);
    const double disc = A1 * A1 - 4.0 * A2 * A0;
    if (A2 > 0.0 && disc >= 0.0) {
      const double s = std::sqrt(disc);
      for (double root : {(-A1 - s) / (2.0 * A2), (-A1 + s) / (2.0 * A2)}) {
        if (root > m && root < L) {
          candidate_q.push_back(root);
        }
      }
    }
  }

  // Dense grid plus local refinement.
  constexpr int kGrid = 4096;
  std::vector<double> grid_value(kGrid);
  const auto q_at = [&](int i) {
    return m + (L - m) * static_cast<double>(i) / static_cast<double>(kGrid - 1);
  };
  for (int i = 0; i < kGrid; ++i) {
    grid_value[i] = radius(q_at(i));
  }
  const double refine_tol = 1e-12 * (L - m) + 1e-18;
  for (int i = 1; i + 1 < kGrid; ++i) {
    if (grid_value[i] >= grid_value[i - 1] && grid_value[i] >= grid_value[i + 1]) {
      candidate_q.push_back(golden_max(radius, q_at(i - 1), q_at(i + 1), refine_tol).second);
    }
  }
  for (int i = 0; i < kGrid; ++i) {
    candidate_q.push_back(q_at(i));
  }

  std::sort(candidate_q.begin(), candidate_q.end());
  double best_rate = -1.0;
  double best_q = m;
  for (double q : candidate_q) {
    const double r = radius(q);
    if (r > best_rate) {  // strict: ties keep the smallest q
      best_rate = r;
      best_q = q;
    }
  }
  return {best_rate, best_q};
}

std::array<double, 3> rootlocus_residuals(const AlgorithmParams& params, double rho) {
  const auto chi = [&params](double z, double q) {
    const auto [a1, a0] = closed_loop_char_poly(params, q);
    return z * z + a1 * z + a0;
  };
  std::array<double, 3> r{};
  r[0] = chi(rho, params.m);
  r[1] = chi(-rho, params.L);
  // Breakaway condition in polynomial form: chi'(rho; m) = 2 rho + a1(m).
  // Together with r[0] = 0 this makes rho a double eigenvalue of the slow
  // extreme loop, which is equivalent to g'(rho) = 0 but stays finite at the
  // transfer-function poles.
  r[2] = 2.0 * rho + closed_loop_char_poly(params, params.m).first;
  return r;
}

double fdi_value(const AlgorithmParams& params, const Multiplier& multiplier,
                 std::complex<double> z) {
  const double m = multiplier.m;
  const double L = multiplier.L;
  const std::complex<double> n = -params.alpha * ((1.0 + params.eta) * z - params.eta);
  const std::complex<double> zb = z - params.beta;
  const std::complex<double> z1 = z - 1.0;
  const double cross = 2.0 * std::real(std::conj(n) * (L * z - m) * zb);
  return -m * L * std::norm(n) + cross - std::norm(z1) * std::norm(zb);
}

double fdi_reduced(double kappa, double rho, double x) {
  const double w = (1.0 - rho) * (1.0 - rho);
  const double a = -4.0 * rho * (kappa * w - (1.0 + rho));
  const double b = -2.0 * (1.0 - rho) * (kappa * w * (1.0 + 2.0 * rho) - (1.0 + rho) * (1.0 + rho));
  const double c = -(1.0 + rho) *
                   (kappa * w * (1.0 - 4.0 * rho + rho * rho) + 6.0 * rho - 2.0 * rho * rho * rho);
  return (a * x + b) * x + c;
}

std::pair<double, double> fdi_reduced_max(double kappa, double rho) {
  double best_x = -1.0;
  double best = fdi_reduced(kappa, rho, -1.0);
  const double at_one = fdi_reduced(kappa, rho, 1.0);
  if (at_one > best) {
    best = at_one;
    best_x = 1.0;
  }
  const double w = (1.0 - rho) * (1.0 - rho);
  const double a = -4.0 * rho * (kappa * w - (1.0 + rho));
  const double b = -2.0 * (1.0 - rho) * (kappa * w * (1.0 + 2.0 * rho) - (1.0 + rho) * (1.0 + rho));
  if (a != 0.0) {
    const double vertex = -b / (2.0 * a);
    if (vertex > -1.0 && vertex < 1.0) {
      const double at_vertex = fdi_reduced(kappa, rho, vertex);
      if (at_vertex > best) {
        best = at_vertex;
        best_x = vertex;
      }
    }
  }
  return {best, best_x};
}

bool loop_transform_stable(const AlgorithmParams& params) {
  return closed_loop_spectral_radius(params, 0.5 * (params.m + params.L)) < 1.0;
}

CertificateReport certify(const AlgorithmParams& params) {
  params.validate();
  CertificateReport report;
  report.jury = jury_rho_disk(params, params.rho);

  // Sweep the upper unit semicircle; V(conj(z)) = V(z), so this covers the
  // whole circle.  Values land in a fixed array, making the reduction
  // independent of the thread partition.
  const Multiplier multiplier{params.m, params.L, Multiplier::Kind::UnitDelay};
  std::vector<double> values(kFdiGridSize);
  parallel_for(kFdiGridSize, [&](std::size_t begin, std::size_t end) {
    for (std::size_t j = begin; j < end; ++j) {
      const double theta = std::numbers::pi * static_cast<double>(j) /
                           static_cast<double>(kFdiGridSize - 1);
      values[j] = fdi_value(params, multiplier, std::polar(1.0, theta));
    }
  });
  report.fdi_max = *std::max_element(values.begin(), values.end());

  // For c2m tunings above the regime threshold the reduced quadratic gives the
  // exact maximizer; fold its vertex value into the sweep maximum.
  const double kappa = params.kappa();
  if (params.method_tag == Method::C2M && kappa >= c2m_threshold()) {
    report.fdi_max =
        std::max(report.fdi_max, fdi_reduced_max(kappa, params.rho).first / (1.0 + params.rho));
  }
  report.fdi_pass = report.fdi_max < 0.0;

  report.rootlocus = rootlocus_residuals(params, params.rho);
  report.loop_transform = loop_transform_stable(params);
  const auto [rate, q] = worst_case_rate(params);
  report.worst_rate = rate;
  report.worst_q = q;
  report.pass = report.jury.pass && report.fdi_pass && report.loop_transform;
  return report;
}

}  // namespace momentum_lab
