#pragma once

#include <optional>
#include <string>
#include <vector>

#include "momentum_lab/algorithm.hpp"

namespace momentum_lab {

// Regime threshold for the c2m tuning: kappa* = 9 + 4 sqrt(5) (~17.944).
// Below it the certificate window is empty and c2m falls back to the
// heavy-ball rate; from the threshold on, the rate comes from the certificate
// polynomial root.
double c2m_threshold();

// Raw c2m parameterization at a prescribed rate rho:
//   alpha = (1 - rho)^2 / m
//   beta  = (rho / (kappa-1)) * (1 - kappa (1 - 3 rho) / (1 + rho))
//   eta   = (rho / (kappa-1)) * ((1 + rho) / (1 - rho)^2 - kappa / (1 + rho))
// with kappa = L/m.  At rho = (sqrt(kappa)-1)/(sqrt(kappa)+1) this reduces
// exactly to the heavy-ball tuning (eta = 0, beta = rho^2).  rho = 0 yields
// plain gradient descent with alpha = 1/m for any kappa.  Requires
// 0 < m <= L, 0 <= rho < 1, and kappa > 1 whenever rho > 0
// (std::invalid_argument / std::domain_error).  No feasibility check is
// performed: the returned tuning is only a convergent method when rho is an
// admissible rate for kappa.
AlgorithmParams c2m_params(double m, double L, double rho);

// A fully tuned method for the class (m, L), with a note on how its design
// rate was chosen.
struct MethodSchedule {
  Method method = Method::Custom;
  std::string rho_rule;  // "minimax", "hb-regime", "certificate-root", "override"
  AlgorithmParams params;
};

// Standard tunings on the class of m-strongly-convex, L-smooth functions
// (kappa = L/m):
//   gd : rho = (kappa-1)/(kappa+1),           alpha = (1-rho)/m
//   hb : rho = (sqrt(kappa)-1)/(sqrt(kappa)+1), alpha = (1-rho)^2/m, beta = rho^2
//   tm : rho = 1 - 1/sqrt(kappa),             alpha = (1+rho)/L,
//        beta = rho^2/(2-rho), eta = rho^2/((1+rho)(2-rho))
//   c2m: kappa below c2m_threshold() -> heavy-ball regime (rho as hb);
//        otherwise rho = rho_c2m(kappa) + epsilon, clamped to at most
//        1 - sqrt(2/kappa), or rho_override when provided.  A rho_override
//        must exceed rho_c2m(kappa) and be below 1 (std::invalid_argument);
//        it is only accepted for c2m.
// Requires 0 < m <= L and epsilon > 0.  The heavy-ball tuning is only
// guaranteed to converge locally / on quadratics; it is scheduled here
// regardless because comparing it against the globally certified tunings is
// the point of the experiment tooling.
MethodSchedule schedule(Method method, double m, double L,
                        std::optional<double> rho_override = std::nullopt,
                        double epsilon = 1e-9);

// Admissible-rate window for the c2m design at a given kappa > 1
// (std::domain_error otherwise).  lower = (sqrt(kappa)-1)/(sqrt(kappa)+1),
// upper = 1 - sqrt(2/kappa).  The window can be empty (lower > upper) for
// small kappa, and even when nonempty it only contains a certificate root
// from c2m_threshold() upward; callers must handle both cases.
struct RhoWindow {
  double lower = 0.0;
  double upper = 0.0;
  double kappa = 0.0;
};

RhoWindow rho_window(double kappa);

// Iterations-per-log-decade proxy: -1 / log(rho) for rho in (0, 1)
// (std::domain_error otherwise).  Asymptotically proportional to the number
// of iterations needed per unit of log error reduction.
double inverse_log_rate(double rho);

// One point of a complexity curve: the designed rate and its iteration-count
// proxy for a method at condition ratio kappa.
struct ComplexityRow {
  std::string method;
  double kappa = 0.0;
  double rho = 0.0;
  double inv_log_rate = 0.0;
};

// Builds a row from an externally computed rate.
ComplexityRow make_complexity_row(Method method, double kappa, double rho);

// Complexity curves for the requested methods over a grid of condition
// ratios.  Every kappa must be > 1.  c2m uses the exact certificate root
// (no epsilon) above the threshold and the heavy-ball rate below it.  Rows
// are ordered deterministically: by method (gd, hb, tm, c2m) and then by
// ascending kappa; duplicate methods are collapsed.
std::vector<ComplexityRow> complexity_curve(const std::vector<Method>& methods,
                                            const std::vector<double>& kappa_grid);

}  // namespace momentum_lab
