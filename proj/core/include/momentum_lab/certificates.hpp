#pragma once

#include <array>
#include <complex>
#include <utility>

#include "momentum_lab/algorithm.hpp"

namespace momentum_lab {

// Closing the loop around the sector [m, L] with a linear gain q in between
// gives the characteristic polynomial of A + q B C,
//   chi(z; q) = z^2 + a1 z + a0,
//   a1 = q alpha (1 + eta) - (1 + beta),
//   a0 = beta - q alpha eta.
// Returned as (a1, a0).
std::pair<double, double> closed_loop_char_poly(const AlgorithmParams& params, double q);

// Spectral radius of A + q B C, computed from the quadratic above.
double closed_loop_spectral_radius(const AlgorithmParams& params, double q);

// Jury-type test that both extreme closed loops (q = m and q = L) have their
// eigenvalues inside the disk of radius rho.  The four margin expressions per
// gain q are
//   i1 = (1 - rho)(beta - rho) + alpha (eta rho - eta + rho) q     [chi(rho)]
//   i2 = (1 + rho)(beta + rho) - alpha (eta rho + eta + rho) q     [chi(-rho)]
//   i3 = rho^2 + beta - alpha eta q                                [rho^2 + a0]
//   i4 = rho^2 - beta + alpha eta q                                [rho^2 - a0]
// all of which must be nonnegative.  margins = {i1..i4 at q = m, i1..i4 at
// q = L}; pass tolerates boundary cases down to -1e-12 so that tunings
// designed to sit exactly on the disk (gd, hb, tm at their minimax rates) are
// accepted.
struct JuryReport {
  bool pass = false;
  std::array<double, 8> margins{};
};

JuryReport jury_rho_disk(const AlgorithmParams& params, double rho);

// Worst-case asymptotic rate over the quadratic subclass: the maximum of
// closed_loop_spectral_radius over q in [m, L], found from the interval
// endpoints, the discriminant sign-change gains, and a 4096-point grid with
// golden-section refinement of interior local maxima (absolute accuracy about
// 1e-9).  Returns (rate, q attaining it); ties resolve to the smallest q.
std::pair<double, double> worst_case_rate(const AlgorithmParams& params);

// Residuals of the three root-locus design conditions at rate rho:
//   r0 = chi(rho; m)    — the slow extreme loop has an eigenvalue at +rho,
//   r1 = chi(-rho; L)   — the fast extreme loop has an eigenvalue at -rho,
//   r2 = chi'(rho; m)   — that eigenvalue is a double (breakaway) point.
// r0 = r2 = 0 is equivalent to g'(rho) = 0 on the locus but stays finite at
// the transfer-function poles.  All three vanish for the c2m tuning (in both
// regimes, the heavy-ball reduction included); gradient descent satisfies the
// first two only, and generic tunings none.
std::array<double, 3> rootlocus_residuals(const AlgorithmParams& params, double rho);

// Frequency-domain multiplier describing the sector [m, L] combined with a
// one-step (unit-delay) off-diagonal term.
struct Multiplier {
  double m = 0.0;
  double L = 0.0;
  enum class Kind { UnitDelay } kind = Kind::UnitDelay;
};

// Pole-cleared frequency-domain inequality value at a point z on the unit
// circle.  With n(z) = -alpha ((1 + eta) z - eta) (the transfer numerator),
//   V(z) = -mL |n|^2 + 2 Re[ conj(n) (Lz - m)(z - beta) ] - |z-1|^2 |z-beta|^2,
// which is the raw inequality expression multiplied through by the positive
// factor |z-1|^2 |z-beta|^2, so the certificate requirement is V(z) < 0 on
// the circle.  The cleared form is finite at the poles z = 1 and z = beta,
// which is what makes a dense sweep of the circle well defined.
double fdi_value(const AlgorithmParams& params, const Multiplier& multiplier,
                 std::complex<double> z);

// Closed-form restriction of the same inequality to the c2m tuning at rate
// rho for condition ratio kappa, as a quadratic in x = cos(theta):
//   Q(x) = a x^2 + b x + c,
//   a = -4 rho (kappa (1-rho)^2 - (1+rho))
//   b = -2 (1-rho) (kappa (1-rho)^2 (1+2 rho) - (1+rho)^2)
//   c = -(1+rho) (kappa (1-rho)^2 (1-4 rho+rho^2) + 6 rho - 2 rho^3)
// At the c2m parameters, V(e^{i theta}) = Q(cos theta) / (1 + rho) exactly,
// and (b^2 - 4 a c) / 4 equals the certificate polynomial p(kappa, rho).
double fdi_reduced(double kappa, double rho, double x);

// Maximum of the reduced quadratic over x in [-1, 1]: checks both endpoints
// and the interior vertex.  Returns (max value, argmax).
std::pair<double, double> fdi_reduced_max(double kappa, double rho);

// Stability of the loop-transformed midpoint system: spectral radius of
// A + ((L + m)/2) B C strictly below 1.  A degenerate tuning with alpha = 0
// keeps the integrator pole at z = 1 and is reported unstable.
bool loop_transform_stable(const AlgorithmParams& params);

// Aggregate certificate for a tuned method at its design rate params.rho.
struct CertificateReport {
  JuryReport jury;
  double fdi_max = 0.0;   // max of fdi_value over the circle sweep (and the
                          // reduced-form vertex for c2m tunings)
  bool fdi_pass = false;  // fdi_max < 0
  std::array<double, 3> rootlocus{};  // informational (c2m design residuals)
  bool loop_transform = false;
  double worst_rate = 0.0;  // worst-case quadratic rate over q in [m, L]
  double worst_q = 0.0;
  bool pass = false;  // jury.pass && fdi_pass && loop_transform
};

// Runs all checks: Jury at params.rho, an 8192-point sweep of fdi_value over
// the upper unit semicircle (evaluated in parallel, reduced deterministically),
// the exact vertex maximum of the reduced form for c2m tunings above the
// regime threshold, root-locus residuals, loop-transform stability, and the
// worst-case quadratic rate.
CertificateReport certify(const AlgorithmParams& params);

}  // namespace momentum_lab
