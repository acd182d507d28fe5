#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "momentum_lab/certificates.hpp"
#include "momentum_lab/polynomial.hpp"
#include "momentum_lab/schedules.hpp"
#include "test_support.hpp"

using namespace momentum_lab;
using momentum_lab::testing::eigen_radius;

namespace {

AlgorithmParams custom_params(double alpha, double beta, double eta, double m, double L,
                              double rho) {
  AlgorithmParams p;
  p.alpha = alpha;
  p.beta = beta;
  p.eta = eta;
  p.m = m;
  p.L = L;
  p.rho = rho;
  p.method_tag = Method::Custom;
  return p;
}

}  // namespace

TEST_CASE("closed-loop characteristic polynomial spot values") {
  // Heavy ball on (m, L) = (1, 9): alpha = 1/4, beta = 1/4.
  const AlgorithmParams hb = schedule(Method::HB, 1.0, 9.0).params;
  {
    const auto [a1, a0] = closed_loop_char_poly(hb, 1.0);
    CHECK(a1 == -1.0);
    CHECK(a0 == 0.25);
    CHECK(closed_loop_spectral_radius(hb, 1.0) == doctest::Approx(0.5).epsilon(1e-14));
  }
  {
    const auto [a1, a0] = closed_loop_char_poly(hb, 9.0);
    CHECK(a1 == 1.0);
    CHECK(a0 == 0.25);
    CHECK(closed_loop_spectral_radius(hb, 9.0) == doctest::Approx(0.5).epsilon(1e-14));
  }

  // Gradient descent on (1, 3): alpha = 1/2, loop at q = 1 has roots {0, 1/2}.
  const AlgorithmParams gd = schedule(Method::GD, 1.0, 3.0).params;
  const auto [a1, a0] = closed_loop_char_poly(gd, 1.0);
  CHECK(a1 == -0.5);
  CHECK(a0 == 0.0);
  CHECK(closed_loop_spectral_radius(gd, 1.0) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("spectral radius matches a dense eigensolver on random tunings") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> alpha_d(0.01, 3.0);
  std::uniform_real_distribution<double> mom_d(-0.9, 0.9);
  std::uniform_real_distribution<double> L_d(1.0, 100.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  for (int trial = 0; trial < 100; ++trial) {
    const double L = L_d(rng);
    const AlgorithmParams p =
        custom_params(alpha_d(rng), mom_d(rng), mom_d(rng), 1.0, L, 0.5);
    for (int j = 0; j < 3; ++j) {
      const double q = 1.0 + (L - 1.0) * unit(rng);
      const double direct = closed_loop_spectral_radius(p, q);
      const double dense = eigen_radius(p, q);
      REQUIRE(std::abs(direct - dense) <= 1e-9 * std::max(1.0, dense));
    }
  }
}

TEST_CASE("jury margins for the heavy-ball minimax tuning are exact") {
  const AlgorithmParams hb = schedule(Method::HB, 1.0, 9.0).params;
  const JuryReport report = jury_rho_disk(hb, 0.5);
  CHECK(report.pass);
  // Double roots at +rho (q = m) and -rho (q = L) zero out the corresponding
  // boundary inequalities; the products of dyadic rationals here are exact.
  CHECK(report.margins[0] == 0.0);   // chi(rho; m)
  CHECK(report.margins[1] == 1.0);   // chi(-rho; m)
  CHECK(report.margins[2] == 0.5);   // rho^2 + a0 at m
  CHECK(report.margins[3] == 0.0);   // rho^2 - a0 at m
  CHECK(report.margins[4] == 1.0);   // chi(rho; L)
  CHECK(report.margins[5] == 0.0);   // chi(-rho; L)
  CHECK(report.margins[6] == 0.5);
  CHECK(report.margins[7] == 0.0);

  CHECK_THROWS_AS(jury_rho_disk(hb, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(jury_rho_disk(hb, -0.1), std::invalid_argument);
}

TEST_CASE("jury test is equivalent to both extreme radii lying in the disk") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> alpha_d(0.01, 3.0);
  std::uniform_real_distribution<double> mom_d(-0.99, 0.99);
  std::uniform_real_distribution<double> L_d(1.0, 100.0);
  std::uniform_real_distribution<double> rho_d(0.01, 0.99);

  int exercised = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const AlgorithmParams p =
        custom_params(alpha_d(rng), mom_d(rng), mom_d(rng), 1.0, L_d(rng), 0.5);
    const double rho = rho_d(rng);
    const double rm = closed_loop_spectral_radius(p, p.m);
    const double rL = closed_loop_spectral_radius(p, p.L);
    // Skip samples on the decision boundary, where floating-point noise makes
    // either verdict defensible.
    if (std::abs(rm - rho) < 1e-9 || std::abs(rL - rho) < 1e-9) continue;
    ++exercised;
    const bool in_disk = rm <= rho && rL <= rho;
    REQUIRE(jury_rho_disk(p, rho).pass == in_disk);
  }
  CHECK(exercised > 9000);
}

TEST_CASE("jury accepts all standard tunings at their design rates") {
  for (double kappa : {1.5, 10.0, 100.0, 1e4}) {
    for (Method method : {Method::GD, Method::HB, Method::TM, Method::C2M}) {
      CAPTURE(kappa);
      CAPTURE(method_name(method));
      const MethodSchedule s = schedule(method, 1.0, kappa);
      CHECK(jury_rho_disk(s.params, s.params.rho).pass);
    }
  }
}

TEST_CASE("worst_case_rate finds the extreme quadratic") {
  SUBCASE("gradient descent attains rho at both endpoints") {
    const AlgorithmParams gd = schedule(Method::GD, 1.0, 10.0).params;
    const auto [rate, q] = worst_case_rate(gd);
    CHECK(rate == doctest::Approx(9.0 / 11.0).epsilon(1e-12));
    CHECK(q == 1.0);  // tie between the endpoints resolves to the smallest q
  }
  SUBCASE("heavy ball is flat across the sector") {
    const AlgorithmParams hb = schedule(Method::HB, 1.0, 9.0).params;
    const auto [rate, q] = worst_case_rate(hb);
    CHECK(std::abs(rate - 0.5) <= 1e-6);
    CHECK(q >= 1.0);
    CHECK(q <= 9.0);
  }
  SUBCASE("triple momentum at kappa = 100") {
    const AlgorithmParams tm = schedule(Method::TM, 1.0, 100.0).params;
    const auto [rate, q] = worst_case_rate(tm);
    CHECK(std::abs(rate - 0.9) <= 1e-6);
    CHECK(q >= 1.0);
    CHECK(q <= 100.0);
  }
  SUBCASE("c2m attains its design rate") {
    const MethodSchedule s = schedule(Method::C2M, 1.0, 100.0);
    const auto [rate, q] = worst_case_rate(s.params);
    CHECK(std::abs(rate - s.params.rho) <= 1e-6);
    CHECK(q >= 1.0);
    CHECK(q <= 100.0);
  }
  SUBCASE("degenerate sector m == L") {
    const AlgorithmParams gd = schedule(Method::GD, 2.0, 2.0).params;
    const auto [rate, q] = worst_case_rate(gd);
    CHECK(rate == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(q == 2.0);
  }
  SUBCASE("an unstable tuning reports a rate above one") {
    const AlgorithmParams bad = custom_params(3.9, 0.0, 0.0, 1.0, 1.0, 0.0);
    CHECK(worst_case_rate(bad).first > 1.0);
  }
}

TEST_CASE("worst_case_rate dominates the radius at sampled gains") {
  std::mt19937 rng(37);
  std::uniform_real_distribution<double> alpha_d(0.01, 0.5);
  std::uniform_real_distribution<double> mom_d(-0.5, 0.5);
  std::uniform_real_distribution<double> L_d(2.0, 50.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  for (int trial = 0; trial < 50; ++trial) {
    const double L = L_d(rng);
    const AlgorithmParams p =
        custom_params(alpha_d(rng), mom_d(rng), mom_d(rng), 1.0, L, 0.5);
    const double rate = worst_case_rate(p).first;
    for (int j = 0; j < 20; ++j) {
      const double q = 1.0 + (L - 1.0) * unit(rng);
      REQUIRE(rate >= closed_loop_spectral_radius(p, q) - 1e-9);
    }
  }
}

TEST_CASE("frequency-domain inequality separates the tunings at kappa = 100") {
  const CertificateReport hb = certify(schedule(Method::HB, 1.0, 100.0).params);
  CHECK(hb.jury.pass);
  CHECK_FALSE(hb.fdi_pass);
  CHECK(hb.fdi_max == doctest::Approx(1.5957926309927082).epsilon(1e-3));
  CHECK_FALSE(hb.pass);

  const CertificateReport tm = certify(schedule(Method::TM, 1.0, 100.0).params);
  CHECK(tm.fdi_pass);
  CHECK(std::abs(tm.fdi_max - (-0.3439)) <= 1e-2);
  CHECK(tm.pass);

  const CertificateReport gd = certify(schedule(Method::GD, 1.0, 100.0).params);
  CHECK(gd.fdi_pass);
  CHECK(gd.pass);

  for (double kappa : {18.0, 100.0, 1e4}) {
    CAPTURE(kappa);
    const CertificateReport c2m = certify(schedule(Method::C2M, 1.0, kappa).params);
    CHECK(c2m.fdi_max < 0.0);
    CHECK(c2m.pass);
    CHECK(c2m.worst_q >= 1.0);
    CHECK(c2m.worst_q <= kappa);
  }
}

TEST_CASE("fdi_value is conjugate-symmetric on the circle") {
  const AlgorithmParams params = schedule(Method::TM, 1.0, 100.0).params;
  const Multiplier mult{1.0, 100.0, Multiplier::Kind::UnitDelay};
  for (int j = 0; j < 32; ++j) {
    const double theta = M_PI * j / 31.0;
    const std::complex<double> z = std::exp(std::complex<double>(0.0, theta));
    CHECK(fdi_value(params, mult, z) ==
          doctest::Approx(fdi_value(params, mult, std::conj(z))).epsilon(1e-14));
  }
}

TEST_CASE("fdi_value collapses to the reduced quadratic on c2m tunings") {
  const double kappa = 100.0, rho = 0.86;
  const AlgorithmParams params = c2m_params(1.0, kappa, rho);
  const Multiplier mult{1.0, kappa, Multiplier::Kind::UnitDelay};
  for (int j = 0; j < 1024; ++j) {
    const double theta = M_PI * j / 1023.0;
    const std::complex<double> z = std::exp(std::complex<double>(0.0, theta));
    const double direct = fdi_value(params, mult, z);
    const double reduced = fdi_reduced(kappa, rho, std::cos(theta)) / (1.0 + rho);
    REQUIRE(std::abs(direct - reduced) <= 1e-10 * std::max(1.0, std::abs(direct)));
  }
}

TEST_CASE("fdi_reduced reference values at kappa = 100, rho = 0.86") {
  CHECK(std::abs(fdi_reduced(100.0, 0.86, 0.0) - (-1.03249344)) <= 1e-8);
  CHECK(std::abs(fdi_reduced(100.0, 0.86, -1.0) - (-0.85244544)) <= 1e-8);
  CHECK(std::abs(fdi_reduced(100.0, 0.86, 1.0) - (-1.90054144)) <= 1e-8);
}

TEST_CASE("fdi_reduced_max handles interior vertices and endpoints") {
  SUBCASE("interior vertex") {
    const auto [value, argmax] = fdi_reduced_max(100.0, 0.86);
    CHECK(argmax > -1.0);
    CHECK(argmax < 1.0);
    CHECK(value == doctest::Approx(fdi_reduced(100.0, 0.86, argmax)).epsilon(1e-14));
    // Local maximality.
    CHECK(value >= fdi_reduced(100.0, 0.86, argmax - 1e-4));
    CHECK(value >= fdi_reduced(100.0, 0.86, argmax + 1e-4));
    CHECK(value < 0.0);
  }
  SUBCASE("vertex outside the interval lands on an endpoint") {
    const auto [value, argmax] = fdi_reduced_max(100.0, 0.1);
    CHECK(argmax == -1.0);
    CHECK(value == doctest::Approx(fdi_reduced(100.0, 0.1, -1.0)).epsilon(1e-14));
    CHECK(value > 0.0);  // far below the admissible window the inequality fails
  }
}

TEST_CASE("reduced-quadratic discriminant equals the certificate polynomial") {
  for (double kappa : {23.7, 100.0, 512.3}) {
    for (double rho : {0.3, 0.62, 0.86, 0.95}) {
      CAPTURE(kappa);
      CAPTURE(rho);
      const double q0 = fdi_reduced(kappa, rho, 0.0);
      const double q1 = fdi_reduced(kappa, rho, 1.0);
      const double qm1 = fdi_reduced(kappa, rho, -1.0);
      const double a = 0.5 * (q1 + qm1) - q0;
      const double b = 0.5 * (q1 - qm1);
      const double c = q0;
      const double disc4 = 0.25 * b * b - a * c;

      const RationalPolynomial p = build_p(rational_from_double(kappa));
      const double exact = to_double(p(rational_from_double(rho)));
      REQUIRE(std::abs(disc4 - exact) <= 1e-9 * std::max(1.0, std::abs(exact)));
    }
  }
}

TEST_CASE("root-locus residuals identify the c2m design conditions") {
  SUBCASE("c2m override tuning zeroes all three") {
    const AlgorithmParams params = c2m_params(1.0, 100.0, 0.86);
    const auto r = rootlocus_residuals(params, 0.86);
    CHECK(std::abs(r[0]) <= 1e-9);
    CHECK(std::abs(r[1]) <= 1e-9);
    CHECK(std::abs(r[2]) <= 1e-9);
  }
  SUBCASE("scheduled c2m keeps them at machine scale") {
    const MethodSchedule s = schedule(Method::C2M, 1.0, 100.0);
    const auto r = rootlocus_residuals(s.params, s.params.rho);
    for (double v : r) CHECK(std::abs(v) <= 1e-9);
  }
  SUBCASE("gradient descent satisfies the boundary conditions but not breakaway") {
    const MethodSchedule s = schedule(Method::GD, 1.0, 10.0);
    const auto r = rootlocus_residuals(s.params, s.params.rho);
    CHECK(std::abs(r[0]) <= 1e-12);
    CHECK(std::abs(r[1]) <= 1e-12);
    CHECK(r[2] == doctest::Approx(s.params.rho).epsilon(1e-12));
  }
  SUBCASE("heavy ball hits all three via its double roots") {
    const MethodSchedule s = schedule(Method::HB, 1.0, 100.0);
    const auto r = rootlocus_residuals(s.params, s.params.rho);
    for (double v : r) CHECK(std::abs(v) <= 1e-12);
  }
}

TEST_CASE("loop-transform stability") {
  for (Method method : {Method::GD, Method::HB, Method::TM, Method::C2M}) {
    CAPTURE(method_name(method));
    CHECK(loop_transform_stable(schedule(method, 1.0, 100.0).params));
  }
  // alpha = 0 leaves the integrator pole on the unit circle.
  CHECK_FALSE(loop_transform_stable(custom_params(0.0, 0.0, 0.0, 1.0, 100.0, 0.0)));
}
