#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "momentum_lab/polynomial.hpp"
#include "momentum_lab/schedules.hpp"

using namespace momentum_lab;

namespace {

double hb_rate(double kappa) {
  const double s = std::sqrt(kappa);
  return (s - 1.0) / (s + 1.0);
}

}  // namespace

TEST_CASE("closed-form tunings at kappa = 100") {
  const double m = 1.0, L = 100.0;

  const MethodSchedule gd = schedule(Method::GD, m, L);
  CHECK(gd.rho_rule == "minimax");
  CHECK(gd.params.rho == doctest::Approx(99.0 / 101.0).epsilon(1e-15));
  CHECK(gd.params.alpha == doctest::Approx(2.0 / 101.0).epsilon(1e-15));
  CHECK(gd.params.beta == 0.0);
  CHECK(gd.params.eta == 0.0);

  const MethodSchedule hb = schedule(Method::HB, m, L);
  CHECK(hb.params.rho == doctest::Approx(9.0 / 11.0).epsilon(1e-15));
  CHECK(hb.params.alpha == doctest::Approx(4.0 / 121.0).epsilon(1e-15));
  CHECK(hb.params.beta == doctest::Approx(81.0 / 121.0).epsilon(1e-15));
  CHECK(hb.params.eta == 0.0);

  const MethodSchedule tm = schedule(Method::TM, m, L);
  CHECK(tm.params.rho == doctest::Approx(0.9).epsilon(1e-15));
  CHECK(tm.params.alpha == doctest::Approx(0.019).epsilon(1e-15));
  CHECK(tm.params.beta == doctest::Approx(0.81 / 1.1).epsilon(1e-14));
  CHECK(tm.params.eta == doctest::Approx(0.81 / (1.9 * 1.1)).epsilon(1e-14));

  for (const MethodSchedule& s : {gd, hb, tm}) {
    CHECK(s.params.m == m);
    CHECK(s.params.L == L);
    CHECK_NOTHROW(s.params.validate());
  }
}

TEST_CASE("c2m parameterization reduces to heavy ball at the heavy-ball rate") {
  for (int i = 0; i < 50; ++i) {
    const double kappa = 1.5 + (17.9 - 1.5) * i / 49.0;
    CAPTURE(kappa);
    const double rho = hb_rate(kappa);
    const AlgorithmParams p = c2m_params(1.0, kappa, rho);
    CHECK(std::abs(p.eta) <= 1e-12);
    CHECK(std::abs(p.beta - rho * rho) <= 1e-12);
    CHECK(p.alpha == doctest::Approx((1.0 - rho) * (1.0 - rho)).epsilon(1e-14));

    const MethodSchedule s = schedule(Method::C2M, 1.0, kappa);
    CHECK(s.rho_rule == "hb-regime");
    CHECK(s.params.rho == doctest::Approx(rho).epsilon(1e-14));
  }
}

TEST_CASE("c2m schedule above the regime threshold uses the certificate root") {
  const MethodSchedule s = schedule(Method::C2M, 1.0, 100.0);
  CHECK(s.rho_rule == "certificate-root");
  CHECK(s.params.rho == doctest::Approx(rho_c2m(100.0) + 1e-9).epsilon(1e-14));
  const AlgorithmParams direct = c2m_params(1.0, 100.0, s.params.rho);
  CHECK(s.params.alpha == direct.alpha);
  CHECK(s.params.beta == direct.beta);
  CHECK(s.params.eta == direct.eta);

  // A larger epsilon shifts the scheduled rate accordingly.
  const MethodSchedule wide = schedule(Method::C2M, 1.0, 100.0, std::nullopt, 1e-3);
  CHECK(wide.params.rho == doctest::Approx(rho_c2m(100.0) + 1e-3).epsilon(1e-12));
}

TEST_CASE("c2m rate override") {
  const MethodSchedule s = schedule(Method::C2M, 1.0, 100.0, 0.86);
  CHECK(s.rho_rule == "override");
  CHECK(s.params.rho == 0.86);
  CHECK(s.params.alpha == doctest::Approx(0.0196).epsilon(1e-14));
  CHECK(std::abs(s.params.beta - 0.7466036711) <= 1e-9);
  CHECK(std::abs(s.params.eta - 0.3573301592) <= 1e-9);

  // Below the certificate root, at/above one, or on a non-c2m method: rejected.
  CHECK_THROWS_AS(schedule(Method::C2M, 1.0, 100.0, 0.84), std::invalid_argument);
  CHECK_THROWS_AS(schedule(Method::C2M, 1.0, 100.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(schedule(Method::GD, 1.0, 100.0, 0.9), std::invalid_argument);
}

TEST_CASE("schedules degenerate gracefully at kappa = 1") {
  for (Method method : {Method::GD, Method::HB, Method::TM, Method::C2M}) {
    CAPTURE(method_name(method));
    const MethodSchedule s = schedule(method, 1.0, 1.0);
    CHECK(s.params.rho == 0.0);
    CHECK(s.params.alpha == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.params.beta == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(s.params.eta == doctest::Approx(0.0).epsilon(1e-15));
    CHECK_NOTHROW(s.params.validate());
  }
}

TEST_CASE("schedule input validation") {
  CHECK_THROWS_AS(schedule(Method::GD, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(schedule(Method::GD, -1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(schedule(Method::GD, 2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(schedule(Method::Custom, 1.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(schedule(Method::C2M, 1.0, 100.0, std::nullopt, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(schedule(Method::C2M, 1.0, 100.0, std::nullopt, -1e-9),
                  std::invalid_argument);

  CHECK_THROWS_AS(c2m_params(1.0, 1.0, 0.5), std::domain_error);  // kappa = 1, rho > 0
  CHECK_THROWS_AS(c2m_params(1.0, 2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(c2m_params(1.0, 2.0, -0.1), std::invalid_argument);
}

TEST_CASE("rho window endpoints") {
  CHECK(c2m_threshold() == doctest::Approx(9.0 + 4.0 * std::sqrt(5.0)).epsilon(1e-15));

  const RhoWindow w100 = rho_window(100.0);
  CHECK(w100.lower == doctest::Approx(9.0 / 11.0).epsilon(1e-15));
  CHECK(w100.upper == doctest::Approx(1.0 - std::sqrt(0.02)).epsilon(1e-15));
  CHECK(w100.lower < w100.upper);

  // Small kappa: the window collapses (no admissible rate above heavy ball).
  const RhoWindow w2 = rho_window(2.0);
  CHECK(w2.lower > w2.upper);

  CHECK_THROWS_AS(rho_window(1.0), std::domain_error);
  CHECK_THROWS_AS(rho_window(0.5), std::domain_error);
}

TEST_CASE("inverse_log_rate") {
  // Heavy-ball at kappa = 1e4: rho = 99/101, about 50 iterations per decade.
  CHECK(inverse_log_rate(99.0 / 101.0) == doctest::Approx(50.0).epsilon(0.015));
  CHECK(inverse_log_rate(0.5) == doctest::Approx(1.0 / std::log(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(inverse_log_rate(0.0), std::domain_error);
  CHECK_THROWS_AS(inverse_log_rate(1.0), std::domain_error);
  CHECK_THROWS_AS(inverse_log_rate(-0.1), std::domain_error);
  CHECK_THROWS_AS(inverse_log_rate(1.5), std::domain_error);
}

TEST_CASE("complexity_curve ordering and values") {
  const std::vector<ComplexityRow> rows =
      complexity_curve({Method::C2M, Method::GD, Method::TM}, {1e4, 1e3});
  REQUIRE(rows.size() == 6);

  // Canonical method order, then ascending kappa.
  CHECK(rows[0].method == "gd");
  CHECK(rows[0].kappa == 1e3);
  CHECK(rows[1].method == "gd");
  CHECK(rows[1].kappa == 1e4);
  CHECK(rows[2].method == "tm");
  CHECK(rows[4].method == "c2m");
  CHECK(rows[5].method == "c2m");

  // c2m rows carry the exact certificate root (no scheduling epsilon).
  CHECK(rows[4].rho == rho_c2m(1e3));
  CHECK(std::abs(rows[4].rho - 0.954328211734355) <= 3e-12);
  CHECK(std::abs(rows[5].rho - 0.985762351227727) <= 3e-12);
  for (const ComplexityRow& row : rows) {
    CHECK(row.inv_log_rate == doctest::Approx(inverse_log_rate(row.rho)).epsilon(1e-15));
  }

  // Below the regime threshold the c2m rate is the heavy-ball rate.
  const std::vector<ComplexityRow> low = complexity_curve({Method::C2M}, {4.0});
  REQUIRE(low.size() == 1);
  CHECK(low[0].rho == doctest::Approx(hb_rate(4.0)).epsilon(1e-15));
}

TEST_CASE("tm and c2m differ by a sqrt(2) complexity factor at large kappa") {
  const std::vector<ComplexityRow> rows =
      complexity_curve({Method::TM, Method::C2M}, {1e6});
  REQUIRE(rows.size() == 2);
  const double ratio = rows[0].inv_log_rate / rows[1].inv_log_rate;
  CHECK(ratio == doctest::Approx(std::sqrt(2.0)).epsilon(0.02));
}

TEST_CASE("complexity_curve input validation") {
  // Duplicates collapse instead of duplicating rows.
  CHECK(complexity_curve({Method::GD, Method::GD}, {10.0}).size() == 1);
  CHECK_THROWS_AS(complexity_curve({Method::Custom}, {10.0}), std::invalid_argument);
  CHECK_THROWS_AS(complexity_curve({Method::GD}, {1.0}), std::domain_error);
  CHECK_THROWS_AS(complexity_curve({Method::GD}, {0.5}), std::domain_error);
}
