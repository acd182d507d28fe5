#include "momentum_lab/schedules.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "momentum_lab/polynomial.hpp"

namespace momentum_lab {

namespace {

void require_class(double m, double L) {
  if (!std::isfinite(m) || !std::isfinite(L) || !(m > 0.0) || !(L >= m)) {
    throw std::invalid_argument("requires 0 < m <= L (finite)");
  }
}

double rho_gd(double kappa) { return (kappa - 1.0) / (kappa + 1.0); }

double rho_hb(double kappa) {
  const double sk = std::sqrt(kappa);
  return (sk - 1.0) / (sk + 1.0);
}

double rho_tm(double kappa) { return 1.0 - 1.0 / std::sqrt(kappa); }

}  // namespace

double c2m_threshold() { return 9.0 + 4.0 * std::sqrt(5.0); }

AlgorithmParams c2m_params(double m, double L, double rho) {
  require_class(m, L);
  if (!std::isfinite(rho) || !(rho >= 0.0) || !(rho < 1.0)) {
    throw std::invalid_argument("c2m_params: requires 0 <= rho < 1");
  }
  AlgorithmParams p;
  p.m = m;
  p.L = L;
  p.rho = rho;
  p.method_tag = Method::C2M;
  p.alpha = (1.0 - rho) * (1.0 - rho) / m;
  if (rho == 0.0) {
    p.beta = 0.0;
    p.eta = 0.0;
    return p;
  }
  const double kappa = L / m;
  if (!(kappa > 1.0)) {
    throw std::domain_error("c2m_params: rho > 0 requires kappa > 1");
  }
  const double s = rho / (kappa - 1.0);
  p.beta = s * (1.0 - kappa * (1.0 - 3.0 * rho) / (1.0 + rho));
  p.eta = s * ((1.0 + rho) / ((1.0 - rho) * (1.0 - rho)) - kappa / (1.0 + rho));
  return p;
}

MethodSchedule schedule(Method method, double m, double L, std::optional<double> rho_override,
                        double epsilon) {
  require_class(m, L);
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("schedule: epsilon must be positive and finite");
  }
  if (rho_override && method != Method::C2M) {
    throw std::invalid_argument("schedule: rho_override is only supported for c2m");
  }
  const double kappa = L / m;

  MethodSchedule sched;
  sched.method = method;
  AlgorithmParams& p = sched.params;
  p.m = m;
  p.L = L;
  p.method_tag = method;

  switch (method) {
    case Method::GD: {
      sched.rho_rule = "minimax";
      p.rho = rho_gd(kappa);
      p.alpha = (1.0 - p.rho) / m;
      break;
    }
    case Method::HB: {
      sched.rho_rule = "minimax";
      p.rho = rho_hb(kappa);
      p.alpha = (1.0 - p.rho) * (1.0 - p.rho) / m;
      p.beta = p.rho * p.rho;
      break;
    }
    case Method::TM: {
      sched.rho_rule = "minimax";
      p.rho = rho_tm(kappa);
      p.alpha = (1.0 + p.rho) / L;
      p.beta = p.rho * p.rho / (2.0 - p.rho);
      p.eta = p.rho * p.rho / ((1.0 + p.rho) * (2.0 - p.rho));
      break;
    }
    case Method::C2M: {
      double rho;
      if (kappa < c2m_threshold()) {
        sched.rho_rule = "hb-regime";
        rho = rho_hb(kappa);
      } else if (rho_override) {
        const double root = rho_c2m(kappa);
        if (!(*rho_override > root) || !(*rho_override < 1.0)) {
          throw std::invalid_argument(
              "schedule: rho_override must lie in (rho_c2m(kappa), 1)");
        }
        sched.rho_rule = "override";
        rho = *rho_override;
      } else {
        double root;
        try {
          root = rho_c2m(kappa);
        } catch (const std::runtime_error&) {
          // Exactly at the regime boundary the certificate window degenerates
          // to a point and the bracket can vanish in double precision; the
          // root coincides with the heavy-ball rate there by continuity.
          if (kappa <= c2m_threshold() * (1.0 + 1e-12)) {
            sched.rho_rule = "hb-regime";
            sched.params = c2m_params(m, L, rho_hb(kappa));
            return sched;
          }
          throw;
        }
        sched.rho_rule = "certificate-root";
        rho = std::min(root + epsilon, 1.0 - std::sqrt(2.0 / kappa));
      }
      sched.params = c2m_params(m, L, rho);
      return sched;
    }
    case Method::Custom:
      throw std::invalid_argument("schedule: no standard tuning for 'custom'");
  }
  p.validate();
  return sched;
}

RhoWindow rho_window(double kappa) {
  if (!std::isfinite(kappa) || !(kappa > 1.0)) {
    throw std::domain_error("rho_window: requires kappa > 1");
  }
  RhoWindow w;
  w.kappa = kappa;
  w.lower = rho_hb(kappa);
  w.upper = 1.0 - std::sqrt(2.0 / kappa);
  return w;
}

double inverse_log_rate(double rho) {
  if (!std::isfinite(rho) || !(rho > 0.0) || !(rho < 1.0)) {
    throw std::domain_error("inverse_log_rate: requires rho in (0, 1)");
  }
  return -1.0 / std::log(rho);
}

ComplexityRow make_complexity_row(Method method, double kappa, double rho) {
  ComplexityRow row;
  row.method = std::string(method_name(method));
  row.kappa = kappa;
  row.rho = rho;
  row.inv_log_rate = inverse_log_rate(rho);
  return row;
}

std::vector<ComplexityRow> complexity_curve(const std::vector<Method>& methods,
                                            const std::vector<double>& kappa_grid) {
  std::vector<Method> order;
  for (Method m : {Method::GD, Method::HB, Method::TM, Method::C2M}) {
    if (std::find(methods.begin(), methods.end(), m) != methods.end()) {
      order.push_back(m);
    }
  }
  if (order.size() != methods.size()) {
    // Either an unsupported method (custom) or a duplicate was passed.
    std::vector<Method> dedup(methods);
    std::sort(dedup.begin(), dedup.end());
    dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());
    if (dedup.size() != order.size()) {
      throw std::invalid_argument("complexity_curve: methods must be gd/hb/tm/c2m");
    }
  }
  std::vector<double> kappas(kappa_grid);
  std::sort(kappas.begin(), kappas.end());
  for (double k : kappas) {
    if (!std::isfinite(k) || !(k > 1.0)) {
      throw std::domain_error("complexity_curve: every kappa must be > 1");
    }
  }

  std::vector<ComplexityRow> rows;
  rows.reserve(order.size() * kappas.size());
  for (Method method : order) {
    for (double kappa : kappas) {
      double rho = 0.0;
      switch (method) {
        case Method::GD: rho = rho_gd(kappa); break;
        case Method::HB: rho = rho_hb(kappa); break;
        case Method::TM: rho = rho_tm(kappa); break;
        case Method::C2M:
          rho = kappa < c2m_threshold() ? rho_hb(kappa) : rho_c2m(kappa);
          break;
        case Method::Custom: break;  // excluded above
      }
      rows.push_back(make_complexity_row(method, kappa, rho));
    }
  }
  return rows;
}

}  // namespace momentum_lab
