#include "momentum_lab/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

#include "momentum_lab/bench.hpp"
#include "momentum_lab/certificates.hpp"
#include "momentum_lab/polynomial.hpp"
#include "momentum_lab/schedules.hpp"

namespace momentum_lab {

namespace {

using ordered_json = nlohmann::ordered_json;

const std::vector<Method> kAllMethods = {Method::GD, Method::HB, Method::TM, Method::C2M};

ordered_json schedule_json(const MethodSchedule& sched) {
  const AlgorithmParams& p = sched.params;
  return ordered_json{
      {"method", std::string(method_name(sched.method))},
      {"m", p.m},
      {"L", p.L},
      {"kappa", p.kappa()},
      {"rho_rule", sched.rho_rule},
      {"rho", p.rho},
      {"alpha", p.alpha},
      {"beta", p.beta},
      {"eta", p.eta},
  };
}

bool single_method(const RunConfig& config, std::ostream& err, Method& method) {
  if (config.methods.size() != 1) {
    err << "error: this command requires exactly one --method\n";
    return false;
  }
  method = config.methods.front();
  return true;
}

int cmd_params(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Method method;
  if (!single_method(config, err, method)) {
    return 1;
  }
  const MethodSchedule sched =
      schedule(method, config.m, config.L, config.rho_override, config.epsilon);
  out << schedule_json(sched).dump(2) << '\n';
  return 0;
}

int cmd_rho(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!config.kappa) {
    err << "error: rho requires --kappa\n";
    return 1;
  }
  out << format_double(rho_c2m(*config.kappa, config.tol)) << '\n';
  return 0;
}

int cmd_certify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Method method;
  if (!single_method(config, err, method)) {
    return 1;
  }
  const MethodSchedule sched =
      schedule(method, config.m, config.L, config.rho_override, config.epsilon);
  const CertificateReport report = certify(sched.params);

  ordered_json j = schedule_json(sched);
  j["jury"] = ordered_json{{"pass", report.jury.pass},
                           {"margins", report.jury.margins}};
  j["fdi"] = ordered_json{{"pass", report.fdi_pass}, {"max_value", report.fdi_max}};
  j["rootlocus_residuals"] = report.rootlocus;
  j["loop_transform_stable"] = report.loop_transform;
  j["worst_case"] = ordered_json{{"rate", report.worst_rate}, {"q", report.worst_q}};
  j["pass"] = report.pass;
  out << j.dump(2) << '\n';
  return report.pass ? 0 : 2;
}

int cmd_simulate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.rho_override) {
    err << "error: --rho is only supported by params and certify\n";
    return 1;
  }
  const std::vector<Method>& methods = config.methods.empty() ? kAllMethods : config.methods;
  for (Method method : methods) {
    if (method == Method::Custom) {
      err << "error: simulate requires named methods (gd, hb, tm, c2m)\n";
      return 1;
    }
  }
  const FunctionOracle oracle = make_tmm_oracle(tmm_reference_spec(config.m, config.L));
  const Eigen::VectorXd x0 = Eigen::VectorXd::Zero(oracle.dimension);
  const ExperimentResult result = run_experiment(methods, oracle, x0, config.iters);

  if (config.format == OutputFormat::Csv) {
    out << "k,method,error\n";
    for (const MethodRun& run : result.runs) {
      const std::string name(method_name(run.schedule.method));
      for (std::size_t k = 0; k < run.trajectory.errors.size(); ++k) {
        out << k << ',' << name << ',' << format_double(run.trajectory.errors[k]) << '\n';
      }
    }
    return 0;
  }

  ordered_json j{
      {"m", config.m},
      {"L", config.L},
      {"iters", config.iters},
      {"reference_rates",
       ordered_json{{"gd", result.rate_gd}, {"hb", result.rate_hb}, {"tm", result.rate_tm}}},
  };
  ordered_json runs = ordered_json::array();
  for (const MethodRun& run : result.runs) {
    ordered_json r = schedule_json(run.schedule);
    r["diverged"] = run.diverged;
    if (run.estimated_rate) {
      r["estimated_rate"] = *run.estimated_rate;
    } else {
      r["estimated_rate"] = nullptr;
    }
    r["errors"] = run.trajectory.errors;
    runs.push_back(std::move(r));
  }
  j["runs"] = std::move(runs);
  out << j.dump(2) << '\n';
  return 0;
}

int cmd_complexity(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.rho_override) {
    err << "error: --rho is only supported by params and certify\n";
    return 1;
  }
  const std::vector<Method>& methods = config.methods.empty() ? kAllMethods : config.methods;
  std::vector<double> grid;
  if (config.kappa) {
    grid.push_back(*config.kappa);
  } else {
    constexpr int kPoints = 20;
    for (int i = 0; i < kPoints; ++i) {
      grid.push_back(std::pow(10.0, 3.0 + 3.0 * static_cast<double>(i) / (kPoints - 1)));
    }
  }
  const std::vector<ComplexityRow> rows = complexity_curve(methods, grid);

  if (config.format == OutputFormat::Csv) {
    out << "method,kappa,rho,inv_log_rate\n";
    for (const ComplexityRow& row : rows) {
      out << row.method << ',' << format_double(row.kappa) << ',' << format_double(row.rho) << ','
          << format_double(row.inv_log_rate) << '\n';
    }
    return 0;
  }

  ordered_json j = ordered_json::array();
  for (const ComplexityRow& row : rows) {
    j.push_back(ordered_json{{"method", row.method},
                             {"kappa", row.kappa},
                             {"rho", row.rho},
                             {"inv_log_rate", row.inv_log_rate}});
  }
  out << j.dump(2) << '\n';
  return 0;
}

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc{}) {
    throw std::runtime_error("format_double: conversion failed");
  }
  return std::string(buffer, ptr);
}

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (config.out_path) {
    file.open(*config.out_path);
    if (!file) {
      err << "error: cannot open output file '" << *config.out_path << "'\n";
      return 1;
    }
    sink = &file;
  }
  try {
    switch (config.command) {
      case Command::Params: return cmd_params(config, *sink, err);
      case Command::Rho: return cmd_rho(config, *sink, err);
      case Command::Certify: return cmd_certify(config, *sink, err);
      case Command::Simulate: return cmd_simulate(config, *sink, err);
      case Command::Complexity: return cmd_complexity(config, *sink, err);
    }
    err << "error: unknown command\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace momentum_lab
