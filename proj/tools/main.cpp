#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "momentum_lab/cli.hpp"

namespace {

bool parse_methods(const std::vector<std::string>& args, std::vector<momentum_lab::Method>& out) {
  for (const std::string& arg : args) {
    std::size_t start = 0;
    while (start <= arg.size()) {
      const std::size_t comma = arg.find(',', start);
      const std::string token =
          arg.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (!token.empty()) {
        const auto method = momentum_lab::method_from_string(token);
        if (!method) {
          std::cerr << "error: unknown method '" << token << "' (use gd, hb, tm, c2m)\n";
          return false;
        }
        out.push_back(*method);
      }
      if (comma == std::string::npos) {
        break;
      }
      start = comma + 1;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Design, certify, and benchmark momentum-method tunings for strongly convex "
               "optimization"};
  app.require_subcommand(1);

  momentum_lab::RunConfig config;
  std::vector<std::string> method_args;
  std::string format = "csv";

  CLI::App* params = app.add_subcommand("params", "Print the tuned parameters of one method");
  CLI::App* rho = app.add_subcommand("rho", "Print the certificate design rate for --kappa");
  CLI::App* certify = app.add_subcommand("certify", "Run the convergence certificates for one method");
  CLI::App* simulate = app.add_subcommand("simulate", "Run the worst-case benchmark experiment");
  CLI::App* complexity = app.add_subcommand("complexity", "Tabulate designed rates over a kappa grid");

  for (CLI::App* cmd : {params, rho, certify, simulate, complexity}) {
    cmd->add_option("--method", method_args,
                    "Method name(s): gd, hb, tm, c2m; repeat the flag or comma-separate");
    cmd->add_option("--m", config.m, "Strong-convexity modulus (default 1e-3)");
    cmd->add_option("--L", config.L, "Smoothness modulus (default 1)");
    cmd->add_option("--kappa", config.kappa,
                    "Condition ratio (rho command; single-point complexity grid)");
    cmd->add_option("--rho", config.rho_override,
                    "Rate override for the c2m tuning (params/certify only)");
    cmd->add_option("--eps", config.epsilon,
                    "Margin added above the c2m certificate root (default 1e-9)");
    cmd->add_option("--tol", config.tol, "Bisection tolerance for the rho command (default 1e-12)");
    cmd->add_option("--iters", config.iters, "Simulation horizon (default 100000)");
    cmd->add_option("--out", config.out_path, "Write primary output to this file");
    cmd->add_option("--format", format, "Output format for simulate/complexity: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (params->parsed()) config.command = momentum_lab::Command::Params;
  if (rho->parsed()) config.command = momentum_lab::Command::Rho;
  if (certify->parsed()) config.command = momentum_lab::Command::Certify;
  if (simulate->parsed()) config.command = momentum_lab::Command::Simulate;
  if (complexity->parsed()) config.command = momentum_lab::Command::Complexity;

  if (!parse_methods(method_args, config.methods)) {
    return 1;
  }
  config.format =
      format == "json" ? momentum_lab::OutputFormat::Json : momentum_lab::OutputFormat::Csv;

  return momentum_lab::dispatch(config, std::cout, std::cerr);
}
