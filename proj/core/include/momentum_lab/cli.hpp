#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "momentum_lab/algorithm.hpp"

namespace momentum_lab {

enum class Command { Params, Rho, Certify, Simulate, Complexity };
enum class OutputFormat { Csv, Json };

// Parsed command-line request.  `methods` holds the tunings a command acts
// on; params/certify require exactly one, simulate/complexity default to all
// four standard tunings when empty.
struct RunConfig {
  Command command = Command::Params;
  std::vector<Method> methods;
  double m = 1e-3;
  double L = 1.0;
  std::optional<double> kappa;          // rho command; single-point complexity grid
  std::optional<double> rho_override;   // c2m only (params / certify)
  double epsilon = 1e-9;                // c2m rate margin above the root
  double tol = 1e-12;                   // root-finding tolerance (rho command)
  int iters = 100000;                   // simulate horizon
  std::optional<std::string> out_path;  // write primary output here instead of `out`
  OutputFormat format = OutputFormat::Csv;
};

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

// Executes one command.  Primary output goes to `out` (or to
// config.out_path when set), diagnostics to `err`.  Returns the process exit
// code: 0 on success, 1 on usage or validation errors, 2 when a requested
// certificate fails.
//
//   params     — JSON parameter record of one tuned method
//   rho        — bare c2m certificate root for --kappa (tolerance --tol)
//   certify    — JSON certificate report of one tuned method (exit 2 on fail)
//   simulate   — worst-case experiment for the listed methods; CSV rows
//                `k,method,error` or a JSON record per --format
//   complexity — designed-rate table over a condition-ratio grid; CSV rows
//                `method,kappa,rho,inv_log_rate` or JSON per --format
int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace momentum_lab
