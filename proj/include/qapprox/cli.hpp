#pragma once

// Experiment runner behind the `qapprox` executable.

#include <ostream>
#include <string>
#include <vector>

#include "qapprox/errors.hpp"

namespace qapprox::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kConfigError = 2,
  kDomainError = 3,
  kTruncationError = 4,
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::string command;  // identities|moments|converge|rates|local|statdemo
  std::string q = "0.8";  // real, or a schedule name
  int n = 10;
  std::vector<int> ns = {16, 64, 256, 1024};
  std::string bn = "sqrt";  // sqrt | n14 | explicit positive real
  std::string family = "one";
  std::string function = "sin";
  std::string lip_function = "abspow:0.5:1";
  std::string schedule;  // smooth | spiky | empty
  double grid_lo = 0.0;
  std::string grid_hi = "auto";  // real, or auto
  int points = 20;
  double f_lo = 0.0;
  double f_hi = 2.0;
  double alpha = 0.5;
  double eps = 0.1;
  double tol = 1e-12;
  std::string out;  // CSV path; empty writes no CSV

  // Throws ConfigError when any value violates a module precondition.
  void validate() const;
  // Deterministic "key=value ..." rendering of every field.
  std::string resolved() const;
};

// Flags (argv[0] excluded) with an optional --config key=value file; flags
// override file entries.  Throws ConfigError.
RunConfig parse_args(const std::vector<std::string>& args);

// Runs one command.  Progress and a final OK/FAIL line go to `log`.
int run(const RunConfig& config, std::ostream& log);

// parse_args + run with exit-code mapping.
int main_entry(int argc, char** argv);

}  // namespace qapprox::cli
