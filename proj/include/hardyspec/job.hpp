/**
 * Job configuration and command dispatch shared by the CLI and the tests.
 *
 * A job file is JSON with an "element" and/or a "map" plus optional analysis
 * parameters; see configs/ for working examples. Complex numbers are
 * two-element arrays [re, im].
 */
#pragma once

#include <string>
#include <vector>

#include "hardyspec/algebra.hpp"
#include "hardyspec/composition.hpp"

namespace hardyspec {

struct JobConfig {
  bool has_element = false;
  OperatorSum element;
  bool has_map = false;
  QuasiParabolicMap map;
  Complex lambda = 0.0;
  std::vector<double> w_grid;  // defaults to 0, 0.1, ..., 1
  TruncationConfig trunc;
  int grid_size = 1024;
  int resolution = 256;
  unsigned long long seed = 1;
};

// both throw config_error on malformed input
JobConfig parse_job(const std::string& json_text);
JobConfig load_job(const std::string& path);

struct CommandOptions {
  std::string out_base;        // empty = print summary only
  std::string format = "csv";  // csv | svg | both
};

// runs one of: essential-spectrum, spectrum, index, invertible,
// homotopy-trace, compose. Writes out_base.csv / out_base.svg as requested
// and prints a one-line summary to stdout. Throws the library error types.
void run_command(const std::string& command, const JobConfig& cfg,
                 const CommandOptions& opt);

/// self-checks: quadrature accuracy, phase convention, arc meeting invariant,
// limit-operator verdict agreement on seeded random elements, deterministic
// serialization. Prints one line per check; throws consistency_error on the
// first failure.
void run_validate(unsigned long long seed);

// maps the library error taxonomy to process exit codes (config 2, symbol
// class 3, resolution 4, consistency 5, anything else 1)
int exit_code_for(const std::exception& e);

}  // namespace hardyspec
