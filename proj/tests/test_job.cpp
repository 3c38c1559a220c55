#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "hardyspec/errors.hpp"
#include "hardyspec/job.hpp"

using namespace hardyspec;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kFullJob = R"({
  "element": {
    "scalar": [0.5, -0.25],
    "tm_terms": [
      {"toeplitz": {"kind": "rational", "constant": 1.0, "coeffs": [[0.2, 0.1]]},
       "multiplier": {"kind": "exp_decay", "alpha": 1.0, "scale": [1.0, 0.0], "offset": [0.1, 0.0]}},
      {"toeplitz": {"kind": "cayley_power", "power": 2},
       "multiplier": {"kind": "power_exp", "n": 1, "alpha": 0.5, "coeff": [0.0, 0.3]}}
    ],
    "mt_terms": [
      {"toeplitz": {"kind": "constant", "value": [0.4, 0.0]},
       "multiplier": {"kind": "complex_exp", "c": [1.0, 0.8]}},
      {"toeplitz": {"kind": "rational", "constant": 0.0, "coeffs": [[1.0, 0.0]]},
       "multiplier": {"kind": "piecewise_linear",
                      "knots": [[0.0, 1.0, 0.0], [2.0, 0.5, 0.5], [4.0, 0.0, 0.0]]}}
    ]
  },
  "lambda": [0.3, 0.2],
  "w_grid": [0.0, 0.5, 1.0],
  "truncation": {"n": 32, "q": 160},
  "grid_size": 512,
  "resolution": 64,
  "seed": 42
})";

}  // namespace

TEST_CASE("full job config parses with every symbol kind") {
  JobConfig cfg = parse_job(kFullJob);
  CHECK(cfg.has_element);
  CHECK_FALSE(cfg.has_map);
  CHECK(cfg.element.tm_terms.size() == 2);
  CHECK(cfg.element.mt_terms.size() == 2);
  CHECK(std::abs(cfg.element.scalar - Complex(0.5, -0.25)) < 1e-15);
  CHECK(std::abs(cfg.lambda - Complex(0.3, 0.2)) < 1e-15);
  REQUIRE(cfg.w_grid.size() == 3);
  CHECK(cfg.w_grid[1] == 0.5);
  CHECK(cfg.trunc.n == 32);
  CHECK(cfg.trunc.q == 160);
  CHECK(cfg.grid_size == 512);
  CHECK(cfg.resolution == 64);
  CHECK(cfg.seed == 42);

  // spot-check that the parsed symbols evaluate
  const auto& t0 = cfg.element.tm_terms[0];
  CHECK(std::abs(t0.toeplitz(0.0) - (1.0 + Complex(0.2, 0.1) / Complex(0.0, 1.0))) <
        1e-14);
  CHECK(std::abs(t0.multiplier(1.0) - (std::exp(-1.0) + 0.1)) < 1e-14);
  const auto& m1 = cfg.element.mt_terms[1];
  CHECK(std::abs(m1.multiplier(3.0) - Complex(0.25, 0.25)) < 1e-14);
}

TEST_CASE("map job config parses") {
  JobConfig cfg = parse_job(R"({
    "map": {"psi_constant": [0.0, 2.0], "epsilon": 2.0, "alpha": 2.0},
    "truncation": {"n": 48}
  })");
  CHECK(cfg.has_map);
  CHECK_FALSE(cfg.has_element);
  CHECK(std::abs(cfg.map.psi_constant - Complex(0.0, 2.0)) < 1e-15);
  CHECK(cfg.map.alpha == 2.0);
  CHECK(cfg.map.n_max == 12);
  CHECK(cfg.trunc.n == 48);
  CHECK(cfg.w_grid.empty());
}

TEST_CASE("malformed configs raise config errors") {
  CHECK_THROWS_AS((void)parse_job("not json at all"), config_error);
  CHECK_THROWS_AS((void)parse_job("{}"), config_error);
  CHECK_THROWS_AS((void)parse_job(R"({"element": {}})"), config_error);
  CHECK_THROWS_AS(
      (void)parse_job(
          R"({"element": {"scalar": 1.0}, "w_grid": [0.0, 1.5]})"),
      config_error);
  CHECK_THROWS_AS(
      (void)parse_job(
          R"({"element": {"tm_terms": [{"toeplitz": {"kind": "nope"},
              "multiplier": {"kind": "constant", "value": 1.0}}]}})"),
      config_error);
  CHECK_THROWS_AS(
      (void)parse_job(
          R"({"element": {"scalar": 1.0}, "grid_size": 2})"),
      config_error);
  CHECK_THROWS_AS((void)load_job("/nonexistent/path.json"), config_error);
}

TEST_CASE("inadmissible symbols in a config keep their own error class") {
  CHECK_THROWS_AS(
      (void)parse_job(
          R"({"element": {"tm_terms": [{"toeplitz": {"kind": "constant", "value": 1.0},
              "multiplier": {"kind": "complex_exp", "c": [1.0, -0.5]}}]}})"),
      symbol_class_error);
}

TEST_CASE("scalar shorthand: bare numbers are accepted as complex values") {
  JobConfig cfg = parse_job(
      R"({"element": {"scalar": 2.0}, "lambda": 1.0})");
  CHECK(std::abs(cfg.element.scalar - Complex(2.0)) < 1e-15);
  CHECK(std::abs(cfg.lambda - Complex(1.0)) < 1e-15);
}

TEST_CASE("commands write deterministic outputs") {
  JobConfig cfg = parse_job(R"({
    "element": {"tm_terms": [{"toeplitz": {"kind": "cayley_power", "power": 1},
                              "multiplier": {"kind": "constant", "value": 1.0}}]},
    "lambda": [0.0, 0.0],
    "grid_size": 256
  })");

  CommandOptions opt;
  opt.out_base = "job_test_out_a";
  opt.format = "both";
  run_command("essential-spectrum", cfg, opt);
  opt.out_base = "job_test_out_b";
  run_command("essential-spectrum", cfg, opt);

  std::string csv_a = slurp("job_test_out_a.csv");
  CHECK(csv_a == slurp("job_test_out_b.csv"));
  CHECK(slurp("job_test_out_a.svg") == slurp("job_test_out_b.svg"));
  CHECK(csv_a.find("arc,sample,re,im") != std::string::npos);

  opt.format = "csv";
  opt.out_base = "job_test_out_idx";
  run_command("index", cfg, opt);
  std::string idx = slurp("job_test_out_idx.csv");
  CHECK(idx.find("lambda_re,lambda_im,index") != std::string::npos);
  CHECK(idx.find(",-1,") != std::string::npos);

  for (const char* p :
       {"job_test_out_a.csv", "job_test_out_a.svg", "job_test_out_b.csv",
        "job_test_out_b.svg", "job_test_out_idx.csv"})
    std::remove(p);
}

TEST_CASE("command dispatch validates its inputs") {
  JobConfig cfg = parse_job(R"({"element": {"scalar": 1.0}})");
  CommandOptions opt;
  CHECK_THROWS_AS(run_command("no-such-command", cfg, opt), config_error);
  CHECK_THROWS_AS(run_command("compose", cfg, opt), config_error);
  opt.format = "tsv";
  opt.out_base = "job_test_out_c";
  CHECK_THROWS_AS(run_command("essential-spectrum", cfg, opt), config_error);
}

TEST_CASE("exit codes follow the error taxonomy") {
  CHECK(exit_code_for(config_error("x")) == 2);
  CHECK(exit_code_for(symbol_class_error("x")) == 3);
  CHECK(exit_code_for(resolution_error("x")) == 4);
  CHECK(exit_code_for(consistency_error("x")) == 5);
  CHECK(exit_code_for(std::runtime_error("x")) == 1);
}
