#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "hardyspec/errors.hpp"
#include "hardyspec/finite_model.hpp"
#include "hardyspec/kernels.hpp"
#include "hardyspec/quadrature.hpp"
#include "hardyspec/symbols.hpp"

using namespace hardyspec;

namespace {

double binomial(int n, int k) {
  double v = 1.0;
  for (int j = 1; j <= k; ++j) v *= double(n - k + j) / double(j);
  return v;
}

}  // namespace

TEST_CASE("toeplitz truncation reproduces the symbol bands") {
  std::vector<Complex> coeffs = {Complex(0.5, -0.25), Complex(1.0),
                                 Complex(0.0, 2.0)};
  CircleSymbol a = CircleSymbol::from_coefficients(-1, coeffs);
  TruncationConfig cfg;
  cfg.n = 16;
  OperatorMatrix m = toeplitz_matrix(a, cfg);
  for (int j = 0; j < 16; ++j)
    for (int k = 0; k < 16; ++k) {
      Complex want = 0.0;
      int d = j - k;
      if (d >= -1 && d <= 1) want = coeffs[static_cast<std::size_t>(d + 1)];
      CHECK(std::abs(m(j, k) - want) < 1e-12);
    }
}

TEST_CASE("analytic symbols give lower triangular truncations") {
  CircleSymbol w2 = pullback_line_symbol(LineSymbol::cayley_power(2));
  TruncationConfig cfg;
  cfg.n = 24;
  OperatorMatrix m = toeplitz_matrix(w2, cfg);
  for (int j = 0; j < 24; ++j)
    for (int k = 0; k < 24; ++k) {
      if (j - k == 2)
        CHECK(std::abs(m(j, k) - 1.0) < 1e-12);
      else
        CHECK(std::abs(m(j, k)) < 1e-12);
    }
}

TEST_CASE("truncation of an analytic product splits into a matrix product") {
  // T_{w b} truncates to T_w T_b when w is analytic
  CircleSymbol w = pullback_line_symbol(LineSymbol::cayley_power(1));
  CircleSymbol b =
      pullback_line_symbol(LineSymbol::rational(1.0, {Complex(1.0, 0.5)}));
  TruncationConfig cfg;
  cfg.n = 32;
  OperatorMatrix lhs = toeplitz_matrix(w * b, cfg);
  OperatorMatrix rhs = toeplitz_matrix(w, cfg) * toeplitz_matrix(b, cfg);
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("multiplier truncation against the closed form for e^{-2t}") {
  TruncationConfig cfg;
  cfg.n = 64;
  OperatorMatrix m =
      multiplier_matrix(MultiplierSymbol::exp_decay(2.0, 1.0, 0.0), cfg);
  double worst = 0.0;
  for (int a = 0; a < 64; ++a)
    for (int b = 0; b < 64; ++b) {
      double want = binomial(a + b, a) * std::pow(2.0, -(a + b + 1));
      worst = std::max(worst, std::abs(m(a, b) - want));
    }
  CHECK(worst < 1e-9);
}

TEST_CASE("multiplier truncations are complex symmetric") {
  TruncationConfig cfg;
  cfg.n = 48;
  OperatorMatrix m =
      multiplier_matrix(MultiplierSymbol::complex_exp(Complex(0.7, 0.9)), cfg);
  for (int a = 0; a < 48; ++a)
    for (int b = a + 1; b < 48; ++b) CHECK(m(a, b) == m(b, a));
}

TEST_CASE("rough multipliers fail the two-level consistency check") {
  TruncationConfig cfg;
  cfg.n = 8;
  cfg.q = 32;
  MultiplierSymbol spike = MultiplierSymbol::piecewise_linear(
      {{0.0, 0.0}, {0.8, 0.0}, {1.05, 10.0}, {1.3, 0.0}, {2.0, 0.0}});
  CHECK_THROWS_AS((void)multiplier_matrix(spike, cfg), consistency_error);
}

TEST_CASE("shift truncation endpoints") {
  TruncationConfig cfg;
  cfg.n = 32;
  for (double eta : {0.25, 1.0, 3.0}) {
    OperatorMatrix s = shift_matrix(eta, cfg);
    CHECK(std::abs(s(0, 0) - std::exp(-eta)) < 1e-10);
  }
  OperatorMatrix id = shift_matrix(0.0, cfg);
  for (int a = 0; a < 32; ++a)
    for (int b = 0; b < 32; ++b)
      CHECK(std::abs(id(a, b) - (a == b ? 1.0 : 0.0)) < 1e-9);
  CHECK_THROWS_AS((void)shift_matrix(-0.5, cfg), std::domain_error);
}

TEST_CASE("kernel execution modes agree bit for bit") {
  const int n = 40, q = 160;
  const LaguerreRule& rule = laguerre_rule_cached(q);
  std::vector<double> table = laguerre_table(rule, n);
  std::vector<double> shifted = laguerre_table_shifted(rule, n, 0.8);
  std::vector<Complex> tv(q);
  for (int i = 0; i < q; ++i)
    tv[static_cast<std::size_t>(i)] =
        rule.weights[static_cast<std::size_t>(i)] *
        std::exp(Complex(-0.1, 0.4) * rule.nodes[static_cast<std::size_t>(i)]);

  std::vector<Complex> a(static_cast<std::size_t>(n) * n), b(a.size());
  multiplier_kernel(ExecMode::serial, n, q, tv.data(), table.data(), a.data());
  multiplier_kernel(ExecMode::parallel, n, q, tv.data(), table.data(),
                    b.data());
  for (std::size_t j = 0; j < a.size(); ++j) CHECK(a[j] == b[j]);

  cross_kernel(ExecMode::serial, n, q, rule.weights.data(), table.data(),
               shifted.data(), a.data());
  cross_kernel(ExecMode::parallel, n, q, rule.weights.data(), table.data(),
               shifted.data(), b.data());
  for (std::size_t j = 0; j < a.size(); ++j) CHECK(a[j] == b[j]);
}

TEST_CASE("singular values of the pure shift truncation") {
  CircleSymbol w = pullback_line_symbol(LineSymbol::cayley_power(1));
  TruncationConfig cfg;
  cfg.n = 64;
  Eigen::VectorXd s = singular_values(toeplitz_matrix(w, cfg));
  REQUIRE(s.size() == 64);
  for (int j = 0; j + 1 < 64; ++j) CHECK(std::abs(s(j) - 1.0) < 1e-12);
  CHECK(s(63) < 1e-14);
  CHECK(sigma_min(toeplitz_matrix(w, cfg)) < 1e-14);
  CHECK(sigma_max(toeplitz_matrix(w, cfg)) == doctest::Approx(1.0));
}

TEST_CASE("eigenvalues of a known matrix") {
  OperatorMatrix d = OperatorMatrix::Zero(3, 3);
  d(0, 0) = Complex(1.0);
  d(1, 1) = Complex(0.0, 2.0);
  d(2, 2) = Complex(-3.0, 0.0);
  d(0, 2) = Complex(0.5, 0.1);  // upper triangular, spectrum unchanged
  std::vector<Complex> ev = eigenvalues(d);
  REQUIRE(ev.size() == 3);
  for (Complex want : {Complex(1.0), Complex(0.0, 2.0), Complex(-3.0)}) {
    double best = 1e9;
    for (Complex got : ev) best = std::min(best, std::abs(got - want));
    CHECK(best < 1e-12);
  }
}

TEST_CASE("truncation sizes are validated") {
  TruncationConfig cfg;
  cfg.n = 48;
  CHECK(effective_q(cfg) == 192);
  cfg.q = 96;
  CHECK(effective_q(cfg) == 96);
  cfg.q = 30;  // smaller than n
  CHECK_THROWS_AS((void)effective_q(cfg), config_error);
  cfg.q = 0;
  cfg.n = 0;
  CHECK_THROWS_AS((void)effective_q(cfg), config_error);
  cfg.n = 5000;
  CHECK_THROWS_AS((void)effective_q(cfg), config_error);
}

TEST_CASE("line basis transforms to the half-line basis with a fixed phase") {
  TruncationConfig cfg;
  verify_phase_convention(cfg);
  // spot-check a defect value directly
  CHECK(fourier_phase_defect(3, 1.25) < 1e-6);
}
