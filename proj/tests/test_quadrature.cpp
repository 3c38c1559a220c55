#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "hardyspec/quadrature.hpp"

using namespace hardyspec;

namespace {

// plain three-term recurrence for e^{-u/2} L_n(u), safe at moderate u
std::vector<double> reference_column(double u, int nmax) {
  std::vector<double> out(static_cast<std::size_t>(nmax) + 1);
  double p0 = std::exp(-0.5 * u);
  double p1 = (1.0 - u) * p0;
  out[0] = p0;
  if (nmax >= 1) out[1] = p1;
  for (int n = 1; n < nmax; ++n) {
    double p2 = ((2.0 * n + 1.0 - u) * p1 - n * p0) / (n + 1.0);
    out[static_cast<std::size_t>(n) + 1] = p2;
    p0 = p1;
    p1 = p2;
  }
  return out;
}

double orthonormality_defect(int q, int rows) {
  const LaguerreRule& rule = laguerre_rule_cached(q);
  std::vector<double> table = laguerre_table(rule, rows);
  double worst = 0.0;
  for (int a = 0; a < rows; ++a)
    for (int b = a; b < rows; ++b) {
      double s = 0.0;
      for (int i = 0; i < q; ++i)
        s += rule.weights[static_cast<std::size_t>(i)] *
             table[static_cast<std::size_t>(a) * q + i] *
             table[static_cast<std::size_t>(b) * q + i];
      worst = std::max(worst, std::abs(s - (a == b ? 1.0 : 0.0)));
    }
  return worst;
}

}  // namespace

TEST_CASE("rule nodes are positive and strictly increasing") {
  for (int q : {16, 128, 2048}) {
    const LaguerreRule& rule = laguerre_rule_cached(q);
    REQUIRE(rule.q == q);
    REQUIRE(rule.nodes.size() == static_cast<std::size_t>(q));
    CHECK(rule.nodes.front() > 0.0);
    for (int i = 1; i < q; ++i)
      CHECK(rule.nodes[static_cast<std::size_t>(i)] >
            rule.nodes[static_cast<std::size_t>(i - 1)]);
    for (double w : rule.weights) {
      CHECK(std::isfinite(w));
      CHECK(w > 0.0);
    }
  }
  CHECK_THROWS_AS((void)laguerre_rule(0), std::invalid_argument);
}

TEST_CASE("cached rules are shared") {
  const LaguerreRule& a = laguerre_rule_cached(64);
  const LaguerreRule& b = laguerre_rule_cached(64);
  CHECK(&a == &b);
}

TEST_CASE("moments of the exponential weight") {
  // sum_i w_i u_i^k e^{-u_i} = k! while 2k stays below the exactness degree
  const LaguerreRule& rule = laguerre_rule_cached(128);
  double factorial = 1.0;
  for (int k = 0; k <= 40; ++k) {
    if (k > 0) factorial *= k;
    double s = 0.0;
    for (int i = 0; i < rule.q; ++i) {
      double u = rule.nodes[static_cast<std::size_t>(i)];
      s += rule.weights[static_cast<std::size_t>(i)] *
           std::pow(u, double(k)) * std::exp(-u);
    }
    CHECK(std::abs(s - factorial) < 1e-10 * factorial);
  }
}

TEST_CASE("basis orthonormality under the rule") {
  CHECK(orthonormality_defect(128, 32) < 1e-10);
  CHECK(orthonormality_defect(512, 128) < 1e-9);
  CHECK(orthonormality_defect(2048, 256) < 1e-9);
}

TEST_CASE("weighted column matches the plain recurrence at moderate argument")
{
  for (double u : {0.05, 1.0, 3.7, 25.0, 140.0}) {
    std::vector<double> got(41);
    weighted_laguerre_column(u, 40, got.data());
    std::vector<double> want = reference_column(u, 40);
    for (int n = 0; n <= 40; ++n)
      CHECK(std::abs(got[static_cast<std::size_t>(n)] -
                     want[static_cast<std::size_t>(n)]) < 1e-12);
  }
}

TEST_CASE("weighted column stays finite far past the underflow point") {
  std::vector<double> got(513);
  for (double u : {800.0, 1500.0, 7000.0, 16000.0}) {
    weighted_laguerre_column(u, 512, got.data());
    for (double v : got) {
      CHECK(std::isfinite(v));
      CHECK(std::abs(v) < 1e3);
    }
  }
}

TEST_CASE("tables agree with per-node columns") {
  const LaguerreRule& rule = laguerre_rule_cached(96);
  std::vector<double> table = laguerre_table(rule, 24);
  std::vector<double> col(24);
  for (int i = 0; i < rule.q; i += 17) {
    weighted_laguerre_column(rule.nodes[static_cast<std::size_t>(i)], 23,
                             col.data());
    for (int n = 0; n < 24; ++n)
      CHECK(table[static_cast<std::size_t>(n) * rule.q + i] ==
            col[static_cast<std::size_t>(n)]);
  }

  std::vector<double> shifted0 = laguerre_table_shifted(rule, 24, 0.0);
  for (std::size_t j = 0; j < table.size(); ++j)
    CHECK(shifted0[j] == table[j]);

  std::vector<double> shifted = laguerre_table_shifted(rule, 24, 1.3);
  weighted_laguerre_column(rule.nodes[0] + 1.3, 23, col.data());
  for (int n = 0; n < 24; ++n)
    CHECK(shifted[static_cast<std::size_t>(n) * rule.q] ==
          col[static_cast<std::size_t>(n)]);
  CHECK_THROWS_AS((void)laguerre_table_shifted(rule, 24, -1.0),
                  std::invalid_argument);
}
