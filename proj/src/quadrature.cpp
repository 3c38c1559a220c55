#include "hardyspec/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "hardyspec/errors.hpp"

namespace hardyspec {

namespace {

constexpr double kLn2 = 0.6931471805599453;

// L_{q-1}(u) and L_q(u) up to a common positive scale; enough for the Newton
// ratio, which is scale-free
struct ScaledTail {
  double prev, last;
};

ScaledTail laguerre_tail(double u, int q) {
  double v0 = 1.0, v1 = 1.0 - u;
  for (int n = 1; n < q; ++n) {
    double v2 = ((2.0 * n + 1.0 - u) * v1 - n * v0) / (n + 1.0);
    if (std::fabs(v2) > 1e250) {
      v2 *= 0x1p-832;
      v1 *= 0x1p-832;
    }
    v0 = v1;
    v1 = v2;
  }
  return {v0, v1};
}

}  // namespace

void weighted_laguerre_column(double u, int nmax, double* out) {
  const double ln_weight = -0.5 * u;
  double v0 = 1.0, v1 = 1.0 - u;
  long ex2 = 0;
  auto emit = [&](double v) -> double {
    if (v == 0.0) return 0.0;
    double ln_mag = std::log(std::fabs(v)) + ex2 * kLn2 + ln_weight;
    if (ln_mag < -700.0) return 0.0;
    return (v > 0.0 ? 1.0 : -1.0) * std::exp(ln_mag);
  };
  out[0] = emit(v0);
  if (nmax >= 1) out[1] = emit(v1);
  for (int n = 1; n < nmax; ++n) {
    double v2 = ((2.0 * n + 1.0 - u) * v1 - n * v0) / (n + 1.0);
    if (std::fabs(v2) > 1e250) {
      v2 *= 0x1p-832;
      v1 *= 0x1p-832;
      ex2 += 832;
    }
    out[n + 1] = emit(v2);
    v0 = v1;
    v1 = v2;
  }
}

LaguerreRule laguerre_rule(int q) {
  if (q < 1) throw std::invalid_argument("laguerre_rule: q must be positive");

  gsl_integration_fixed_workspace* ws = gsl_integration_fixed_alloc(
      gsl_integration_fixed_laguerre, static_cast<std::size_t>(q), 0.0, 1.0,
      0.0, 0.0);
  if (!ws) throw std::runtime_error("laguerre_rule: GSL allocation failed");
  const double* raw = gsl_integration_fixed_nodes(ws);

  LaguerreRule rule;
  rule.q = q;
  rule.nodes.assign(raw, raw + q);
  gsl_integration_fixed_free(ws);

  // two Newton sweeps; L_q'(u) = q (L_q(u) - L_{q-1}(u)) / u
  for (int sweep = 0; sweep < 2; ++sweep) {
    for (double& u : rule.nodes) {
      ScaledTail t = laguerre_tail(u, q);
      double deriv = q * (t.last - t.prev) / u;
      u -= t.last / deriv;
    }
  }

  rule.weights.resize(static_cast<std::size_t>(q));
  std::vector<double> col(static_cast<std::size_t>(q) + 2);
  const double qq = (static_cast<double>(q) + 1.0) * (static_cast<double>(q) + 1.0);
  for (int i = 0; i < q; ++i) {
    double u = rule.nodes[static_cast<std::size_t>(i)];
    weighted_laguerre_column(u, q + 1, col.data());
    double phi = col[static_cast<std::size_t>(q) + 1];
    double w = u / (qq * phi * phi);
    if (!std::isfinite(w) || w <= 0.0)
      throw consistency_error("laguerre_rule: nonfinite quadrature weight");
    rule.weights[static_cast<std::size_t>(i)] = w;
  }
  return rule;
}

const LaguerreRule& laguerre_rule_cached(int q) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<LaguerreRule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it == cache.end())
    it = cache.emplace(q, std::make_unique<LaguerreRule>(laguerre_rule(q)))
             .first;
  return *it->second;
}

std::vector<double> laguerre_table(const LaguerreRule& rule, int rows) {
  return laguerre_table_shifted(rule, rows, 0.0);
}

std::vector<double> laguerre_table_shifted(const LaguerreRule& rule, int rows,
                                           double shift) {
  if (shift < 0.0)
    throw std::invalid_argument("laguerre_table_shifted: shift must be >= 0");
  const int q = rule.q;
  std::vector<double> table(static_cast<std::size_t>(rows) *
                            static_cast<std::size_t>(q));
  std::vector<double> col(static_cast<std::size_t>(rows));
  for (int i = 0; i < q; ++i) {
    weighted_laguerre_column(rule.nodes[static_cast<std::size_t>(i)] + shift,
                             rows - 1, col.data());
    for (int n = 0; n < rows; ++n)
      table[static_cast<std::size_t>(n) * static_cast<std::size_t>(q) +
            static_cast<std::size_t>(i)] = col[static_cast<std::size_t>(n)];
  }
  return table;
}

}  // namespace hardyspec
