// Timing comparison of the serial reference kernels against the OpenMP
// versions. Run with OMP_NUM_THREADS set to taste.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "hardyspec/kernels.hpp"
#include "hardyspec/quadrature.hpp"
#include "hardyspec/types.hpp"

using namespace hardyspec;

namespace {

template <typename F>
double time_best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main() {
  std::printf("%-18s %6s %6s %10s %10s %8s\n", "kernel", "n", "q",
              "serial[s]", "openmp[s]", "speedup");
  for (int n : {128, 256, 512}) {
    int q = 4 * n;
    const LaguerreRule& rule = laguerre_rule_cached(q);
    std::vector<double> table = laguerre_table(rule, n);
    std::vector<double> shifted = laguerre_table_shifted(rule, n, 0.6);

    std::vector<Complex> tv(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) {
      double u = rule.nodes[static_cast<std::size_t>(i)];
      tv[static_cast<std::size_t>(i)] =
          rule.weights[static_cast<std::size_t>(i)] *
          std::exp(Complex(0.0, 0.35) * (0.5 * u)) * std::exp(-0.2 * u);
    }

    std::vector<Complex> out_s(static_cast<std::size_t>(n) * n);
    std::vector<Complex> out_p(out_s.size());

    double ts = time_best_of(3, [&] {
      multiplier_kernel(ExecMode::serial, n, q, tv.data(), table.data(),
                        out_s.data());
    });
    double tp = time_best_of(3, [&] {
      multiplier_kernel(ExecMode::parallel, n, q, tv.data(), table.data(),
                        out_p.data());
    });
    double diff = 0.0;
    for (std::size_t k = 0; k < out_s.size(); ++k)
      diff = std::max(diff, std::abs(out_s[k] - out_p[k]));
    std::printf("%-18s %6d %6d %10.4f %10.4f %7.2fx", "multiplier", n, q, ts,
                tp, ts / tp);
    std::printf(diff == 0.0 ? "  (bit-identical)\n" : "  (max diff %g)\n",
                diff);

    ts = time_best_of(3, [&] {
      cross_kernel(ExecMode::serial, n, q, rule.weights.data(), table.data(),
                   shifted.data(), out_s.data());
    });
    tp = time_best_of(3, [&] {
      cross_kernel(ExecMode::parallel, n, q, rule.weights.data(), table.data(),
                   shifted.data(), out_p.data());
    });
    diff = 0.0;
    for (std::size_t k = 0; k < out_s.size(); ++k)
      diff = std::max(diff, std::abs(out_s[k] - out_p[k]));
    std::printf("%-18s %6d %6d %10.4f %10.4f %7.2fx", "cross", n, q, ts, tp,
                ts / tp);
    std::printf(diff == 0.0 ? "  (bit-identical)\n" : "  (max diff %g)\n",
                diff);
  }
  return 0;
}
