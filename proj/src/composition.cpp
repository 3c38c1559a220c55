#include "hardyspec/composition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hardyspec/errors.hpp"
#include "hardyspec/fft.hpp"

namespace hardyspec {

namespace {

constexpr double kRatioCap = 0.9;

double series_ratio(const QuasiParabolicMap& map, double alpha) {
  LineSymbol tau = Complex(0.0, alpha) + (-1.0) * psi_symbol(map);
  return tau.sup_norm(2048) / alpha;
}

// sum_{n > n_max} ||tau||^n sup|theta_n|, sup|theta_n| = (n/alpha)^n e^{-n}/n!,
// accumulated in log space
double series_tail(double tau_norm, double alpha, int n_max) {
  if (tau_norm == 0.0) return 0.0;
  double total = 0.0;
  for (int n = n_max + 1; n < n_max + 100000; ++n) {
    double ln_term = n * std::log(tau_norm) + n * (std::log(n) - std::log(alpha)) -
                     n - std::lgamma(n + 1.0);
    double term = std::exp(ln_term);
    total += term;
    if (term < 1e-18 * std::max(total, 1e-300) && n > n_max + 4) break;
  }
  return total;
}

}  // namespace

LineSymbol psi_symbol(const QuasiParabolicMap& map) {
  return LineSymbol::rational(map.psi_constant, map.psi_coeffs);
}

void validate_map(const QuasiParabolicMap& map, int grid_size) {
  if (!(map.epsilon > 0.0))
    throw symbol_class_error("map: epsilon must be positive");
  if (map.n_max < 0) throw config_error("map: n_max must be nonnegative");
  LineSymbol psi = psi_symbol(map);
  double floor = map.epsilon - 1e-12;
  if (psi.infinity_value().imag() < floor)
    throw symbol_class_error("map: Im psi at infinity below epsilon");
  for (int j = 0; j < grid_size; ++j) {
    double x = line_point(2.0 * kPi * (j + 0.5) / grid_size);
    if (psi(x).imag() < floor)
      throw symbol_class_error("map: Im psi dips below epsilon near x = " +
                               std::to_string(x));
  }
}

double choose_alpha(const QuasiParabolicMap& map) {
  // ratio(alpha) -> infinity for alpha -> 0 and -> 1 for alpha -> infinity,
  // with a single useful dip in between; a coarse log sweep finds it
  double best_alpha = 0.0;
  double best_ratio = std::numeric_limits<double>::infinity();
  for (int j = 0; j <= 120; ++j) {
    double alpha = 1e-3 * std::pow(1.2, j);  // reaches ~3e6
    double r = series_ratio(map, alpha);
    if (r < best_ratio) {
      best_ratio = r;
      best_alpha = alpha;
    }
  }
  return best_alpha;
}

SeriesResult series_element(const QuasiParabolicMap& map) {
  validate_map(map);
  SeriesResult out;
  out.alpha = map.alpha > 0.0 ? map.alpha : choose_alpha(map);

  LineSymbol tau = Complex(0.0, out.alpha) + (-1.0) * psi_symbol(map);
  double tau_norm = tau.sup_norm(2048);
  out.ratio = tau_norm / out.alpha;
  if (!(out.ratio < kRatioCap))
    throw symbol_class_error(
        "series_element: contraction ratio " + std::to_string(out.ratio) +
        " is not below " + std::to_string(kRatioCap) +
        "; the expansion would converge too slowly");

  OperatorSum el;
  el.scalar = 0.0;
  LineSymbol tau_pow = LineSymbol::constant(1.0);
  Complex coeff(1.0);  // (-i)^n / n!
  for (int n = 0; n <= map.n_max; ++n) {
    if (n > 0) {
      tau_pow = tau_pow * tau;
      coeff *= Complex(0.0, -1.0) / static_cast<double>(n);
    }
    el.tm_terms.push_back(
        {tau_pow, MultiplierSymbol::power_exp(n, out.alpha, coeff)});
  }
  out.tail_bound = series_tail(tau_norm, out.alpha, map.n_max);
  el.tail_bound = out.tail_bound;
  out.element = std::move(el);
  return out;
}

std::vector<Complex> disc_weight_coefficients(const QuasiParabolicMap& map) {
  // weight V(w) = 1 + psi(x(w)) u(w) with u = 1/(x+i) = (1-w)/(2i);
  // psi(x) = c + sum_k d_k u^{k+1}, so V = 1 + c u + sum_k d_k u^{k+2}:
  // a polynomial in u, expanded into powers of w binomially
  std::vector<Complex> in_u(map.psi_coeffs.size() + 2, Complex(0.0));
  in_u[0] = Complex(1.0);
  in_u[1] = map.psi_constant;
  for (std::size_t k = 0; k < map.psi_coeffs.size(); ++k)
    in_u[k + 2] = map.psi_coeffs[k];

  std::vector<Complex> out(in_u.size(), Complex(0.0));
  const Complex iu = Complex(0.0, -0.5);  // 1/(2i)
  for (std::size_t j = 0; j < in_u.size(); ++j) {
    // u^j = (2i)^{-j} sum_m C(j, m) (-w)^m
    Complex scale = in_u[j];
    for (std::size_t t = 0; t < j; ++t) scale *= iu;
    double binom = 1.0;
    double sign = 1.0;
    for (std::size_t m = 0; m <= j; ++m) {
      out[m] += scale * binom * sign;
      sign = -sign;
      binom = binom * static_cast<double>(j - m) / static_cast<double>(m + 1);
    }
  }
  return out;
}

DiscMatrixResult disc_matrix_direct(const QuasiParabolicMap& map,
                                    const TruncationConfig& cfg) {
  validate_map(map);
  const int n = cfg.n;
  effective_q(cfg);

  // boundary samples of the disc-side map
  const std::size_t m = next_pow2(
      static_cast<std::size_t>(std::max(16384, 8 * n)));
  LineSymbol psi = psi_symbol(map);
  std::vector<Complex> phi(m);
  phi[0] = Complex(1.0);  // theta = 0 is the fixed point at infinity
  for (std::size_t j = 1; j < m; ++j) {
    double x = line_point(2.0 * kPi * static_cast<double>(j) /
                          static_cast<double>(m));
    Complex mapped = Complex(x, 0.0) + psi(x);
    phi[j] = (mapped - Complex(0.0, 1.0)) / (mapped + Complex(0.0, 1.0));
  }

  // column k of the raw composition matrix = Fourier coefficients of phi^k
  OperatorMatrix comp(n, n);
  std::vector<Complex> power(m, Complex(1.0));
  std::vector<Complex> work(m);
  for (int k = 0; k < n; ++k) {
    if (k > 0)
      for (std::size_t j = 0; j < m; ++j) power[j] *= phi[j];
    work = power;
    fft_radix2(work);
    for (int row = 0; row < n; ++row)
      comp(row, k) = work[static_cast<std::size_t>(row)] /
                     static_cast<double>(m);
  }

  // lower-triangular Toeplitz matrix of the analytic weight
  std::vector<Complex> vc = disc_weight_coefficients(map);
  OperatorMatrix weight = OperatorMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k <= j; ++k) {
      std::size_t d = static_cast<std::size_t>(j - k);
      if (d < vc.size()) weight(j, k) = vc[d];
    }

  DiscMatrixResult out;
  out.matrix = weight.triangularView<Eigen::Lower>().solve(comp);
  Eigen::VectorXd sv = singular_values(weight);
  out.weight_condition = sv(0) / sv(sv.size() - 1);
  return out;
}

SpectrumComparison verify_spectrum_equals_essential(const QuasiParabolicMap& map,
                                                    int resolution,
                                                    int grid_size) {
  SpectrumComparison cmp;
  cmp.series = series_element(map);
  cmp.report = spectrum(cmp.series.element, resolution, grid_size);
  cmp.max_abs_index = 0;
  for (const auto& c : cmp.report.components)
    cmp.max_abs_index = std::max(cmp.max_abs_index, std::abs(c.index));
  cmp.equal = cmp.max_abs_index == 0;
  return cmp;
}

}  // namespace hardyspec
