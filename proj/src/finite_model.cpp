#include "hardyspec/finite_model.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <stdexcept>

#include "hardyspec/errors.hpp"
#include "hardyspec/kernels.hpp"
#include "hardyspec/quadrature.hpp"

namespace hardyspec {

namespace {

constexpr double kSqrtPi = 1.7724538509055160272981674833411452;
constexpr double kSqrt2Pi = 2.5066282746310005024157652848110453;

Complex ipow(Complex z, int m) {
  if (m < 0) return 1.0 / ipow(z, -m);
  Complex r(1.0);
  while (m > 0) {
    if (m & 1) r *= z;
    z *= z;
    m >>= 1;
  }
  return r;
}

// e_n(x) and its derivative, for the oscillatory phase check
Complex basis_line(int n, double x) {
  Complex xi(x, 1.0);
  return ipow(Complex(x, -1.0) / xi, n) / (xi * kSqrtPi);
}

Complex basis_line_deriv(int n, double x) {
  Complex xi(x, 1.0);
  Complex u = Complex(x, -1.0) / xi;
  return ipow(u, n - 1) * Complex(-x, 2.0 * n + 1.0) / (xi * xi * xi * kSqrtPi);
}

OperatorMatrix assemble_multiplier(const MultiplierSymbol& m, int n,
                                   const LaguerreRule& rule) {
  std::vector<double> btab = laguerre_table(rule, n);
  std::vector<Complex> tv(static_cast<std::size_t>(rule.q));
  for (int i = 0; i < rule.q; ++i)
    tv[static_cast<std::size_t>(i)] =
        rule.weights[static_cast<std::size_t>(i)] *
        m(0.5 * rule.nodes[static_cast<std::size_t>(i)]);
  OperatorMatrix out(n, n);
  multiplier_kernel(ExecMode::parallel, n, rule.q, tv.data(), btab.data(),
                    out.data());
  return out;
}

}  // namespace

int effective_q(const TruncationConfig& cfg) {
  if (cfg.n < 1 || cfg.n > 2048)
    throw config_error("truncation size must be in [1, 2048]");
  int q = cfg.q == 0 ? 4 * cfg.n : cfg.q;
  if (q < cfg.n)
    throw config_error("quadrature order must be at least the truncation size");
  return q;
}

OperatorMatrix toeplitz_matrix(const CircleSymbol& a,
                               const TruncationConfig& cfg) {
  const int n = cfg.n;
  effective_q(cfg);
  std::vector<Complex> c =
      a.fourier_coefficients(-(n - 1), n - 1, std::max(1024, 4 * n));
  OperatorMatrix out(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      out(j, k) = c[static_cast<std::size_t>(j - k + n - 1)];
  return out;
}

OperatorMatrix multiplier_matrix(const MultiplierSymbol& m,
                                 const TruncationConfig& cfg) {
  const int n = cfg.n;
  const int q = effective_q(cfg);
  OperatorMatrix base = assemble_multiplier(m, n, laguerre_rule_cached(q));
  OperatorMatrix fine = assemble_multiplier(m, n, laguerre_rule_cached(2 * q));
  double drift = (base - fine).cwiseAbs().maxCoeff();
  if (!(drift < 1e-8))
    throw consistency_error(
        "multiplier_matrix: quadrature drift " + std::to_string(drift) +
        " between orders " + std::to_string(q) + " and " + std::to_string(2 * q));
  return fine;
}

OperatorMatrix shift_matrix(double eta, const TruncationConfig& cfg) {
  if (eta < 0.0)
    throw std::domain_error("shift_matrix: eta must be nonnegative");
  const int n = cfg.n;
  const int q = effective_q(cfg);
  const LaguerreRule& rule = laguerre_rule_cached(q);
  std::vector<double> cols = laguerre_table(rule, n);
  std::vector<double> rows = laguerre_table_shifted(rule, n, 2.0 * eta);
  OperatorMatrix out(n, n);
  cross_kernel(ExecMode::parallel, n, q, rule.weights.data(), rows.data(),
               cols.data(), out.data());
  return out;
}

Eigen::VectorXd singular_values(const OperatorMatrix& a) {
  if (a.rows() <= 64) {
    Eigen::JacobiSVD<OperatorMatrix> svd(a);
    return svd.singularValues();
  }
  Eigen::BDCSVD<OperatorMatrix> svd(a);
  return svd.singularValues();
}

double sigma_min(const OperatorMatrix& a) {
  Eigen::VectorXd s = singular_values(a);
  return s(s.size() - 1);
}

double sigma_max(const OperatorMatrix& a) {
  return singular_values(a)(0);
}

std::vector<Complex> eigenvalues(const OperatorMatrix& a) {
  Eigen::ComplexEigenSolver<OperatorMatrix> es(a, false);
  const auto& ev = es.eigenvalues();
  return std::vector<Complex>(ev.data(), ev.data() + ev.size());
}

Complex fourier_phase_estimate(int n, double t) {
  if (n < 0 || !(t > 0.0))
    throw std::invalid_argument("fourier_phase_estimate: need n >= 0, t > 0");

  const double X = 2e4;
  const Complex it(0.0, t);

  // composite fixed-order panels; width limited by the oscillation period
  // and, near the origin, by the distance to the basis poles at +-i
  using gauss15 = boost::math::quadrature::gauss<double, 15>;
  const double osc_cap = kPi / (2.0 * t);
  Complex main(0.0);
  double a = -X;
  while (a < X) {
    double h = std::min(osc_cap, std::max(0.25, std::abs(a) / 8.0));
    double b = std::min(a + h, X);
    main += gauss15::integrate(
        [n, t](double x) {
          return std::exp(Complex(0.0, -t * x)) * basis_line(n, x);
        },
        a, b);
    a = b;
  }

  // two integration-by-parts corrections at each cut
  Complex tail_hi = std::exp(Complex(0.0, -t * X)) *
                    (basis_line(n, X) / it + basis_line_deriv(n, X) / (it * it));
  Complex tail_lo = -std::exp(Complex(0.0, t * X)) *
                    (basis_line(n, -X) / it +
                     basis_line_deriv(n, -X) / (it * it));

  return (main + tail_hi + tail_lo) / kSqrt2Pi;
}

namespace {

double half_line_basis(int n, double t) {
  std::vector<double> buf(static_cast<std::size_t>(n) + 1);
  weighted_laguerre_column(2.0 * t, n, buf.data());
  return std::sqrt(2.0) * buf[static_cast<std::size_t>(n)];
}

}  // namespace

double fourier_phase_defect(int n, double t) {
  Complex integral = fourier_phase_estimate(n, t);
  double ell = half_line_basis(n, t);
  return std::abs(integral + Complex(0.0, 1.0) * ell);
}

void verify_phase_convention(const TruncationConfig& cfg) {
  for (int n = 0; n <= 8; ++n)
    for (double t : {0.5, 1.0, 2.0, 4.0}) {
      double d = fourier_phase_defect(n, t);
      if (!(d < cfg.phase_check_tolerance))
        throw consistency_error(
            "fourier phase defect " + std::to_string(d) + " at n = " +
            std::to_string(n) + ", t = " + std::to_string(t));
    }
}

}  // namespace hardyspec
