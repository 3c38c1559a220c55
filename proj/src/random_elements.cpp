#include "hardyspec/random_elements.hpp"

#include <algorithm>
#include <cmath>

#include "hardyspec/errors.hpp"

namespace hardyspec {

namespace {

Complex gaussian(std::mt19937_64& rng, double sd) {
  std::normal_distribution<double> g(0.0, sd);
  double re = g(rng);
  double im = g(rng);
  return Complex(re, im);
}

LineSymbol random_line_symbol(std::mt19937_64& rng,
                              const RandomElementOptions& opt) {
  std::uniform_int_distribution<int> deg(0, opt.max_rational_degree);
  int k = deg(rng);
  std::vector<Complex> coeffs(static_cast<std::size_t>(k));
  for (auto& c : coeffs) c = gaussian(rng, opt.magnitude);
  return LineSymbol::rational(gaussian(rng, opt.magnitude), std::move(coeffs));
}

MultiplierSymbol random_multiplier(std::mt19937_64& rng,
                                   const RandomElementOptions& opt) {
  std::uniform_int_distribution<int> kind(0, 4);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  switch (kind(rng)) {
    case 0:
      return MultiplierSymbol::constant(gaussian(rng, opt.magnitude));
    case 1: {
      double alpha = 0.3 + 2.7 * unit(rng);
      return MultiplierSymbol::exp_decay(alpha, gaussian(rng, opt.magnitude),
                                         gaussian(rng, opt.magnitude));
    }
    case 2: {
      std::uniform_int_distribution<int> n(1, 3);
      double alpha = 0.3 + 2.7 * unit(rng);
      return MultiplierSymbol::power_exp(n(rng), alpha,
                                         gaussian(rng, opt.magnitude));
    }
    case 3: {
      // Im c > 0 keeps the symbol in class
      Complex c(2.0 * unit(rng) - 1.0, 0.3 + 1.7 * unit(rng));
      return MultiplierSymbol::complex_exp(c);
    }
    default: {
      std::uniform_int_distribution<int> nknots(2, 5);
      int k = nknots(rng);
      std::vector<std::pair<double, Complex>> knots;
      double t = 0.0;
      for (int j = 0; j < k; ++j) {
        knots.emplace_back(t, gaussian(rng, opt.magnitude));
        t += 0.2 + 2.0 * unit(rng);
      }
      return MultiplierSymbol::piecewise_linear(std::move(knots));
    }
  }
}

}  // namespace

OperatorSum random_element(std::mt19937_64& rng,
                           const RandomElementOptions& opt) {
  std::uniform_int_distribution<int> count_tm(1, std::max(1, opt.max_terms));
  std::uniform_int_distribution<int> count_mt(0, std::max(0, opt.max_terms));
  OperatorSum el;
  int ntm = count_tm(rng);
  int nmt = count_mt(rng);
  for (int j = 0; j < ntm; ++j)
    el.tm_terms.push_back(
        {random_line_symbol(rng, opt), random_multiplier(rng, opt)});
  for (int j = 0; j < nmt; ++j)
    el.mt_terms.push_back(
        {random_line_symbol(rng, opt), random_multiplier(rng, opt)});
  el.scalar = gaussian(rng, 0.5 * opt.magnitude);
  el.tail_bound = 0.0;
  return el;
}

Complex random_fredholm_point(std::mt19937_64& rng, const SpectrumReport& ess,
                              double extra_margin) {
  double lo_re = ess.circle_samples.front().real();
  double hi_re = lo_re, lo_im = ess.circle_samples.front().imag(),
         hi_im = lo_im;
  auto stretch = [&](const std::vector<Complex>& v) {
    for (const auto& p : v) {
      lo_re = std::min(lo_re, p.real());
      hi_re = std::max(hi_re, p.real());
      lo_im = std::min(lo_im, p.imag());
      hi_im = std::max(hi_im, p.imag());
    }
  };
  stretch(ess.circle_samples);
  stretch(ess.whisker_samples);

  double need = fredholm_margin(ess) + extra_margin;
  double pad = 0.5 * std::max(hi_re - lo_re, hi_im - lo_im) + 2.0 * need + 0.5;
  std::uniform_real_distribution<double> ure(lo_re - pad, hi_re + pad);
  std::uniform_real_distribution<double> uim(lo_im - pad, hi_im + pad);
  for (int tries = 0; tries < 4000; ++tries) {
    Complex lambda(ure(rng), uim(rng));
    if (essential_distance(ess, lambda) > need) return lambda;
  }
  // the sample set cannot fill the padded box; the far corner always works
  Complex corner(hi_re + pad + need + 1.0, hi_im + pad + need + 1.0);
  if (essential_distance(ess, corner) > need) return corner;
  throw consistency_error("random_fredholm_point: no admissible point found");
}

}  // namespace hardyspec
