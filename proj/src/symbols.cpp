#include "hardyspec/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hardyspec/errors.hpp"
#include "hardyspec/fft.hpp"

namespace hardyspec {

namespace {

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

// golden-section ascent of g on [a, b]; assumes a single interior peak near
// the bracketing grid maximum, which is all we need to sharpen a coarse scan
double refine_max(const std::function<double(double)>& g, double a, double b) {
  const double phi = 0.6180339887498949;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double g1 = g(x1), g2 = g(x2);
  for (int it = 0; it < 80; ++it) {
    if (g1 < g2) {
      a = x1;
      x1 = x2;
      g1 = g2;
      x2 = a + phi * (b - a);
      g2 = g(x2);
    } else {
      b = x2;
      x2 = x1;
      g2 = g1;
      x1 = b - phi * (b - a);
      g1 = g(x1);
    }
  }
  return std::max(g1, g2);
}

std::vector<double> merge_features(const std::vector<double>& a,
                                   const std::vector<double>& b) {
  std::vector<double> out = a;
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Complex cayley(double x) {
  return Complex(x, -1.0) / Complex(x, 1.0);
}

double inverse_cayley(Complex w) {
  Complex den = 1.0 - w;
  if (std::abs(den) < 1e-14)
    throw std::domain_error("inverse_cayley: w = 1 is the point at infinity");
  return (Complex(0.0, 1.0) * (1.0 + w) / den).real();
}

double circle_angle(double x) {
  return 2.0 * std::atan(x) + kPi;
}

double line_point(double theta) {
  return std::tan(0.5 * (theta - kPi));
}

// ---------------------------------------------------------------------------
// CircleSymbol

CircleSymbol::CircleSymbol() : f_([](double) { return Complex(0.0); }) {}

CircleSymbol::CircleSymbol(std::function<Complex(double)> f)
    : f_(std::move(f)) {}

CircleSymbol CircleSymbol::from_coefficients(int lowest,
                                             std::vector<Complex> coeffs) {
  return CircleSymbol([lowest, coeffs = std::move(coeffs)](double theta) {
    Complex s(0.0);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      int n = lowest + static_cast<int>(j);
      s += coeffs[j] * Complex(std::cos(n * theta), std::sin(n * theta));
    }
    return s;
  });
}

std::vector<Complex> CircleSymbol::fourier_coefficients(int lo, int hi,
                                                        int grid_size) const {
  if (hi < lo) throw std::invalid_argument("fourier_coefficients: hi < lo");
  std::size_t need = std::max({static_cast<std::size_t>(grid_size),
                               static_cast<std::size_t>(hi - lo + 1),
                               2 * static_cast<std::size_t>(
                                       std::max(std::abs(lo), std::abs(hi))) +
                                   2});
  const std::size_t m = next_pow2(need);
  std::vector<Complex> samples(m);
  for (std::size_t j = 0; j < m; ++j)
    samples[j] = f_(2.0 * kPi * static_cast<double>(j) / static_cast<double>(m));
  fft_radix2(samples);
  std::vector<Complex> out(static_cast<std::size_t>(hi - lo + 1));
  for (int n = lo; n <= hi; ++n) {
    std::size_t idx = static_cast<std::size_t>((n % static_cast<int>(m) +
                                                static_cast<int>(m)) %
                                               static_cast<int>(m));
    out[static_cast<std::size_t>(n - lo)] =
        samples[idx] / static_cast<double>(m);
  }
  return out;
}

double CircleSymbol::sup_norm(int grid_size) const {
  const int m = grid_size;
  double best = 0.0;
  int bestj = 0;
  for (int j = 0; j < m; ++j) {
    double v = std::abs(f_(2.0 * kPi * j / m));
    if (v > best) {
      best = v;
      bestj = j;
    }
  }
  auto g = [this](double th) { return std::abs(f_(th)); };
  double lo = 2.0 * kPi * (bestj - 1) / m, hi = 2.0 * kPi * (bestj + 1) / m;
  return std::max(best, refine_max(g, lo, hi));
}

CircleSymbol operator+(const CircleSymbol& a, const CircleSymbol& b) {
  return CircleSymbol([fa = a.f_, fb = b.f_](double th) { return fa(th) + fb(th); });
}
CircleSymbol operator*(const CircleSymbol& a, const CircleSymbol& b) {
  return CircleSymbol([fa = a.f_, fb = b.f_](double th) { return fa(th) * fb(th); });
}
CircleSymbol operator*(Complex c, const CircleSymbol& a) {
  return CircleSymbol([c, fa = a.f_](double th) { return c * fa(th); });
}
CircleSymbol operator+(Complex c, const CircleSymbol& a) {
  return CircleSymbol([c, fa = a.f_](double th) { return c + fa(th); });
}

// ---------------------------------------------------------------------------
// LineSymbol

LineSymbol::LineSymbol()
    : f_([](double) { return Complex(0.0); }), at_inf_(0.0) {}

LineSymbol::LineSymbol(std::function<Complex(double)> f, Complex at_infinity)
    : f_(std::move(f)), at_inf_(at_infinity) {}

LineSymbol LineSymbol::constant(Complex c) {
  return LineSymbol([c](double) { return c; }, c);
}

LineSymbol LineSymbol::rational(Complex c, std::vector<Complex> coeffs) {
  return LineSymbol(
      [c, coeffs](double x) {
        // Horner in u = 1/(x + i)
        Complex u = 1.0 / Complex(x, 1.0);
        Complex s(0.0);
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
          s = (s + *it) * u;
        return c + s;
      },
      c);
}

LineSymbol LineSymbol::cayley_power(int m) {
  return LineSymbol([m](double x) { return ipow(cayley(x), m); }, Complex(1.0));
}

double LineSymbol::sup_norm(int grid_size) const {
  const int m = grid_size;
  double best = std::abs(at_inf_);
  int bestj = -1;
  for (int j = 0; j < m; ++j) {
    // midpoint angles keep theta away from the pole at 0 mod 2pi
    double th = 2.0 * kPi * (j + 0.5) / m;
    double v = std::abs(f_(line_point(th)));
    if (v > best) {
      best = v;
      bestj = j;
    }
  }
  if (bestj < 0) return best;
  auto g = [this](double th) { return std::abs(f_(line_point(th))); };
  double lo = 2.0 * kPi * (bestj - 0.5) / m, hi = 2.0 * kPi * (bestj + 1.5) / m;
  lo = std::max(lo, 1e-9);
  hi = std::min(hi, 2.0 * kPi - 1e-9);
  return std::max(best, refine_max(g, lo, hi));
}

LineSymbol operator+(const LineSymbol& a, const LineSymbol& b) {
  return LineSymbol([fa = a.f_, fb = b.f_](double x) { return fa(x) + fb(x); },
                    a.at_inf_ + b.at_inf_);
}
LineSymbol operator*(const LineSymbol& a, const LineSymbol& b) {
  return LineSymbol([fa = a.f_, fb = b.f_](double x) { return fa(x) * fb(x); },
                    a.at_inf_ * b.at_inf_);
}
LineSymbol operator*(Complex c, const LineSymbol& a) {
  return LineSymbol([c, fa = a.f_](double x) { return c * fa(x); },
                    c * a.at_inf_);
}
LineSymbol operator+(Complex c, const LineSymbol& a) {
  return LineSymbol([c, fa = a.f_](double x) { return c + fa(x); },
                    c + a.at_inf_);
}

CircleSymbol pullback_line_symbol(const LineSymbol& a) {
  return CircleSymbol([a](double theta) {
    double th = std::fmod(theta, 2.0 * kPi);
    if (th < 0) th += 2.0 * kPi;
    if (th < 1e-12 || 2.0 * kPi - th < 1e-12) return a.infinity_value();
    return a(line_point(th));
  });
}

// ---------------------------------------------------------------------------
// MultiplierSymbol

MultiplierSymbol::MultiplierSymbol()
    : f_([](double) { return Complex(0.0); }),
      limit_(0.0),
      tail_onset_(0.0) {}

MultiplierSymbol::MultiplierSymbol(std::function<Complex(double)> f,
                                   Complex limit, double tail_onset,
                                   std::vector<double> features)
    : f_(std::move(f)),
      limit_(limit),
      tail_onset_(tail_onset),
      features_(std::move(features)) {}

MultiplierSymbol MultiplierSymbol::constant(Complex c) {
  return MultiplierSymbol([c](double) { return c; }, c, 0.0, {});
}

MultiplierSymbol MultiplierSymbol::exp_decay(double alpha, Complex scale,
                                             Complex offset) {
  if (!(alpha > 0.0))
    throw symbol_class_error("exp_decay requires alpha > 0");
  double onset = std::abs(scale) > 0.0
                     ? std::log(std::abs(scale) * 1e12 + 1.0) / alpha
                     : 0.0;
  return MultiplierSymbol(
      [alpha, scale, offset](double t) {
        return offset + scale * std::exp(-alpha * t);
      },
      offset, onset, {});
}

MultiplierSymbol MultiplierSymbol::power_exp(int n, double alpha,
                                             Complex coeff) {
  if (n < 0 || !(alpha > 0.0))
    throw symbol_class_error("power_exp requires n >= 0 and alpha > 0");
  double peak = n > 0 ? std::abs(coeff) * std::pow(n / alpha, n) * std::exp(-n)
                      : std::abs(coeff);
  double t0 = std::max((n + 1.0) / alpha, 1.0);
  double floor = 1e-12 * std::max(peak, 1e-30);
  int guard = 0;
  while (std::abs(coeff) * std::pow(t0, n) * std::exp(-alpha * t0) > floor &&
         guard++ < 400)
    t0 *= 1.3;
  return MultiplierSymbol(
      [n, alpha, coeff](double t) {
        return coeff * std::pow(t, n) * std::exp(-alpha * t);
      },
      Complex(0.0), t0, {n > 0 ? n / alpha : 0.0});
}

MultiplierSymbol MultiplierSymbol::complex_exp(Complex c) {
  if (c == Complex(0.0)) return constant(Complex(1.0));
  if (!(c.imag() > 0.0))
    throw symbol_class_error(
        "complex_exp: e^{ict} has no limit at infinity unless Im c > 0");
  double onset = std::log(1e12) / c.imag();
  return MultiplierSymbol(
      [c](double t) { return std::exp(Complex(0.0, 1.0) * c * t); },
      Complex(0.0), onset, {});
}

MultiplierSymbol MultiplierSymbol::piecewise_linear(
    std::vector<std::pair<double, Complex>> knots) {
  if (knots.empty())
    throw symbol_class_error("piecewise_linear: no knots");
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (knots[i].first < 0.0 ||
        (i > 0 && knots[i].first <= knots[i - 1].first))
      throw symbol_class_error(
          "piecewise_linear: knots must be strictly increasing and >= 0");
  }
  Complex limit = knots.back().second;
  double onset = knots.back().first;
  std::vector<double> feats;
  feats.reserve(knots.size());
  for (auto& k : knots) feats.push_back(k.first);
  return MultiplierSymbol(
      [knots = std::move(knots)](double t) {
        if (t <= knots.front().first) return knots.front().second;
        if (t >= knots.back().first) return knots.back().second;
        auto it = std::upper_bound(
            knots.begin(), knots.end(), t,
            [](double v, const auto& k) { return v < k.first; });
        auto prev = it - 1;
        double span = it->first - prev->first;
        double u = (t - prev->first) / span;
        return prev->second + u * (it->second - prev->second);
      },
      limit, onset, std::move(feats));
}

double MultiplierSymbol::sup_norm(int grid_size) const {
  std::vector<double> ts = tail_sample_grid(tail_onset_, grid_size);
  ts.insert(ts.end(), features_.begin(), features_.end());
  std::sort(ts.begin(), ts.end());
  double best = std::abs(limit_);
  std::size_t bestj = 0;
  bool interior = false;
  for (std::size_t j = 0; j < ts.size(); ++j) {
    double v = std::abs(f_(ts[j]));
    if (v > best) {
      best = v;
      bestj = j;
      interior = true;
    }
  }
  if (!interior) return best;
  auto g = [this](double t) { return std::abs(f_(t)); };
  double lo = bestj > 0 ? ts[bestj - 1] : ts[bestj];
  double hi = bestj + 1 < ts.size() ? ts[bestj + 1] : ts[bestj] * 2.0 + 1.0;
  return std::max(best, refine_max(g, lo, hi));
}

MultiplierSymbol operator+(const MultiplierSymbol& a,
                           const MultiplierSymbol& b) {
  return MultiplierSymbol(
      [fa = a.f_, fb = b.f_](double t) { return fa(t) + fb(t); },
      a.limit_ + b.limit_, std::max(a.tail_onset_, b.tail_onset_),
      merge_features(a.features_, b.features_));
}
MultiplierSymbol operator*(const MultiplierSymbol& a,
                           const MultiplierSymbol& b) {
  return MultiplierSymbol(
      [fa = a.f_, fb = b.f_](double t) { return fa(t) * fb(t); },
      a.limit_ * b.limit_, std::max(a.tail_onset_, b.tail_onset_),
      merge_features(a.features_, b.features_));
}
MultiplierSymbol operator*(Complex c, const MultiplierSymbol& a) {
  return MultiplierSymbol([c, fa = a.f_](double t) { return c * fa(t); },
                          c * a.limit_, a.tail_onset_, a.features_);
}
MultiplierSymbol operator+(Complex c, const MultiplierSymbol& a) {
  return MultiplierSymbol([c, fa = a.f_](double t) { return c + fa(t); },
                          c + a.limit_, a.tail_onset_, a.features_);
}

MultiplierSymbol shift_multiplier(const MultiplierSymbol& m, double eta) {
  if (eta < 0.0)
    throw std::domain_error("shift_multiplier: eta must be nonnegative");
  std::vector<double> feats;
  for (double f : m.feature_points()) feats.push_back(std::max(0.0, f - eta));
  return MultiplierSymbol(
      [m, eta](double t) { return m(t + eta); }, m.limit_at_infinity(),
      std::max(0.0, m.tail_onset() - eta), std::move(feats));
}

std::vector<double> tail_sample_grid(double tail_onset, int grid_size) {
  if (grid_size < 2) throw std::invalid_argument("tail_sample_grid: grid too small");
  const double n = static_cast<double>(grid_size);
  const double scale = std::max(1.0, tail_onset / std::log(n + 1.0));
  std::vector<double> out(static_cast<std::size_t>(grid_size));
  for (int j = 0; j < grid_size; ++j)
    out[static_cast<std::size_t>(j)] = -scale * std::log1p(-static_cast<double>(j) / n);
  return out;
}

}  // namespace hardyspec
