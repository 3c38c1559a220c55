/**
 * Symbol classes for the operator algebra.
 *
 * Three function spaces appear:
 *   - CircleSymbol: continuous functions on the unit circle, parametrized by
 *     the angle theta in [0, 2pi).
 *   - LineSymbol: continuous functions on the one-point compactification of
 *     the real line (a single value at infinity, approached from both ends).
 *   - MultiplierSymbol: continuous functions on [0, inf] of the frequency
 *     variable t, with a limit at infinity.
 *
 * Boundary convention: cayley(x) = (x - i)/(x + i) maps the real line onto
 * the unit circle with cayley(inf) = 1. The circle angle of a real point is
 * theta(x) = 2 atan(x) + pi, so theta = 0 is the point at infinity and
 * theta = pi is x = 0.
 */
#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "hardyspec/types.hpp"

namespace hardyspec {

// (x - i)/(x + i); modulus 1 for real x
Complex cayley(double x);

// real preimage of a unimodular w; throws std::domain_error at the pole w = 1
double inverse_cayley(Complex w);

// 2 atan(x) + pi, in (0, 2pi)
double circle_angle(double x);

// tan((theta - pi)/2); callers must keep theta away from 0 mod 2pi, where the
// preimage is the point at infinity
double line_point(double theta);

class CircleSymbol {
 public:
  CircleSymbol();
  explicit CircleSymbol(std::function<Complex(double)> f);

  // trig polynomial sum_j coeffs[j] e^{i (lowest + j) theta}
  static CircleSymbol from_coefficients(int lowest, std::vector<Complex> coeffs);

  Complex operator()(double theta) const { return f_(theta); }

  // Fourier coefficients hat a_n, n in [lo, hi], from a power-of-2 sampling
  // grid. grid_size must exceed hi - lo and 2 max(|lo|, |hi|).
  std::vector<Complex> fourier_coefficients(int lo, int hi,
                                            int grid_size = 1024) const;

  // sup over a uniform angle grid, sharpened by local golden-section ascent
  double sup_norm(int grid_size = 1024) const;

  friend CircleSymbol operator+(const CircleSymbol& a, const CircleSymbol& b);
  friend CircleSymbol operator*(const CircleSymbol& a, const CircleSymbol& b);
  friend CircleSymbol operator*(Complex c, const CircleSymbol& a);
  friend CircleSymbol operator+(Complex c, const CircleSymbol& a);

 private:
  std::function<Complex(double)> f_;
};

class LineSymbol {
 public:
  LineSymbol();
  LineSymbol(std::function<Complex(double)> f, Complex at_infinity);

  static LineSymbol constant(Complex c);

  // c + sum_k coeffs[k] / (x + i)^{k+1}: the rational class with the only pole
  // at -i, closed under the circle pullback
  static LineSymbol rational(Complex c, std::vector<Complex> coeffs);

  // ((x - i)/(x + i))^m for any integer m; the line-side symbol whose circle
  // pullback is e^{i m theta}
  static LineSymbol cayley_power(int m);

  Complex operator()(double x) const { return f_(x); }
  Complex infinity_value() const { return at_inf_; }

  double sup_norm(int grid_size = 1024) const;

  friend LineSymbol operator+(const LineSymbol& a, const LineSymbol& b);
  friend LineSymbol operator*(const LineSymbol& a, const LineSymbol& b);
  friend LineSymbol operator*(Complex c, const LineSymbol& a);
  friend LineSymbol operator+(Complex c, const LineSymbol& a);

 private:
  std::function<Complex(double)> f_;
  Complex at_inf_;
};

// transplant a line symbol to the circle through the boundary correspondence;
// the value at theta = 0 is the symbol's value at infinity
CircleSymbol pullback_line_symbol(const LineSymbol& a);

class MultiplierSymbol {
 public:
  MultiplierSymbol();

  static MultiplierSymbol constant(Complex c);

  // offset + scale e^{-alpha t}, alpha > 0
  static MultiplierSymbol exp_decay(double alpha, Complex scale, Complex offset);

  // coeff t^n e^{-alpha t}, n >= 0, alpha > 0
  static MultiplierSymbol power_exp(int n, double alpha, Complex coeff);

  // e^{i c t}; admissible only for Im c > 0 (limit 0) or c = 0 (constant 1)
  static MultiplierSymbol complex_exp(Complex c);

  // linear interpolation through (t, value) knots with t >= 0 strictly
  // increasing; constant before the first and after the last knot
  static MultiplierSymbol piecewise_linear(
      std::vector<std::pair<double, Complex>> knots);

  Complex operator()(double t) const { return f_(t); }
  Complex limit_at_infinity() const { return limit_; }

  // t beyond which |f(t) - limit| is negligible; drives sampling grids
  double tail_onset() const { return tail_onset_; }
  const std::vector<double>& feature_points() const { return features_; }

  double sup_norm(int grid_size = 1024) const;

  friend MultiplierSymbol operator+(const MultiplierSymbol& a,
                                    const MultiplierSymbol& b);
  friend MultiplierSymbol operator*(const MultiplierSymbol& a,
                                    const MultiplierSymbol& b);
  friend MultiplierSymbol operator*(Complex c, const MultiplierSymbol& a);
  friend MultiplierSymbol operator+(Complex c, const MultiplierSymbol& a);
  friend MultiplierSymbol shift_multiplier(const MultiplierSymbol& m,
                                           double eta);

 private:
  MultiplierSymbol(std::function<Complex(double)> f, Complex limit,
                   double tail_onset, std::vector<double> features);

  std::function<Complex(double)> f_;
  Complex limit_;
  double tail_onset_;
  std::vector<double> features_;
};

// t -> m(t + eta), eta >= 0: slides the multiplier toward its limit
MultiplierSymbol shift_multiplier(const MultiplierSymbol& m, double eta);

// compactified half-line grid: t_j = -scale ln(1 - j/n) with scale adapted so
// the grid reaches past tail_onset
std::vector<double> tail_sample_grid(double tail_onset, int grid_size);

}  // namespace hardyspec
