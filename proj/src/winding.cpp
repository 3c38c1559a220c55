#include "hardyspec/winding.hpp"

#include <cmath>

#include "hardyspec/errors.hpp"

namespace hardyspec {

namespace {

double checked_arg_step(Complex z0, Complex z1, double tol) {
  if (std::abs(z0) <= tol || std::abs(z1) <= tol)
    throw resolution_error(
        "winding_number: curve within separation tolerance of the origin");
  return std::arg(z1 / z0);
}

int rounded_turns(double total_arg) {
  double w = total_arg / (2.0 * kPi);
  double r = std::round(w);
  if (std::abs(w - r) > 1e-6)
    throw resolution_error("winding_number: accumulated argument does not close");
  return static_cast<int>(r);
}

}  // namespace

int winding_number(const std::function<Complex(double)>& curve,
                   double separation_tolerance, int base_samples,
                   int max_depth) {
  // recursive bisection keeps each accepted step under pi/2
  std::function<double(double, double, Complex, Complex, int)> segment =
      [&](double s0, double s1, Complex z0, Complex z1, int depth) -> double {
    double d = checked_arg_step(z0, z1, separation_tolerance);
    if (std::abs(d) < 0.5 * kPi) return d;
    if (depth >= max_depth)
      throw resolution_error("winding_number: bisection depth exhausted");
    double sm = 0.5 * (s0 + s1);
    Complex zm = curve(sm);
    return segment(s0, sm, z0, zm, depth + 1) +
           segment(sm, s1, zm, z1, depth + 1);
  };

  double total = 0.0;
  Complex zfirst = curve(0.0);
  Complex zprev = zfirst;
  double sprev = 0.0;
  for (int j = 1; j <= base_samples; ++j) {
    double s = static_cast<double>(j) / base_samples;
    Complex z = (j == base_samples) ? zfirst : curve(s);
    total += segment(sprev, s, zprev, z, 0);
    sprev = s;
    zprev = z;
  }
  return rounded_turns(total);
}

int winding_number(const std::vector<Complex>& samples,
                   double separation_tolerance) {
  if (samples.size() < 3)
    throw resolution_error("winding_number: need at least 3 samples");
  double total = 0.0;
  for (std::size_t j = 0; j < samples.size(); ++j) {
    Complex z0 = samples[j];
    Complex z1 = samples[(j + 1) % samples.size()];
    double d = checked_arg_step(z0, z1, separation_tolerance);
    if (std::abs(d) >= 0.5 * kPi)
      throw resolution_error(
          "winding_number: sampled curve is under-resolved (step >= pi/2)");
    total += d;
  }
  return rounded_turns(total);
}

}  // namespace hardyspec
