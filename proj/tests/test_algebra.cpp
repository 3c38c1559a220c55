#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "hardyspec/algebra.hpp"
#include "hardyspec/errors.hpp"
#include "hardyspec/finite_model.hpp"
#include "hardyspec/random_elements.hpp"
#include "hardyspec/types.hpp"

using namespace hardyspec;

namespace {

OperatorSum shift_power(int m) {
  OperatorSum el;
  el.tm_terms.push_back(
      {LineSymbol::cayley_power(m), MultiplierSymbol::constant(1.0)});
  return el;
}

OperatorSum pure_multiplier(const MultiplierSymbol& m) {
  OperatorSum el;
  el.mt_terms.push_back({LineSymbol::constant(1.0), m});
  return el;
}

std::vector<Complex> all_samples(const SpectrumReport& rep) {
  std::vector<Complex> out = rep.whisker_samples;
  out.insert(out.end(), rep.circle_samples.begin(), rep.circle_samples.end());
  return out;
}

}  // namespace

TEST_CASE("the two symbol arcs meet at infinity") {
  std::mt19937_64 rng(401);
  for (int trial = 0; trial < 20; ++trial) {
    OperatorSum el = random_element(rng);
    EssentialSymbol sym = essential_symbol(el);
    CHECK(std::abs(sym.whisker.limit_at_infinity() -
                   sym.circle.infinity_value()) <= 1e-9);
  }
}

TEST_CASE("essential spectrum of the pure shift is the unit circle") {
  SpectrumReport rep = essential_spectrum(shift_power(1), 8192);
  std::vector<Complex> exact;
  for (int j = 0; j < 16384; ++j)
    exact.push_back(std::exp(Complex(0.0, 2.0 * kPi * j / 16384.0)));
  CHECK(hausdorff_distance(all_samples(rep), exact) < 1e-3);
  CHECK(rep.max_gap < 5e-3);
  CHECK(essential_distance(rep, Complex(0.0)) == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("essential spectrum of a decaying multiplier is a segment") {
  SpectrumReport rep = essential_spectrum(
      pure_multiplier(MultiplierSymbol::exp_decay(2.0, 1.0, 0.0)), 8192);
  std::vector<Complex> exact;
  for (int j = 0; j <= 4096; ++j) exact.push_back(Complex(j / 4096.0));
  CHECK(hausdorff_distance(all_samples(rep), exact) < 1e-3);
  for (Complex z : all_samples(rep)) {
    CHECK(std::abs(z.imag()) < 1e-12);
    CHECK(z.real() > -1e-12);
    CHECK(z.real() < 1.0 + 1e-12);
  }
}

TEST_CASE("fredholm index of shift powers") {
  for (int m = -5; m <= 5; ++m) {
    if (m == 0) continue;
    OperatorSum el = shift_power(m);
    SpectrumReport ess = essential_spectrum(el);
    CHECK(fredholm_index(el, ess, Complex(0.0)) == -m);
    CHECK(fredholm_index(el, ess, Complex(1.7, 0.4)) == 0);
  }
}

TEST_CASE("lambda on the essential spectrum is rejected as uncertifiable") {
  OperatorSum el = shift_power(2);
  SpectrumReport ess = essential_spectrum(el);
  CHECK_THROWS_AS((void)fredholm_index(el, ess, Complex(1.0)),
                  resolution_error);
  InvertibilityVerdict v = is_invertible(el, Complex(1.0));
  CHECK_FALSE(v.fredholm);
  CHECK_FALSE(v.invertible);
}

TEST_CASE("invertibility verdicts for shifts and scalars") {
  InvertibilityVerdict v = is_invertible(shift_power(1), Complex(0.0));
  CHECK(v.fredholm);
  CHECK_FALSE(v.invertible);
  CHECK(v.index == -1);

  v = is_invertible(shift_power(1), Complex(2.0, 0.5));
  CHECK(v.fredholm);
  CHECK(v.invertible);
  CHECK(v.index == 0);

  OperatorSum scalar_only;
  scalar_only.scalar = Complex(1.0, 1.0);
  v = is_invertible(scalar_only, Complex(0.0));
  CHECK(v.invertible);
  v = is_invertible(scalar_only, Complex(1.0, 1.0));
  CHECK_FALSE(v.fredholm);
}

TEST_CASE("index is invariant under moving lambda into the scalar") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 8; ++trial) {
    OperatorSum el = random_element(rng);
    SpectrumReport ess = essential_spectrum(el);
    Complex lambda = random_fredholm_point(rng, ess);
    OperatorSum shifted = el;
    shifted.scalar -= lambda;
    SpectrumReport ess2 = essential_spectrum(shifted);
    CHECK(fredholm_index(el, ess, lambda) ==
          fredholm_index(shifted, ess2, Complex(0.0)));
  }
}

TEST_CASE("homotopy endpoints and validation") {
  OperatorSum el;
  el.scalar = Complex(0.3, 0.0);
  el.tm_terms.push_back({LineSymbol::rational(1.0, {Complex(0.5, 0.2)}),
                         MultiplierSymbol::exp_decay(1.0, 0.8, 0.1)});
  CHECK_THROWS_AS((void)homotopy(el, -0.1), std::domain_error);
  CHECK_THROWS_AS((void)homotopy(el, 1.5), std::domain_error);

  SpectrumReport base = essential_spectrum(el);
  SpectrumReport same = essential_spectrum(homotopy(el, 1.0));
  REQUIRE(base.whisker_samples.size() == same.whisker_samples.size());
  for (std::size_t j = 0; j < base.whisker_samples.size(); ++j)
    CHECK(std::abs(base.whisker_samples[j] - same.whisker_samples[j]) < 1e-12);

  // at w = 0 every multiplier is frozen at its limit
  OperatorSum frozen = homotopy(el, 0.0);
  SpectrumReport cold = essential_spectrum(frozen);
  for (Complex z : cold.whisker_samples)
    CHECK(std::abs(z - cold.whisker_samples.front()) < 1e-12);
}

TEST_CASE("homotopy trace is monotone in spirit: constant index, contained") {
  std::mt19937_64 rng(7);
  std::vector<double> w_grid;
  for (int j = 0; j <= 10; ++j) w_grid.push_back(0.1 * j);
  for (int trial = 0; trial < 5; ++trial) {
    OperatorSum el = random_element(rng);
    SpectrumReport ess = essential_spectrum(el);
    Complex lambda = random_fredholm_point(rng, ess);
    HomotopyTrace trace = homotopy_trace(el, lambda, w_grid);
    REQUIRE(trace.rows.size() == w_grid.size());
    CHECK(trace.index_constant);
    CHECK(trace.containment_ok);
  }
}

TEST_CASE("flood fill separates the shift disk from the outside") {
  SpectrumReport rep = spectrum(shift_power(1), 128);
  REQUIRE(rep.components.size() == 2);
  int inner = rep.components[0].touches_boundary ? 1 : 0;
  const SpectralComponent& hole = rep.components[static_cast<std::size_t>(inner)];
  const SpectralComponent& outside =
      rep.components[static_cast<std::size_t>(1 - inner)];
  CHECK_FALSE(hole.touches_boundary);
  CHECK(hole.index == -1);
  CHECK(std::abs(hole.representative) < 0.2);
  CHECK(hole.margin > 0.5);
  CHECK(outside.touches_boundary);
  CHECK(outside.index == 0);
}

TEST_CASE("flood fill finds nothing extra for a self-adjoint multiplier") {
  SpectrumReport rep = spectrum(
      pure_multiplier(MultiplierSymbol::exp_decay(1.0, 1.0, 0.0)), 128);
  for (const auto& c : rep.components) CHECK(c.index == 0);
}

TEST_CASE("element and its limit operator agree on verdicts") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 10; ++trial) {
    OperatorSum el = random_element(rng);
    SpectrumReport ess = essential_spectrum(el);
    Complex lambda = random_fredholm_point(rng, ess);
    EquivalenceReport eq = check_limit_equivalence(el, lambda);
    CHECK(eq.agree);
    CHECK(eq.element.fredholm);
    CHECK(eq.limit.fredholm);
  }
}

TEST_CASE("operator sum truncation follows the term layout") {
  OperatorSum el;
  el.scalar = Complex(0.5, -0.1);
  LineSymbol a = LineSymbol::rational(1.0, {Complex(0.0, 1.0)});
  MultiplierSymbol m1 = MultiplierSymbol::exp_decay(1.0, 1.0, 0.0);
  LineSymbol b = LineSymbol::cayley_power(1);
  MultiplierSymbol m2 = MultiplierSymbol::power_exp(1, 2.0, Complex(0.3));
  el.tm_terms.push_back({a, m1});
  el.mt_terms.push_back({b, m2});

  TruncationConfig cfg;
  cfg.n = 24;
  OperatorMatrix got = operator_sum_matrix(el, cfg);
  OperatorMatrix want =
      el.scalar * OperatorMatrix::Identity(24, 24) +
      toeplitz_matrix(pullback_line_symbol(a), cfg) * multiplier_matrix(m1, cfg) +
      multiplier_matrix(m2, cfg) * toeplitz_matrix(pullback_line_symbol(b), cfg);
  CHECK((got - want).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("hausdorff distance is symmetric and exact on small sets") {
  std::vector<Complex> a = {Complex(0.0)};
  std::vector<Complex> b = {Complex(3.0), Complex(4.0)};
  CHECK(hausdorff_distance(a, b) == doctest::Approx(4.0));
  CHECK(hausdorff_distance(b, a) == doctest::Approx(4.0));
  CHECK(hausdorff_distance(a, a) == doctest::Approx(0.0));
}

TEST_CASE("random fredholm points are reproducible and certifiable") {
  OperatorSum el = shift_power(1);
  SpectrumReport ess = essential_spectrum(el);
  std::mt19937_64 r1(55), r2(55);
  Complex l1 = random_fredholm_point(r1, ess);
  Complex l2 = random_fredholm_point(r2, ess);
  CHECK(l1 == l2);
  CHECK(essential_distance(ess, l1) > fredholm_margin(ess));
}
