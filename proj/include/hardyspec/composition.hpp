/**
 * Composition operators induced by upper half-plane self-maps of the form
 * map(x) = x + psi(x), where psi = psi_constant + sum_k psi_coeffs[k]/(x+i)^{k+1}
 * has Im psi >= epsilon > 0 on the real line (and hence everywhere above it).
 *
 * Two independent finite models are produced:
 * - series_element expands the operator as sum_n T_{tau^n} D_{theta_n} with
 *   tau = i alpha - psi and theta_n(t) = (-it)^n e^{-alpha t}/n!, truncated at
 *   n_max with an explicit tail_bound; alpha is a free expansion parameter
 *   chosen to minimize ||tau||/alpha, which must stay below 0.9.
 * - disc_matrix_direct transplants the operator to the disc, where the map's
 *   coordinate form is polynomial, and corrects by an analytic weight whose
 *   truncated Toeplitz matrix is lower triangular, making the correction an
 *   exact triangular solve.
 */
#pragma once

#include <vector>

#include "hardyspec/algebra.hpp"
#include "hardyspec/finite_model.hpp"
#include "hardyspec/symbols.hpp"

namespace hardyspec {

struct QuasiParabolicMap {
  Complex psi_constant = Complex(0.0, 1.0);  // value of psi at infinity
  std::vector<Complex> psi_coeffs;           // coefficients of (x+i)^{-k-1}
  double epsilon = 0.0;  // claimed lower bound for Im psi on the line
  double alpha = 0.0;    // series expansion parameter; 0 = choose automatically
  int n_max = 12;        // series truncation length
};

LineSymbol psi_symbol(const QuasiParabolicMap& map);

// samples Im psi over the compactified line; throws symbol_class_error if the
// claimed epsilon is not positive or the samples dip below it
void validate_map(const QuasiParabolicMap& map, int grid_size = 2048);

// log-grid argmin of ||i alpha - psi||_inf / alpha
double choose_alpha(const QuasiParabolicMap& map);

struct SeriesResult {
  OperatorSum element;
  double alpha = 0.0;
  double ratio = 0.0;       // ||tau||_inf / alpha, must be < 0.9
  double tail_bound = 0.0;  // also stored in element.tail_bound
};

SeriesResult series_element(const QuasiParabolicMap& map);

struct DiscMatrixResult {
  OperatorMatrix matrix;
  double weight_condition = 0.0;  // condition number of the weight solve
};

// the analytic weight polynomial in the disc coordinate (ascending powers);
// its constant term has real part >= 1 + epsilon/2
std::vector<Complex> disc_weight_coefficients(const QuasiParabolicMap& map);

DiscMatrixResult disc_matrix_direct(const QuasiParabolicMap& map,
                                    const TruncationConfig& cfg);

struct SpectrumComparison {
  bool equal = false;     // spectrum coincides with the essential spectrum
  int max_abs_index = 0;  // largest |index| over complement components
  SpectrumReport report;
  SeriesResult series;
};

// expands the map, runs the flood-fill spectrum, and checks that every
// complement component has index zero
SpectrumComparison verify_spectrum_equals_essential(const QuasiParabolicMap& map,
                                                    int resolution = 256,
                                                    int grid_size = 1024);

}  // namespace hardyspec
