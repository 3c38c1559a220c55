/**
 * Elements of the operator algebra and their spectral analysis.
 *
 * An element is scalar + sum_j T_{a_j} D_{m_j} + sum_j D_{n_j} T_{b_j} with
 * Toeplitz symbols a_j, b_j continuous on the compactified line and
 * multiplier symbols m_j, n_j continuous on [0, inf]. Modulo compacts the
 * element is determined by a scalar symbol on two arcs that meet at the point
 * at infinity:
 *
 *   whisker(t) = scalar + sum a_j(inf) m_j(t) + sum n_j(t) b_j(inf)
 *   circle(x)  = scalar + sum m_j(inf) a_j(x) + sum n_j(inf) b_j(x)
 *
 * The essential spectrum is the union of the two arc images (inflated by the
 * element's tail_bound when it came from a truncated series), the Fredholm
 * index at lambda is minus the winding number of the circle arc around
 * lambda, and the element minus lambda is invertible exactly when it is
 * Fredholm of index zero.
 */
#pragma once

#include <functional>
#include <vector>

#include "hardyspec/finite_model.hpp"
#include "hardyspec/symbols.hpp"
#include "hardyspec/types.hpp"

namespace hardyspec {

struct ProductTerm {
  LineSymbol toeplitz;
  MultiplierSymbol multiplier;
};

struct OperatorSum {
  std::vector<ProductTerm> tm_terms;  // Toeplitz factor on the left
  std::vector<ProductTerm> mt_terms;  // multiplier factor on the left
  Complex scalar = 0.0;
  // sup-norm bound on whatever was dropped when this element was produced by
  // truncating a series; inflates every spectral set derived from it
  double tail_bound = 0.0;
};

struct EssentialSymbol {
  MultiplierSymbol whisker;
  LineSymbol circle;
  double tail_bound = 0.0;
};

// builds the two arcs; throws consistency_error if they fail to meet at
// infinity within 1e-9 (they agree exactly in exact arithmetic)
EssentialSymbol essential_symbol(const OperatorSum& el);

// the circle arc as a line symbol / as a circle symbol
LineSymbol circle_line_symbol(const OperatorSum& el);
CircleSymbol limit_toeplitz_symbol(const OperatorSum& el);

struct SpectralComponent {
  Complex representative;
  int index = 0;
  double margin = 0.0;  // distance from the representative to the sample set
  std::size_t cell_count = 0;
  bool touches_boundary = false;  // the unbounded component
};

struct SpectrumReport {
  std::vector<Complex> whisker_samples;
  std::vector<Complex> circle_samples;
  double tail_bound = 0.0;
  double max_gap = 0.0;  // largest step between consecutive arc samples
  // flood-fill fields, populated by spectrum() only
  double cell = 0.0;
  Complex box_lo, box_hi;
  std::vector<SpectralComponent> components;
};

SpectrumReport essential_spectrum(const OperatorSum& el, int grid_size = 1024);

// distance from lambda to the sampled essential spectrum
double essential_distance(const SpectrumReport& rep, Complex lambda);

// certification margin: tail_bound + sampling gap + 1e-6
double fredholm_margin(const SpectrumReport& rep);

// winding-number index of (element - lambda); throws resolution_error when
// lambda is within fredholm_margin of the sampled essential spectrum
int fredholm_index(const OperatorSum& el, const SpectrumReport& ess,
                   Complex lambda, int grid_size = 1024);
int fredholm_index(const OperatorSum& el, Complex lambda, int grid_size = 1024);

struct InvertibilityVerdict {
  bool invertible = false;
  bool fredholm = false;    // certifiably Fredholm at the requested margin
  int index = 0;            // meaningful when fredholm
  double essential_distance = 0.0;
  double margin = 0.0;
};

// never throws on spectral grounds: an uncertifiable lambda yields
// fredholm = false, invertible = false
InvertibilityVerdict is_invertible(const OperatorSum& el, Complex lambda = 0.0,
                                   int grid_size = 1024);

struct EquivalenceReport {
  InvertibilityVerdict element;
  InvertibilityVerdict limit;  // verdict for the pure limit Toeplitz operator
  bool agree = false;
};

// compares the element's verdict at lambda with the verdict of the Toeplitz
// operator built from the element's circle arc alone
EquivalenceReport check_limit_equivalence(const OperatorSum& el, Complex lambda,
                                          int grid_size = 1024);

// deformation parameter w in [0, 1]: multipliers are slid toward their limits
// by -ln w; w = 0 replaces them by the limits outright
OperatorSum homotopy(const OperatorSum& el, double w);

struct HomotopyRow {
  double w = 1.0;
  double essential_distance = 0.0;
  int index = 0;
  bool contained = false;  // sigma_e(H(w)) inside sigma_e(element) at tol
};

struct HomotopyTrace {
  std::vector<HomotopyRow> rows;
  bool index_constant = false;
  bool containment_ok = false;
};

HomotopyTrace homotopy_trace(const OperatorSum& el, Complex lambda,
                             const std::vector<double>& w_grid,
                             int grid_size = 1024,
                             double containment_tol = 1e-3);

// full spectrum by flood fill over the complement of the essential set: a
// complement component lies in the spectrum iff its index is nonzero
SpectrumReport spectrum(const OperatorSum& el, int resolution = 256,
                        int grid_size = 1024);

// finite model of the element: products of the factor truncations plus the
// scalar; exact for analytic Toeplitz factors
OperatorMatrix operator_sum_matrix(const OperatorSum& el,
                                   const TruncationConfig& cfg);

double hausdorff_distance(const std::vector<Complex>& a,
                          const std::vector<Complex>& b);

}  // namespace hardyspec
