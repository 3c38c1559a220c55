/**
 * Gauss-Laguerre machinery for the half-line frequency domain.
 *
 * laguerre_rule(Q) returns nodes u_i (roots of L_Q) and MODIFIED weights
 * hw_i = w_i e^{u_i}, so that sum_i hw_i g(u_i) approximates
 * int_0^inf g(u) du directly and is exact whenever g = e^{-u} p with p a
 * polynomial of degree <= 2Q - 1. The raw weights w_i underflow past
 * u ~ 745, the modified ones stay O(1) at every node.
 *
 * weighted_laguerre_column evaluates phi_n(u) = e^{-u/2} L_n(u) for
 * n = 0..nmax. The recurrence is renormalized with a tracked power-of-2
 * exponent: the naive seed e^{-u/2} underflows for u > ~1416 even though the
 * oscillatory-region values themselves are O(1).
 */
#pragma once

#include <vector>

#include "hardyspec/types.hpp"

namespace hardyspec {

struct LaguerreRule {
  int q = 0;
  std::vector<double> nodes;    // ascending roots of L_q
  std::vector<double> weights;  // modified weights hw_i, all finite, positive
};

// nodes from GSL, Newton-polished with the scaled recurrence (GSL's
// Golub-Welsch output alone drifts to ~5e-8 integral error at Q = 2048)
LaguerreRule laguerre_rule(int q);

// cached variant; rules are immutable and reused heavily across assemblies
const LaguerreRule& laguerre_rule_cached(int q);

// out[0..nmax] = phi_n(u); entries below e^{-700} flush to zero
void weighted_laguerre_column(double u, int nmax, double* out);

// row-major table B[n * q + i] = phi_n(u_i) for n < rows over rule nodes
std::vector<double> laguerre_table(const LaguerreRule& rule, int rows);

// same table at shifted arguments u_i + shift (shift >= 0)
std::vector<double> laguerre_table_shifted(const LaguerreRule& rule, int rows,
                                           double shift);

}  // namespace hardyspec
