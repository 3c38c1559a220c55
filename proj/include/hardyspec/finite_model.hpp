/**
 * Finite N x N truncations of the operators in a fixed orthonormal basis.
 *
 * One basis serves both operator families: on the line it is
 * e_n(x) = (1/sqrt(pi)) (x-i)^n/(x+i)^{n+1}; its Fourier transform is a
 * constant unimodular phase times ell_n(t) = sqrt(2) e^{-t} L_n(2t) on the
 * half-line. The phase is the same for every n (checked numerically by
 * fourier_phase_defect), so it cancels in all matrix entries and the two
 * coordinate pictures can be mixed freely:
 *
 *  - Toeplitz truncations are exact: entry (j, k) = hat a_{j-k}.
 *  - Multiplier truncations reduce to half-line integrals
 *    int_0^inf theta(u/2) e^{-u} L_m(u) L_n(u) du, done by Gauss-Laguerre.
 *  - The translation semigroup reduces to
 *    sum_i hw_i phi_k(u_i) phi_m(u_i + 2 eta), exact for Q >= N.
 */
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hardyspec/symbols.hpp"
#include "hardyspec/types.hpp"

namespace hardyspec {

struct TruncationConfig {
  int n = 64;
  // quadrature order; 0 means the default 4n. Must be >= n.
  int q = 0;
  double phase_check_tolerance = 1e-6;
};

// validates the config (throws config_error) and resolves the default q
int effective_q(const TruncationConfig& cfg);

using OperatorMatrix = Eigen::MatrixXcd;

// entry (j, k) = hat a_{j-k}; exact up to the Fourier coefficient accuracy of
// the sampling grid
OperatorMatrix toeplitz_matrix(const CircleSymbol& a,
                               const TruncationConfig& cfg);

// Gauss-Laguerre assembly at order q, re-done at 2q; throws consistency_error
// if the two differ by more than 1e-8 anywhere (the 2q result is returned)
OperatorMatrix multiplier_matrix(const MultiplierSymbol& m,
                                 const TruncationConfig& cfg);

// matrix of the forward translation by eta >= 0 on the half-line picture;
// polynomial integrand, exact for q >= n, so no doubling check is needed
OperatorMatrix shift_matrix(double eta, const TruncationConfig& cfg);

double sigma_min(const OperatorMatrix& a);
double sigma_max(const OperatorMatrix& a);
Eigen::VectorXd singular_values(const OperatorMatrix& a);  // descending
std::vector<Complex> eigenvalues(const OperatorMatrix& a);

// Numerical verification of the constant-phase convention: compares the
// truncated oscillatory integral (1/sqrt(2pi)) int e^{-itx} e_n(x) dx
// (|x| <= 2e4 plus two integration-by-parts tail corrections) against
// -i * ell_n(t). fourier_phase_defect returns |integral + i ell_n(t)|.
Complex fourier_phase_estimate(int n, double t);
double fourier_phase_defect(int n, double t);

// runs the defect check for n <= 8, t in {0.5, 1, 2, 4}; throws
// consistency_error if any defect exceeds cfg.phase_check_tolerance
void verify_phase_convention(const TruncationConfig& cfg);

}  // namespace hardyspec
