/**
 * Entry-assembly kernels for the finite model, in serial and OpenMP flavors.
 *
 * Both flavors accumulate every entry in the same fixed index order, so the
 * parallel results are bit-identical to the serial reference regardless of
 * thread count (each entry is owned by exactly one thread).
 */
#pragma once

#include "hardyspec/types.hpp"

namespace hardyspec {

enum class ExecMode { serial, parallel };

// out[m*n + k] = sum_i tv[i] b[m*q + i] b[k*q + i]; symmetric in (m, k),
// only the upper triangle is computed and mirrored
void multiplier_kernel(ExecMode mode, int n, int q, const Complex* tv,
                       const double* b, Complex* out);

// out[m*n + k] = sum_i w[i] b_rows[m*q + i] b_cols[k*q + i]; general
// (non-symmetric) cross table product with real weights
void cross_kernel(ExecMode mode, int n, int q, const double* w,
                  const double* b_rows, const double* b_cols, Complex* out);

}  // namespace hardyspec
