#include "hardyspec/kernels.hpp"

namespace hardyspec {

namespace {

inline Complex dot_weighted(int q, const Complex* tv, const double* bm,
                            const double* bk) {
  double re = 0.0, im = 0.0;
  for (int i = 0; i < q; ++i) {
    double p = bm[i] * bk[i];
    re += tv[i].real() * p;
    im += tv[i].imag() * p;
  }
  return Complex(re, im);
}

inline double dot_real(int q, const double* w, const double* bm,
                       const double* bk) {
  double s = 0.0;
  for (int i = 0; i < q; ++i) s += w[i] * bm[i] * bk[i];
  return s;
}

}  // namespace

void multiplier_kernel(ExecMode mode, int n, int q, const Complex* tv,
                       const double* b, Complex* out) {
  if (mode == ExecMode::serial) {
    for (int m = 0; m < n; ++m)
      for (int k = m; k < n; ++k) {
        Complex v = dot_weighted(q, tv, b + static_cast<std::size_t>(m) * q,
                                 b + static_cast<std::size_t>(k) * q);
        out[static_cast<std::size_t>(m) * n + k] = v;
        out[static_cast<std::size_t>(k) * n + m] = v;
      }
    return;
  }
#pragma omp parallel for schedule(dynamic, 4)
  for (int m = 0; m < n; ++m)
    for (int k = m; k < n; ++k) {
      Complex v = dot_weighted(q, tv, b + static_cast<std::size_t>(m) * q,
                               b + static_cast<std::size_t>(k) * q);
      out[static_cast<std::size_t>(m) * n + k] = v;
      out[static_cast<std::size_t>(k) * n + m] = v;
    }
}

void cross_kernel(ExecMode mode, int n, int q, const double* w,
                  const double* b_rows, const double* b_cols, Complex* out) {
  if (mode == ExecMode::serial) {
    for (int m = 0; m < n; ++m)
      for (int k = 0; k < n; ++k)
        out[static_cast<std::size_t>(m) * n + k] =
            dot_real(q, w, b_rows + static_cast<std::size_t>(m) * q,
                     b_cols + static_cast<std::size_t>(k) * q);
    return;
  }
#pragma omp parallel for schedule(static)
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k)
      out[static_cast<std::size_t>(m) * n + k] =
          dot_real(q, w, b_rows + static_cast<std::size_t>(m) * q,
                   b_cols + static_cast<std::size_t>(k) * q);
}

}  // namespace hardyspec
