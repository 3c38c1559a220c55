#pragma once

#include <vector>

#include "hardyspec/types.hpp"

namespace hardyspec {

// In-place radix-2 FFT. Forward: X_k = sum_j a_j exp(-2 pi i j k / M).
// Inverse applies the conjugate kernel and divides by M, so
// fft_radix2(fft_radix2(a), true) restores a. a.size() must be a power of two.
void fft_radix2(std::vector<Complex>& a, bool inverse = false);

}  // namespace hardyspec
