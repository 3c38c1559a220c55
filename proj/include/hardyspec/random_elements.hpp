/**
 * Seeded generators for randomized consistency tests. Everything is driven by
 * a caller-owned mt19937_64, so runs are reproducible from the seed alone.
 */
#pragma once

#include <random>

#include "hardyspec/algebra.hpp"

namespace hardyspec {

struct RandomElementOptions {
  int max_terms = 3;           // per term family
  int max_rational_degree = 3; // highest (x+i)^{-k} power in Toeplitz symbols
  double magnitude = 1.0;
};

OperatorSum random_element(std::mt19937_64& rng,
                           const RandomElementOptions& opt = {});

// a point certifiably outside the essential spectrum: distance greater than
// fredholm_margin(ess) + extra_margin
Complex random_fredholm_point(std::mt19937_64& rng, const SpectrumReport& ess,
                              double extra_margin = 1e-3);

}  // namespace hardyspec
