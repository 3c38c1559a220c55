/**
 * Winding numbers of closed curves around the origin.
 *
 * The adaptive overload tracks the argument along curve(s), s in [0, 1], and
 * bisects any segment whose endpoints subtend pi/2 or more, up to max_depth
 * levels. The sampled overload works on a fixed closed polyline and refuses
 * under-resolved input instead of guessing.
 *
 * Both throw resolution_error when the curve comes within
 * separation_tolerance of the origin, when bisection depth runs out, or when
 * the accumulated argument fails to close up to an integer multiple of 2 pi.
 */
#pragma once

#include <functional>
#include <vector>

#include "hardyspec/types.hpp"

namespace hardyspec {

int winding_number(const std::function<Complex(double)>& curve,
                   double separation_tolerance = 1e-8, int base_samples = 256,
                   int max_depth = 20);

int winding_number(const std::vector<Complex>& samples,
                   double separation_tolerance = 1e-8);

}  // namespace hardyspec
