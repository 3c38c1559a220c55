// Error taxonomy shared across the library. The CLI maps each class to a
// process exit code (see job.cpp): config 2, symbol class 3, resolution 4,
// consistency 5.
#pragma once

#include <stdexcept>

namespace hardyspec {

// malformed or out-of-range job configuration
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// input outside the admissible symbol class, e.g. a multiplier with no limit
// at infinity or a composition map that is not eventually contracting
struct symbol_class_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// grid or sampling resolution insufficient to certify the requested result
struct resolution_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// independent internal cross-checks disagree
struct consistency_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hardyspec
