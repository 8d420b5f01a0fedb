#pragma once

#include <stdexcept>
#include <string>

namespace sasa {

/// Exit-code taxonomy used by the CLI.  Library code throws these; the
/// driver maps them to process exit codes.
struct InvalidInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A named symmetry/consistency invariant failed beyond tolerance (exit 2).
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// |s33| vanished on or near the real axis (exit 3).
struct SpectralSingularityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Nonzero winding number: bound states present, reconstruction refused (exit 4).
struct SolitonsPresentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Jump phase oscillates faster than the plain real-line solver resolves (exit 5).
struct OscillationBudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sasa
