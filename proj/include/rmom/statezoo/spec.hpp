#pragma once

#include <map>
#include <string>

#include "rmom/qmat/density.hpp"

namespace rmom {

// Named state with parameters, resolvable to a DensityMatrix.
struct StateSpec {
    std::string name;
    std::map<std::string, double> params;
};

// Builds a zoo state by name. Unknown names or missing/out-of-range
// parameters raise UsageError.
DensityMatrix resolve_state(const StateSpec& spec);

// Parses either {"name": ..., "params": {...}} or a raw matrix
// {"dims": [...], "re": [...], "im": [...]} (row-major). Raw matrices are
// validated against the state invariants (NumericalError on failure).
DensityMatrix load_state_json(const std::string& text);

}  // namespace rmom
