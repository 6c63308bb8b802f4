#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rmom/detect/detect.hpp"

namespace rmom {

struct OptResult {
    double best_value = 0.0;
    std::vector<double> best_params;
    std::size_t restarts = 0;
    std::uint64_t seed = 0;
    std::size_t evaluations = 0;
    bool maximizing = false;
};

using Objective = std::function<double(const std::vector<double>&)>;

// Quasi-Newton descent with central-difference gradients (step 1e-6).
// Terminates when the gradient norm drops below tol or the evaluation budget
// is spent. Deterministic given x0. Throws NumericalError if the objective
// turns non-finite.
OptResult local_minimize(const Objective& f, const std::vector<double>& x0, double tol,
                         std::size_t max_evals = 10000);

// Maximizes A2 + A3 - 3(1+A1) over mixtures of `max_terms` pure three-qubit
// states, each a product across one of the three bipartitions; every
// bipartition multiset is scanned with `restarts` random restarts. A
// positive best value would falsify the mixed-bipartition conjecture.
OptResult bisep_conjecture_scan(std::size_t max_terms, std::size_t restarts,
                                std::uint64_t seed);

// Numerical lower boundary of the fourth moment over PPT states: states are
// parametrized as normalized squares of Hermitian matrices and penalized for
// missing the target second moment or violating positivity of the partial
// transpose (penalty weight x10 per round, 5 rounds, starting at 1e3).
RegionCurve ppt_s4_boundary(const std::vector<double>& s2_grid, std::size_t d,
                            std::size_t restarts, std::uint64_t seed);

}  // namespace rmom
