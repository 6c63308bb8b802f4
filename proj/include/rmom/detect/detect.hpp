#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rmom/moments/moments.hpp"
#include "rmom/qmat/density.hpp"

namespace rmom {

// Minimum eigenvalue of the partial transpose (bipartite states).
double ppt_test(const DensityMatrix& rho);

// Trace norm of the realigned matrix R[(a,a'),(b,b')] = rho[(a,b),(a',b')].
// Separable states give <= 1.
double ccnr_test(const DensityMatrix& rho);

// Trace norm of the two-body correlation block; separable states give
// <= d-1.
double dv_test(const DensityMatrix& rho);

// tr(rho^2) - min marginal purity; separable states give <= 0.
double purity_test(const DensityMatrix& rho);

// Extremal fourth moments over separable-compatible singular values at fixed
// second moment s2 in [0, 1]. Returns (min, max); max = s2^2 exactly.
std::pair<double, double> sep_region(double s2, std::size_t d);

// Lower fourth-moment bound for arbitrary states, s2 in [0, (d+1)/(d-1)];
// attained by isotropic states.
double general_region_min(double s2, std::size_t d);

// A point is declared outside only when it exceeds a boundary by more than
// this margin (guards SVD rounding).
inline constexpr double kRegionTol = 1e-7;

bool inside_separable_region(const MomentPair& p);

enum class Verdict { separable_consistent, entangled, bound_entangled_candidate };
const char* verdict_name(Verdict v);

struct DetectionReport {
    std::string state_label;
    std::size_t d = 0;
    double ppt_min_eig = 0.0;
    double ccnr_norm = 0.0;
    double dv_norm = 0.0;
    double purity_gap = 0.0;
    MomentPair moments;
    // criterion -> verdict, fixed order: ppt, ccnr, dv, purity,
    // moment_region, overall
    std::vector<std::pair<std::string, Verdict>> verdicts;

    bool overall_flagged() const;
};

// Runs every detector, places the state in the (S2, S4) plane and labels
// each criterion; PPT-positive states violating another criterion are marked
// bound-entangled candidates.
DetectionReport moment_witness(const DensityMatrix& rho,
                               const std::string& label = "state");

struct RegionCurve {
    std::size_t d = 0;
    std::vector<double> s2_grid;
    std::vector<double> sep_min, sep_max, gen_min;
    std::vector<double> ppt_min;  // present when has_ppt
    bool has_ppt = false;
};

// Closed-form curves on the given grid (grid must lie in [0, 1]).
RegionCurve region_curve(std::size_t d, const std::vector<double>& s2_grid);

}  // namespace rmom
