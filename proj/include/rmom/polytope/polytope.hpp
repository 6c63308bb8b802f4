#pragma once

#include <string>
#include <vector>

#include "rmom/bloch/bloch.hpp"
#include "rmom/qmat/density.hpp"

namespace rmom {

// All criteria compare lhs against bound with one global tolerance.
inline constexpr double kCriterionTol = 1e-9;

struct CriterionVerdict {
    std::string name;
    double lhs = 0.0;
    double bound = 0.0;
    bool violated = false;  // lhs - bound > kCriterionTol
};

CriterionVerdict make_verdict(std::string name, double lhs, double bound);

// Full-separability bound for three qudits:
// A3 <= d-1 + (2d-3)/3 A1 + (d-3)/3 A2  (for d=2 equivalent to A2+3A3 <= 3+A1).
CriterionVerdict full_sep_test(const SectorVector& s, std::size_t d);

// Fixed-bipartition separability bound for three qudits:
// A2+A3 <= (d^3-2)/2 (1+A1)  (for d=2: A2+A3 <= 3(1+A1)).
CriterionVerdict bisep_test(const SectorVector& s, std::size_t d);

// The older three-qubit bounds A3 <= 1 (full sep) and A3 <= 3 (bisep), kept
// for comparison output.
std::vector<CriterionVerdict> legacy_sector_tests(const SectorVector& s);

// Membership in the three-qubit sector polytope:
// A_k >= 0, A1-A2+A3 <= 1, A2 <= 3, A1+A2 <= 3(1+A3).
bool three_qubit_polytope_member(double a1, double a2, double a3);

// Membership in the two-qudit sector polytope: 0 <= A1X <= d-1,
// 0 <= A2 <= d^2-1, A1A+A1B+A2 <= d^2-1 (purity) and
// (d-1)^2 - (d-1)(A1A+A1B) + A2 >= 0 (state inversion).
bool two_qudit_polytope_member(double a1a, double a1b, double a2, std::size_t d);

// Two-qudit separability: A2 <= d-1 + min{(d-1)A1A - A1B, (d-1)A1B - A1A};
// equivalent to comparing the global purity with the marginal purities.
CriterionVerdict purity_sep_test(double a1a, double a1b, double a2, std::size_t d);

// Three-qubit family saturating the bisep bound: p |0><0| x |psi><psi| +
// (1-p) |1><1| x |phi><phi| with |psi> = a|00>+b|11>, |phi> = c|00>+d|11>,
// the remaining amplitudes fixed by p and a. Requires 1/2 <= p <= 1 and
// sqrt(1-1/(2p)) <= a <= sqrt(1/(2p)) with a^2 <= b^2.
DensityMatrix bisep_family(double p, double a, int d_sign = +1);

// Two-qudit separable family saturating the purity bound:
// p |00><00| + (1-p)/(d-1) sum_j |j><j| x |theta_0j><theta_0j| with
// |theta_0j> = cos(theta)|0> + sin(theta)|j>. p in [1/d, 1], theta in
// [0, pi/2]; swap exchanges the parties.
DensityMatrix sep_family(double p, double theta, std::size_t d, bool swap_parties = false);

// F(rho) = 1 + tr(rho^2) - sum_X tr(rho_X^2) for the rank-2 mixture
// p |psi><psi| + (1-p) |phi><phi| of pure products w.r.t. A|BC and AB|C.
// Non-positive for such mixtures.
double rank2_bisep_gap(const std::vector<cxd>& psi_a_bc, const std::vector<cxd>& phi_ab_c,
                       double p);

}  // namespace rmom
