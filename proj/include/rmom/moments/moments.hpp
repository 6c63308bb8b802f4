#pragma once

#include <cstdint>
#include <vector>

#include "rmom/bloch/bloch.hpp"
#include "rmom/qmat/density.hpp"

namespace rmom {

// Pseudo-Bloch-sphere moment prefactors.
inline double moment_v(std::size_t d) {
    const double x = static_cast<double>(d) - 1.0;
    return 1.0 / (x * x);
}
inline double moment_w(std::size_t d) {
    const double x = static_cast<double>(d) - 1.0;
    return 1.0 / (3.0 * x * x * x * x);
}

struct MomentPair {
    double s2 = 0.0;
    double s4 = 0.0;
    std::size_t d = 0;
    bool monte_carlo = false;
    std::size_t samples = 0;   // monte_carlo only
    double se_s2 = 0.0;
    double se_s4 = 0.0;
};

// Second and fourth sphere moments of a correlation matrix. Evaluated
// through the singular values (the two routes are a theorem-level identity
// kept under test).
MomentPair s_moments(const CorrelationMatrix& t);

// Moments from singular values: S2 = V sum tau^2,
// S4 = W (2 sum tau^4 + (sum tau^2)^2). tau may be shorter than d^2-1
// (zero-padded); negative entries are rejected.
MomentPair s_moments_from_singvals(const std::vector<double>& tau, std::size_t d);

// Normalization of the sphere average making the moments equal 1 on pure
// product states; r in {2, 4}.
double sphere_normalization(int r, std::size_t d);
// Prefactors implied by sphere_normalization through the sphere-integral
// combinatorics; equal to moment_v / moment_w (cross-check targets).
double implied_v(std::size_t d);
double implied_w(std::size_t d);

// Diagonal observable whose randomized second and fourth moments match the
// sphere moments up to the fixed conversion factors.
struct MomentObservable {
    std::size_t d = 0;
    std::vector<double> eigenvalues;
    double y = 0.0;  // solved root (0 for d = 2)
};

// d = 2 returns the (1, -1) assignment; d >= 3 uses the closed form for odd
// d and bracketed root-finding on the matching polynomials for even d.
MomentObservable moment_observable(std::size_t d);

// S2 = (d+1)^2 R2,  S4 = (d+1)^2 (d^2+1)^2 / (9 (d-1)^2) R4.
double r2_to_s2_factor(std::size_t d);
double r4_to_s4_factor(std::size_t d);
MomentPair r_to_s(double r2, double r4, std::size_t d);

struct McEstimate {
    int r = 0;
    double estimate = 0.0;
    double std_err = 0.0;
};

// Monte Carlo randomized-measurement moments: samples pairs of Haar
// unitaries, evaluates tr[rho (U_A M U_A†) x (U_B M U_B†)] and averages its
// r-th powers. Standard errors from 100 batch means. Bit-deterministic for a
// fixed seed, independent of thread count.
std::vector<McEstimate> mc_moments(const DensityMatrix& rho, const MomentObservable& obs,
                                   const std::vector<int>& r_list, std::size_t samples,
                                   std::uint64_t seed);

// Exact second moment over the subset for qubit states via the Pauli
// two-design sum.
double pauli_r2(const DensityMatrix& rho, const std::vector<std::size_t>& subset);

}  // namespace rmom
