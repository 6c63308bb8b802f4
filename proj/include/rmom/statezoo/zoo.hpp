#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rmom/qmat/density.hpp"
#include "rmom/qmat/rng.hpp"

namespace rmom {

// Outer product of a (not necessarily normalized) vector, as a state.
DensityMatrix pure_state(const std::vector<cxd>& amplitudes,
                         const std::vector<std::size_t>& dims);

DensityMatrix ghz();
DensityMatrix w_state();
// Maximally entangled two-qudit state |Phi+_d>.
DensityMatrix bell_phi_plus(std::size_t d = 2);
DensityMatrix maximally_mixed(const std::vector<std::size_t>& dims);

// g*GHZ + w*W + (1-g-w)/8 * identity
DensityMatrix noisy_ghz_w(double g, double w);

// p*|Phi+_d><Phi+_d| + (1-p)/d^2 * identity, -1/(d^2-1) <= p <= 1
DensityMatrix isotropic(double p, std::size_t d);

// Uniform mixture of (|ij> - |kl>)/sqrt(2); labels are 1-based.
struct GridEdge {
    int i, j, k, l;
};
DensityMatrix grid_state(const std::vector<GridEdge>& edges, std::size_t d);
// The 3x3 bound entangled grid state.
DensityMatrix cross_hatch();

// 3x3 chessboard family; PPT-invariant by construction. Requires m, n != 0.
DensityMatrix chessboard(double a, double b, double c, double d_, double m, double n);

// 3x3 state on the complement of the Tiles unextendible product basis.
DensityMatrix upb_tiles();
// The five Tiles product vectors (normalized), for tests.
std::vector<std::vector<cxd>> upb_tiles_vectors();

// 3x3 family: PPT for 2<=p<=4, NPT for 4<p<=5.
DensityMatrix horodecki_3x3(double p);
// Diagnostic: (id (x) L) rho for the non-decomposable positive map L used to
// classify the family above. Entanglement shows as a negative eigenvalue.
ComplexMatrix horodecki_map_applied(const DensityMatrix& rho);

// 4x4 bound entangled state (two qubit pairs, cut AA'|BB').
DensityMatrix piani_4x4();
// Same state assembled from Bell-pair products, for cross-checking.
DensityMatrix piani_4x4_bell_form();

// --- random state generators (Hilbert-Schmidt pure/Ginibre ensembles) ---

std::vector<cxd> random_pure(std::size_t dim, StreamRng& rng);
DensityMatrix random_density(const std::vector<std::size_t>& dims, StreamRng& rng);
// Mixture of up to max_terms fully-product pure states, Dirichlet weights.
DensityMatrix random_fully_separable(const std::vector<std::size_t>& dims,
                                     std::size_t max_terms, StreamRng& rng);
// Three-party state separable w.r.t. one fixed bipartition
// (0: A|BC, 1: B|AC, 2: C|AB); the pair side may be entangled.
DensityMatrix random_bipartition_separable(std::size_t d, int bipartition,
                                           std::size_t max_terms, StreamRng& rng);

}  // namespace rmom
