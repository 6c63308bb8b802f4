#pragma once

#include <cstdint>
#include <vector>

#include "rmom/qmat/density.hpp"
#include "rmom/qmat/matrix.hpp"

namespace rmom {

// Reduced state on the kept subsystems (indices into rho.dims, any order
// given; output keeps ascending order). Trace is preserved.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::size_t>& keep);

// Transpose of one party's indices. Hermitian with trace 1 but possibly
// indefinite, hence returned as a plain matrix.
ComplexMatrix partial_transpose(const DensityMatrix& rho, std::size_t party);

// Reorders the subsystems: party i of the result is party perm[i] of the
// input.
DensityMatrix permute_parties(const DensityMatrix& rho, const std::vector<std::size_t>& perm);

struct UnitarySample {
    std::size_t dim = 0;
    ComplexMatrix mat;
    std::uint64_t master_seed = 0;
    std::uint64_t stream = 0;
};

// Haar-distributed unitary: complex Ginibre matrix, Householder QR, and the
// diagonal of R phase-normalized to positive real. The phase fix is required
// for the Haar measure. Bit-identical for equal (master_seed, stream).
UnitarySample haar_unitary(std::size_t d, std::uint64_t master_seed, std::uint64_t stream);

}  // namespace rmom
