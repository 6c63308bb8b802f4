#pragma once

#include <cstddef>
#include <vector>

#include "rmom/qmat/matrix.hpp"

namespace rmom {

// Tolerances for the state invariants (max abs Hermiticity defect, trace
// deviation, and the floor on the minimum eigenvalue).
inline constexpr double kStateTol = 1e-9;

// Hermitian, PSD, unit-trace matrix together with its subsystem dimensions.
struct DensityMatrix {
    std::vector<std::size_t> dims;
    ComplexMatrix mat;

    std::size_t dim() const { return mat.rows; }
    std::size_t parties() const { return dims.size(); }
    bool homogeneous() const;
    // local dimension; requires homogeneous()
    std::size_t local_dim() const;
    // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
    double purity() const { return mat.frobenius_sq(); }

    // Validates Hermiticity, trace and positivity; throws NumericalError.
    static DensityMatrix checked(std::vector<std::size_t> dims, ComplexMatrix mat);
    // No validation; for internal construction where the invariants hold by
    // construction.
    static DensityMatrix trusted(std::vector<std::size_t> dims, ComplexMatrix mat);
};

}  // namespace rmom
