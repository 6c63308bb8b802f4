#include "rmom/qmat/density.hpp"

#include <cmath>

#include "rmom/error.hpp"
#include "rmom/qmat/linalg.hpp"

namespace rmom {

bool DensityMatrix::homogeneous() const {
    for (std::size_t d : dims)
        if (d != dims.front()) return false;
    return !dims.empty();
}

std::size_t DensityMatrix::local_dim() const {
    if (!homogeneous()) throw UsageError("state has heterogeneous local dimensions");
    return dims.front();
}

DensityMatrix DensityMatrix::checked(std::vector<std::size_t> dims, ComplexMatrix mat) {
    std::size_t prod = 1;
    for (std::size_t d : dims) {
        if (d < 2) throw UsageError("subsystem dimension must be >= 2");
        prod *= d;
    }
    if (dims.empty() || mat.rows != mat.cols || mat.rows != prod)
        throw UsageError("matrix size does not match subsystem dimensions");
    if (mat.hermiticity_defect() > kStateTol)
        throw NumericalError("state is not Hermitian within tolerance");
    if (std::abs(mat.trace() - 1.0) > kStateTol)
        throw NumericalError("state trace differs from 1 beyond tolerance");
    if (min_eigenvalue(mat) < -kStateTol)
        throw NumericalError("state has an eigenvalue below the PSD tolerance");
    return trusted(std::move(dims), std::move(mat));
}

DensityMatrix DensityMatrix::trusted(std::vector<std::size_t> dims, ComplexMatrix mat) {
    DensityMatrix rho;
    rho.dims = std::move(dims);
    rho.mat = std::move(mat);
    return rho;
}

}  // namespace rmom
