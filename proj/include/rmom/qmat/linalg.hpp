#pragma once

#include <vector>

#include "rmom/qmat/matrix.hpp"

namespace rmom {

// Cyclic complex Jacobi. Accurate to ~1e-14 relative for the sizes used here
// (<= 256 x 256).
struct EigResult {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // columns; a = vectors * diag(values) * vectors†
};

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);
EigResult hermitian_eig(const ComplexMatrix& h);
double min_eigenvalue(const ComplexMatrix& h);

// One-sided Jacobi SVD, singular values only, descending.
std::vector<double> singular_values(const ComplexMatrix& m);

// Sum of singular values.
double trace_norm(const ComplexMatrix& m);

}  // namespace rmom
