#pragma once

#include <cstddef>
#include <vector>

#include "rmom/bloch/gellmann.hpp"
#include "rmom/qmat/density.hpp"

namespace rmom {

// Real coefficient tensor over the Gell-Mann basis: alpha_{i1..in} =
// tr(rho l_{i1} x ... x l_{in}), indices row-major with base d^2.
struct BlochTensor {
    std::size_t parties = 0;
    std::size_t local_d = 0;
    std::vector<double> alpha;  // size (d^2)^n

    std::size_t basis_size() const { return local_d * local_d; }
    double at(const std::vector<std::size_t>& idx) const;
};

// Requires a homogeneous local dimension.
BlochTensor decompose(const DensityMatrix& rho);

// rho = d^{-n} sum alpha l x ... x l. Requires alpha_{0..0} = 1; the result
// must satisfy the state invariants (PSD within tolerance) or a
// NumericalError is thrown.
DensityMatrix reconstruct(const BlochTensor& t);

// Two-body coefficient block t_ij = tr(rho l_i x l_j), 1 <= i,j <= d^2-1.
struct CorrelationMatrix {
    std::size_t d = 0;
    std::vector<double> t;  // (d^2-1) x (d^2-1), row-major

    std::size_t n() const { return d * d - 1; }
    double at(std::size_t i, std::size_t j) const { return t[i * n() + j]; }
};

// Exactly two parties with equal dimensions.
CorrelationMatrix correlation_matrix(const DensityMatrix& rho);

// Sector lengths A_0..A_n plus the per-party one-body parts A_1^X.
struct SectorVector {
    std::size_t parties = 0;
    std::size_t d = 0;
    std::vector<double> a;         // A_0..A_n
    std::vector<double> one_body;  // per party
};

SectorVector sector_lengths(const DensityMatrix& rho);

// Fast path used in hot loops: three-qubit sector lengths straight from the
// 8x8 matrix. Equivalent to sector_lengths on the same state.
SectorVector three_qubit_sectors(const ComplexMatrix& rho);

// Second moment of randomized measurements over the given parties:
// (1/3^|subset|) * sum of alpha^2 over indices nonzero exactly on subset.
// Qubits only.
double qubit_second_moments(const DensityMatrix& rho, const std::vector<std::size_t>& subset);

}  // namespace rmom
