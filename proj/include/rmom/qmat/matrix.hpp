#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "rmom/kern/kernels.hpp"

namespace rmom {

using cxd = std::complex<double>;

// Dense complex matrix, row-major.
struct ComplexMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<cxd> a;

    ComplexMatrix() = default;
    ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    cxd& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const cxd& operator()(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    cxd* data() { return a.data(); }
    const cxd* data() const { return a.data(); }

    ComplexMatrix adjoint() const;
    cxd trace() const;
    double max_abs() const;
    // max |m - m†| entrywise
    double hermiticity_defect() const;
    // sum |a_ij|^2
    double frobenius_sq() const { return kern::sum_abs2(a.data(), a.size()); }

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cxd s);
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cxd s, ComplexMatrix a);

// Standard Kronecker product; dimensions multiply.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace rmom
