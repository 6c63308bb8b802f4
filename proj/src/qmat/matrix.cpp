#include "rmom/qmat/matrix.hpp"

#include <cmath>

#include "rmom/error.hpp"

namespace rmom {

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols, rows);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
}

cxd ComplexMatrix::trace() const {
    cxd t = 0.0;
    const std::size_t n = rows < cols ? rows : cols;
    for (std::size_t i = 0; i < n; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cxd& z : a) m = std::max(m, std::abs(z));
    return m;
}

double ComplexMatrix::hermiticity_defect() const {
    double m = 0.0;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = r; c < cols; ++c)
            m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= o.a[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cxd s) {
    for (cxd& z : a) z *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols != b.rows) throw UsageError("matrix product: inner dimensions differ");
    ComplexMatrix c(a.rows, b.cols);
    kern::cgemm(a.rows, a.cols, b.cols, a.data(), b.data(), c.data());
    return c;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(cxd s, ComplexMatrix a) { return a *= s; }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix k(a.rows * b.rows, a.cols * b.cols);
    for (std::size_t ar = 0; ar < a.rows; ++ar)
        for (std::size_t ac = 0; ac < a.cols; ++ac) {
            const cxd v = a(ar, ac);
            if (v == 0.0) continue;
            for (std::size_t br = 0; br < b.rows; ++br)
                for (std::size_t bc = 0; bc < b.cols; ++bc)
                    k(ar * b.rows + br, ac * b.cols + bc) = v * b(br, bc);
        }
    return k;
}

}  // namespace rmom
