#include "rmom/kern/kernels.hpp"

#include <cstring>

// Reference kernels. Complex arithmetic is written out on raw doubles so the
// scalar and SIMD paths compute the same expressions (no NaN fixup calls).
namespace rmom::kern::scalar {

void cgemm(std::size_t m, std::size_t k, std::size_t n,
           const cxd* a, const cxd* b, cxd* c) {
    const double* A = reinterpret_cast<const double*>(a);
    const double* B = reinterpret_cast<const double*>(b);
    double* C = reinterpret_cast<double*>(c);
    std::memset(C, 0, sizeof(double) * 2 * m * n);
    for (std::size_t i = 0; i < m; ++i) {
        double* crow = C + 2 * i * n;
        for (std::size_t l = 0; l < k; ++l) {
            const double ar = A[2 * (i * k + l)];
            const double ai = A[2 * (i * k + l) + 1];
            const double* brow = B + 2 * l * n;
            for (std::size_t j = 0; j < n; ++j) {
                const double br = brow[2 * j];
                const double bi = brow[2 * j + 1];
                crow[2 * j] += ar * br - ai * bi;
                crow[2 * j + 1] += ar * bi + ai * br;
            }
        }
    }
}

void outer_accum(std::size_t n, cxd* m, const cxd* v, double w) {
    const double* V = reinterpret_cast<const double*>(v);
    double* M = reinterpret_cast<double*>(m);
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = w * V[2 * i];
        const double xi = w * V[2 * i + 1];
        double* row = M + 2 * i * n;
        for (std::size_t j = 0; j < n; ++j) {
            const double br = V[2 * j];
            const double bi = V[2 * j + 1];
            // x * conj(b)
            row[2 * j] += xr * br + xi * bi;
            row[2 * j + 1] += xi * br - xr * bi;
        }
    }
}

double sum_abs2(const cxd* v, std::size_t n) {
    const double* V = reinterpret_cast<const double*>(v);
    double acc = 0.0;
    for (std::size_t i = 0; i < 2 * n; ++i) acc += V[i] * V[i];
    return acc;
}

double dot(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double sum_sq(const double* v, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += v[i] * v[i];
    return acc;
}

double sum_quad(const double* v, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double s = v[i] * v[i];
        acc += s * s;
    }
    return acc;
}

}  // namespace rmom::kern::scalar
