// AVX2/FMA kernel variants. This TU is the only one compiled with -mavx2;
// it is linked in unconditionally on x86-64 and reached only through the
// dispatch table after a cpuid check.
#if defined(__x86_64__) || defined(_M_X64)

#include "rmom/kern/kernels.hpp"

#include <cstring>
#include <immintrin.h>

namespace rmom::kern::avx2 {

namespace {
// Even lanes carry real parts, odd lanes imaginary parts (two complex
// doubles per __m256d).
inline __m256d swap_halves(__m256d v) { return _mm256_permute_pd(v, 0x5); }
}  // namespace

void cgemm(std::size_t m, std::size_t k, std::size_t n,
           const cxd* a, const cxd* b, cxd* c) {
    const double* A = reinterpret_cast<const double*>(a);
    const double* B = reinterpret_cast<const double*>(b);
    double* C = reinterpret_cast<double*>(c);
    std::memset(C, 0, sizeof(double) * 2 * m * n);
    const std::size_t n2 = (n / 2) * 2;
    for (std::size_t i = 0; i < m; ++i) {
        double* crow = C + 2 * i * n;
        for (std::size_t l = 0; l < k; ++l) {
            const double ar = A[2 * (i * k + l)];
            const double ai = A[2 * (i * k + l) + 1];
            const __m256d var = _mm256_set1_pd(ar);
            const __m256d vai = _mm256_set1_pd(ai);
            const double* brow = B + 2 * l * n;
            std::size_t j = 0;
            for (; j < n2; j += 2) {
                const __m256d v = _mm256_loadu_pd(brow + 2 * j);
                const __m256d acc = _mm256_loadu_pd(crow + 2 * j);
                // even: ar*br - ai*bi, odd: ar*bi + ai*br
                const __m256d prod =
                    _mm256_fmaddsub_pd(var, v, _mm256_mul_pd(vai, swap_halves(v)));
                _mm256_storeu_pd(crow + 2 * j, _mm256_add_pd(acc, prod));
            }
            for (; j < n; ++j) {
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
    const std::size_t n2 = (n / 2) * 2;
    // flips the sign of the odd (imaginary) lanes
    const __m256d conj_mask = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = w * V[2 * i];
        const double xi = w * V[2 * i + 1];
        const __m256d vxr = _mm256_set1_pd(xr);
        const __m256d vxi = _mm256_set1_pd(xi);
        double* row = M + 2 * i * n;
        std::size_t j = 0;
        for (; j < n2; j += 2) {
            const __m256d b = _mm256_loadu_pd(V + 2 * j);
            // even: xr*br + xi*bi, odd: xr*bi - xi*br; odd lanes then negated
            __m256d prod =
                _mm256_fmsubadd_pd(vxr, b, _mm256_mul_pd(vxi, swap_halves(b)));
            prod = _mm256_xor_pd(prod, conj_mask);
            const __m256d acc = _mm256_loadu_pd(row + 2 * j);
            _mm256_storeu_pd(row + 2 * j, _mm256_add_pd(acc, prod));
        }
        for (; j < n; ++j) {
            const double br = V[2 * j];
            const double bi = V[2 * j + 1];
            row[2 * j] += xr * br + xi * bi;
            row[2 * j + 1] += xi * br - xr * bi;
        }
    }
}

namespace {
inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(s) + _mm_cvtsd_f64(_mm_unpackhi_pd(s, s));
}
}  // namespace

double sum_abs2(const cxd* v, std::size_t n) {
    const double* V = reinterpret_cast<const double*>(v);
    const std::size_t len = 2 * n;
    const std::size_t len4 = (len / 4) * 4;
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i < len4; i += 4) {
        const __m256d x = _mm256_loadu_pd(V + i);
        acc = _mm256_fmadd_pd(x, x, acc);
    }
    double tail = 0.0;
    for (; i < len; ++i) tail += V[i] * V[i];
    return hsum(acc) + tail;
}

double dot(const double* a, const double* b, std::size_t n) {
    const std::size_t n4 = (n / 4) * 4;
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i < n4; i += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
    double tail = 0.0;
    for (; i < n; ++i) tail += a[i] * b[i];
    return hsum(acc) + tail;
}

double sum_sq(const double* v, std::size_t n) { return dot(v, v, n); }

double sum_quad(const double* v, std::size_t n) {
    const std::size_t n4 = (n / 4) * 4;
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i < n4; i += 4) {
        const __m256d x = _mm256_loadu_pd(v + i);
        const __m256d s = _mm256_mul_pd(x, x);
        acc = _mm256_fmadd_pd(s, s, acc);
    }
    double tail = 0.0;
    for (; i < n; ++i) {
        const double s = v[i] * v[i];
        tail += s * s;
    }
    return hsum(acc) + tail;
}

}  // namespace rmom::kern::avx2

#endif  // x86-64
