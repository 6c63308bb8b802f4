#pragma once

#include <complex>
#include <cstddef>
#include <string>

// Arithmetic inner loops used by the linear-algebra layer. Every kernel has a
// scalar reference implementation and, on x86-64, an AVX2/FMA variant picked
// at runtime. The two are equivalence-tested against each other.
namespace rmom::kern {

using cxd = std::complex<double>;

enum class Isa { scalar, avx2 };

// Resolved once per process. Honors RMOM_KERNELS=scalar|avx2|auto; "avx2" on
// a machine without AVX2 silently falls back to scalar.
Isa active();
const char* isa_name(Isa isa);

// Test hook: override the dispatch table. Not thread-safe; call before
// spawning workers.
void force(Isa isa);

// C(m x n) = A(m x k) * B(k x n), row-major dense complex. C must not alias
// A or B.
void cgemm(std::size_t m, std::size_t k, std::size_t n,
           const cxd* a, const cxd* b, cxd* c);

// M(n x n) += w * v v†   (Hermitian rank-1 accumulate)
void outer_accum(std::size_t n, cxd* m, const cxd* v, double w);

// sum_i |v_i|^2
double sum_abs2(const cxd* v, std::size_t n);

double dot(const double* a, const double* b, std::size_t n);
double sum_sq(const double* v, std::size_t n);
double sum_quad(const double* v, std::size_t n);

// a^T T b with T row-major (n x n)
double bilinear(std::size_t n, const double* a, const double* t, const double* b);

namespace detail {
struct Ops {
    void (*cgemm)(std::size_t, std::size_t, std::size_t, const cxd*, const cxd*, cxd*);
    void (*outer_accum)(std::size_t, cxd*, const cxd*, double);
    double (*sum_abs2)(const cxd*, std::size_t);
    double (*dot)(const double*, const double*, std::size_t);
    double (*sum_sq)(const double*, std::size_t);
    double (*sum_quad)(const double*, std::size_t);
};
const Ops& ops();
}  // namespace detail

inline void cgemm(std::size_t m, std::size_t k, std::size_t n,
                  const cxd* a, const cxd* b, cxd* c) {
    detail::ops().cgemm(m, k, n, a, b, c);
}
inline void outer_accum(std::size_t n, cxd* m, const cxd* v, double w) {
    detail::ops().outer_accum(n, m, v, w);
}
inline double sum_abs2(const cxd* v, std::size_t n) { return detail::ops().sum_abs2(v, n); }
inline double dot(const double* a, const double* b, std::size_t n) {
    return detail::ops().dot(a, b, n);
}
inline double sum_sq(const double* v, std::size_t n) { return detail::ops().sum_sq(v, n); }
inline double sum_quad(const double* v, std::size_t n) { return detail::ops().sum_quad(v, n); }

inline double bilinear(std::size_t n, const double* a, const double* t, const double* b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += a[i] * detail::ops().dot(t + i * n, b, n);
    return acc;
}

}  // namespace rmom::kern
