#include "rmom/kern/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace rmom::kern {

namespace scalar {
void cgemm(std::size_t, std::size_t, std::size_t, const cxd*, const cxd*, cxd*);
void outer_accum(std::size_t, cxd*, const cxd*, double);
double sum_abs2(const cxd*, std::size_t);
double dot(const double*, const double*, std::size_t);
double sum_sq(const double*, std::size_t);
double sum_quad(const double*, std::size_t);
}  // namespace scalar

#ifdef RMOM_WITH_AVX2
namespace avx2 {
void cgemm(std::size_t, std::size_t, std::size_t, const cxd*, const cxd*, cxd*);
void outer_accum(std::size_t, cxd*, const cxd*, double);
double sum_abs2(const cxd*, std::size_t);
double dot(const double*, const double*, std::size_t);
double sum_sq(const double*, std::size_t);
double sum_quad(const double*, std::size_t);
}  // namespace avx2
#endif

namespace {

constexpr detail::Ops kScalarOps = {
    scalar::cgemm, scalar::outer_accum, scalar::sum_abs2,
    scalar::dot,   scalar::sum_sq,      scalar::sum_quad,
};

#ifdef RMOM_WITH_AVX2
constexpr detail::Ops kAvx2Ops = {
    avx2::cgemm, avx2::outer_accum, avx2::sum_abs2,
    avx2::dot,   avx2::sum_sq,      avx2::sum_quad,
};

bool cpu_has_avx2() {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}
#endif

Isa resolve_from_env() {
    Isa best = Isa::scalar;
#ifdef RMOM_WITH_AVX2
    if (cpu_has_avx2()) best = Isa::avx2;
#endif
    const char* env = std::getenv("RMOM_KERNELS");
    if (env == nullptr || std::strcmp(env, "auto") == 0) return best;
    if (std::strcmp(env, "scalar") == 0) return Isa::scalar;
    if (std::strcmp(env, "avx2") == 0) return best;  // only if actually available
    return best;
}

struct Dispatch {
    Isa isa;
    const detail::Ops* ops;
    Dispatch() { set(resolve_from_env()); }
    void set(Isa i) {
        isa = i;
#ifdef RMOM_WITH_AVX2
        ops = (i == Isa::avx2) ? &kAvx2Ops : &kScalarOps;
#else
        isa = Isa::scalar;
        ops = &kScalarOps;
#endif
    }
};

Dispatch& dispatch() {
    static Dispatch d;
    return d;
}

}  // namespace

Isa active() { return dispatch().isa; }

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

void force(Isa isa) {
#ifdef RMOM_WITH_AVX2
    if (isa == Isa::avx2 && !cpu_has_avx2()) isa = Isa::scalar;
#endif
    dispatch().set(isa);
}

namespace detail {
const Ops& ops() { return *dispatch().ops; }
}  // namespace detail

}  // namespace rmom::kern
