#include "rmom/polytope/polytope.hpp"

#include <cmath>
#include <functional>

#include "rmom/error.hpp"
#include "rmom/polytope/tables.hpp"
#include "rmom/kern/kernels.hpp"
#include "rmom/qmat/linalg.hpp"
#include "rmom/qmat/ops.hpp"
#include "rmom/statezoo/zoo.hpp"

namespace rmom {

CriterionVerdict make_verdict(std::string name, double lhs, double bound) {
    CriterionVerdict v;
    v.name = std::move(name);
    v.lhs = lhs;
    v.bound = bound;
    v.violated = lhs - bound > kCriterionTol;
    return v;
}

namespace {
void require_three_parties(const SectorVector& s) {
    if (s.parties != 3) throw UsageError("criterion requires a three-party sector vector");
}
}  // namespace

CriterionVerdict full_sep_test(const SectorVector& s, std::size_t d) {
    require_three_parties(s);
    const double dd = static_cast<double>(d);
    const double bound = dd - 1.0 + (2.0 * dd - 3.0) / 3.0 * s.a[1] + (dd - 3.0) / 3.0 * s.a[2];
    return make_verdict("full_sep", s.a[3], bound);
}

CriterionVerdict bisep_test(const SectorVector& s, std::size_t d) {
    require_three_parties(s);
    const double dd = static_cast<double>(d);
    const double bound = (dd * dd * dd - 2.0) / 2.0 * (1.0 + s.a[1]);
    return make_verdict("bisep", s.a[2] + s.a[3], bound);
}

std::vector<CriterionVerdict> legacy_sector_tests(const SectorVector& s) {
    require_three_parties(s);
    if (s.d != 2) throw UsageError("legacy criteria are stated for qubits");
    return {make_verdict("legacy_full_sep", s.a[3], 1.0),
            make_verdict("legacy_bisep", s.a[3], 3.0)};
}

bool three_qubit_polytope_member(double a1, double a2, double a3) {
    const double t = kCriterionTol;
    if (a1 < -t || a2 < -t || a3 < -t) return false;
    if (a1 - a2 + a3 > 1.0 + t) return false;
    if (a2 > 3.0 + t) return false;
    if (a1 + a2 > 3.0 * (1.0 + a3) + t) return false;
    return true;
}

bool two_qudit_polytope_member(double a1a, double a1b, double a2, std::size_t d) {
    const double t = kCriterionTol;
    const double dd = static_cast<double>(d);
    if (a1a < -t || a1b < -t || a2 < -t) return false;
    if (a1a > dd - 1.0 + t || a1b > dd - 1.0 + t) return false;
    if (a2 > dd * dd - 1.0 + t) return false;
    if (a1a + a1b + a2 > dd * dd - 1.0 + t) return false;
    if ((dd - 1.0) * (dd - 1.0) - (dd - 1.0) * (a1a + a1b) + a2 < -t) return false;
    return true;
}

CriterionVerdict purity_sep_test(double a1a, double a1b, double a2, std::size_t d) {
    if (d < 2) throw UsageError("purity_sep_test: dimension must be >= 2");
    const double dd = static_cast<double>(d);
    const double bound =
        dd - 1.0 + std::min((dd - 1.0) * a1a - a1b, (dd - 1.0) * a1b - a1a);
    return make_verdict("purity_sep", a2, bound);
}

DensityMatrix bisep_family(double p, double a, int d_sign) {
    const double eps = 1e-12;
    if (p < 0.5 - eps || p > 1.0 + eps) throw UsageError("bisep_family: p must lie in [1/2, 1]");
    if (d_sign != 1 && d_sign != -1) throw UsageError("bisep_family: sign must be +1 or -1");
    const double lo = std::sqrt(std::max(0.0, 1.0 - 1.0 / (2.0 * p)));
    const double hi = std::sqrt(1.0 / (2.0 * p));
    if (a < lo - 1e-9 || a > hi + 1e-9)
        throw UsageError("bisep_family: a outside the admissible window");
    const double b_sq = 1.0 - a * a;
    if (a * a > b_sq + 1e-9) throw UsageError("bisep_family: requires a^2 <= b^2");
    const double b = std::sqrt(std::max(0.0, b_sq));

    double c = 1.0, dd = 0.0;
    if (p < 1.0 - eps) {
        const double c_sq = std::max(0.0, (2.0 * p * a * a - 1.0) / (2.0 * (p - 1.0)));
        c = std::sqrt(std::min(1.0, c_sq));
        dd = d_sign * std::sqrt(std::max(0.0, 1.0 - c * c));
    }

    ComplexMatrix m(8, 8);
    std::vector<cxd> psi(8, 0.0), phi(8, 0.0);
    psi[0] = a;  // |000>
    psi[3] = b;  // |011>
    phi[4] = c;  // |100>
    phi[7] = dd; // |111>
    kern::outer_accum(8, m.data(), psi.data(), p);
    kern::outer_accum(8, m.data(), phi.data(), 1.0 - p);
    return DensityMatrix::checked({2, 2, 2}, std::move(m));
}

DensityMatrix sep_family(double p, double theta, std::size_t d, bool swap_parties) {
    if (d < 2) throw UsageError("sep_family: dimension must be >= 2");
    const double eps = 1e-12;
    const double dd = static_cast<double>(d);
    if (p < 1.0 / dd - eps || p > 1.0 + eps)
        throw UsageError("sep_family: p must lie in [1/d, 1]");
    if (theta < -eps || theta > 1.5707963267948966 + eps)
        throw UsageError("sep_family: theta must lie in [0, pi/2]");
    const double q = (1.0 - p) / (dd - 1.0);

    ComplexMatrix m(d * d, d * d);
    std::vector<cxd> v(d * d, 0.0);
    v[0] = 1.0;  // |00>
    kern::outer_accum(d * d, m.data(), v.data(), p);
    const double ct = std::cos(theta), st = std::sin(theta);
    for (std::size_t j = 1; j < d; ++j) {
        std::fill(v.begin(), v.end(), cxd(0.0));
        v[j * d + 0] = ct;  // |j>|0>
        v[j * d + j] = st;  // |j>|j>
        kern::outer_accum(d * d, m.data(), v.data(), q);
    }
    DensityMatrix rho = DensityMatrix::checked({d, d}, std::move(m));
    if (swap_parties) rho = permute_parties(rho, {1, 0});
    return rho;
}

namespace {

// Largest singular value ratio check: the vector, reshaped to r x c, must be
// rank 1 within tolerance.
void require_product(const std::vector<cxd>& v, std::size_t r, std::size_t c,
                     const char* what) {
    ComplexMatrix m(r, c);
    m.a = v;
    const auto sv = singular_values(m);
    if (sv.size() >= 2 && sv[1] > 1e-9)
        throw UsageError(std::string("rank2_bisep_gap: ") + what +
                         " is not a product across the stated cut");
}

}  // namespace

double rank2_bisep_gap(const std::vector<cxd>& psi_a_bc, const std::vector<cxd>& phi_ab_c,
                       double p) {
    if (psi_a_bc.size() != 8 || phi_ab_c.size() != 8)
        throw UsageError("rank2_bisep_gap: three-qubit amplitudes required");
    if (p < 0.0 || p > 1.0) throw UsageError("rank2_bisep_gap: p must lie in [0, 1]");
    if (std::abs(kern::sum_abs2(psi_a_bc.data(), 8) - 1.0) > 1e-9 ||
        std::abs(kern::sum_abs2(phi_ab_c.data(), 8) - 1.0) > 1e-9)
        throw UsageError("rank2_bisep_gap: states must be normalized");
    require_product(psi_a_bc, 2, 4, "psi");
    require_product(phi_ab_c, 4, 2, "phi");

    ComplexMatrix m(8, 8);
    kern::outer_accum(8, m.data(), psi_a_bc.data(), p);
    kern::outer_accum(8, m.data(), phi_ab_c.data(), 1.0 - p);
    DensityMatrix rho = DensityMatrix::trusted({2, 2, 2}, std::move(m));

    double marg = 0.0;
    for (std::size_t x = 0; x < 3; ++x) marg += partial_trace(rho, {x}).purity();
    return 1.0 + rho.purity() - marg;
}

// --- table thresholds ---

double bisect_sign_change(const std::function<double(double)>& margin, double lo,
                          double hi, double tol) {
    double flo = margin(lo);
    const double fhi = margin(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0) throw UsageError("bisect_sign_change: no sign change in bracket");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = margin(mid);
        if (fm == 0.0) return mid;
        if (flo * fm < 0.0) hi = mid;
        else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

namespace {

double ghz_margin(double g, bool full, bool legacy) {
    const SectorVector s = sector_lengths(noisy_ghz_w(g, 0.0));
    if (legacy) return s.a[3] - (full ? 1.0 : 3.0);
    const CriterionVerdict v = full ? full_sep_test(s, 2) : bisep_test(s, 2);
    return v.lhs - v.bound;
}

double w_margin(double w, bool full, bool legacy) {
    const SectorVector s = sector_lengths(noisy_ghz_w(0.0, w));
    if (legacy) return s.a[3] - (full ? 1.0 : 3.0);
    const CriterionVerdict v = full ? full_sep_test(s, 2) : bisep_test(s, 2);
    return v.lhs - v.bound;
}

double line_margin(double g, bool legacy) {
    const SectorVector s = sector_lengths(noisy_ghz_w(g, 1.0 - g));
    if (legacy) return s.a[3] - 3.0;
    const CriterionVerdict v = bisep_test(s, 2);
    return v.lhs - v.bound;
}

std::pair<double, double> line_window(bool legacy) {
    // violated at both endpoints, satisfied in the middle
    const double lo = bisect_sign_change([&](double g) { return line_margin(g, legacy); },
                                         0.0, 0.5);
    const double hi = bisect_sign_change([&](double g) { return line_margin(g, legacy); },
                                         0.5, 1.0);
    return {lo, hi};
}

}  // namespace

double threshold_noisy_ghz_full_sep() {
    return bisect_sign_change([](double g) { return ghz_margin(g, true, false); }, 0.0, 1.0);
}
double threshold_noisy_w_full_sep() {
    return bisect_sign_change([](double w) { return w_margin(w, true, false); }, 0.0, 1.0);
}
double threshold_noisy_ghz_full_sep_legacy() {
    return bisect_sign_change([](double g) { return ghz_margin(g, true, true); }, 0.0, 1.0);
}
double threshold_noisy_w_full_sep_legacy() {
    return bisect_sign_change([](double w) { return w_margin(w, true, true); }, 0.0, 1.0);
}
double threshold_noisy_ghz_bisep() {
    return bisect_sign_change([](double g) { return ghz_margin(g, false, false); }, 0.0, 1.0);
}
double threshold_noisy_w_bisep() {
    return bisect_sign_change([](double w) { return w_margin(w, false, false); }, 0.0, 1.0);
}
std::pair<double, double> window_ghz_w_bisep() { return line_window(false); }
std::pair<double, double> window_ghz_w_bisep_legacy() { return line_window(true); }

}  // namespace rmom
