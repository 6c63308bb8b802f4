#include "rmom/moments/moments.hpp"

#include <cmath>

#include "rmom/error.hpp"
#include "rmom/kern/kernels.hpp"
#include "rmom/qmat/linalg.hpp"

namespace rmom {

MomentPair s_moments_from_singvals(const std::vector<double>& tau, std::size_t d) {
    if (d < 2) throw UsageError("s_moments_from_singvals: dimension must be >= 2");
    const std::size_t n = d * d - 1;
    if (tau.size() > n) throw UsageError("s_moments_from_singvals: too many singular values");
    for (double t : tau)
        if (t < 0.0) throw UsageError("s_moments_from_singvals: negative singular value");

    const double sum2 = kern::sum_sq(tau.data(), tau.size());
    const double sum4 = kern::sum_quad(tau.data(), tau.size());
    MomentPair p;
    p.d = d;
    p.s2 = moment_v(d) * sum2;
    p.s4 = moment_w(d) * (2.0 * sum4 + sum2 * sum2);
    return p;
}

MomentPair s_moments(const CorrelationMatrix& t) {
    const std::size_t n = t.n();
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n * n; ++i) m.a[i] = t.t[i];
    return s_moments_from_singvals(singular_values(m), t.d);
}

namespace {

double log_double_factorial(long n) {
    double acc = 0.0;
    for (long k = n; k > 1; k -= 2) acc += std::log(static_cast<double>(k));
    return acc;
}

}  // namespace

double sphere_normalization(int r, std::size_t d) {
    if (r != 2 && r != 4) throw UsageError("sphere_normalization: r must be 2 or 4");
    if (d < 2) throw UsageError("sphere_normalization: dimension must be >= 2");
    const long b = static_cast<long>(d) * static_cast<long>(d);
    const double log_num = 2.0 * log_double_factorial(b + r - 3);
    const double log_den = r * std::log(static_cast<double>(d) - 1.0) +
                           2.0 * log_double_factorial(r - 1) +
                           2.0 * log_double_factorial(b - 3);
    const double log_geom = 2.0 * (std::lgamma((b - 1) / 2.0) - std::log(2.0) -
                                   0.5 * (b - 1) * std::log(M_PI));
    return std::exp(log_num - log_den + log_geom);
}

double implied_v(std::size_t d) {
    const long b = static_cast<long>(d) * static_cast<long>(d);
    const double log_n = std::log(sphere_normalization(2, d));
    return std::exp(log_n + (b - 1) * std::log(M_PI) - 2.0 * std::lgamma((b + 1) / 2.0));
}

double implied_w(std::size_t d) {
    const long b = static_cast<long>(d) * static_cast<long>(d);
    const double log_n = std::log(sphere_normalization(4, d));
    return 0.75 * std::exp(log_n + (b - 1) * std::log(M_PI) - 2.0 * std::lgamma((b + 3) / 2.0));
}

double r2_to_s2_factor(std::size_t d) {
    const double x = static_cast<double>(d);
    return (x + 1.0) * (x + 1.0);
}

double r4_to_s4_factor(std::size_t d) {
    const double x = static_cast<double>(d);
    const double a = (x + 1.0) * (x * x + 1.0);
    return a * a / (9.0 * (x - 1.0) * (x - 1.0));
}

MomentPair r_to_s(double r2, double r4, std::size_t d) {
    if (d < 2) throw UsageError("r_to_s: dimension must be >= 2");
    MomentPair p;
    p.d = d;
    p.monte_carlo = true;
    p.s2 = r2_to_s2_factor(d) * r2;
    p.s4 = r4_to_s4_factor(d) * r4;
    return p;
}

}  // namespace rmom
