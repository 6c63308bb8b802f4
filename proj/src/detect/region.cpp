#include <cmath>
#include <limits>

#include "rmom/detect/detect.hpp"
#include "rmom/error.hpp"

namespace rmom {

namespace {

// Minimum of sum tau^4 subject to sum tau^2 = c2, sum tau <= s, tau >= 0,
// over n coordinates. Stationary points have at most two distinct nonzero
// levels, so all candidates are enumerable:
//   - trace inactive: flat over a support of size n' with sqrt(n' c2) <= s
//   - trace active:   k entries at a, m entries at b, the rest zero
double min_sum_quad(double c2, double s, std::size_t n) {
    double best = std::numeric_limits<double>::infinity();
    if (c2 <= 0.0) return 0.0;

    for (std::size_t np = 1; np <= n; ++np)
        if (std::sqrt(static_cast<double>(np) * c2) <= s * (1.0 + 1e-12))
            best = std::min(best, c2 * c2 / static_cast<double>(np));

    const double s2 = s * s;
    for (std::size_t k = 1; k <= n; ++k) {
        const double kd = static_cast<double>(k);
        // single level using the full trace: k a = s, k a^2 = c2
        {
            const double a = s / kd;
            if (std::abs(kd * a * a - c2) <= 1e-9 * std::max(1.0, c2))
                best = std::min(best, kd * a * a * a * a);
        }
        for (std::size_t m = 1; k + m <= n; ++m) {
            const double md = static_cast<double>(m);
            const double disc = kd * md * ((kd + md) * c2 - s2);
            if (disc < 0.0) continue;
            const double root = std::sqrt(disc);
            for (int sign = -1; sign <= 1; sign += 2) {
                const double a = (kd * s + sign * root) / (kd * (kd + md));
                const double b = (s - kd * a) / md;
                if (a < -1e-12 || b < -1e-12) continue;
                best = std::min(best, kd * a * a * a * a + md * b * b * b * b);
            }
        }
    }
    return best;
}

}  // namespace

std::pair<double, double> sep_region(double s2, std::size_t d) {
    if (d < 2) throw UsageError("sep_region: dimension must be >= 2");
    if (s2 < -1e-12 || s2 > 1.0 + 1e-12)
        throw UsageError("sep_region: s2 must lie in [0, 1] for separable states");
    s2 = std::min(std::max(s2, 0.0), 1.0);
    const std::size_t n = d * d - 1;
    const double c2 = s2 / moment_v(d);  // sum tau^2
    const double w = moment_w(d);

    const double max_quad = c2 * c2;  // single support saturates
    const double min_quad = min_sum_quad(c2, static_cast<double>(d) - 1.0, n);
    return {w * (2.0 * min_quad + c2 * c2), w * (2.0 * max_quad + c2 * c2)};
}

double general_region_min(double s2, std::size_t d) {
    if (d < 2) throw UsageError("general_region_min: dimension must be >= 2");
    const double hi = (static_cast<double>(d) + 1.0) / (static_cast<double>(d) - 1.0);
    if (s2 < -1e-12 || s2 > hi + 1e-12)
        throw UsageError("general_region_min: s2 out of range");
    const double n = static_cast<double>(d) * d - 1.0;
    return s2 * s2 * (n + 2.0) / (3.0 * n);
}

RegionCurve region_curve(std::size_t d, const std::vector<double>& s2_grid) {
    RegionCurve c;
    c.d = d;
    c.s2_grid = s2_grid;
    c.sep_min.reserve(s2_grid.size());
    c.sep_max.reserve(s2_grid.size());
    c.gen_min.reserve(s2_grid.size());
    for (double s2 : s2_grid) {
        const auto [lo, hi] = sep_region(s2, d);
        c.sep_min.push_back(lo);
        c.sep_max.push_back(hi);
        c.gen_min.push_back(general_region_min(s2, d));
    }
    return c;
}

}  // namespace rmom
