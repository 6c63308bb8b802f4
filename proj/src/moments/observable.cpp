#include <cmath>
#include <functional>

#include "rmom/error.hpp"
#include "rmom/moments/moments.hpp"

namespace rmom {

namespace {

// Matching quartic for even dimensions: at its roots the fourth moment of
// the value assignment diag(1 x (d-2)/2, y, 0 x d/2) under random unitaries
// becomes basis-element independent, which makes it proportional to the
// sphere-average moment. Derived from the degree-4 unitary integrals; for
// odd multiplicities the analogous condition reproduces the closed-form root
// used below, which is how this expression was cross-checked.
double even_matching_quartic(std::size_t d, double y) {
    const double x = static_cast<double>(d);
    const double y2 = y * y;
    return 16.0 * (x - 3.0) * (x - 1.0) * y2 * y2 -
           32.0 * (x - 3.0) * (x - 2.0) * y2 * y +
           8.0 * (x - 12.0) * (x - 3.0) * y2 +
           8.0 * (x * x - 24.0) * y -
           (x + 2.0) * (x * x - 24.0);
}

std::vector<double> bracketed_roots(const std::function<double(double)>& f, double lo,
                                    double hi, double step) {
    std::vector<double> roots;
    double x0 = lo, f0 = f(lo);
    for (double x1 = lo + step; x1 <= hi + step / 2; x1 += step) {
        const double f1 = f(x1);
        if (f0 == 0.0) roots.push_back(x0);
        else if (f0 * f1 < 0.0) {
            double a = x0, b = x1, fa = f0;
            for (int it = 0; it < 200; ++it) {
                const double m = 0.5 * (a + b);
                const double fm = f(m);
                if (fm == 0.0) { a = b = m; break; }
                if (fa * fm < 0.0) b = m;
                else { a = m; fa = fm; }
                if (b - a < 1e-14) break;
            }
            roots.push_back(0.5 * (a + b));
        }
        x0 = x1;
        f0 = f1;
    }
    return roots;
}

void finish(MomentObservable& obs) {
    double sum = 0.0, sum2 = 0.0;
    for (double e : obs.eigenvalues) {
        sum += e;
        sum2 += e * e;
    }
    // Rescale to tr(M^2) = d; a no-op when the closed form is already
    // normalized. Tracelessness is unaffected.
    const double scale = std::sqrt(static_cast<double>(obs.d) / sum2);
    sum2 = 0.0;
    for (double& e : obs.eigenvalues) {
        e *= scale;
        sum2 += e * e;
    }
    if (std::abs(sum * scale) > 1e-12 * obs.d ||
        std::abs(sum2 - static_cast<double>(obs.d)) > 1e-12 * obs.d)
        throw NumericalError("moment_observable: trace invariants not met");
}

}  // namespace

MomentObservable moment_observable(std::size_t d) {
    if (d < 2) throw UsageError("moment_observable: dimension must be >= 2");
    MomentObservable obs;
    obs.d = d;
    if (d == 2) {
        obs.eigenvalues = {1.0, -1.0};
        return obs;
    }
    const double x = static_cast<double>(d);
    if (d % 2 == 1) {
        // closed form, minus branch
        const double y =
            0.5 * (1.0 - std::sqrt(1.0 + (x + 3.0 + std::sqrt(x * x * x + 3.0 * x * x + x + 3.0)) /
                                             (x - 2.0)));
        const double g = (2.0 * y - 1.0) * (2.0 * y - 1.0);
        const double den = std::sqrt((x - 1.0) * (g + x));
        const double ap = (x - 2.0 * y + 1.0) / den;
        const double am = (-x - 2.0 * y + 1.0) / den;
        const double beta = -std::sqrt((x - 1.0) * g / (g + x));
        obs.y = y;
        obs.eigenvalues.assign((d - 1) / 2, ap);
        obs.eigenvalues.push_back(beta);
        obs.eigenvalues.insert(obs.eigenvalues.end(), (d - 1) / 2, am);
        finish(obs);
        return obs;
    }

    const auto roots = bracketed_roots([&](double y) { return even_matching_quartic(d, y); },
                                       -100.0, 100.0, 0.01);
    for (double y : roots) {  // ascending; smallest real root first
        const double den_sq =
            x * x * x + 4.0 * x * x * (y - 1.0) * y - 4.0 * x * (y - 1.0) * (y - 1.0);
        if (den_sq <= 0.0) continue;
        const double den = std::sqrt(den_sq);
        const double ap = (2.0 * x - 4.0 * (y - 1.0)) / den;
        const double am = (-2.0 * x - 4.0 * (y - 1.0)) / den;
        const double beta = (2.0 * x * (2.0 * y - 1.0) - 4.0 * (y - 1.0)) / den;
        obs.y = y;
        obs.eigenvalues.assign((d - 2) / 2, ap);
        obs.eigenvalues.push_back(beta);
        obs.eigenvalues.insert(obs.eigenvalues.end(), d / 2, am);
        finish(obs);
        return obs;
    }
    throw NumericalError("moment_observable: no usable real root of the matching polynomials");
}

}  // namespace rmom
