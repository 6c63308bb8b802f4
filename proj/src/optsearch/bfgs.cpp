#include <cmath>

#include "rmom/error.hpp"
#include "rmom/optsearch/optsearch.hpp"

namespace rmom {

namespace {

constexpr double kGradStep = 1e-6;

double checked_eval(const Objective& f, const std::vector<double>& x, std::size_t& evals) {
    ++evals;
    const double v = f(x);
    if (!std::isfinite(v)) throw NumericalError("optimizer: objective is not finite");
    return v;
}

}  // namespace

OptResult local_minimize(const Objective& f, const std::vector<double>& x0, double tol,
                         std::size_t max_evals) {
    const std::size_t n = x0.size();
    std::size_t evals = 0;

    std::vector<double> x = x0;
    double fx = checked_eval(f, x, evals);

    // inverse Hessian approximation, dense row-major
    std::vector<double> h(n * n, 0.0);
    auto reset_h = [&] {
        std::fill(h.begin(), h.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) h[i * n + i] = 1.0;
    };
    reset_h();

    std::vector<double> g(n), g_new(n), p(n), x_new(n), s(n), yv(n), hy(n);
    auto gradient = [&](const std::vector<double>& at, std::vector<double>& out) {
        std::vector<double> probe = at;
        for (std::size_t i = 0; i < n; ++i) {
            const double orig = probe[i];
            probe[i] = orig + kGradStep;
            const double fp = checked_eval(f, probe, evals);
            probe[i] = orig - kGradStep;
            const double fm = checked_eval(f, probe, evals);
            probe[i] = orig;
            out[i] = (fp - fm) / (2.0 * kGradStep);
        }
    };

    OptResult best;
    best.best_value = fx;
    best.best_params = x;
    best.restarts = 1;

    if (n == 0 || max_evals <= 1) {
        best.evaluations = evals;
        return best;
    }

    gradient(x, g);
    for (int iter = 0; iter < 100000; ++iter) {
        double gnorm = 0.0;
        for (double v : g) gnorm += v * v;
        gnorm = std::sqrt(gnorm);
        if (gnorm < tol || evals + 2 * n + 2 > max_evals) break;

        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < n; ++j) acc -= h[i * n + j] * g[j];
            p[i] = acc;
        }
        double slope = 0.0;
        for (std::size_t i = 0; i < n; ++i) slope += p[i] * g[i];
        if (slope >= 0.0) {  // not a descent direction; restart from steepest
            reset_h();
            for (std::size_t i = 0; i < n; ++i) p[i] = -g[i];
            slope = -gnorm * gnorm;
        }

        // backtracking Armijo line search
        double t = 1.0;
        double f_new = fx;
        bool moved = false;
        for (int ls = 0; ls < 40 && evals + 1 <= max_evals; ++ls) {
            for (std::size_t i = 0; i < n; ++i) x_new[i] = x[i] + t * p[i];
            f_new = checked_eval(f, x_new, evals);
            if (f_new <= fx + 1e-4 * t * slope) {
                moved = true;
                break;
            }
            t *= 0.5;
        }
        if (!moved) break;

        if (evals + 2 * n > max_evals) {
            x = x_new;
            fx = f_new;
            break;
        }
        gradient(x_new, g_new);

        double sy = 0.0, ss = 0.0, yy = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            s[i] = x_new[i] - x[i];
            yv[i] = g_new[i] - g[i];
            sy += s[i] * yv[i];
            ss += s[i] * s[i];
            yy += yv[i] * yv[i];
        }
        if (sy > 1e-12 * std::sqrt(ss * yy)) {
            // BFGS update of the inverse Hessian
            const double rho = 1.0 / sy;
            for (std::size_t i = 0; i < n; ++i) {
                double acc = 0.0;
                for (std::size_t j = 0; j < n; ++j) acc += h[i * n + j] * yv[j];
                hy[i] = acc;
            }
            double yhy = 0.0;
            for (std::size_t i = 0; i < n; ++i) yhy += yv[i] * hy[i];
            const double c = (1.0 + rho * yhy) * rho;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    h[i * n + j] += c * s[i] * s[j] - rho * (hy[i] * s[j] + s[i] * hy[j]);
        } else {
            reset_h();
        }

        x = x_new;
        fx = f_new;
        g = g_new;
        if (fx < best.best_value) {
            best.best_value = fx;
            best.best_params = x;
        }
        double step = 0.0;
        for (std::size_t i = 0; i < n; ++i) step += s[i] * s[i];
        if (std::sqrt(step) < 1e-14) break;
    }

    if (fx < best.best_value) {
        best.best_value = fx;
        best.best_params = x;
    }
    best.evaluations = evals;
    return best;
}

}  // namespace rmom
