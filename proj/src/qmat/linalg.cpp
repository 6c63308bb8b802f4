#include "rmom/qmat/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rmom/error.hpp"

namespace rmom {

namespace {

struct Rotation {
    double c;
    cxd s_right;  // applied on columns:  new_p = c*p - s_right*q, new_q = conj? see below
    cxd phase;    // e^{-i arg(apq)}
    double s;
};

// Jacobi angle for the real symmetric 2x2 [[a, b], [b, d]], b > 0.
inline void jacobi_angle(double a, double d, double b, double& c, double& s) {
    const double tau = (d - a) / (2.0 * b);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    c = 1.0 / std::sqrt(1.0 + t * t);
    s = t * c;
}

double offdiag_norm(const ComplexMatrix& a) {
    double acc = 0.0;
    for (std::size_t p = 0; p < a.rows; ++p)
        for (std::size_t q = p + 1; q < a.cols; ++q) acc += std::norm(a(p, q));
    return std::sqrt(2.0 * acc);
}

// One two-sided Jacobi step: a <- j† a j on the (p, q) plane, j = phase-fixed
// rotation that zeroes a(p, q). Optionally accumulates v <- v j.
void apply_jacobi(ComplexMatrix& a, ComplexMatrix* v, std::size_t p, std::size_t q) {
    const cxd apq = a(p, q);
    const double abs_apq = std::abs(apq);
    if (abs_apq == 0.0) return;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    double c, s;
    jacobi_angle(app, aqq, abs_apq, c, s);
    const cxd ph = std::conj(apq / abs_apq);  // e^{-i phi}

    const std::size_t n = a.rows;
    // columns: (x_p, x_q) -> (c x_p - s ph x_q, s x_p + c ph x_q)
    for (std::size_t i = 0; i < n; ++i) {
        const cxd xp = a(i, p);
        const cxd xq = ph * a(i, q);
        a(i, p) = c * xp - s * xq;
        a(i, q) = s * xp + c * xq;
    }
    // rows: (x_p, x_q) -> (c x_p - s conj(ph) x_q, s x_p + c conj(ph) x_q)
    const cxd phc = std::conj(ph);
    for (std::size_t i = 0; i < n; ++i) {
        const cxd xp = a(p, i);
        const cxd xq = phc * a(q, i);
        a(p, i) = c * xp - s * xq;
        a(q, i) = s * xp + c * xq;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = cxd(a(p, p).real(), 0.0);
    a(q, q) = cxd(a(q, q).real(), 0.0);

    if (v != nullptr) {
        for (std::size_t i = 0; i < n; ++i) {
            const cxd xp = (*v)(i, p);
            const cxd xq = ph * (*v)(i, q);
            (*v)(i, p) = c * xp - s * xq;
            (*v)(i, q) = s * xp + c * xq;
        }
    }
}

void jacobi_eig(ComplexMatrix a, std::vector<double>& values, ComplexMatrix* vectors) {
    if (a.rows != a.cols) throw UsageError("eigensolver: matrix not square");
    const std::size_t n = a.rows;
    if (vectors != nullptr) *vectors = ComplexMatrix::identity(n);
    values.assign(n, 0.0);
    if (n == 0) return;
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(a(i, i).real()));
    scale = std::max(scale, offdiag_norm(a));
    if (scale == 0.0) return;

    const double stop = 1e-15 * scale;
    for (int sweep = 0; sweep < 60; ++sweep) {
        if (offdiag_norm(a) <= stop) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                if (std::abs(a(p, q)) > stop * 1e-2) apply_jacobi(a, vectors, p, q);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
    for (std::size_t i = 0; i < n; ++i) values[i] = a(order[i], order[i]).real();
    if (vectors != nullptr) {
        ComplexMatrix sorted(n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) sorted(i, j) = (*vectors)(i, order[j]);
        *vectors = std::move(sorted);
    }
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
    std::vector<double> values;
    jacobi_eig(h, values, nullptr);
    return values;
}

EigResult hermitian_eig(const ComplexMatrix& h) {
    EigResult r;
    jacobi_eig(h, r.values, &r.vectors);
    return r;
}

double min_eigenvalue(const ComplexMatrix& h) {
    const auto v = hermitian_eigenvalues(h);
    return v.empty() ? 0.0 : v.front();
}

std::vector<double> singular_values(const ComplexMatrix& m) {
    // One-sided Jacobi on the taller orientation; high relative accuracy.
    ComplexMatrix w = (m.rows >= m.cols) ? m : m.adjoint();
    const std::size_t rows = w.rows, n = w.cols;

    auto col_dot = [&](std::size_t p, std::size_t q) {
        cxd acc = 0.0;
        for (std::size_t i = 0; i < rows; ++i) acc += std::conj(w(i, p)) * w(i, q);
        return acc;
    };

    for (int sweep = 0; sweep < 60; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cxd g = col_dot(p, q);
                const double abs_g = std::abs(g);
                if (abs_g == 0.0) continue;
                const double np = col_dot(p, p).real();
                const double nq = col_dot(q, q).real();
                if (abs_g <= 1e-15 * std::sqrt(np * nq)) continue;
                rotated = true;
                const cxd ph = std::conj(g / abs_g);
                double c, s;
                jacobi_angle(np, nq, abs_g, c, s);
                for (std::size_t i = 0; i < rows; ++i) {
                    const cxd xp = w(i, p);
                    const cxd xq = ph * w(i, q);
                    w(i, p) = c * xp - s * xq;
                    w(i, q) = s * xp + c * xq;
                }
            }
        }
        if (!rotated) break;
    }

    std::vector<double> sv(n);
    for (std::size_t j = 0; j < n; ++j) sv[j] = std::sqrt(col_dot(j, j).real());
    std::sort(sv.begin(), sv.end(), std::greater<double>());
    return sv;
}

double trace_norm(const ComplexMatrix& m) {
    const auto sv = singular_values(m);
    double acc = 0.0;
    for (double s : sv) acc += s;
    return acc;
}

}  // namespace rmom
