#include <cmath>

#include "rmom/bloch/bloch.hpp"
#include "rmom/error.hpp"
#include "rmom/optsearch/optsearch.hpp"
#include "rmom/qmat/linalg.hpp"
#include "rmom/qmat/ops.hpp"
#include "rmom/qmat/rng.hpp"
#include "rmom/util/parallel.hpp"

namespace rmom {

namespace {

// Hermitian matrix from D diagonal + D(D-1) off-diagonal reals.
ComplexMatrix hermitian_from_params(const std::vector<double>& x, std::size_t dim) {
    ComplexMatrix h(dim, dim);
    std::size_t k = dim;
    for (std::size_t i = 0; i < dim; ++i) h(i, i) = x[i];
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
            h(i, j) = cxd(x[k], x[k + 1]);
            h(j, i) = cxd(x[k], -x[k + 1]);
            k += 2;
        }
    return h;
}

struct PointEval {
    double s2 = 0.0;
    double s4 = 0.0;
    double pt_neg_sq = 0.0;  // sum of squared negative PT eigenvalues
};

PointEval evaluate_state(const std::vector<double>& x, std::size_t d) {
    const std::size_t dim = d * d;
    const ComplexMatrix h = hermitian_from_params(x, dim);
    ComplexMatrix sq = h * h;
    const double tr = sq.trace().real();
    if (tr < 1e-100) {
        PointEval e;
        e.s2 = 0.0;
        e.s4 = 0.0;
        e.pt_neg_sq = 0.0;
        return e;
    }
    sq *= 1.0 / tr;
    DensityMatrix rho = DensityMatrix::trusted({d, d}, std::move(sq));

    const MomentPair p = s_moments(correlation_matrix(rho));
    PointEval e;
    e.s2 = p.s2;
    e.s4 = p.s4;
    for (double ev : hermitian_eigenvalues(partial_transpose(rho, 1)))
        if (ev < 0.0) e.pt_neg_sq += ev * ev;
    return e;
}

}  // namespace

RegionCurve ppt_s4_boundary(const std::vector<double>& s2_grid, std::size_t d,
                            std::size_t restarts, std::uint64_t seed) {
    if (d < 2) throw UsageError("ppt_s4_boundary: dimension must be >= 2");
    if (restarts < 1) throw UsageError("ppt_s4_boundary: restarts must be >= 1");
    const double hi = (static_cast<double>(d) + 1.0) / (static_cast<double>(d) - 1.0);
    for (double s2 : s2_grid)
        if (s2 < -1e-12 || s2 > hi + 1e-12)
            throw UsageError("ppt_s4_boundary: grid value out of range");

    const std::size_t dim = d * d;
    const std::size_t nparams = dim * dim;
    const std::size_t tasks = s2_grid.size() * restarts;

    std::vector<double> final_s4(tasks), final_penalized(tasks);
    util::parallel_for(tasks, [&](std::size_t task) {
        const double target = s2_grid[task / restarts];
        StreamRng rng(seed, task);
        std::vector<double> x(nparams);
        for (double& v : x) v = 0.5 * rng.normal();

        double weight = 1e3;
        for (int round = 0; round < 5; ++round, weight *= 10.0) {
            const Objective f = [&, weight](const std::vector<double>& p) {
                const PointEval e = evaluate_state(p, d);
                const double miss = e.s2 - target;
                return e.s4 + weight * (miss * miss + e.pt_neg_sq);
            };
            OptResult r = local_minimize(f, x, 1e-8);
            x = r.best_params;
        }
        const PointEval e = evaluate_state(x, d);
        const double miss = e.s2 - target;
        final_s4[task] = e.s4;
        final_penalized[task] = e.s4 + weight * (miss * miss + e.pt_neg_sq);
    });

    RegionCurve curve;
    curve.d = d;
    curve.s2_grid = s2_grid;
    curve.has_ppt = true;
    curve.ppt_min.resize(s2_grid.size());
    for (std::size_t g = 0; g < s2_grid.size(); ++g) {
        std::size_t best = g * restarts;
        for (std::size_t r = 1; r < restarts; ++r)
            if (final_penalized[g * restarts + r] < final_penalized[best])
                best = g * restarts + r;
        curve.ppt_min[g] = final_s4[best];
        // closed-form companions where defined
        curve.gen_min.push_back(general_region_min(s2_grid[g], d));
        if (s2_grid[g] <= 1.0 + 1e-12) {
            const auto [lo, hi2] = sep_region(std::min(s2_grid[g], 1.0), d);
            curve.sep_min.push_back(lo);
            curve.sep_max.push_back(hi2);
        }
    }
    return curve;
}

}  // namespace rmom
