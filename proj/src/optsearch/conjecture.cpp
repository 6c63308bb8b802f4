#include <array>
#include <cmath>

#include "rmom/bloch/bloch.hpp"
#include "rmom/error.hpp"
#include "rmom/kern/kernels.hpp"
#include "rmom/optsearch/optsearch.hpp"
#include "rmom/qmat/rng.hpp"
#include "rmom/util/parallel.hpp"

namespace rmom {

namespace {

// 12 reals per term: 4 for the single-party amplitudes, 8 for the pair side.
constexpr std::size_t kParamsPerTerm = 12;

// Mixture of unnormalized pure product states w.r.t. the per-term
// bipartitions (0: A|BC, 1: B|AC, 2: C|AB), rescaled to unit trace.
// Returns A2 + A3 - 3(1 + A1).
double bisep_gap_objective(const std::vector<double>& x, const std::vector<int>& cuts) {
    ComplexMatrix rho(8, 8);
    double trace = 0.0;
    std::array<cxd, 8> v;
    for (std::size_t term = 0; term < cuts.size(); ++term) {
        const double* p = x.data() + term * kParamsPerTerm;
        const cxd s0(p[0], p[1]), s1(p[2], p[3]);
        const cxd q0(p[4], p[5]), q1(p[6], p[7]), q2(p[8], p[9]), q3(p[10], p[11]);
        const cxd single[2] = {s0, s1};
        const cxd pair[4] = {q0, q1, q2, q3};
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t b = 0; b < 2; ++b)
                for (std::size_t c = 0; c < 2; ++c) {
                    cxd amp;
                    switch (cuts[term]) {
                        case 0: amp = single[a] * pair[2 * b + c]; break;
                        case 1: amp = single[b] * pair[2 * a + c]; break;
                        default: amp = single[c] * pair[2 * a + b]; break;
                    }
                    v[4 * a + 2 * b + c] = amp;
                }
        trace += kern::sum_abs2(v.data(), 8);
        kern::outer_accum(8, rho.data(), v.data(), 1.0);
    }
    if (trace < 1e-100) return -1e3;  // degenerate point, far from any maximum
    rho *= 1.0 / trace;
    const SectorVector s = three_qubit_sectors(rho);
    return s.a[2] + s.a[3] - 3.0 * (1.0 + s.a[1]);
}

}  // namespace

OptResult bisep_conjecture_scan(std::size_t max_terms, std::size_t restarts,
                                std::uint64_t seed) {
    if (max_terms < 1 || max_terms > 8)
        throw UsageError("bisep_conjecture_scan: max_terms must lie in [1, 8]");
    if (restarts < 1) throw UsageError("bisep_conjecture_scan: restarts must be >= 1");

    // Bipartition assignments up to term reordering: multisets
    // (count_A|BC, count_B|AC, count_C|AB) summing to max_terms.
    std::vector<std::vector<int>> assignments;
    for (std::size_t c0 = 0; c0 <= max_terms; ++c0)
        for (std::size_t c1 = 0; c0 + c1 <= max_terms; ++c1) {
            const std::size_t c2 = max_terms - c0 - c1;
            std::vector<int> cuts;
            cuts.insert(cuts.end(), c0, 0);
            cuts.insert(cuts.end(), c1, 1);
            cuts.insert(cuts.end(), c2, 2);
            assignments.push_back(std::move(cuts));
        }

    const std::size_t tasks = assignments.size() * restarts;
    std::vector<double> values(tasks);
    std::vector<std::vector<double>> params(tasks);
    std::vector<std::size_t> evals(tasks);

    util::parallel_for(tasks, [&](std::size_t task) {
        const std::vector<int>& cuts = assignments[task / restarts];
        StreamRng rng(seed, task);
        std::vector<double> x0(max_terms * kParamsPerTerm);
        for (double& v : x0) v = rng.normal();
        const Objective f = [&cuts](const std::vector<double>& x) {
            return -bisep_gap_objective(x, cuts);
        };
        OptResult r = local_minimize(f, x0, 1e-7);
        values[task] = -r.best_value;
        params[task] = std::move(r.best_params);
        evals[task] = r.evaluations;
    });

    OptResult out;
    out.maximizing = true;
    out.seed = seed;
    out.restarts = tasks;
    std::size_t best_task = 0;
    for (std::size_t t = 0; t < tasks; ++t) {
        out.evaluations += evals[t];
        if (values[t] > values[best_task]) best_task = t;
    }
    out.best_value = values[best_task];
    out.best_params = params[best_task];
    return out;
}

}  // namespace rmom
