#include <cmath>
#include <functional>

#include "rmom/error.hpp"
#include "rmom/kern/kernels.hpp"
#include "rmom/moments/moments.hpp"
#include "rmom/qmat/ops.hpp"
#include "rmom/util/parallel.hpp"

namespace rmom {

namespace {

// tr(l_i A) for all traceless basis elements, with A Hermitian.
void project_onto_basis(const GellMannBasis& basis, const ComplexMatrix& a, double* out) {
    const std::size_t nb = basis.size() - 1;
    for (std::size_t i = 0; i < nb; ++i) {
        double acc = 0.0;
        for (const SparseEntry& e : basis.sparse[i + 1]) {
            const cxd z = e.v * a(e.c, e.r);
            acc += z.real();
        }
        out[i] = acc;
    }
}

}  // namespace

std::vector<McEstimate> mc_moments(const DensityMatrix& rho, const MomentObservable& obs,
                                   const std::vector<int>& r_list, std::size_t samples,
                                   std::uint64_t seed) {
    if (rho.parties() != 2 || !rho.homogeneous())
        throw UsageError("mc_moments: bipartite state with equal dimensions required");
    const std::size_t d = rho.local_dim();
    if (obs.d != d) throw UsageError("mc_moments: observable dimension mismatch");
    if (samples < 100) throw UsageError("mc_moments: at least 100 samples required");
    for (int r : r_list)
        if (r < 1) throw UsageError("mc_moments: moment order must be positive");

    const CorrelationMatrix t = correlation_matrix(rho);
    const GellMannBasis& basis = GellMannBasis::get(d);
    const std::size_t nb = d * d - 1;
    const double inv_d2 = 1.0 / static_cast<double>(d * d);

    // One correlator per sample, filled in parallel and reduced in index
    // order so the result does not depend on the thread count.
    std::vector<double> vals(samples);
    util::parallel_for(samples, [&](std::size_t k) {
        const UnitarySample ua = haar_unitary(d, seed, 2 * k);
        const UnitarySample ub = haar_unitary(d, seed, 2 * k + 1);
        ComplexMatrix a(d, d), b(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                cxd za = 0.0, zb = 0.0;
                for (std::size_t l = 0; l < d; ++l) {
                    za += obs.eigenvalues[l] * ua.mat(i, l) * std::conj(ua.mat(j, l));
                    zb += obs.eigenvalues[l] * ub.mat(i, l) * std::conj(ub.mat(j, l));
                }
                a(i, j) = za;
                b(i, j) = zb;
            }
        std::vector<double> pa(nb), pb(nb);
        project_onto_basis(basis, a, pa.data());
        project_onto_basis(basis, b, pb.data());
        vals[k] = inv_d2 * kern::bilinear(nb, pa.data(), t.t.data(), pb.data());
    });

    std::vector<McEstimate> out;
    out.reserve(r_list.size());
    const std::size_t nbatch = 100;
    std::vector<double> batch_means(nbatch);
    for (int r : r_list) {
        double total = 0.0;
        for (std::size_t b = 0; b < nbatch; ++b) {
            const std::size_t lo = b * samples / nbatch;
            const std::size_t hi = (b + 1) * samples / nbatch;
            double acc = 0.0;
            for (std::size_t k = lo; k < hi; ++k) acc += std::pow(vals[k], r);
            total += acc;
            batch_means[b] = acc / static_cast<double>(hi - lo);
        }
        const double mean = total / static_cast<double>(samples);
        double var = 0.0;
        for (double m : batch_means) var += (m - mean) * (m - mean);
        var /= static_cast<double>(nbatch - 1);
        McEstimate e;
        e.r = r;
        e.estimate = mean;
        e.std_err = std::sqrt(var / static_cast<double>(nbatch));
        out.push_back(e);
    }
    return out;
}

double pauli_r2(const DensityMatrix& rho, const std::vector<std::size_t>& subset) {
    for (std::size_t d : rho.dims)
        if (d != 2) throw UsageError("pauli_r2: qubits only");
    if (subset.empty()) throw UsageError("pauli_r2: empty subset");

    const DensityMatrix reduced = partial_trace(rho, subset);
    const std::size_t n = reduced.parties();
    const GellMannBasis& pauli = GellMannBasis::get(2);

    // Sum tr(rho sigma_{i1} x ... x sigma_{in})^2 over strings with every
    // index in {1, 2, 3}.
    double acc = 0.0;
    std::vector<std::size_t> digits(n, 1);
    while (true) {
        cxd corr = 0.0;
        // walk the sparse kron of the current string
        std::function<void(std::size_t, std::size_t, std::size_t, cxd)> walk =
            [&](std::size_t party, std::size_t r, std::size_t c, cxd v) {
                if (party == n) {
                    corr += v * reduced.mat(c, r);
                    return;
                }
                for (const SparseEntry& e : pauli.sparse[digits[party]])
                    walk(party + 1, 2 * r + e.r, 2 * c + e.c, v * e.v);
            };
        walk(0, 0, 0, cxd(1.0, 0.0));
        acc += corr.real() * corr.real();

        std::size_t k = n;
        while (k > 0 && digits[k - 1] == 3) digits[--k] = 1;
        if (k == 0) break;
        ++digits[k - 1];
    }
    return acc / std::pow(3.0, static_cast<double>(n));
}

}  // namespace rmom
