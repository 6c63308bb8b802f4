#include "rmom/qmat/ops.hpp"

#include <algorithm>
#include <cmath>

#include "rmom/error.hpp"
#include "rmom/qmat/rng.hpp"

namespace rmom {

namespace {

// strides[k] = product of dims after party k
std::vector<std::size_t> strides_of(const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> s(dims.size(), 1);
    for (std::size_t k = dims.size(); k-- > 1;) s[k - 1] = s[k] * dims[k];
    return s;
}

void decode(std::size_t index, const std::vector<std::size_t>& dims,
            const std::vector<std::size_t>& strides, std::size_t* out) {
    for (std::size_t k = 0; k < dims.size(); ++k) {
        out[k] = index / strides[k];
        index %= strides[k];
    }
}

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::size_t>& keep) {
    const std::size_t n = rho.parties();
    if (keep.empty()) throw UsageError("partial_trace: keep set is empty");
    std::vector<bool> kept(n, false);
    for (std::size_t k : keep) {
        if (k >= n) throw UsageError("partial_trace: party index out of range");
        if (kept[k]) throw UsageError("partial_trace: duplicate party index");
        kept[k] = true;
    }

    std::vector<std::size_t> out_dims, out_parties;
    for (std::size_t k = 0; k < n; ++k)
        if (kept[k]) {
            out_dims.push_back(rho.dims[k]);
            out_parties.push_back(k);
        }
    const auto strides = strides_of(rho.dims);
    const auto out_strides = strides_of(out_dims);

    const std::size_t d = rho.dim();
    ComplexMatrix out(out_strides[0] * out_dims[0], out_strides[0] * out_dims[0]);
    std::vector<std::size_t> ri(n), ci(n);
    for (std::size_t r = 0; r < d; ++r) {
        decode(r, rho.dims, strides, ri.data());
        for (std::size_t c = 0; c < d; ++c) {
            decode(c, rho.dims, strides, ci.data());
            bool diagonal = true;
            for (std::size_t k = 0; k < n && diagonal; ++k)
                if (!kept[k] && ri[k] != ci[k]) diagonal = false;
            if (!diagonal) continue;
            std::size_t ro = 0, co = 0;
            for (std::size_t j = 0; j < out_parties.size(); ++j) {
                ro += ri[out_parties[j]] * out_strides[j];
                co += ci[out_parties[j]] * out_strides[j];
            }
            out(ro, co) += rho.mat(r, c);
        }
    }
    return DensityMatrix::trusted(std::move(out_dims), std::move(out));
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, std::size_t party) {
    const std::size_t n = rho.parties();
    if (party >= n) throw UsageError("partial_transpose: party index out of range");
    const auto strides = strides_of(rho.dims);
    const std::size_t d = rho.dim();
    ComplexMatrix out(d, d);
    std::vector<std::size_t> ri(n), ci(n);
    for (std::size_t r = 0; r < d; ++r) {
        decode(r, rho.dims, strides, ri.data());
        for (std::size_t c = 0; c < d; ++c) {
            decode(c, rho.dims, strides, ci.data());
            const std::size_t ro = r + (ci[party] - ri[party]) * strides[party];
            const std::size_t co = c + (ri[party] - ci[party]) * strides[party];
            out(ro, co) = rho.mat(r, c);
        }
    }
    return out;
}

DensityMatrix permute_parties(const DensityMatrix& rho, const std::vector<std::size_t>& perm) {
    const std::size_t n = rho.parties();
    if (perm.size() != n) throw UsageError("permute_parties: permutation size mismatch");
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> out_dims(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (perm[k] >= n || seen[perm[k]]) throw UsageError("permute_parties: not a permutation");
        seen[perm[k]] = true;
        out_dims[k] = rho.dims[perm[k]];
    }
    const auto strides = strides_of(rho.dims);
    const auto out_strides = strides_of(out_dims);
    const std::size_t d = rho.dim();
    ComplexMatrix out(d, d);
    std::vector<std::size_t> ri(n), ci(n);
    for (std::size_t r = 0; r < d; ++r) {
        decode(r, rho.dims, strides, ri.data());
        for (std::size_t c = 0; c < d; ++c) {
            decode(c, rho.dims, strides, ci.data());
            std::size_t ro = 0, co = 0;
            for (std::size_t k = 0; k < n; ++k) {
                ro += ri[perm[k]] * out_strides[k];
                co += ci[perm[k]] * out_strides[k];
            }
            out(ro, co) = rho.mat(r, c);
        }
    }
    return DensityMatrix::trusted(std::move(out_dims), std::move(out));
}

UnitarySample haar_unitary(std::size_t d, std::uint64_t master_seed, std::uint64_t stream) {
    if (d < 2) throw UsageError("haar_unitary: dimension must be >= 2");
    StreamRng rng(master_seed, stream);

    ComplexMatrix a(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) a(r, c) = rng.complex_normal();

    // Householder QR, accumulating Q.
    ComplexMatrix q = ComplexMatrix::identity(d);
    std::vector<cxd> v(d);
    for (std::size_t k = 0; k < d; ++k) {
        double normx_sq = 0.0;
        for (std::size_t i = k; i < d; ++i) normx_sq += std::norm(a(i, k));
        const double normx = std::sqrt(normx_sq);
        if (normx == 0.0) continue;
        const cxd x0 = a(k, k);
        const cxd phase = (x0 == 0.0) ? cxd(1.0, 0.0) : x0 / std::abs(x0);
        const cxd alpha = -phase * normx;
        for (std::size_t i = k; i < d; ++i) v[i] = a(i, k);
        v[k] -= alpha;
        double vnorm_sq = 0.0;
        for (std::size_t i = k; i < d; ++i) vnorm_sq += std::norm(v[i]);
        if (vnorm_sq == 0.0) continue;
        const double beta = 2.0 / vnorm_sq;
        // A <- H A with H = I - beta v v†
        for (std::size_t j = k; j < d; ++j) {
            cxd w = 0.0;
            for (std::size_t i = k; i < d; ++i) w += std::conj(v[i]) * a(i, j);
            w *= beta;
            for (std::size_t i = k; i < d; ++i) a(i, j) -= w * v[i];
        }
        // Q <- Q H
        for (std::size_t i = 0; i < d; ++i) {
            cxd w = 0.0;
            for (std::size_t j = k; j < d; ++j) w += q(i, j) * v[j];
            w *= beta;
            for (std::size_t j = k; j < d; ++j) q(i, j) -= w * std::conj(v[j]);
        }
    }

    // Phase-normalize so the implicit R has positive real diagonal.
    for (std::size_t j = 0; j < d; ++j) {
        const cxd rjj = a(j, j);
        const cxd ph = (rjj == 0.0) ? cxd(1.0, 0.0) : rjj / std::abs(rjj);
        for (std::size_t i = 0; i < d; ++i) q(i, j) *= ph;
    }

    UnitarySample u;
    u.dim = d;
    u.mat = std::move(q);
    u.master_seed = master_seed;
    u.stream = stream;
    return u;
}

}  // namespace rmom
