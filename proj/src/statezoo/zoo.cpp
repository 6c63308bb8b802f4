#include "rmom/statezoo/zoo.hpp"

#include <cmath>

#include "rmom/error.hpp"
#include "rmom/kern/kernels.hpp"
#include "rmom/qmat/ops.hpp"

namespace rmom {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

ComplexMatrix outer(const std::vector<cxd>& v, double w = 1.0) {
    ComplexMatrix m(v.size(), v.size());
    kern::outer_accum(v.size(), m.data(), v.data(), w);
    return m;
}

std::vector<cxd> normalized(std::vector<cxd> v) {
    const double n = std::sqrt(kern::sum_abs2(v.data(), v.size()));
    if (n == 0.0) throw UsageError("cannot normalize the zero vector");
    for (cxd& z : v) z /= n;
    return v;
}

}  // namespace

DensityMatrix pure_state(const std::vector<cxd>& amplitudes,
                         const std::vector<std::size_t>& dims) {
    std::size_t prod = 1;
    for (std::size_t d : dims) prod *= d;
    if (prod != amplitudes.size()) throw UsageError("pure_state: size mismatch");
    return DensityMatrix::trusted(dims, outer(normalized(amplitudes)));
}

DensityMatrix ghz() {
    std::vector<cxd> v(8, 0.0);
    v[0] = kInvSqrt2;
    v[7] = kInvSqrt2;
    return pure_state(v, {2, 2, 2});
}

DensityMatrix w_state() {
    std::vector<cxd> v(8, 0.0);
    const double c = 1.0 / std::sqrt(3.0);
    v[1] = c;  // |001>
    v[2] = c;  // |010>
    v[4] = c;  // |100>
    return pure_state(v, {2, 2, 2});
}

DensityMatrix bell_phi_plus(std::size_t d) {
    if (d < 2) throw UsageError("bell_phi_plus: dimension must be >= 2");
    std::vector<cxd> v(d * d, 0.0);
    const double c = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t i = 0; i < d; ++i) v[i * d + i] = c;
    return pure_state(v, {d, d});
}

DensityMatrix maximally_mixed(const std::vector<std::size_t>& dims) {
    std::size_t prod = 1;
    for (std::size_t d : dims) {
        if (d < 2) throw UsageError("maximally_mixed: dimension must be >= 2");
        prod *= d;
    }
    ComplexMatrix m = ComplexMatrix::identity(prod);
    m *= 1.0 / static_cast<double>(prod);
    return DensityMatrix::trusted(dims, std::move(m));
}

DensityMatrix noisy_ghz_w(double g, double w) {
    if (g < 0.0 || w < 0.0 || g + w > 1.0 + 1e-12)
        throw UsageError("noisy_ghz_w: need g,w >= 0 and g+w <= 1");
    ComplexMatrix m = ghz().mat;
    m *= g;
    ComplexMatrix mw = w_state().mat;
    mw *= w;
    m += mw;
    const double bg = (1.0 - g - w) / 8.0;
    for (std::size_t i = 0; i < 8; ++i) m(i, i) += bg;
    return DensityMatrix::trusted({2, 2, 2}, std::move(m));
}

DensityMatrix isotropic(double p, std::size_t d) {
    if (d < 2) throw UsageError("isotropic: dimension must be >= 2");
    const double lo = -1.0 / (static_cast<double>(d) * d - 1.0);
    if (p < lo - 1e-12 || p > 1.0 + 1e-12)
        throw UsageError("isotropic: p outside the PSD range");
    ComplexMatrix m = bell_phi_plus(d).mat;
    m *= p;
    const double bg = (1.0 - p) / static_cast<double>(d * d);
    for (std::size_t i = 0; i < d * d; ++i) m(i, i) += bg;
    return DensityMatrix::trusted({d, d}, std::move(m));
}

DensityMatrix grid_state(const std::vector<GridEdge>& edges, std::size_t d) {
    if (edges.empty()) throw UsageError("grid_state: no edges");
    ComplexMatrix m(d * d, d * d);
    const double w = 1.0 / static_cast<double>(edges.size());
    for (const GridEdge& e : edges) {
        const int vals[4] = {e.i, e.j, e.k, e.l};
        for (int v : vals)
            if (v < 1 || static_cast<std::size_t>(v) > d)
                throw UsageError("grid_state: label out of range (labels are 1-based)");
        if (e.i == e.k && e.j == e.l) throw UsageError("grid_state: degenerate edge");
        std::vector<cxd> v(d * d, 0.0);
        v[(e.i - 1) * d + (e.j - 1)] = kInvSqrt2;
        v[(e.k - 1) * d + (e.l - 1)] = -kInvSqrt2;
        kern::outer_accum(v.size(), m.data(), v.data(), w);
    }
    return DensityMatrix::checked({d, d}, std::move(m));
}

DensityMatrix cross_hatch() {
    return grid_state({{1, 1, 2, 3}, {2, 1, 3, 3}, {1, 2, 3, 1}, {1, 3, 3, 2}}, 3);
}

DensityMatrix chessboard(double a, double b, double c, double d_, double m, double n) {
    if (m == 0.0 || n == 0.0) throw UsageError("chessboard: m and n must be nonzero");
    const double s = a * c / n;
    const double t = a * d_ / m;
    const std::vector<std::vector<cxd>> vecs = {
        {m, 0, s, 0, n, 0, 0, 0, 0},
        {0, a, 0, b, 0, c, 0, 0, 0},
        {n, 0, 0, 0, -m, 0, t, 0, 0},
        {0, b, 0, -a, 0, 0, 0, d_, 0},
    };
    double norm = 0.0;
    for (const auto& v : vecs) norm += kern::sum_abs2(v.data(), v.size());
    ComplexMatrix rho(9, 9);
    for (const auto& v : vecs) kern::outer_accum(9, rho.data(), v.data(), 1.0 / norm);
    return DensityMatrix::checked({3, 3}, std::move(rho));
}

std::vector<std::vector<cxd>> upb_tiles_vectors() {
    const double r = kInvSqrt2;
    const double t = 1.0 / 3.0;
    // |i>|j> stored at 3i+j
    std::vector<std::vector<cxd>> v(5, std::vector<cxd>(9, 0.0));
    v[0][0] = r;   // |0>(|0>-|1>)
    v[0][1] = -r;
    v[1][2] = r;   // (|0>-|1>)|2>
    v[1][5] = -r;
    v[2][7] = r;   // |2>(|1>-|2>)
    v[2][8] = -r;
    v[3][3] = r;   // (|1>-|2>)|0>
    v[3][6] = -r;
    for (int i = 0; i < 9; ++i) v[4][i] = t;  // (|0>+|1>+|2>)^{x2}
    return v;
}

DensityMatrix upb_tiles() {
    ComplexMatrix m = ComplexMatrix::identity(9);
    for (const auto& v : upb_tiles_vectors()) kern::outer_accum(9, m.data(), v.data(), -1.0);
    m *= 0.25;
    return DensityMatrix::checked({3, 3}, std::move(m));
}

DensityMatrix horodecki_3x3(double p) {
    if (p < 2.0 - 1e-12 || p > 5.0 + 1e-12)
        throw UsageError("horodecki_3x3: p must lie in [2, 5]");
    std::vector<cxd> psi(9, 0.0);
    const double c = 1.0 / std::sqrt(3.0);
    psi[0] = c;  // |00>
    psi[4] = c;  // |11>
    psi[8] = c;  // |22>
    ComplexMatrix m = outer(psi, 2.0 / 7.0);
    const double wp = p / 21.0;        // p/7 * 1/3
    const double wm = (5.0 - p) / 21.0;
    m(1, 1) += wp;  // |01>
    m(5, 5) += wp;  // |12>
    m(6, 6) += wp;  // |20>
    m(3, 3) += wm;  // |10>
    m(7, 7) += wm;  // |21>
    m(2, 2) += wm;  // |02>
    return DensityMatrix::checked({3, 3}, std::move(m));
}

ComplexMatrix horodecki_map_applied(const DensityMatrix& rho) {
    if (rho.dims != std::vector<std::size_t>{3, 3})
        throw UsageError("horodecki_map_applied: 3x3 bipartite state required");
    // The map acts on the first subsystem; with this orientation the family
    // above shows a negative eigenvalue exactly for p > 3.
    ComplexMatrix out(9, 9);
    for (std::size_t b = 0; b < 3; ++b)
        for (std::size_t bp = 0; bp < 3; ++bp) {
            for (std::size_t a = 0; a < 3; ++a)
                for (std::size_t ap = 0; ap < 3; ++ap) {
                    const cxd v = rho.mat(3 * a + b, 3 * ap + bp);
                    out(3 * a + b, 3 * ap + bp) = (a == ap) ? v : -v;
                }
            out(0 + b, 0 + bp) += rho.mat(3 + b, 3 + bp);
            out(3 + b, 3 + bp) += rho.mat(6 + b, 6 + bp);
            out(6 + b, 6 + bp) += rho.mat(0 + b, 0 + bp);
        }
    return out;
}

namespace {

// Pauli matrices as 2x2 arrays for the 4x4 bound entangled construction.
void apply_pauli_pair(int i, int j, const std::vector<cxd>& in, std::vector<cxd>& out) {
    static const cxd sig[4][2][2] = {
        {{1, 0}, {0, 1}},
        {{0, 1}, {1, 0}},
        {{0, cxd(0, -1)}, {cxd(0, 1), 0}},
        {{1, 0}, {0, -1}},
    };
    // in/out indexed by (aa', bb'); sigma_i acts on b, sigma_j on b'
    std::fill(out.begin(), out.end(), cxd(0.0));
    for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t bp = 0; bp < 2; ++bp) {
                cxd acc = 0.0;
                for (std::size_t b2 = 0; b2 < 2; ++b2)
                    for (std::size_t bp2 = 0; bp2 < 2; ++bp2)
                        acc += sig[i][b][b2] * sig[j][bp][bp2] * in[x * 4 + b2 * 2 + bp2];
                out[x * 4 + b * 2 + bp] = acc;
            }
}

}  // namespace

DensityMatrix piani_4x4() {
    // |Psi+_4> on the cut AA'|BB'
    std::vector<cxd> psi(16, 0.0);
    for (std::size_t k = 0; k < 4; ++k) psi[k * 4 + k] = 0.5;

    const int pairs[6][2] = {{0, 2}, {1, 1}, {2, 3}, {3, 1}, {3, 2}, {3, 3}};
    ComplexMatrix m(16, 16);
    std::vector<cxd> rotated(16);
    for (const auto& ij : pairs) {
        apply_pauli_pair(ij[0], ij[1], psi, rotated);
        kern::outer_accum(16, m.data(), rotated.data(), 1.0 / 6.0);
    }
    return DensityMatrix::checked({4, 4}, std::move(m));
}

DensityMatrix piani_4x4_bell_form() {
    auto bell = [](int which) {
        // 0: Phi+, 1: Psi+, 2: Psi-, 3: Phi-
        std::vector<cxd> v(4, 0.0);
        switch (which) {
            case 0: v[0] = kInvSqrt2; v[3] = kInvSqrt2; break;
            case 1: v[1] = kInvSqrt2; v[2] = kInvSqrt2; break;
            case 2: v[1] = kInvSqrt2; v[2] = -kInvSqrt2; break;
            default: v[0] = kInvSqrt2; v[3] = -kInvSqrt2; break;
        }
        return pure_state(v, {2, 2});
    };
    // pairs of (AB Bell, A'B' Bell)
    const int terms[6][2] = {{0, 2}, {1, 1}, {2, 3}, {3, 1}, {3, 2}, {3, 3}};
    ComplexMatrix acc(16, 16);
    for (const auto& t : terms) {
        DensityMatrix prod = DensityMatrix::trusted(
            {2, 2, 2, 2}, kron(bell(t[0]).mat, bell(t[1]).mat));  // order A,B,A',B'
        DensityMatrix reordered = permute_parties(prod, {0, 2, 1, 3});  // A,A',B,B'
        acc += reordered.mat;
    }
    acc *= 1.0 / 6.0;
    return DensityMatrix::checked({4, 4}, std::move(acc));
}

std::vector<cxd> random_pure(std::size_t dim, StreamRng& rng) {
    std::vector<cxd> v(dim);
    for (cxd& z : v) z = rng.complex_normal();
    return normalized(v);
}

DensityMatrix random_density(const std::vector<std::size_t>& dims, StreamRng& rng) {
    std::size_t prod = 1;
    for (std::size_t d : dims) prod *= d;
    ComplexMatrix g(prod, prod);
    for (cxd& z : g.a) z = rng.complex_normal();
    ComplexMatrix rho = g * g.adjoint();
    rho *= 1.0 / rho.trace().real();
    return DensityMatrix::trusted(dims, std::move(rho));
}

namespace {

std::vector<double> dirichlet_weights(std::size_t k, StreamRng& rng) {
    std::vector<double> w(k);
    double sum = 0.0;
    for (double& x : w) {
        x = -std::log(rng.uniform_pos());
        sum += x;
    }
    for (double& x : w) x /= sum;
    return w;
}

}  // namespace

DensityMatrix random_fully_separable(const std::vector<std::size_t>& dims,
                                     std::size_t max_terms, StreamRng& rng) {
    std::size_t prod = 1;
    for (std::size_t d : dims) prod *= d;
    const std::size_t k = 1 + rng.next_u64() % max_terms;
    const std::vector<double> w = dirichlet_weights(k, rng);
    ComplexMatrix m(prod, prod);
    for (std::size_t term = 0; term < k; ++term) {
        std::vector<cxd> v{cxd(1.0, 0.0)};
        for (std::size_t d : dims) {
            const std::vector<cxd> part = random_pure(d, rng);
            std::vector<cxd> next(v.size() * d);
            for (std::size_t i = 0; i < v.size(); ++i)
                for (std::size_t j = 0; j < d; ++j) next[i * d + j] = v[i] * part[j];
            v = std::move(next);
        }
        kern::outer_accum(prod, m.data(), v.data(), w[term]);
    }
    return DensityMatrix::trusted(dims, std::move(m));
}

DensityMatrix random_bipartition_separable(std::size_t d, int bipartition,
                                           std::size_t max_terms, StreamRng& rng) {
    if (bipartition < 0 || bipartition > 2)
        throw UsageError("random_bipartition_separable: bipartition must be 0, 1 or 2");
    const std::size_t dim = d * d * d;
    const std::size_t k = 1 + rng.next_u64() % max_terms;
    const std::vector<double> w = dirichlet_weights(k, rng);
    ComplexMatrix m(dim, dim);
    std::vector<cxd> v(dim);
    for (std::size_t term = 0; term < k; ++term) {
        const std::vector<cxd> single = random_pure(d, rng);
        const std::vector<cxd> pair = random_pure(d * d, rng);
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b)
                for (std::size_t c = 0; c < d; ++c) {
                    cxd amp;
                    switch (bipartition) {
                        case 0: amp = single[a] * pair[b * d + c]; break;
                        case 1: amp = single[b] * pair[a * d + c]; break;
                        default: amp = single[c] * pair[a * d + b]; break;
                    }
                    v[(a * d + b) * d + c] = amp;
                }
        kern::outer_accum(dim, m.data(), v.data(), w[term]);
    }
    return DensityMatrix::trusted({d, d, d}, std::move(m));
}

}  // namespace rmom
