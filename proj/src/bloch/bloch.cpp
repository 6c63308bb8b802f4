#include "rmom/bloch/bloch.hpp"

#include <array>
#include <cmath>

#include "rmom/error.hpp"
#include "rmom/qmat/ops.hpp"

namespace rmom {

namespace {

constexpr double kImagTol = 1e-9;

// Depth-first walk over all basis tuples and their sparse entries.
// At a leaf the accumulated entry is L(R, C) = v for the tuple `flat`, which
// contributes v * rho(C, R) to tr(rho L).
void decompose_walk(const GellMannBasis& basis, const ComplexMatrix& rho,
                    std::size_t parties, std::size_t party, std::size_t flat,
                    std::size_t r, std::size_t c, cxd v, std::vector<cxd>& out) {
    if (party == parties) {
        out[flat] += v * rho(c, r);
        return;
    }
    const std::size_t d = basis.d;
    const std::size_t b = basis.size();
    for (std::size_t i = 0; i < b; ++i)
        for (const SparseEntry& e : basis.sparse[i])
            decompose_walk(basis, rho, parties, party + 1, flat * b + i, r * d + e.r,
                           c * d + e.c, v * e.v, out);
}

void reconstruct_walk(const GellMannBasis& basis, const std::vector<double>& alpha,
                      std::size_t parties, std::size_t party, std::size_t flat,
                      std::size_t r, std::size_t c, cxd v, ComplexMatrix& out) {
    if (party == parties) {
        out(r, c) += alpha[flat] * v;
        return;
    }
    const std::size_t d = basis.d;
    const std::size_t b = basis.size();
    for (std::size_t i = 0; i < b; ++i)
        for (const SparseEntry& e : basis.sparse[i])
            reconstruct_walk(basis, alpha, parties, party + 1, flat * b + i, r * d + e.r,
                             c * d + e.c, v * e.v, out);
}

std::size_t ipow(std::size_t base, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= base;
    return r;
}

// Per-column single-entry form of the Pauli strings on three qubits:
// alpha = sum_c v(c) * rho(c, m(c)).
struct PauliStringTable {
    std::array<std::array<std::uint8_t, 8>, 64> m;
    std::array<std::array<double, 8>, 64> vr;
    std::array<std::array<double, 8>, 64> vi;

    PauliStringTable() {
        const GellMannBasis& pauli = GellMannBasis::get(2);
        // column -> (row, value) for each basis element
        std::uint8_t row[4][2];
        cxd val[4][2];
        for (std::size_t p = 0; p < 4; ++p)
            for (const SparseEntry& e : pauli.sparse[p]) {
                row[p][e.c] = static_cast<std::uint8_t>(e.r);
                val[p][e.c] = e.v;
            }
        for (std::size_t s = 0; s < 64; ++s) {
            const std::size_t p0 = s >> 4, p1 = (s >> 2) & 3, p2 = s & 3;
            for (std::size_t c = 0; c < 8; ++c) {
                const std::size_t c0 = (c >> 2) & 1, c1 = (c >> 1) & 1, c2 = c & 1;
                m[s][c] = static_cast<std::uint8_t>(4 * row[p0][c0] + 2 * row[p1][c1] +
                                                    row[p2][c2]);
                const cxd v = val[p0][c0] * val[p1][c1] * val[p2][c2];
                vr[s][c] = v.real();
                vi[s][c] = v.imag();
            }
        }
    }
};

}  // namespace

double BlochTensor::at(const std::vector<std::size_t>& idx) const {
    if (idx.size() != parties) throw UsageError("bloch tensor: wrong index arity");
    std::size_t flat = 0;
    for (std::size_t i : idx) {
        if (i >= basis_size()) throw UsageError("bloch tensor: index out of range");
        flat = flat * basis_size() + i;
    }
    return alpha[flat];
}

BlochTensor decompose(const DensityMatrix& rho) {
    if (!rho.homogeneous())
        throw UsageError("decompose: subsystems must share one local dimension");
    const std::size_t d = rho.local_dim();
    const std::size_t n = rho.parties();
    const GellMannBasis& basis = GellMannBasis::get(d);
    std::vector<cxd> acc(ipow(basis.size(), n), 0.0);
    decompose_walk(basis, rho.mat, n, 0, 0, 0, 0, cxd(1.0, 0.0), acc);

    BlochTensor t;
    t.parties = n;
    t.local_d = d;
    t.alpha.resize(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) {
        if (std::abs(acc[i].imag()) > kImagTol)
            throw NumericalError("decompose: non-real Bloch coefficient");
        t.alpha[i] = acc[i].real();
    }
    return t;
}

DensityMatrix reconstruct(const BlochTensor& t) {
    if (t.alpha.empty() || std::abs(t.alpha[0] - 1.0) > kImagTol)
        throw UsageError("reconstruct: leading coefficient must be 1");
    const GellMannBasis& basis = GellMannBasis::get(t.local_d);
    const std::size_t dim = ipow(t.local_d, t.parties);
    ComplexMatrix mat(dim, dim);
    reconstruct_walk(basis, t.alpha, t.parties, 0, 0, 0, 0, cxd(1.0, 0.0), mat);
    const double scale = 1.0 / static_cast<double>(ipow(t.local_d, t.parties));
    mat *= scale;
    return DensityMatrix::checked(std::vector<std::size_t>(t.parties, t.local_d),
                                  std::move(mat));
}

CorrelationMatrix correlation_matrix(const DensityMatrix& rho) {
    if (rho.parties() != 2) throw UsageError("correlation_matrix: exactly two parties required");
    if (!rho.homogeneous()) throw UsageError("correlation_matrix: equal dimensions required");
    const std::size_t d = rho.local_dim();
    const GellMannBasis& basis = GellMannBasis::get(d);
    const std::size_t nb = basis.size() - 1;

    CorrelationMatrix t;
    t.d = d;
    t.t.assign(nb * nb, 0.0);
    for (std::size_t i = 1; i <= nb; ++i)
        for (std::size_t j = 1; j <= nb; ++j) {
            cxd acc = 0.0;
            for (const SparseEntry& e1 : basis.sparse[i])
                for (const SparseEntry& e2 : basis.sparse[j])
                    acc += e1.v * e2.v * rho.mat(e1.c * d + e2.c, e1.r * d + e2.r);
            if (std::abs(acc.imag()) > kImagTol)
                throw NumericalError("correlation_matrix: non-real coefficient");
            t.t[(i - 1) * nb + (j - 1)] = acc.real();
        }
    return t;
}

SectorVector sector_lengths(const DensityMatrix& rho) {
    if (!rho.homogeneous())
        throw UsageError("sector_lengths: subsystems must share one local dimension");
    const std::size_t n = rho.parties();
    const std::size_t d = rho.local_dim();
    if (n == 3 && d == 2) return three_qubit_sectors(rho.mat);

    const BlochTensor t = decompose(rho);
    const std::size_t b = t.basis_size();

    SectorVector s;
    s.parties = n;
    s.d = d;
    s.a.assign(n + 1, 0.0);
    s.one_body.assign(n, 0.0);
    std::vector<std::size_t> digits(n);
    for (std::size_t flat = 0; flat < t.alpha.size(); ++flat) {
        std::size_t rem = flat;
        std::size_t weight = 0;
        std::size_t last_party = 0;
        for (std::size_t k = n; k-- > 0;) {
            digits[k] = rem % b;
            rem /= b;
            if (digits[k] != 0) {
                ++weight;
                last_party = k;
            }
        }
        const double sq = t.alpha[flat] * t.alpha[flat];
        s.a[weight] += sq;
        if (weight == 1) s.one_body[last_party] += sq;
    }
    return s;
}

SectorVector three_qubit_sectors(const ComplexMatrix& rho) {
    static const PauliStringTable table;
    const double* m = reinterpret_cast<const double*>(rho.data());

    SectorVector s;
    s.parties = 3;
    s.d = 2;
    s.a.assign(4, 0.0);
    s.one_body.assign(3, 0.0);
    for (std::size_t str = 0; str < 64; ++str) {
        double alpha = 0.0;
        for (std::size_t c = 0; c < 8; ++c) {
            const std::size_t idx = 2 * (c * 8 + table.m[str][c]);
            alpha += table.vr[str][c] * m[idx] - table.vi[str][c] * m[idx + 1];
        }
        const std::size_t p0 = str >> 4, p1 = (str >> 2) & 3, p2 = str & 3;
        const std::size_t weight = (p0 != 0) + (p1 != 0) + (p2 != 0);
        const double sq = alpha * alpha;
        s.a[weight] += sq;
        if (weight == 1) s.one_body[p0 != 0 ? 0 : (p1 != 0 ? 1 : 2)] += sq;
    }
    return s;
}

double qubit_second_moments(const DensityMatrix& rho, const std::vector<std::size_t>& subset) {
    for (std::size_t d : rho.dims)
        if (d != 2) throw UsageError("qubit_second_moments: qubits only");
    if (subset.empty()) throw UsageError("qubit_second_moments: empty subset");

    // Coefficients supported exactly on the subset equal those of the
    // reduced state with every index nonzero.
    const DensityMatrix reduced = partial_trace(rho, subset);
    const BlochTensor t = decompose(reduced);
    const std::size_t n = reduced.parties();
    double acc = 0.0;
    for (std::size_t flat = 0; flat < t.alpha.size(); ++flat) {
        std::size_t rem = flat;
        bool all_nonzero = true;
        for (std::size_t k = n; k-- > 0;) {
            if (rem % 4 == 0) all_nonzero = false;
            rem /= 4;
        }
        if (all_nonzero) acc += t.alpha[flat] * t.alpha[flat];
    }
    return acc / std::pow(3.0, static_cast<double>(subset.size()));
}

}  // namespace rmom
