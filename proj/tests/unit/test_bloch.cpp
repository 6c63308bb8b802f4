#include <doctest.h>

#include <cmath>

#include "rmom/bloch/bloch.hpp"
#include "rmom/error.hpp"
#include "rmom/qmat/linalg.hpp"
#include "rmom/qmat/ops.hpp"
#include "rmom/qmat/rng.hpp"
#include "rmom/statezoo/zoo.hpp"
#include "support/oracles.hpp"

using namespace rmom;

TEST_CASE("gell-mann basis invariants") {
    for (std::size_t d : {2, 3, 4, 5}) {
        const GellMannBasis& basis = GellMannBasis::get(d);
        REQUIRE(basis.size() == d * d);
        // identity first
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                CHECK(basis.mats[0](i, j) == cxd(i == j ? 1.0 : 0.0, 0.0));
        // Gram matrix = d * I, tracelessness, Hermiticity
        for (std::size_t a = 0; a < basis.size(); ++a) {
            CHECK(basis.mats[a].hermiticity_defect() < 1e-14);
            if (a > 0) CHECK(std::abs(basis.mats[a].trace()) < 1e-12);
            for (std::size_t b = a; b < basis.size(); ++b) {
                const double g = (basis.mats[a] * basis.mats[b]).trace().real();
                CHECK(std::abs(g - (a == b ? static_cast<double>(d) : 0.0)) < 1e-12);
            }
        }
    }
}

TEST_CASE("d=2 basis is the pauli set") {
    const GellMannBasis& b = GellMannBasis::get(2);
    CHECK(b.mats[1](0, 1) == cxd(1, 0));   // sigma_x
    CHECK(b.mats[2](0, 1) == cxd(0, -1));  // sigma_y
    CHECK(b.mats[3](0, 0) == cxd(1, 0));   // sigma_z
    CHECK(b.mats[3](1, 1) == cxd(-1, 0));
    for (std::size_t i = 1; i < 4; ++i)
        CHECK((b.mats[i] * b.mats[i]).trace().real() == doctest::Approx(2.0));
}

TEST_CASE("decompose on known states") {
    // Bell: alpha nonzero only at (0,0)=1, (1,1)=1, (2,2)=-1, (3,3)=1
    const BlochTensor t = decompose(bell_phi_plus(2));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const double v = t.at({i, j});
            if (i == j)
                CHECK(v == doctest::Approx(i == 2 ? -1.0 : 1.0).epsilon(1e-12));
            else
                CHECK(std::abs(v) < 1e-12);
        }

    // maximally mixed: only the leading coefficient
    const BlochTensor m = decompose(maximally_mixed({3, 3}));
    CHECK(m.alpha[0] == doctest::Approx(1.0));
    for (std::size_t i = 1; i < m.alpha.size(); ++i) CHECK(std::abs(m.alpha[i]) < 1e-12);

    // GHZ: alpha_330 = alpha_303 = alpha_033 = 1, alpha_111 = 1,
    // alpha_122 = alpha_212 = alpha_221 = -1, everything else 0
    const BlochTensor g = decompose(ghz());
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k) {
                const double v = g.at({i, j, k});
                double expect = 0.0;
                if ((i == 0 && j == 0 && k == 0) || (i == 3 && j == 3 && k == 0) ||
                    (i == 3 && j == 0 && k == 3) || (i == 0 && j == 3 && k == 3) ||
                    (i == 1 && j == 1 && k == 1))
                    expect = 1.0;
                if ((i == 1 && j == 2 && k == 2) || (i == 2 && j == 1 && k == 2) ||
                    (i == 2 && j == 2 && k == 1))
                    expect = -1.0;
                CHECK(v == doctest::Approx(expect).epsilon(1e-12));
            }

    CHECK_THROWS_AS(decompose(DensityMatrix::trusted(
                        {2, 3}, maximally_mixed({2, 3}).mat)),
                    UsageError);
}

TEST_CASE("decompose matches the dense-matrix oracle") {
    StreamRng rng(12, 0);
    const DensityMatrix rho = random_density({3, 3}, rng);
    const BlochTensor t = decompose(rho);
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 9; ++j)
            CHECK(t.at({i, j}) ==
                  doctest::Approx(oracle::naive_bloch_coefficient(rho, {i, j})).epsilon(1e-10));
}

TEST_CASE("reconstruct round-trips decompose") {
    StreamRng rng(13, 0);
    auto roundtrip = [&](const std::vector<std::size_t>& dims) {
        const DensityMatrix rho = random_density(dims, rng);
        const DensityMatrix back = reconstruct(decompose(rho));
        double m = 0.0;
        for (std::size_t i = 0; i < rho.mat.a.size(); ++i)
            m = std::max(m, std::abs(rho.mat.a[i] - back.mat.a[i]));
        CHECK(m < 1e-9);
    };
    for (int i = 0; i < 10; ++i) roundtrip({2, 2});
    for (int i = 0; i < 10; ++i) roundtrip({2, 2, 2});
    for (int i = 0; i < 10; ++i) roundtrip({3, 3});

    // only the leading coefficient -> maximally mixed
    BlochTensor flat;
    flat.parties = 2;
    flat.local_d = 2;
    flat.alpha.assign(16, 0.0);
    flat.alpha[0] = 1.0;
    const DensityMatrix mm = reconstruct(flat);
    CHECK(mm.purity() == doctest::Approx(0.25));

    // purity via the sector sum for the isotropic tensor
    const DensityMatrix iso = isotropic(0.5, 3);
    const SectorVector s = sector_lengths(iso);
    double sum = 0.0;
    for (double a : s.a) sum += a;
    CHECK(sum == doctest::Approx(9.0 * iso.purity()).epsilon(1e-11));
    CHECK(iso.purity() == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    flat.alpha[0] = 0.5;
    CHECK_THROWS_AS(reconstruct(flat), UsageError);
}

TEST_CASE("correlation matrix on known states") {
    const CorrelationMatrix bell = correlation_matrix(bell_phi_plus(2));
    CHECK(bell.at(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(bell.at(1, 1) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(bell.at(2, 2) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(bell.at(0, 1)) < 1e-12);

    std::vector<cxd> v(4, 0.0);
    v[0] = 1.0;  // |00>
    const CorrelationMatrix prod = correlation_matrix(pure_state(v, {2, 2}));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(prod.at(i, j) == doctest::Approx(i == 2 && j == 2 ? 1.0 : 0.0));

    // isotropic: all singular values equal p
    const CorrelationMatrix iso = correlation_matrix(isotropic(0.4, 3));
    ComplexMatrix m(8, 8);
    for (std::size_t i = 0; i < 64; ++i) m.a[i] = iso.t[i];
    for (double sv : singular_values(m)) CHECK(sv == doctest::Approx(0.4).epsilon(1e-10));

    CHECK_THROWS_AS(correlation_matrix(ghz()), UsageError);
}

TEST_CASE("sector lengths of the named states") {
    const SectorVector bell = sector_lengths(bell_phi_plus(2));
    CHECK(bell.a[1] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(bell.a[2] == doctest::Approx(3.0).epsilon(1e-12));

    const SectorVector g = sector_lengths(ghz());
    CHECK(g.a[1] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(g.a[2] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(g.a[3] == doctest::Approx(4.0).epsilon(1e-12));

    const SectorVector w = sector_lengths(w_state());
    CHECK(w.a[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(w.a[2] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(w.a[3] == doctest::Approx(11.0 / 3.0).epsilon(1e-12));

    // noisy GHZ-W closed form
    for (double g1 : {0.0, 0.3, 0.8})
        for (double w1 : {0.0, 0.15}) {
            if (g1 + w1 > 1.0) continue;
            const SectorVector s = sector_lengths(noisy_ghz_w(g1, w1));
            CHECK(s.a[1] == doctest::Approx(w1 * w1 / 3.0).epsilon(1e-11));
            CHECK(s.a[2] ==
                  doctest::Approx(3 * g1 * g1 + 3 * w1 * w1 - 2 * g1 * w1).epsilon(1e-11));
            CHECK(s.a[3] ==
                  doctest::Approx(4 * g1 * g1 + 11.0 * w1 * w1 / 3.0).epsilon(1e-11));
        }

    // pure product two-qudit: A1A = A1B = d-1, A2 = (d-1)^2
    StreamRng rng(14, 0);
    for (std::size_t d : {2, 3, 4}) {
        const DensityMatrix rho = random_fully_separable({d, d}, 1, rng);
        const SectorVector s = sector_lengths(rho);
        CHECK(s.one_body[0] == doctest::Approx(d - 1.0).epsilon(1e-10));
        CHECK(s.one_body[1] == doctest::Approx(d - 1.0).epsilon(1e-10));
        CHECK(s.a[2] == doctest::Approx((d - 1.0) * (d - 1.0)).epsilon(1e-10));
    }
}

TEST_CASE("fast three-qubit sector path equals the general one") {
    StreamRng rng(15, 0);
    for (int i = 0; i < 20; ++i) {
        const DensityMatrix rho = random_density({2, 2, 2}, rng);
        const SectorVector fast = three_qubit_sectors(rho.mat);
        // general path via decompose on a relabeled copy
        const BlochTensor t = decompose(rho);
        double a[4] = {0, 0, 0, 0};
        for (std::size_t f = 0; f < 64; ++f) {
            const std::size_t w = (f / 16 != 0) + (f / 4 % 4 != 0) + (f % 4 != 0);
            a[w] += t.alpha[f] * t.alpha[f];
        }
        for (int k = 0; k < 4; ++k) CHECK(fast.a[k] == doctest::Approx(a[k]).epsilon(1e-12));
    }
}

TEST_CASE("purity relation on random states") {
    StreamRng rng(16, 0);
    auto run = [&](const std::vector<std::size_t>& dims, double dn) {
        for (int i = 0; i < 100; ++i) {
            const DensityMatrix rho = random_density(dims, rng);
            const SectorVector s = sector_lengths(rho);
            double sum = 0.0;
            for (double a : s.a) sum += a;
            CHECK(std::abs(sum - dn * rho.purity()) < 1e-9);
        }
    };
    run({2, 2}, 4.0);
    run({2, 2, 2}, 8.0);
    run({3, 3}, 9.0);
    run({4, 4}, 16.0);
}

TEST_CASE("local unitary invariance of sector lengths and singular values") {
    StreamRng rng(17, 0);
    for (int i = 0; i < 100; ++i) {
        const DensityMatrix rho = random_density({2, 2, 2}, rng);
        const SectorVector before = sector_lengths(rho);
        const ComplexMatrix u = kron(kron(haar_unitary(2, 55, 3 * i).mat,
                                          haar_unitary(2, 55, 3 * i + 1).mat),
                                     haar_unitary(2, 55, 3 * i + 2).mat);
        const DensityMatrix rotated =
            DensityMatrix::trusted({2, 2, 2}, u * rho.mat * u.adjoint());
        const SectorVector after = sector_lengths(rotated);
        for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(before.a[k] - after.a[k]) < 1e-8);
    }
    for (int i = 0; i < 20; ++i) {
        const DensityMatrix rho = random_density({3, 3}, rng);
        const ComplexMatrix u =
            kron(haar_unitary(3, 56, 2 * i).mat, haar_unitary(3, 56, 2 * i + 1).mat);
        const DensityMatrix rotated = DensityMatrix::trusted({3, 3}, u * rho.mat * u.adjoint());
        auto sv = [&](const DensityMatrix& r) {
            const CorrelationMatrix t = correlation_matrix(r);
            ComplexMatrix m(8, 8);
            for (std::size_t k = 0; k < 64; ++k) m.a[k] = t.t[k];
            return singular_values(m);
        };
        const auto s1 = sv(rho), s2 = sv(rotated);
        for (std::size_t k = 0; k < 8; ++k) CHECK(std::abs(s1[k] - s2[k]) < 1e-8);
    }
}

TEST_CASE("qubit second moments") {
    CHECK(qubit_second_moments(ghz(), {0, 1, 2}) == doctest::Approx(4.0 / 27.0).epsilon(1e-12));
    CHECK(qubit_second_moments(ghz(), {0}) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(qubit_second_moments(bell_phi_plus(2), {0, 1}) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK_THROWS_AS(qubit_second_moments(isotropic(0.5, 3), {0}), UsageError);
    CHECK_THROWS_AS(qubit_second_moments(ghz(), {}), UsageError);

    // aggregation: 9 * sum over pairs = A2
    StreamRng rng(18, 0);
    for (int i = 0; i < 20; ++i) {
        const DensityMatrix rho = random_density({2, 2, 2}, rng);
        const double pairs = qubit_second_moments(rho, {0, 1}) +
                             qubit_second_moments(rho, {0, 2}) +
                             qubit_second_moments(rho, {1, 2});
        CHECK(std::abs(9.0 * pairs - sector_lengths(rho).a[2]) < 1e-9);
    }
}
