#include <doctest.h>

#include <cmath>

#include "rmom/detect/detect.hpp"
#include "rmom/error.hpp"
#include "rmom/polytope/polytope.hpp"
#include "rmom/qmat/rng.hpp"
#include "rmom/statezoo/zoo.hpp"
#include "support/oracles.hpp"

using namespace rmom;

TEST_CASE("ppt detector") {
    CHECK(ppt_test(bell_phi_plus(2)) == doctest::Approx(-0.5).epsilon(1e-10));
    CHECK(ppt_test(chessboard(3.0 / 5, -3.0 / 5, 6.0 / 5, -6.0 / 5, -3.0 / 5, -3.0 / 5)) >=
          -1e-9);
    for (double p : {2.0, 3.0, 4.0}) CHECK(ppt_test(horodecki_3x3(p)) >= -1e-9);
    for (double p : {4.3, 5.0}) CHECK(ppt_test(horodecki_3x3(p)) < -1e-9);
    CHECK_THROWS_AS(ppt_test(ghz()), UsageError);
}

TEST_CASE("ccnr detector") {
    StreamRng rng(51, 0);
    for (std::size_t d : {2, 3}) {
        const DensityMatrix prod = random_fully_separable({d, d}, 1, rng);
        CHECK(ccnr_test(prod) == doctest::Approx(1.0).epsilon(1e-9));
    }
    CHECK(ccnr_test(bell_phi_plus(2)) == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(ccnr_test(cross_hatch()) > 1.0 + 1e-6);
}

TEST_CASE("dv detector") {
    StreamRng rng(52, 0);
    for (std::size_t d : {2, 3, 4}) {
        const DensityMatrix prod = random_fully_separable({d, d}, 1, rng);
        CHECK(dv_test(prod) == doctest::Approx(d - 1.0).epsilon(1e-9));
        CHECK(dv_test(bell_phi_plus(d)) ==
              doctest::Approx(static_cast<double>(d * d - 1)).epsilon(1e-9));
        // isotropic: p (d^2-1); violation iff p > 1/(d+1)
        const double pc = 1.0 / (d + 1.0);
        CHECK(dv_test(isotropic(0.3, d)) ==
              doctest::Approx(0.3 * (d * d - 1)).epsilon(1e-9));
        CHECK(dv_test(isotropic(pc + 0.01, d)) > d - 1.0 + 1e-9);
        CHECK(dv_test(isotropic(pc - 0.01, d)) < d - 1.0);
    }
}

TEST_CASE("purity detector") {
    CHECK(purity_test(bell_phi_plus(2)) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(purity_test(sep_family(0.6, 0.9, 3)) == doctest::Approx(0.0).epsilon(1e-10));
    // PPT states are never caught by the entropic comparison
    CHECK(purity_test(cross_hatch()) <= 1e-9);
    CHECK(purity_test(upb_tiles()) <= 1e-9);
    CHECK(purity_test(horodecki_3x3(3.9)) <= 1e-9);
    CHECK(purity_test(piani_4x4()) <= 1e-9);
}

TEST_CASE("separable region boundaries") {
    for (std::size_t d : {3, 4}) {
        const auto [lo1, hi1] = sep_region(1.0, d);
        CHECK(lo1 == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(hi1 == doctest::Approx(1.0).epsilon(1e-12));
        for (double s2 : {0.05, 0.3, 0.7, 0.95}) {
            const auto [lo, hi] = sep_region(s2, d);
            CHECK(hi == doctest::Approx(s2 * s2).epsilon(1e-12));
            CHECK(lo <= hi + 1e-15);
            CHECK(general_region_min(s2, d) <= lo + 1e-12);
        }
        // flat branch below s2 = 1/(d^2-1)
        const double n = static_cast<double>(d * d - 1);
        const double s2_small = 0.8 / n;
        const auto [lo_s, hi_s] = sep_region(s2_small, d);
        CHECK(lo_s == doctest::Approx(s2_small * s2_small * (n + 2.0) / (3.0 * n)).epsilon(1e-12));
        CHECK(hi_s == doctest::Approx(s2_small * s2_small).epsilon(1e-12));
    }
    CHECK_THROWS_AS(sep_region(1.2, 3), UsageError);
    CHECK_THROWS_AS(sep_region(-0.1, 3), UsageError);
}

TEST_CASE("separable lower bound matches the projected search oracle") {
    for (std::size_t d : {3, 4}) {
        const double v = moment_v(d);
        const double w = moment_w(d);
        for (int i = 1; i <= 10; ++i) {
            const double s2 = i / 10.0;
            const double c2 = s2 / v;
            const double quad =
                oracle::min_sum_quad_search(c2, d - 1.0, d * d - 1, 40, 900 + i);
            const double s4_oracle = w * (2.0 * quad + c2 * c2);
            const auto [lo, hi] = sep_region(s2, d);
            CHECK(std::abs(lo - s4_oracle) < 1e-6);
        }
    }
}

TEST_CASE("general lower bound is tight on isotropic states") {
    for (std::size_t d : {3, 4})
        for (double p : {0.2, 0.5, 0.9}) {
            const MomentPair m = s_moments(correlation_matrix(isotropic(p, d)));
            CHECK(std::abs(general_region_min(m.s2, d) - m.s4) < 1e-9);
        }
    CHECK(general_region_min(0.0, 3) == 0.0);
    CHECK(general_region_min(1.0, 3) == doctest::Approx(5.0 / 12.0));
    CHECK(general_region_min(1.0, 3) < sep_region(1.0, 3).first);
}

TEST_CASE("moment witness on reference states") {
    const DetectionReport mm = moment_witness(maximally_mixed({3, 3}), "mm");
    CHECK_FALSE(mm.overall_flagged());
    CHECK(inside_separable_region(mm.moments));

    const DetectionReport ch = moment_witness(cross_hatch(), "cross_hatch");
    CHECK_FALSE(inside_separable_region(ch.moments));
    CHECK(ch.ppt_min_eig >= -1e-9);
    bool found = false;
    for (const auto& [name, v] : ch.verdicts)
        if (name == "overall") {
            CHECK(v == Verdict::bound_entangled_candidate);
            found = true;
        }
    CHECK(found);

    const DetectionReport piani = moment_witness(piani_4x4(), "piani");
    CHECK_FALSE(inside_separable_region(piani.moments));
    CHECK(piani.ppt_min_eig >= -1e-9);

    const DetectionReport bell = moment_witness(bell_phi_plus(2), "bell");
    CHECK_FALSE(inside_separable_region(bell.moments));
    for (const auto& [name, v] : bell.verdicts)
        if (name == "overall") CHECK(v == Verdict::entangled);
}

TEST_CASE("dv bound implies region membership") {
    StreamRng rng(53, 0);
    std::size_t checked = 0;
    for (int i = 0; i < 400; ++i) {
        const DensityMatrix rho = random_density({3, 3}, rng);
        if (dv_test(rho) <= 2.0) {
            const MomentPair m = s_moments(correlation_matrix(rho));
            CHECK(inside_separable_region(m));
            ++checked;
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("soundness sweep (reduced)") {
    StreamRng rng(54, 0);
    for (std::size_t d : {2, 3, 4})
        for (int i = 0; i < 500; ++i) {
            const DensityMatrix rho = random_fully_separable({d, d}, 8, rng);
            const DetectionReport rep = moment_witness(rho, "sep");
            CHECK_FALSE(rep.overall_flagged());
        }
}

TEST_CASE("region curve object") {
    const RegionCurve c = region_curve(3, {0.0, 0.25, 0.5, 0.75, 1.0});
    REQUIRE(c.s2_grid.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(c.sep_min[i] <= c.sep_max[i] + 1e-15);
        CHECK(c.gen_min[i] <= c.sep_min[i] + 1e-12);
    }
    CHECK(c.sep_min.back() == doctest::Approx(1.0));
    CHECK_FALSE(c.has_ppt);
}
