#include "rmom/detect/detect.hpp"

#include <cmath>

#include "rmom/error.hpp"
#include "rmom/polytope/polytope.hpp"
#include "rmom/qmat/linalg.hpp"
#include "rmom/qmat/ops.hpp"

namespace rmom {

double ppt_test(const DensityMatrix& rho) {
    if (rho.parties() != 2) throw UsageError("ppt_test: bipartite state required");
    return min_eigenvalue(partial_transpose(rho, 1));
}

double ccnr_test(const DensityMatrix& rho) {
    if (rho.parties() != 2 || !rho.homogeneous())
        throw UsageError("ccnr_test: bipartite state with equal dimensions required");
    const std::size_t d = rho.local_dim();
    ComplexMatrix r(d * d, d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t ap = 0; ap < d; ++ap)
            for (std::size_t b = 0; b < d; ++b)
                for (std::size_t bp = 0; bp < d; ++bp)
                    r(a * d + ap, b * d + bp) = rho.mat(a * d + b, ap * d + bp);
    return trace_norm(r);
}

double dv_test(const DensityMatrix& rho) {
    if (rho.parties() != 2 || !rho.homogeneous())
        throw UsageError("dv_test: bipartite state with equal dimensions required");
    const CorrelationMatrix t = correlation_matrix(rho);
    const std::size_t n = t.n();
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n * n; ++i) m.a[i] = t.t[i];
    return trace_norm(m);
}

double purity_test(const DensityMatrix& rho) {
    if (rho.parties() != 2) throw UsageError("purity_test: bipartite state required");
    const double pa = partial_trace(rho, {0}).purity();
    const double pb = partial_trace(rho, {1}).purity();
    return rho.purity() - std::min(pa, pb);
}

bool inside_separable_region(const MomentPair& p) {
    if (p.s2 > 1.0 + kRegionTol) return false;
    const auto [lo, hi] = sep_region(std::min(p.s2, 1.0), p.d);
    return p.s4 >= lo - kRegionTol && p.s4 <= hi + kRegionTol;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::separable_consistent: return "separable-consistent";
        case Verdict::entangled: return "entangled";
        default: return "bound-entangled-candidate";
    }
}

bool DetectionReport::overall_flagged() const {
    for (const auto& [name, v] : verdicts)
        if (name == "overall") return v != Verdict::separable_consistent;
    return false;
}

DetectionReport moment_witness(const DensityMatrix& rho, const std::string& label) {
    if (rho.parties() != 2 || !rho.homogeneous())
        throw UsageError("moment_witness: bipartite state with equal dimensions required");

    DetectionReport rep;
    rep.state_label = label;
    rep.d = rho.local_dim();
    rep.ppt_min_eig = ppt_test(rho);
    rep.ccnr_norm = ccnr_test(rho);
    rep.dv_norm = dv_test(rho);
    rep.purity_gap = purity_test(rho);
    rep.moments = s_moments(correlation_matrix(rho));

    const bool ppt_ok = rep.ppt_min_eig >= -kStateTol;
    const double dd = static_cast<double>(rep.d);
    const bool viol_ccnr = rep.ccnr_norm > 1.0 + kCriterionTol;
    const bool viol_dv = rep.dv_norm > dd - 1.0 + kCriterionTol;
    const bool viol_purity = rep.purity_gap > kCriterionTol;
    const bool viol_region = !inside_separable_region(rep.moments);

    auto classify = [&](bool violated) {
        if (!violated) return Verdict::separable_consistent;
        return ppt_ok ? Verdict::bound_entangled_candidate : Verdict::entangled;
    };
    rep.verdicts.emplace_back("ppt", ppt_ok ? Verdict::separable_consistent
                                            : Verdict::entangled);
    rep.verdicts.emplace_back("ccnr", classify(viol_ccnr));
    rep.verdicts.emplace_back("dv", classify(viol_dv));
    rep.verdicts.emplace_back("purity", classify(viol_purity));
    rep.verdicts.emplace_back("moment_region", classify(viol_region));

    Verdict overall = Verdict::separable_consistent;
    if (!ppt_ok) overall = Verdict::entangled;
    else if (viol_ccnr || viol_dv || viol_purity || viol_region)
        overall = Verdict::bound_entangled_candidate;
    rep.verdicts.emplace_back("overall", overall);
    return rep;
}

}  // namespace rmom
