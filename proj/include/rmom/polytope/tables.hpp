#pragma once

#include <functional>
#include <utility>

namespace rmom {

// Bisection on a sign change of `margin` (lhs - bound along a
// one-parameter family) to parameter tolerance 1e-10. Requires
// margin(lo) * margin(hi) <= 0.
double bisect_sign_change(const std::function<double(double)>& margin, double lo,
                          double hi, double tol = 1e-10);

// Detection thresholds of the noisy GHZ/W families, recovered by bisection
// on the mixing parameter against the actual constructed states.
double threshold_noisy_ghz_full_sep();         // 1/sqrt(5)
double threshold_noisy_w_full_sep();           // 3/sqrt(41)
double threshold_noisy_ghz_full_sep_legacy();  // 1/2
double threshold_noisy_w_full_sep_legacy();    // sqrt(3/11)
double threshold_noisy_ghz_bisep();            // sqrt(3/7)
double threshold_noisy_w_bisep();              // 3/sqrt(17)

// Non-violation windows in g on the GHZ-W line (w = 1-g).
std::pair<double, double> window_ghz_w_bisep();         // ~[0.297, 0.612]
std::pair<double, double> window_ghz_w_bisep_legacy();  // ~[0.102, 0.855]

}  // namespace rmom
