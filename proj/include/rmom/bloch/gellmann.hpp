#pragma once

#include <cstddef>
#include <vector>

#include "rmom/qmat/matrix.hpp"

namespace rmom {

struct SparseEntry {
    std::size_t r;
    std::size_t c;
    cxd v;
};

// Generalized Gell-Mann basis normalized to tr[l_i l_j] = d delta_ij.
// Element 0 is the identity; the traceless part is ordered as symmetric
// off-diagonal (lexicographic), antisymmetric off-diagonal (lexicographic),
// then diagonal (increasing rank), so serialized coefficient tensors are
// comparable across runs.
struct GellMannBasis {
    std::size_t d = 0;
    std::vector<ComplexMatrix> mats;
    std::vector<std::vector<SparseEntry>> sparse;

    std::size_t size() const { return mats.size(); }  // d^2

    // Cached immutable instance, shareable across threads.
    static const GellMannBasis& get(std::size_t d);
};

}  // namespace rmom
