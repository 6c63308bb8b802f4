#include "rmom/bloch/gellmann.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "rmom/error.hpp"

namespace rmom {

namespace {

GellMannBasis build(std::size_t d) {
    if (d < 2) throw UsageError("gellmann_basis: dimension must be >= 2");
    GellMannBasis basis;
    basis.d = d;
    const double sc = std::sqrt(static_cast<double>(d) / 2.0);

    auto push = [&](ComplexMatrix m) {
        std::vector<SparseEntry> entries;
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c)
                if (m(r, c) != 0.0) entries.push_back({r, c, m(r, c)});
        basis.mats.push_back(std::move(m));
        basis.sparse.push_back(std::move(entries));
    };

    push(ComplexMatrix::identity(d));

    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = j + 1; k < d; ++k) {
            ComplexMatrix m(d, d);
            m(j, k) = sc;
            m(k, j) = sc;
            push(std::move(m));
        }
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = j + 1; k < d; ++k) {
            ComplexMatrix m(d, d);
            m(j, k) = cxd(0.0, -sc);
            m(k, j) = cxd(0.0, sc);
            push(std::move(m));
        }
    for (std::size_t l = 1; l < d; ++l) {
        ComplexMatrix m(d, d);
        const double f = sc * std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
        for (std::size_t j = 0; j < l; ++j) m(j, j) = f;
        m(l, l) = -f * static_cast<double>(l);
        push(std::move(m));
    }
    return basis;
}

}  // namespace

const GellMannBasis& GellMannBasis::get(std::size_t d) {
    static std::mutex mu;
    static std::map<std::size_t, std::unique_ptr<const GellMannBasis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it == cache.end())
        it = cache.emplace(d, std::make_unique<const GellMannBasis>(build(d))).first;
    return *it->second;
}

}  // namespace rmom
