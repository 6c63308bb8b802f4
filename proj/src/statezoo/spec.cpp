#include "rmom/statezoo/spec.hpp"

#include <cmath>

#include <json.hpp>

#include "rmom/error.hpp"
#include "rmom/polytope/polytope.hpp"
#include "rmom/statezoo/zoo.hpp"

namespace rmom {

namespace {

double param(const StateSpec& s, const std::string& key, double fallback) {
    auto it = s.params.find(key);
    return it == s.params.end() ? fallback : it->second;
}

double require_param(const StateSpec& s, const std::string& key) {
    auto it = s.params.find(key);
    if (it == s.params.end())
        throw UsageError("state '" + s.name + "' requires parameter '" + key + "'");
    return it->second;
}

std::size_t dim_param(const StateSpec& s, double fallback) {
    const double d = param(s, "d", fallback);
    if (d < 2.0 || d != std::floor(d)) throw UsageError("parameter d must be an integer >= 2");
    return static_cast<std::size_t>(d);
}

}  // namespace

DensityMatrix resolve_state(const StateSpec& spec) {
    const std::string& n = spec.name;
    if (n == "bell" || n == "max_entangled") return bell_phi_plus(dim_param(spec, 2));
    if (n == "ghz") return ghz();
    if (n == "w" || n == "w_state") return w_state();
    if (n == "maximally_mixed") {
        const std::size_t d = dim_param(spec, 2);
        const double parties = param(spec, "n", 2);
        if (parties < 1 || parties != std::floor(parties))
            throw UsageError("maximally_mixed: parameter n must be a positive integer");
        return maximally_mixed(std::vector<std::size_t>(static_cast<std::size_t>(parties), d));
    }
    if (n == "noisy_ghz_w") return noisy_ghz_w(param(spec, "g", 0.0), param(spec, "w", 0.0));
    if (n == "isotropic") return isotropic(require_param(spec, "p"), dim_param(spec, 2));
    if (n == "cross_hatch") return cross_hatch();
    if (n == "chessboard")
        return chessboard(param(spec, "a", 3.0 / 5.0), param(spec, "b", -3.0 / 5.0),
                          param(spec, "c", 6.0 / 5.0), param(spec, "d", -6.0 / 5.0),
                          param(spec, "m", -3.0 / 5.0), param(spec, "n", -3.0 / 5.0));
    if (n == "upb_tiles" || n == "tiles") return upb_tiles();
    if (n == "horodecki") return horodecki_3x3(require_param(spec, "p"));
    if (n == "piani") return piani_4x4();
    if (n == "sep_family")
        return sep_family(require_param(spec, "p"), require_param(spec, "theta"),
                          dim_param(spec, 3), param(spec, "swap", 0.0) != 0.0);
    if (n == "bisep_family")
        return bisep_family(require_param(spec, "p"), require_param(spec, "a"),
                            param(spec, "sign", 1.0) >= 0.0 ? +1 : -1);
    throw UsageError("unknown state name '" + n + "'");
}

DensityMatrix load_state_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError(std::string("state file is not valid JSON: ") + e.what());
    }

    if (j.contains("name")) {
        StateSpec spec;
        spec.name = j.at("name").get<std::string>();
        if (j.contains("params"))
            for (auto it = j["params"].begin(); it != j["params"].end(); ++it)
                spec.params[it.key()] = it.value().get<double>();
        return resolve_state(spec);
    }

    if (!j.contains("dims") || !j.contains("re"))
        throw UsageError("state file must contain either 'name' or 'dims'+'re'");
    std::vector<std::size_t> dims = j.at("dims").get<std::vector<std::size_t>>();
    std::vector<double> re = j.at("re").get<std::vector<double>>();
    std::vector<double> im(re.size(), 0.0);
    if (j.contains("im")) im = j.at("im").get<std::vector<double>>();
    if (im.size() != re.size()) throw UsageError("state file: 're' and 'im' sizes differ");

    std::size_t prod = 1;
    for (std::size_t d : dims) prod *= d;
    if (re.size() != prod * prod)
        throw UsageError("state file: matrix size does not match dims");
    ComplexMatrix m(prod, prod);
    for (std::size_t i = 0; i < re.size(); ++i) m.a[i] = cxd(re[i], im[i]);
    return DensityMatrix::checked(std::move(dims), std::move(m));
}

}  // namespace rmom
