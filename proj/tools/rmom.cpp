// rmom: entanglement analysis from randomized-measurement moments.
// Subcommands: analyze, region, mc, sector, conjecture, figure.
// Exit codes: 0 success, 1 usage, 2 numerical failure, 3 conjecture violation.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rmom/detect/detect.hpp"
#include "rmom/error.hpp"
#include "rmom/moments/moments.hpp"
#include "rmom/optsearch/optsearch.hpp"
#include "rmom/polytope/polytope.hpp"
#include "rmom/polytope/tables.hpp"
#include "rmom/statezoo/spec.hpp"
#include "rmom/statezoo/zoo.hpp"

using nlohmann::json;
using namespace rmom;

namespace {

std::string fmt15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

struct GridSpec {
    double lo = 0.0;
    double hi = 1.0;
    std::size_t steps = 101;

    std::vector<double> points() const {
        std::vector<double> p;
        if (steps == 1) {
            p.push_back(lo);
            return p;
        }
        for (std::size_t i = 0; i < steps; ++i)
            p.push_back(lo + (hi - lo) * static_cast<double>(i) /
                                 static_cast<double>(steps - 1));
        return p;
    }
};

GridSpec parse_grid(const std::string& text) {
    GridSpec g;
    double steps = 0.0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &g.lo, &g.hi, &steps) != 3 ||
        steps < 1.0 || steps != std::floor(steps) || g.hi < g.lo)
        throw UsageError("bad grid spec '" + text + "' (expected A:B:STEPS)");
    g.steps = static_cast<std::size_t>(steps);
    return g;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw UsageError("cannot open output file '" + out_path + "'");
    f << content;
}

// Shared state-selection flags.
struct StateArgs {
    std::string name;
    std::string file;
    std::optional<double> d, g, w, p;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--state", name, "named state from the zoo");
        cmd->add_option("--file", file, "JSON state file (named or raw matrix)");
        cmd->add_option("--d", d, "local dimension parameter");
        cmd->add_option("--g", g, "GHZ weight");
        cmd->add_option("--w", w, "W weight");
        cmd->add_option("--p", p, "family parameter p");
    }

    json config() const {
        json c;
        if (!name.empty()) c["state"] = name;
        if (!file.empty()) c["file"] = file;
        if (d) c["d"] = *d;
        if (g) c["g"] = *g;
        if (w) c["w"] = *w;
        if (p) c["p"] = *p;
        return c;
    }

    DensityMatrix resolve() const {
        if (!name.empty() && !file.empty())
            throw UsageError("--state and --file are mutually exclusive");
        if (!file.empty()) {
            std::ifstream f(file);
            if (!f) throw UsageError("cannot open state file '" + file + "'");
            std::stringstream ss;
            ss << f.rdbuf();
            return load_state_json(ss.str());
        }
        if (name.empty()) throw UsageError("no state given (use --state or --file)");
        StateSpec spec;
        spec.name = name;
        if (d) spec.params["d"] = *d;
        if (g) spec.params["g"] = *g;
        if (w) spec.params["w"] = *w;
        if (p) spec.params["p"] = *p;
        return resolve_state(spec);
    }

    std::string label() const { return name.empty() ? file : name; }
};

json report_json(const DetectionReport& rep) {
    json r;
    r["state_label"] = rep.state_label;
    r["d"] = rep.d;
    r["ppt_min_eig"] = rep.ppt_min_eig;
    r["ccnr_norm"] = rep.ccnr_norm;
    r["dv_norm"] = rep.dv_norm;
    r["purity_gap"] = rep.purity_gap;
    r["moments"] = {{"s2", rep.moments.s2}, {"s4", rep.moments.s4}, {"source", "analytic"}};
    json v;
    for (const auto& [k, verdict] : rep.verdicts) v[k] = verdict_name(verdict);
    r["verdicts"] = v;
    return r;
}

int cmd_analyze(const StateArgs& state, const std::string& out) {
    const DensityMatrix rho = state.resolve();
    const DetectionReport rep = moment_witness(rho, state.label());
    json doc;
    doc["config"] = state.config();
    doc["config"]["command"] = "analyze";
    doc["report"] = report_json(rep);
    emit(out, doc.dump(2) + "\n");
    return 0;
}

int cmd_region(std::size_t d, const std::string& grid_text, bool with_ppt,
               std::size_t restarts, std::uint64_t seed, const std::string& out) {
    if (d != 3 && d != 4) throw UsageError("region: --d must be 3 or 4");
    const GridSpec grid = parse_grid(grid_text);
    if (grid.lo < 0.0 || grid.hi > 1.0)
        throw UsageError("region: grid must lie within [0, 1]");
    const std::vector<double> pts = grid.points();

    RegionCurve curve = region_curve(d, pts);
    if (with_ppt) {
        const RegionCurve ppt = ppt_s4_boundary(pts, d, restarts, seed);
        curve.ppt_min = ppt.ppt_min;
        curve.has_ppt = true;
    }

    json cfg = {{"command", "region"}, {"d", d}, {"grid", grid_text}, {"ppt", with_ppt}};
    if (with_ppt) {
        cfg["restarts"] = restarts;
        cfg["seed"] = seed;
    }
    std::ostringstream os;
    os << "# config " << cfg.dump() << "\n";
    os << "s2,s4_sep_min,s4_sep_max,s4_gen_min" << (with_ppt ? ",s4_ppt_min" : "") << "\n";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        os << fmt15(curve.s2_grid[i]) << ',' << fmt15(curve.sep_min[i]) << ','
           << fmt15(curve.sep_max[i]) << ',' << fmt15(curve.gen_min[i]);
        if (with_ppt) os << ',' << fmt15(curve.ppt_min[i]);
        os << "\n";
    }
    emit(out, os.str());
    return 0;
}

void sector_row(std::ostringstream& os, const SectorVector& s) {
    const CriterionVerdict full = full_sep_test(s, 2);
    const CriterionVerdict bi = bisep_test(s, 2);
    const auto legacy = legacy_sector_tests(s);
    os << fmt15(s.a[1]) << ',' << fmt15(s.a[2]) << ',' << fmt15(s.a[3]) << ','
       << fmt15(std::min({s.a[1], s.a[2], s.a[3]})) << ','
       << fmt15(s.a[1] - s.a[2] + s.a[3]) << ',' << fmt15(s.a[2]) << ','
       << fmt15(s.a[1] + s.a[2] - 3.0 * (1.0 + s.a[3])) << ',' << fmt15(full.lhs) << ','
       << fmt15(full.bound) << ',' << (full.violated ? 1 : 0) << ',' << fmt15(bi.lhs)
       << ',' << fmt15(bi.bound) << ',' << (bi.violated ? 1 : 0) << ','
       << (legacy[0].violated ? 1 : 0) << ',' << (legacy[1].violated ? 1 : 0);
}

const char* kSectorColumns =
    "a1,a2,a3,facet_nonneg,facet_1,facet_2,facet_3,"
    "full_sep_lhs,full_sep_bound,full_sep_violated,"
    "bisep_lhs,bisep_bound,bisep_violated,legacy_full_sep_violated,legacy_bisep_violated";

int cmd_sector(const StateArgs& state, bool scan_gw, const std::string& grid_text,
               const std::string& format, const std::string& out) {
    std::ostringstream os;
    if (scan_gw) {
        const GridSpec grid = parse_grid(grid_text);
        if (grid.lo < 0.0 || grid.hi > 1.0)
            throw UsageError("sector: --scan-gw grid must lie within [0, 1]");
        json cfg = {{"command", "sector"}, {"scan_gw", true}, {"grid", grid_text}};
        os << "# config " << cfg.dump() << "\n";
        os << "g,w," << kSectorColumns << "\n";
        for (double g : grid.points())
            for (double w : grid.points()) {
                if (g + w > 1.0 + 1e-12) continue;
                const SectorVector s = sector_lengths(noisy_ghz_w(g, w));
                os << fmt15(g) << ',' << fmt15(w) << ',';
                sector_row(os, s);
                os << "\n";
            }
        emit(out, os.str());
        return 0;
    }

    const DensityMatrix rho = state.resolve();
    if (rho.dims != std::vector<std::size_t>{2, 2, 2})
        throw UsageError("sector: a three-qubit state is required");
    const SectorVector s = sector_lengths(rho);
    if (format == "json") {
        const CriterionVerdict full = full_sep_test(s, 2);
        const CriterionVerdict bi = bisep_test(s, 2);
        const auto legacy = legacy_sector_tests(s);
        json doc;
        doc["config"] = state.config();
        doc["config"]["command"] = "sector";
        doc["sectors"] = {{"a1", s.a[1]}, {"a2", s.a[2]}, {"a3", s.a[3]}};
        doc["one_body"] = s.one_body;
        doc["facets"] = {{"nonneg", std::min({s.a[1], s.a[2], s.a[3]})},
                         {"f1_a1_m_a2_p_a3", s.a[1] - s.a[2] + s.a[3]},
                         {"f2_a2", s.a[2]},
                         {"f3_a1_p_a2_m_3_1p_a3", s.a[1] + s.a[2] - 3.0 * (1.0 + s.a[3])}};
        auto verdict = [](const CriterionVerdict& v) {
            return json{{"lhs", v.lhs}, {"bound", v.bound}, {"violated", v.violated}};
        };
        doc["criteria"] = {{"full_sep", verdict(full)},
                           {"bisep", verdict(bi)},
                           {"legacy_full_sep", verdict(legacy[0])},
                           {"legacy_bisep", verdict(legacy[1])}};
        doc["polytope_member"] = three_qubit_polytope_member(s.a[1], s.a[2], s.a[3]);
        emit(out, doc.dump(2) + "\n");
        return 0;
    }
    json cfg = state.config();
    cfg["command"] = "sector";
    os << "# config " << cfg.dump() << "\n";
    os << kSectorColumns << "\n";
    sector_row(os, s);
    os << "\n";
    emit(out, os.str());
    return 0;
}

int cmd_mc(const StateArgs& state, const std::string& r_text, std::size_t samples,
           std::uint64_t seed, const std::string& out) {
    const DensityMatrix rho = state.resolve();
    if (rho.parties() != 2 || !rho.homogeneous())
        throw UsageError("mc: a bipartite state with equal dimensions is required");

    std::vector<int> r_list;
    {
        std::stringstream ss(r_text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            try {
                r_list.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw UsageError("mc: bad moment order '" + tok + "'");
            }
        }
        if (r_list.empty()) throw UsageError("mc: no moment orders given");
    }

    const std::size_t d = rho.local_dim();
    const MomentObservable obs = moment_observable(d);
    const std::vector<McEstimate> est = mc_moments(rho, obs, r_list, samples, seed);
    const MomentPair analytic = s_moments(correlation_matrix(rho));

    json doc;
    doc["config"] = state.config();
    doc["config"]["command"] = "mc";
    doc["config"]["r"] = r_text;
    doc["config"]["samples"] = samples;
    doc["config"]["seed"] = seed;
    doc["observable"] = {{"d", obs.d}, {"eigenvalues", obs.eigenvalues}, {"y", obs.y}};
    json results = json::array();
    for (const McEstimate& e : est) {
        json r = {{"r", e.r}, {"estimate", e.estimate}, {"std_err", e.std_err}};
        if (e.r == 2) {
            r["s_converted"] = r2_to_s2_factor(d) * e.estimate;
            r["s_std_err"] = r2_to_s2_factor(d) * e.std_err;
        } else if (e.r == 4) {
            r["s_converted"] = r4_to_s4_factor(d) * e.estimate;
            r["s_std_err"] = r4_to_s4_factor(d) * e.std_err;
        }
        results.push_back(r);
    }
    doc["results"] = results;
    doc["analytic"] = {{"s2", analytic.s2}, {"s4", analytic.s4}};
    emit(out, doc.dump(2) + "\n");
    return 0;
}

int cmd_conjecture(std::size_t max_terms, std::size_t restarts, std::uint64_t seed,
                   const std::string& out) {
    if (max_terms > 8) throw UsageError("conjecture: --max-terms must be <= 8");
    const OptResult r = bisep_conjecture_scan(max_terms, restarts, seed);
    json doc;
    doc["config"] = {{"command", "conjecture"},
                     {"max_terms", max_terms},
                     {"restarts", restarts},
                     {"seed", seed}};
    doc["result"] = {{"best_value", r.best_value},
                     {"best_params", r.best_params},
                     {"restarts", r.restarts},
                     {"evaluations", r.evaluations},
                     {"seed", r.seed},
                     {"maximizing", r.maximizing}};
    doc["violation"] = r.best_value > 1e-6;
    emit(out, doc.dump(2) + "\n");
    return r.best_value > 1e-6 ? 3 : 0;
}

int cmd_figure(const std::string& name, const std::string& grid_text, bool with_ppt,
               std::size_t restarts, std::uint64_t seed, double p_horodecki,
               const std::string& out) {
    std::ostringstream os;
    json cfg = {{"command", "figure"}, {"name", name}};

    if (name == "table1" || name == "table2") {
        os << "# config " << cfg.dump() << "\n";
        os << "family,criterion,threshold\n";
        if (name == "table1") {
            os << "noisy_ghz,full_sep," << fmt15(threshold_noisy_ghz_full_sep()) << "\n";
            os << "noisy_ghz,legacy_a3_le_1," << fmt15(threshold_noisy_ghz_full_sep_legacy())
               << "\n";
            os << "noisy_w,full_sep," << fmt15(threshold_noisy_w_full_sep()) << "\n";
            os << "noisy_w,legacy_a3_le_1," << fmt15(threshold_noisy_w_full_sep_legacy())
               << "\n";
        } else {
            const auto win = window_ghz_w_bisep();
            const auto win_legacy = window_ghz_w_bisep_legacy();
            os << "noisy_ghz,bisep," << fmt15(threshold_noisy_ghz_bisep()) << "\n";
            os << "noisy_w,bisep," << fmt15(threshold_noisy_w_bisep()) << "\n";
            os << "ghz_w_line,bisep_window_lo," << fmt15(win.first) << "\n";
            os << "ghz_w_line,bisep_window_hi," << fmt15(win.second) << "\n";
            os << "ghz_w_line,legacy_window_lo," << fmt15(win_legacy.first) << "\n";
            os << "ghz_w_line,legacy_window_hi," << fmt15(win_legacy.second) << "\n";
        }
        emit(out, os.str());
        return 0;
    }

    if (name == "fig1") {
        // facets as c1*A1 + c2*A2 + c3*A3 <= rhs
        os << "# config " << cfg.dump() << "\n";
        os << "facet,c1,c2,c3,rhs\n";
        os << "a1_nonneg,-1,0,0,0\n";
        os << "a2_nonneg,0,-1,0,0\n";
        os << "a3_nonneg,0,0,-1,0\n";
        os << "polytope_1,1,-1,1,1\n";
        os << "polytope_2,0,1,0,3\n";
        os << "polytope_3,1,1,-3,3\n";
        os << "full_sep,-0.3333333333333333,0.3333333333333333,1,1\n";
        os << "bisep,-3,1,1,3\n";
        os << "legacy_full_sep,0,0,1,1\n";
        os << "legacy_bisep,0,0,1,3\n";
        emit(out, os.str());
        return 0;
    }

    if (name == "figs1") {
        cfg["grid"] = grid_text;
        const GridSpec grid = parse_grid(grid_text);
        os << "# config " << cfg.dump() << "\n";
        os << "p,a,sign,a1,a2,a3,saturation_residual\n";
        for (double pf : grid.points()) {
            const double p = 0.5 + 0.5 * pf;  // map [0,1] onto [1/2,1]
            const double lo = std::sqrt(std::max(0.0, 1.0 - 1.0 / (2.0 * p)));
            const double hi = std::min(std::sqrt(1.0 / (2.0 * p)), std::sqrt(0.5));
            for (double af : grid.points()) {
                const double a = lo + (hi - lo) * af;
                for (int sign : {+1, -1}) {
                    const SectorVector s = sector_lengths(bisep_family(p, a, sign));
                    os << fmt15(p) << ',' << fmt15(a) << ',' << sign << ','
                       << fmt15(s.a[1]) << ',' << fmt15(s.a[2]) << ',' << fmt15(s.a[3])
                       << ',' << fmt15(s.a[2] + s.a[3] - 3.0 * (1.0 + s.a[1])) << "\n";
                }
            }
        }
        emit(out, os.str());
        return 0;
    }

    if (name == "figs3") {
        StateArgs no_state;
        return cmd_sector(no_state, true, grid_text, "csv", out);
    }

    if (name == "fig2" || name == "figs7")
        return cmd_region(name == "fig2" ? 3 : 4, grid_text, with_ppt, restarts, seed, out);

    if (name == "fig2_points" || name == "figs7_points") {
        os << "# config " << cfg.dump() << "\n";
        os << "label,s2,s4,ppt_min_eig,ccnr_norm,dv_norm,outside_separable_region\n";
        auto row = [&](const std::string& label, const DensityMatrix& rho) {
            const DetectionReport rep = moment_witness(rho, label);
            os << label << ',' << fmt15(rep.moments.s2) << ',' << fmt15(rep.moments.s4)
               << ',' << fmt15(rep.ppt_min_eig) << ',' << fmt15(rep.ccnr_norm) << ','
               << fmt15(rep.dv_norm) << ','
               << (inside_separable_region(rep.moments) ? 0 : 1) << "\n";
        };
        if (name == "fig2_points") {
            row("cross_hatch", cross_hatch());
            row("chessboard", chessboard(3.0 / 5, -3.0 / 5, 6.0 / 5, -6.0 / 5, -3.0 / 5, -3.0 / 5));
            row("upb_tiles", upb_tiles());
            row("horodecki", horodecki_3x3(p_horodecki));
            row("isotropic_p1", isotropic(1.0, 3));
            row("maximally_mixed", maximally_mixed({3, 3}));
        } else {
            row("piani", piani_4x4());
            row("isotropic_p1", isotropic(1.0, 4));
            row("maximally_mixed", maximally_mixed({4, 4}));
        }
        emit(out, os.str());
        return 0;
    }

    throw UsageError("unknown figure name '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entanglement detection from randomized-measurement moments"};
    app.require_subcommand(1);

    StateArgs analyze_state, sector_state, mc_state;
    std::string out_analyze, out_region, out_sector, out_mc, out_conj, out_fig;
    std::string grid_region = "0:1:101", grid_sector = "0:1:41", grid_fig = "0:1:101";
    std::string r_text = "2,4", sector_format = "json", figure_name;
    bool region_ppt = false, fig_ppt = false, scan_gw = false;
    std::size_t region_d = 3, samples = 100000, restarts_region = 10, restarts_conj = 50,
                restarts_fig = 10, max_terms = 8;
    std::uint64_t seed_region = 0, seed_mc = 0, seed_conj = 0, seed_fig = 0;
    double p_horodecki = 3.9;

    CLI::App* analyze = app.add_subcommand("analyze", "full detection report for one state");
    analyze_state.add_to(analyze);
    analyze->add_option("--out", out_analyze, "output path (default stdout)");

    CLI::App* region = app.add_subcommand("region", "separable/general moment-region curves");
    region->add_option("--d", region_d, "local dimension (3 or 4)");
    region->add_option("--grid", grid_region, "s2 grid A:B:STEPS");
    region->add_flag("--ppt", region_ppt, "add the numeric PPT lower bound column");
    region->add_option("--restarts", restarts_region, "restarts per grid point for --ppt");
    region->add_option("--seed", seed_region, "seed for --ppt");
    region->add_option("--out", out_region, "output path");

    CLI::App* sector = app.add_subcommand("sector", "three-qubit sector lengths and criteria");
    sector_state.add_to(sector);
    sector->add_flag("--scan-gw", scan_gw, "scan the noisy GHZ-W plane");
    sector->add_option("--grid", grid_sector, "scan grid A:B:STEPS");
    sector->add_option("--format", sector_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sector->add_option("--out", out_sector, "output path");

    CLI::App* mc = app.add_subcommand("mc", "Monte Carlo randomized-measurement moments");
    mc_state.add_to(mc);
    mc->add_option("--r", r_text, "comma-separated moment orders");
    mc->add_option("--samples", samples, "number of unitary pairs");
    mc->add_option("--seed", seed_mc, "master seed");
    mc->add_option("--out", out_mc, "output path");

    CLI::App* conj = app.add_subcommand("conjecture", "mixed-bipartition bound scan");
    conj->add_option("--max-terms", max_terms, "mixture terms (<= 8)");
    conj->add_option("--restarts", restarts_conj, "restarts per bipartition assignment");
    conj->add_option("--seed", seed_conj, "master seed");
    conj->add_option("--out", out_conj, "output path");

    CLI::App* figure = app.add_subcommand("figure", "figure/table data files");
    figure->add_option("--name", figure_name,
                       "table1|table2|fig1|fig2|fig2_points|figs1|figs3|figs7|figs7_points")
        ->required();
    figure->add_option("--grid", grid_fig, "grid A:B:STEPS where applicable");
    figure->add_flag("--ppt", fig_ppt, "add the PPT column to curve figures");
    figure->add_option("--restarts", restarts_fig, "restarts for the PPT column");
    figure->add_option("--seed", seed_fig, "seed for the PPT column");
    figure->add_option("--p", p_horodecki, "parameter for the horodecki point row");
    figure->add_option("--out", out_fig, "output path");

    try {
        app.parse(argc, argv);
        if (analyze->parsed()) return cmd_analyze(analyze_state, out_analyze);
        if (region->parsed())
            return cmd_region(region_d, grid_region, region_ppt, restarts_region,
                              seed_region, out_region);
        if (sector->parsed())
            return cmd_sector(sector_state, scan_gw, grid_sector, sector_format, out_sector);
        if (mc->parsed()) return cmd_mc(mc_state, r_text, samples, seed_mc, out_mc);
        if (conj->parsed()) return cmd_conjecture(max_terms, restarts_conj, seed_conj, out_conj);
        if (figure->parsed())
            return cmd_figure(figure_name, grid_fig, fig_ppt, restarts_fig, seed_fig,
                              p_horodecki, out_fig);
        return 1;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    }
}
