#ifndef NETCOMP_EXPERIMENTS_HPP
#define NETCOMP_EXPERIMENTS_HPP

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "netcomp/error.hpp"
#include "netcomp/generators.hpp"
#include "netcomp/io.hpp"
#include "netcomp/profile.hpp"
#include "netcomp/spectral.hpp"

namespace netcomp {

inline const std::vector<std::string>& figure_ids() {
    static const std::vector<std::string> ids{"s1", "s2", "s4", "s5", "s6", "s7", "s8", "s10"};
    return ids;
}

/// Size and seed count of a figure run. Desk scale is n=100 with 5 seeds;
/// full scale is n=300 with 10.
struct FigureOptions {
    std::string figure;
    bool full_scale = false;
    std::optional<std::size_t> nodes;
    std::optional<std::size_t> seed_count;
    std::uint64_t first_seed = 1;
    std::vector<double> fractions;  // empty: the figure's own grid
    std::optional<std::filesystem::path> data;

    std::size_t n() const { return nodes.value_or(full_scale ? 300 : 100); }
    std::size_t seeds() const { return seed_count.value_or(full_scale ? 10 : 5); }
    std::vector<std::uint64_t> seed_list() const {
        std::vector<std::uint64_t> out;
        for (std::size_t i = 0; i < seeds(); ++i) out.push_back(first_seed + i);
        return out;
    }
};

struct FigureTable {
    std::string figure;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> notes;

    std::string csv() const {
        std::ostringstream out;
        for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
        out << '\n';
        for (const auto& r : rows) {
            for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
            out << '\n';
        }
        return out.str();
    }
};

namespace detail {

inline std::string fmt(double x) { return format_number(x); }

inline std::vector<double> grid_or(const FigureOptions& opt, std::vector<double> fallback) {
    return opt.fractions.empty() ? std::move(fallback) : opt.fractions;
}

inline std::size_t module_size(std::size_t n) { return std::max<std::size_t>(n / 5, 5); }

// WS and ER share average degree 4, ER through p = k/(n-1).
inline GeneratorParams synthetic(const std::string& kind, std::size_t n) {
    if (kind == "ba") return BaParams{n, 4};
    if (kind == "ws") return WsParams{n, 4, 0.5};
    if (kind == "er") return ErParams{n, 4.0 / static_cast<double>(n - 1)};
    if (kind == "multipop") return MultiPopParams{5, module_size(n), 4, 0.5, 2};
    throw Error(ErrorCode::InvalidSpec, "unknown kind " + kind);
}

inline MetricSnapshot evolved_metrics(const Graph& g, double fraction, Method method, std::uint64_t seed,
                                      bool with_fiedler) {
    if (fraction <= 0.0) return snapshot(g, with_fiedler);
    EvolutionConfig config;
    config.rewiring_fraction = fraction;
    config.seed = seed;
    config.record_metrics_every = 0;
    config.final_fiedler = with_fiedler;
    return evolve(g, config, method).final_metrics;
}

// D̄ against P_rew for one input graph: one effective run per fraction,
// one random run per (fraction, seed).
inline FigureTable methods_versus_fraction(const std::string& figure, const Graph& g, const FigureOptions& opt) {
    FigureTable t{figure, {"P_rew", "method", "seed", "avg_distance"}, {}, {}};
    const auto fractions = grid_or(opt, {0.0, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3});
    for (double f : fractions) {
        const auto eff = evolved_metrics(g, f, Method::Effective, opt.first_seed, false);
        t.rows.push_back({fmt(f), "effective", std::to_string(opt.first_seed), fmt(eff.avg_distance)});
        for (std::uint64_t s : opt.seed_list()) {
            const auto rnd = evolved_metrics(g, f, Method::Random, s, false);
            t.rows.push_back({fmt(f), "random", std::to_string(s), fmt(rnd.avg_distance)});
        }
    }
    t.notes.push_back("input: |V|=" + std::to_string(g.node_count()) + ", |E|=" + std::to_string(g.edge_count()) +
                      ", D=" + fmt(average_distance(g)));
    return t;
}

inline std::vector<std::size_t> size_ladder(std::size_t n) { return {n, 2 * n, 4 * n, 8 * n}; }

}  // namespace detail

inline FigureTable reproduce_figure(const FigureOptions& opt) {
    const std::size_t n = opt.n();
    const auto seeds = opt.seed_list();
    if (seeds.empty()) throw Error(ErrorCode::InvalidConfig, "need at least one seed");

    if (opt.figure == "s1" || opt.figure == "s2") {
        const bool per_seed = opt.figure == "s1";
        FigureTable t{opt.figure, {}, {}, {}};
        t.columns = per_seed ? std::vector<std::string>{"network_kind", "n", "seed", "avg_distance"}
                             : std::vector<std::string>{"network_kind", "n", "ln_n", "avg_distance"};
        for (const std::string kind : {"ba", "ws"}) {
            std::vector<double> xs, ys;
            for (std::size_t size : detail::size_ladder(n)) {
                std::vector<double> d;
                for (auto s : seeds) {
                    d.push_back(average_distance(generate({detail::synthetic(kind, size), s})));
                    if (per_seed)
                        t.rows.push_back({kind, std::to_string(size), std::to_string(s), detail::fmt(d.back())});
                }
                const double mean = summarize(d).mean;
                if (!per_seed)
                    t.rows.push_back({kind, std::to_string(size), detail::fmt(std::log(static_cast<double>(size))),
                                      detail::fmt(mean)});
                xs.push_back(static_cast<double>(size));
                ys.push_back(mean);
            }
            const FitResult fit = kind == "ba" ? fit_loglog(xs, ys) : fit_log(xs, ys);
            t.notes.push_back(kind + (kind == "ba" ? " D vs ln ln n" : " D vs ln n") + ": slope " +
                              detail::fmt(fit.slope) + ", intercept " + detail::fmt(fit.intercept) + ", R^2 " +
                              detail::fmt(fit.r_squared));
        }
        return t;
    }

    if (opt.figure == "s4" || opt.figure == "s5" || opt.figure == "s6") {
        const std::string kind = opt.figure == "s4" ? "ba" : opt.figure == "s5" ? "ws" : "multipop";
        const Graph g = generate({detail::synthetic(kind, n), opt.first_seed});
        return detail::methods_versus_fraction(opt.figure, g, opt);
    }

    if (opt.figure == "s7") {
        if (!opt.data) throw Error(ErrorCode::MissingDataset, "figure s7 needs an edge list (--data)");
        const LabeledGraph giant = largest_component(read_edge_list(*opt.data, DuplicatePolicy::Collapse));
        FigureTable t = detail::methods_versus_fraction(opt.figure, giant.graph, opt);
        t.notes.push_back("largest connected component of " + opt.data->filename().string() + ": " +
                          std::to_string(giant.graph.node_count()) + " nodes");
        return t;
    }

    if (opt.figure == "s8") {
        FigureTable t{opt.figure, {"network_kind", "P_rew", "seed", "avg_distance"}, {}, {}};
        const auto fractions = detail::grid_or(opt, {0.0, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4});
        for (const std::string kind : {"ws", "ba", "er"}) {
            for (auto s : seeds) {
                const Graph g = generate({detail::synthetic(kind, n), s});
                for (double f : fractions) {
                    const auto m = detail::evolved_metrics(g, f, Method::Effective, s, false);
                    t.rows.push_back({kind, detail::fmt(f), std::to_string(s), detail::fmt(m.avg_distance)});
                }
            }
        }
        return t;
    }

    if (opt.figure == "s10") {
        FigureTable t{opt.figure, {"P_rew", "network_kind", "clustering", "fiedler"}, {}, {}};
        const auto fractions = detail::grid_or(opt, {0.0, 0.1, 0.2, 0.3});
        for (const std::string kind : {"ba", "ws", "er"}) {
            const GeneratorParams params = detail::synthetic(kind, n);
            const auto rows = compression_profile([&](std::uint64_t s) { return generate({params, s}); },
                                                  fractions, seeds, Method::Effective, true);
            for (const auto& r : rows)
                t.rows.push_back({detail::fmt(r.fraction), kind, detail::fmt(r.clustering.mean),
                                  detail::fmt(r.fiedler.mean)});
        }
        t.notes.push_back("clustering and fiedler are means over seeds");
        return t;
    }

    throw Error(ErrorCode::InvalidConfig, "unknown figure '" + opt.figure + "'");
}

/// Plain-text description of the parameters actually used.
inline std::string figure_readme(const FigureOptions& opt, const FigureTable& t) {
    std::ostringstream out;
    out << "figure " << t.figure << "\n";
    out << "scale: " << (opt.full_scale ? "full" : "desk") << "\n";
    out << "nodes: " << opt.n() << " (full scale: 300";
    if (t.figure == "s6") out << "; five WS modules of " << detail::module_size(opt.n()) << " nodes, full scale: 60";
    out << ")\n";
    out << "seeds: " << opt.seeds() << " starting at " << opt.first_seed << " (full scale: 10)\n";
    if (t.figure == "s1" || t.figure == "s2") {
        out << "sizes:";
        for (auto s : detail::size_ladder(opt.n())) out << ' ' << s;
        out << "\n";
    }
    out << "generators: BA m=4; WS k=4 p=0.5; ER p=4/(n-1); five-population modules WS k=4 p=0.5, "
           "2 edges between consecutive modules\n";
    for (const auto& note : t.notes) out << note << "\n";
    return out.str();
}

}  // namespace netcomp

#endif  // NETCOMP_EXPERIMENTS_HPP
