#ifndef NETCOMP_PROFILE_HPP
#define NETCOMP_PROFILE_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "netcomp/baseline.hpp"
#include "netcomp/evolution.hpp"
#include "netcomp/spectral.hpp"

namespace netcomp {

enum class Method { Effective, Random };

inline std::string method_name(Method m) { return m == Method::Effective ? "effective" : "random"; }

inline EvolutionTrajectory evolve(const Graph& g, const EvolutionConfig& config, Method method) {
    return method == Method::Effective ? compress(g, config) : random_rewire(g, config);
}

/// Sample mean and (n-1) standard deviation.
struct Summary {
    double mean = 0.0;
    double stddev = 0.0;
    std::size_t count = 0;

    double standard_error() const { return count > 0 ? stddev / std::sqrt(static_cast<double>(count)) : 0.0; }
};

inline Summary summarize(std::span<const double> xs) {
    Summary s;
    s.count = xs.size();
    if (xs.empty()) return s;
    for (double x : xs) s.mean += x;
    s.mean /= static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs) ss += (x - s.mean) * (x - s.mean);
        s.stddev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    }
    return s;
}

struct ProfileRow {
    double fraction = 0.0;
    Summary avg_distance;
    Summary clustering;
    Summary fiedler;
};

/// Maps a seed to the input graph of one run.
using GraphSource = std::function<Graph(std::uint64_t)>;

/// One evolution per (fraction, seed). Fraction 0 reports the untouched input.
inline std::vector<ProfileRow> compression_profile(const GraphSource& source, std::span<const double> fractions,
                                                   std::span<const std::uint64_t> seeds,
                                                   Method method = Method::Effective, bool with_fiedler = true) {
    if (seeds.empty()) throw Error(ErrorCode::InvalidConfig, "profile needs at least one seed");
    if (!std::is_sorted(fractions.begin(), fractions.end()))
        throw Error(ErrorCode::InvalidConfig, "fractions must be sorted ascending");
    std::vector<ProfileRow> rows;
    for (double fraction : fractions) {
        std::vector<double> d, c, f;
        for (std::uint64_t seed : seeds) {
            const Graph g = source(seed);
            MetricSnapshot m;
            if (fraction <= 0.0) {
                m = snapshot(g, with_fiedler);
            } else {
                EvolutionConfig config;
                config.rewiring_fraction = fraction;
                config.seed = seed;
                config.record_metrics_every = 0;
                config.final_fiedler = with_fiedler;
                m = evolve(g, config, method).final_metrics;
            }
            d.push_back(m.avg_distance);
            c.push_back(m.clustering);
            if (m.fiedler) f.push_back(*m.fiedler);
        }
        rows.push_back({fraction, summarize(d), summarize(c), summarize(f)});
    }
    return rows;
}

inline std::vector<ProfileRow> compression_profile(const Graph& g, std::span<const double> fractions,
                                                   std::span<const std::uint64_t> seeds,
                                                   Method method = Method::Effective, bool with_fiedler = true) {
    return compression_profile([&g](std::uint64_t) { return g; }, fractions, seeds, method, with_fiedler);
}

}  // namespace netcomp

#endif  // NETCOMP_PROFILE_HPP
