#ifndef NETCOMP_GENERATORS_HPP
#define NETCOMP_GENERATORS_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "netcomp/error.hpp"
#include "netcomp/graph.hpp"
#include "netcomp/rng.hpp"

namespace netcomp {

/// Attempts made by the regenerate-until-connected generators.
inline constexpr std::size_t kMaxConnectivityRetries = 1000;

struct BaParams {
    std::size_t nodes = 0;
    std::size_t m = 1;  // edges per arriving node
};

struct WsParams {
    std::size_t nodes = 0;
    std::size_t k = 4;  // ring degree, even
    double p = 0.5;     // per-edge rewiring probability
};

struct ErParams {
    std::size_t nodes = 0;
    double p = 0.0;
};

struct MultiPopParams {
    std::size_t populations = 2;  // N_S
    std::size_t module_size = 0;
    std::size_t k = 4;
    double p = 0.5;
    std::size_t inter_edges = 1;  // edges between consecutive modules
};

using GeneratorParams = std::variant<BaParams, WsParams, ErParams, MultiPopParams>;

struct GeneratorSpec {
    GeneratorParams params;
    std::uint64_t seed = 0;
};

inline std::string kind_name(const GeneratorParams& params) {
    return std::visit(
        [](const auto& p) -> std::string {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, BaParams>) return "ba";
            else if constexpr (std::is_same_v<T, WsParams>) return "ws";
            else if constexpr (std::is_same_v<T, ErParams>) return "er";
            else return "multipop";
        },
        params);
}

namespace detail {

inline void check_ws(std::size_t n, std::size_t k, double p) {
    if (k < 2 || k % 2 != 0 || k >= n)
        throw Error(ErrorCode::InvalidSpec, "WS needs even k with 2 <= k < n (k=" + std::to_string(k) +
                                                ", n=" + std::to_string(n) + ")");
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::InvalidSpec, "WS p outside [0,1]");
}

inline Graph ws_attempt(std::size_t n, std::size_t k, double p, Xoshiro256& rng) {
    Graph g(n);
    const std::size_t half = k / 2;
    for (std::size_t j = 1; j <= half; ++j)
        for (std::size_t u = 0; u < n; ++u)
            g.add_edge(EdgeKey::of(static_cast<NodeId>(u), static_cast<NodeId>((u + j) % n)));
    if (p == 0.0) return g;
    for (std::size_t j = 1; j <= half; ++j) {
        for (std::size_t u = 0; u < n; ++u) {
            const auto a = static_cast<NodeId>(u);
            const auto far = static_cast<NodeId>((u + j) % n);
            if (!rng.bernoulli(p)) continue;
            if (!g.has_edge(a, far) || g.degree(a) >= n - 1) continue;
            NodeId w = static_cast<NodeId>(rng.uniform_below(n));
            while (w == a || g.has_edge(a, w)) w = static_cast<NodeId>(rng.uniform_below(n));
            g.remove_edge(EdgeKey::of(a, far));
            g.add_edge(EdgeKey::of(a, w));
        }
    }
    return g;
}

}  // namespace detail

/// Preferential attachment grown from a complete core on m+1 nodes.
inline Graph ba_network(const BaParams& spec, std::uint64_t seed) {
    const std::size_t n = spec.nodes, m = spec.m;
    if (m < 1 || m >= n)
        throw Error(ErrorCode::InvalidSpec, "BA needs 1 <= m < n (m=" + std::to_string(m) +
                                                ", n=" + std::to_string(n) + ")");
    Xoshiro256 rng(seed);
    Graph g(n);
    std::vector<NodeId> endpoints;  // each node repeated degree times
    endpoints.reserve(2 * (m * (m + 1) / 2 + m * n));
    for (NodeId a = 0; a <= m; ++a)
        for (NodeId b = a + 1; b <= m; ++b) {
            g.add_edge({a, b});
            endpoints.push_back(a);
            endpoints.push_back(b);
        }
    std::vector<NodeId> chosen;
    for (auto t = static_cast<NodeId>(m + 1); t < n; ++t) {
        chosen.clear();
        while (chosen.size() < m) {
            const NodeId pick = endpoints[rng.uniform_below(endpoints.size())];
            if (std::find(chosen.begin(), chosen.end(), pick) == chosen.end()) chosen.push_back(pick);
        }
        for (NodeId c : chosen) {
            g.add_edge(EdgeKey::of(t, c));
            endpoints.push_back(t);
            endpoints.push_back(c);
        }
    }
    return g;
}

/// Small-world ring with per-edge rewiring, regenerated until connected.
inline Graph ws_network(const WsParams& spec, std::uint64_t seed) {
    detail::check_ws(spec.nodes, spec.k, spec.p);
    for (std::size_t attempt = 0; attempt < kMaxConnectivityRetries; ++attempt) {
        Xoshiro256 rng(derive_seed(seed, attempt));
        Graph g = detail::ws_attempt(spec.nodes, spec.k, spec.p, rng);
        if (is_connected(g)) return g;
    }
    throw Error(ErrorCode::ConnectivityRetriesExhausted, "WS graph never connected");
}

/// G(n,p) restricted to connected outcomes (bounded retries).
inline Graph er_network(const ErParams& spec, std::uint64_t seed) {
    const std::size_t n = spec.nodes;
    if (n < 1) throw Error(ErrorCode::InvalidSpec, "ER needs at least one node");
    if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw Error(ErrorCode::InvalidSpec, "ER p outside [0,1]");
    const double log_q = std::log1p(-spec.p);
    for (std::size_t attempt = 0; attempt < kMaxConnectivityRetries; ++attempt) {
        Xoshiro256 rng(derive_seed(seed, attempt));
        Graph g(n);
        if (spec.p >= 1.0) {
            for (NodeId a = 0; a < n; ++a)
                for (NodeId b = a + 1; b < n; ++b) g.add_edge({a, b});
        } else if (spec.p > 0.0) {
            // geometric skipping over pairs (v, w), w < v
            std::int64_t v = 1, w = -1;
            const auto nn = static_cast<std::int64_t>(n);
            while (v < nn) {
                const double r = 1.0 - rng.uniform01();  // (0, 1]
                w += 1 + static_cast<std::int64_t>(std::floor(std::log(r) / log_q));
                while (w >= v && v < nn) {
                    w -= v;
                    ++v;
                }
                if (v < nn) g.add_edge({static_cast<NodeId>(w), static_cast<NodeId>(v)});
            }
        }
        if (is_connected(g)) return g;
    }
    throw Error(ErrorCode::ConnectivityRetriesExhausted,
                "ER graph never connected after " + std::to_string(kMaxConnectivityRetries) +
                    " attempts");
}

/// N_S WS modules chained 1–2–…–N_S by `inter_edges` random edges per link.
inline Graph multi_population(const MultiPopParams& spec, std::uint64_t seed) {
    if (spec.populations < 2) throw Error(ErrorCode::InvalidSpec, "multi-population needs N_S > 1");
    if (spec.inter_edges < 1) throw Error(ErrorCode::InvalidSpec, "multi-population needs m_inter >= 1");
    detail::check_ws(spec.module_size, spec.k, spec.p);
    if (spec.inter_edges > spec.module_size * spec.module_size)
        throw Error(ErrorCode::InvalidSpec, "m_inter exceeds available module pairs");

    const std::size_t size = spec.module_size;
    Graph g(spec.populations * size);
    for (std::size_t s = 0; s < spec.populations; ++s) {
        const Graph module = ws_network({size, spec.k, spec.p}, derive_seed(seed, s));
        const auto offset = static_cast<NodeId>(s * size);
        for (EdgeKey e : module.edges()) g.add_edge({e.u + offset, e.v + offset});
    }
    Xoshiro256 rng(derive_seed(seed, spec.populations));
    for (std::size_t s = 0; s + 1 < spec.populations; ++s) {
        const auto left = static_cast<NodeId>(s * size);
        const auto right = static_cast<NodeId>((s + 1) * size);
        std::size_t placed = 0;
        while (placed < spec.inter_edges) {
            const EdgeKey e{left + static_cast<NodeId>(rng.uniform_below(size)),
                            right + static_cast<NodeId>(rng.uniform_below(size))};
            if (g.has_edge(e)) continue;
            g.add_edge(e);
            ++placed;
        }
    }
    return g;
}

inline Graph generate(const GeneratorSpec& spec) {
    return std::visit(
        [&](const auto& p) -> Graph {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, BaParams>) return ba_network(p, spec.seed);
            else if constexpr (std::is_same_v<T, WsParams>) return ws_network(p, spec.seed);
            else if constexpr (std::is_same_v<T, ErParams>) return er_network(p, spec.seed);
            else return multi_population(p, spec.seed);
        },
        spec.params);
}

}  // namespace netcomp

#endif  // NETCOMP_GENERATORS_HPP
