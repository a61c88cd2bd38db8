#ifndef NETCOMP_CENTRALITY_HPP
#define NETCOMP_CENTRALITY_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "netcomp/error.hpp"
#include "netcomp/graph.hpp"

namespace netcomp {

/// Absolute tolerance for comparing betweenness-derived scores.
inline constexpr double kScoreTolerance = 1e-9;

inline constexpr double kInfiniteScore = std::numeric_limits<double>::infinity();

/// Shortest-path multiplicities and predecessor DAG from one source.
struct PathCounts {
    NodeId source = 0;
    DistanceRow distance;
    std::vector<std::uint64_t> sigma;              // 0 for unreachable targets
    std::vector<std::vector<NodeId>> predecessors;  // sorted ascending
};

inline PathCounts shortest_path_counts(const Graph& g, NodeId source) {
    if (source >= g.node_count())
        throw Error(ErrorCode::NodeOutOfRange, "source " + std::to_string(source));
    const std::size_t n = g.node_count();
    PathCounts pc;
    pc.source = source;
    pc.distance.assign(n, Distance::infinite());
    pc.sigma.assign(n, 0);
    pc.predecessors.assign(n, {});
    std::vector<NodeId> queue{source};
    pc.distance[source] = Distance(0);
    pc.sigma[source] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const NodeId x = queue[head];
        const Distance next(pc.distance[x].hops() + 1);
        for (NodeId y : g.neighbors(x)) {
            if (pc.distance[y].is_infinite()) {
                pc.distance[y] = next;
                queue.push_back(y);
            }
            if (pc.distance[y] == next) {
                pc.sigma[y] += pc.sigma[x];
                pc.predecessors[y].push_back(x);
            }
        }
    }
    for (auto& preds : pc.predecessors) std::sort(preds.begin(), preds.end());
    return pc;
}

/// Per-edge betweenness B_G(e): sum over ordered node pairs, excluding the
/// edge's own endpoint pair, of the fraction of geodesics that use the edge.
class EdgeBetweennessMap {
public:
    EdgeBetweennessMap() = default;
    EdgeBetweennessMap(std::vector<EdgeKey> edges, std::vector<double> values)
        : edges_(std::move(edges)), values_(std::move(values)) {}

    std::size_t size() const noexcept { return edges_.size(); }
    std::span<const EdgeKey> edges() const noexcept { return edges_; }
    std::span<const double> values() const noexcept { return values_; }

    double at(EdgeKey e) const {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e) throw Error(ErrorCode::EdgeNotFound, to_string(e));
        return values_[static_cast<std::size_t>(it - edges_.begin())];
    }
    double operator[](EdgeKey e) const { return at(e); }

private:
    std::vector<EdgeKey> edges_;  // ascending canonical order
    std::vector<double> values_;
};

namespace detail {

// Reusable buffers for one Brandes single-source pass.
struct BrandesWorkspace {
    std::vector<std::int32_t> dist;
    std::vector<double> sigma;
    std::vector<double> delta;
    std::vector<NodeId> order;

    // BFS with path counting; `order` holds reached nodes by non-decreasing distance.
    void forward(const Graph& g, NodeId s) {
        const std::size_t n = g.node_count();
        dist.assign(n, kUnreached);
        sigma.assign(n, 0.0);
        delta.assign(n, 0.0);
        order.clear();
        order.reserve(n);
        dist[s] = 0;
        sigma[s] = 1.0;
        order.push_back(s);
        for (std::size_t head = 0; head < order.size(); ++head) {
            const NodeId x = order[head];
            for (NodeId y : g.neighbors(x)) {
                if (dist[y] == kUnreached) {
                    dist[y] = dist[x] + 1;
                    order.push_back(y);
                }
                if (dist[y] == dist[x] + 1) sigma[y] += sigma[x];
            }
        }
    }

    // Dependency accumulation; calls on_edge(pred, succ, credit) for every DAG edge.
    template <class OnEdge>
    void backward(const Graph& g, OnEdge&& on_edge) {
        for (std::size_t i = order.size(); i-- > 1;) {
            const NodeId w = order[i];
            const double carry = (1.0 + delta[w]) / sigma[w];
            for (NodeId v : g.neighbors(w)) {
                if (dist[v] + 1 != dist[w]) continue;
                const double credit = sigma[v] * carry;
                delta[v] += credit;
                on_edge(v, w, credit);
            }
        }
    }
};

// Conventional ordered-pair betweenness of an existing edge, endpoint pair
// included. Cost O(|V|·|E|).
inline double conventional_edge_betweenness(const Graph& g, EdgeKey e, BrandesWorkspace& ws) {
    double total = 0.0;
    for (NodeId s = 0; s < g.node_count(); ++s) {
        ws.forward(g, s);
        if (ws.dist[e.u] == kUnreached) continue;
        const std::int32_t gap = ws.dist[e.u] - ws.dist[e.v];
        if (gap != 1 && gap != -1) continue;
        ws.backward(g, [&](NodeId v, NodeId w, double credit) {
            if ((v == e.u && w == e.v) || (v == e.v && w == e.u)) total += credit;
        });
    }
    return total;
}

inline double exclude_endpoint_pair(double conventional) {
    // The endpoint pair contributes exactly 1 in each direction.
    return std::max(0.0, conventional - 2.0);
}

}  // namespace detail

inline EdgeBetweennessMap edge_betweenness_all(const Graph& g) {
    std::vector<EdgeKey> edges = g.edges();
    std::vector<double> values(edges.size(), 0.0);

    // edge index aligned with each adjacency row
    std::vector<std::vector<std::size_t>> slot(g.node_count());
    for (NodeId x = 0; x < g.node_count(); ++x) {
        auto nb = g.neighbors(x);
        slot[x].resize(nb.size());
        for (std::size_t j = 0; j < nb.size(); ++j) {
            const EdgeKey e = EdgeKey::of(x, nb[j]);
            slot[x][j] = static_cast<std::size_t>(
                std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
        }
    }

    detail::BrandesWorkspace ws;
    for (NodeId s = 0; s < g.node_count(); ++s) {
        ws.forward(g, s);
        for (std::size_t i = ws.order.size(); i-- > 1;) {
            const NodeId w = ws.order[i];
            const double carry = (1.0 + ws.delta[w]) / ws.sigma[w];
            auto nb = g.neighbors(w);
            for (std::size_t j = 0; j < nb.size(); ++j) {
                const NodeId v = nb[j];
                if (ws.dist[v] + 1 != ws.dist[w]) continue;
                const double credit = ws.sigma[v] * carry;
                ws.delta[v] += credit;
                values[slot[w][j]] += credit;
            }
        }
    }
    for (double& b : values) b = detail::exclude_endpoint_pair(b);
    return EdgeBetweennessMap(std::move(edges), std::move(values));
}

inline double edge_betweenness_single(const Graph& g, EdgeKey e) {
    if (e.u >= g.node_count() || e.v >= g.node_count() || !g.has_edge(e))
        throw Error(ErrorCode::EdgeNotFound, to_string(e));
    detail::BrandesWorkspace ws;
    return detail::exclude_endpoint_pair(detail::conventional_edge_betweenness(g, e, ws));
}

/// Local compression modulus of cutting an existing edge:
/// B_g(e) times the detour distance between its endpoints once it is gone.
inline double psi_removal(const Graph& g, EdgeKey e, double betweenness) {
    const Distance detour = hop_distance(g, e.u, e.v, &e);
    if (detour.is_infinite()) return kInfiniteScore;
    return betweenness * detour.value();
}

inline double psi_removal(const Graph& g, EdgeKey e) {
    return psi_removal(g, e, edge_betweenness_single(g, e));
}

namespace detail {

// B of the hypothetical edge `e` in g + e; `g` is restored before returning.
inline double betweenness_if_added(Graph& g, EdgeKey e, BrandesWorkspace& ws) {
    g.add_edge(e);
    double b = 0.0;
    try {
        b = conventional_edge_betweenness(g, e, ws);
    } catch (...) {
        g.remove_edge(e);
        throw;
    }
    g.remove_edge(e);
    return exclude_endpoint_pair(b);
}

// All-pairs hop distances and geodesic counts of one graph, row-major.
struct AllPairsPaths {
    std::size_t n = 0;
    std::vector<std::int32_t> dist;  // kUnreached across components
    std::vector<double> sigma;

    explicit AllPairsPaths(const Graph& g) : n(g.node_count()), dist(n * n), sigma(n * n) {
        BrandesWorkspace ws;
        for (NodeId s = 0; s < n; ++s) {
            ws.forward(g, s);
            std::copy(ws.dist.begin(), ws.dist.end(), dist.begin() + static_cast<std::ptrdiff_t>(s * n));
            std::copy(ws.sigma.begin(), ws.sigma.end(), sigma.begin() + static_cast<std::ptrdiff_t>(s * n));
        }
    }

    // B_{g+e}(e) for the absent edge e(a,v), without rebuilding anything: a
    // geodesic of g+e through e is a geodesic of g to one endpoint, the new
    // edge, then a geodesic of g from the other endpoint.
    double betweenness_if_added(NodeId a, NodeId v) const {
        constexpr std::int64_t kFar = std::numeric_limits<std::int64_t>::max() / 4;
        auto d = [this](NodeId x, NodeId y) -> std::int64_t {
            const std::int32_t h = dist[x * n + y];
            return h == kUnreached ? kFar : h;
        };
        const std::int32_t* row_a = &dist[a * n];
        const std::int32_t* row_v = &dist[v * n];
        const double* sig_a = &sigma[a * n];
        const double* sig_v = &sigma[v * n];
        double total = 0.0;
        for (NodeId s = 0; s < n; ++s) {
            const std::int64_t sa = d(s, a), sv = d(s, v);
            const double ssa = sigma[s * n + a], ssv = sigma[s * n + v];
            const std::int32_t* row_s = &dist[s * n];
            const double* sig_s = &sigma[s * n];
            for (NodeId t = 0; t < n; ++t) {
                if (t == s || (s == a && t == v) || (s == v && t == a)) continue;
                const std::int64_t direct = row_s[t] == kUnreached ? kFar : row_s[t];
                const std::int64_t via_av = (sa >= kFar || row_v[t] == kUnreached) ? kFar : sa + 1 + row_v[t];
                const std::int64_t via_va = (sv >= kFar || row_a[t] == kUnreached) ? kFar : sv + 1 + row_a[t];
                const std::int64_t best = std::min({direct, via_av, via_va});
                if (best >= kFar || (via_av != best && via_va != best)) continue;
                const double through = (via_av == best ? ssa * sig_v[t] : 0.0) +
                                       (via_va == best ? ssv * sig_a[t] : 0.0);
                const double all = through + (direct == best ? sig_s[t] : 0.0);
                total += through / all;
            }
        }
        return total;
    }
};

// The distance factor of an addition score. Candidates in another component
// than `a` use the constant 1, so they are ranked by betweenness alone.
inline double addition_distance_factor(Distance d) { return d.is_infinite() ? 1.0 : d.value(); }

}  // namespace detail

/// Local compression modulus of adding the absent edge e(a,v) to g_cut:
/// B_{g_cut+e}(e) · d_{g_cut}(a,v), with distance factor 1 across components.
inline double psi_addition(const Graph& g_cut, EdgeKey e) {
    if (e.u >= g_cut.node_count() || e.v >= g_cut.node_count())
        throw Error(ErrorCode::NodeOutOfRange, to_string(e));
    if (g_cut.has_edge(e)) throw Error(ErrorCode::EdgeAlreadyExists, to_string(e));
    Graph scratch = g_cut;
    detail::BrandesWorkspace ws;
    const double b = detail::betweenness_if_added(scratch, e, ws);
    return b * detail::addition_distance_factor(hop_distance(g_cut, e.u, e.v));
}

}  // namespace netcomp

#endif  // NETCOMP_CENTRALITY_HPP
