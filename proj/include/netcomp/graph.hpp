#ifndef NETCOMP_GRAPH_HPP
#define NETCOMP_GRAPH_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "netcomp/error.hpp"

namespace netcomp {

/// Dense node index in [0, node_count).
using NodeId = std::uint32_t;

/// Undirected edge stored in canonical (min, max) order.
struct EdgeKey {
    NodeId u = 0;
    NodeId v = 0;

    static EdgeKey of(NodeId a, NodeId b) {
        if (a == b) throw Error(ErrorCode::SelfLoop, "node " + std::to_string(a));
        return a < b ? EdgeKey{a, b} : EdgeKey{b, a};
    }

    bool touches(NodeId x) const noexcept { return u == x || v == x; }

    /// The endpoint that is not `x`; `x` must be an endpoint.
    NodeId other(NodeId x) const noexcept { return x == u ? v : u; }

    friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

inline std::string to_string(EdgeKey e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

/// Hop count or the infinite sentinel for pairs in different components.
class Distance {
public:
    constexpr Distance() noexcept = default;
    constexpr explicit Distance(std::uint32_t hops) noexcept : hops_(hops) {}

    static constexpr Distance infinite() noexcept { return Distance(kInfinite); }

    constexpr bool is_infinite() const noexcept { return hops_ == kInfinite; }
    constexpr bool is_finite() const noexcept { return hops_ != kInfinite; }
    constexpr std::uint32_t hops() const noexcept { return hops_; }

    /// Hop count as a double, +inf for the sentinel.
    constexpr double value() const noexcept {
        return is_infinite() ? std::numeric_limits<double>::infinity() : static_cast<double>(hops_);
    }

    friend constexpr auto operator<=>(Distance, Distance) = default;

private:
    static constexpr std::uint32_t kInfinite = std::numeric_limits<std::uint32_t>::max();
    std::uint32_t hops_ = 0;
};

using DistanceRow = std::vector<Distance>;

/// Undirected simple graph over nodes 0..n-1 with sorted adjacency sets.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t node_count) : adjacency_(node_count) {}

    std::size_t node_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    std::span<const NodeId> neighbors(NodeId v) const {
        check_node(v);
        return adjacency_[v];
    }

    std::size_t degree(NodeId v) const {
        check_node(v);
        return adjacency_[v].size();
    }

    bool has_edge(NodeId a, NodeId b) const {
        check_node(a);
        check_node(b);
        const auto& row = adjacency_[a];
        return std::binary_search(row.begin(), row.end(), b);
    }
    bool has_edge(EdgeKey e) const { return has_edge(e.u, e.v); }

    void add_edge(EdgeKey e) {
        check_node(e.u);
        check_node(e.v);
        if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "node " + std::to_string(e.u));
        if (has_edge(e)) throw Error(ErrorCode::EdgeAlreadyExists, to_string(e));
        insert_sorted(adjacency_[e.u], e.v);
        insert_sorted(adjacency_[e.v], e.u);
        ++edge_count_;
    }

    void remove_edge(EdgeKey e) {
        if (e.u >= node_count() || e.v >= node_count() || !has_edge(e))
            throw Error(ErrorCode::EdgeNotFound, to_string(e));
        erase_sorted(adjacency_[e.u], e.v);
        erase_sorted(adjacency_[e.v], e.u);
        --edge_count_;
    }

    /// All edges in ascending canonical order.
    std::vector<EdgeKey> edges() const {
        std::vector<EdgeKey> out;
        out.reserve(edge_count_);
        for (NodeId u = 0; u < node_count(); ++u)
            for (NodeId v : adjacency_[u])
                if (u < v) out.push_back({u, v});
        return out;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_node(NodeId v) const {
        if (v >= adjacency_.size())
            throw Error(ErrorCode::NodeOutOfRange,
                        "node " + std::to_string(v) + " >= " + std::to_string(adjacency_.size()));
    }
    static void insert_sorted(std::vector<NodeId>& row, NodeId x) {
        row.insert(std::lower_bound(row.begin(), row.end(), x), x);
    }
    static void erase_sorted(std::vector<NodeId>& row, NodeId x) {
        row.erase(std::lower_bound(row.begin(), row.end(), x));
    }

    std::vector<std::vector<NodeId>> adjacency_;
    std::size_t edge_count_ = 0;
};

enum class DuplicatePolicy { Error, Collapse };

inline Graph from_edge_list(std::size_t n, std::span<const std::pair<NodeId, NodeId>> edges,
                            DuplicatePolicy duplicates = DuplicatePolicy::Error) {
    Graph g(n);
    for (auto [a, b] : edges) {
        if (a >= n || b >= n)
            throw Error(ErrorCode::NodeOutOfRange,
                        "edge (" + std::to_string(a) + "," + std::to_string(b) + ") with n=" +
                            std::to_string(n));
        const EdgeKey e = EdgeKey::of(a, b);
        if (g.has_edge(e)) {
            if (duplicates == DuplicatePolicy::Collapse) continue;
            throw Error(ErrorCode::DuplicateEdge, to_string(e));
        }
        g.add_edge(e);
    }
    return g;
}

inline Graph from_edge_list(std::size_t n, std::initializer_list<std::pair<NodeId, NodeId>> edges,
                            DuplicatePolicy duplicates = DuplicatePolicy::Error) {
    return from_edge_list(n, std::span<const std::pair<NodeId, NodeId>>(edges.begin(), edges.size()),
                          duplicates);
}

inline Graph remove_edge(Graph g, EdgeKey e) {
    g.remove_edge(e);
    return g;
}

inline Graph add_edge(Graph g, EdgeKey e) {
    g.add_edge(e);
    return g;
}

/// Checks symmetry, absence of self-loops and duplicates, and the handshake sum.
inline bool is_valid(const Graph& g) {
    std::size_t degree_sum = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        auto row = g.neighbors(v);
        degree_sum += row.size();
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i] == v || row[i] >= g.node_count()) return false;
            if (i > 0 && row[i - 1] >= row[i]) return false;
            auto back = g.neighbors(row[i]);
            if (!std::binary_search(back.begin(), back.end(), v)) return false;
        }
    }
    return degree_sum == 2 * g.edge_count();
}

namespace detail {

inline constexpr std::int32_t kUnreached = -1;

// BFS into caller-owned buffers; dist[v] == kUnreached for unreachable nodes.
// Returns the number of nodes reached. `skip` names an edge treated as absent.
inline std::size_t bfs_hops(const Graph& g, NodeId source, std::vector<std::int32_t>& dist,
                            std::vector<NodeId>& queue, const EdgeKey* skip = nullptr) {
    const std::size_t n = g.node_count();
    dist.assign(n, kUnreached);
    queue.resize(n);
    std::size_t head = 0, tail = 0;
    dist[source] = 0;
    queue[tail++] = source;
    while (head < tail) {
        const NodeId x = queue[head++];
        for (NodeId y : g.neighbors(x)) {
            if (dist[y] != kUnreached) continue;
            if (skip && ((x == skip->u && y == skip->v) || (x == skip->v && y == skip->u))) continue;
            dist[y] = dist[x] + 1;
            queue[tail++] = y;
        }
    }
    return tail;
}

}  // namespace detail

inline DistanceRow bfs_distances(const Graph& g, NodeId source) {
    if (source >= g.node_count())
        throw Error(ErrorCode::NodeOutOfRange, "source " + std::to_string(source));
    std::vector<std::int32_t> dist;
    std::vector<NodeId> queue;
    detail::bfs_hops(g, source, dist, queue);
    DistanceRow row(g.node_count());
    for (std::size_t v = 0; v < row.size(); ++v)
        row[v] = dist[v] == detail::kUnreached ? Distance::infinite()
                                               : Distance(static_cast<std::uint32_t>(dist[v]));
    return row;
}

/// Hop distance between two nodes, optionally ignoring one edge.
inline Distance hop_distance(const Graph& g, NodeId from, NodeId to,
                             const EdgeKey* ignored_edge = nullptr) {
    if (from >= g.node_count() || to >= g.node_count())
        throw Error(ErrorCode::NodeOutOfRange, "hop_distance endpoint");
    std::vector<std::int32_t> dist;
    std::vector<NodeId> queue;
    detail::bfs_hops(g, from, dist, queue, ignored_edge);
    return dist[to] == detail::kUnreached ? Distance::infinite()
                                          : Distance(static_cast<std::uint32_t>(dist[to]));
}

/// Source-indexed all-pairs distances.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::vector<DistanceRow> rows) : rows_(std::move(rows)) {}

    std::size_t size() const noexcept { return rows_.size(); }
    Distance operator()(NodeId s, NodeId t) const { return rows_[s][t]; }
    const DistanceRow& row(NodeId s) const { return rows_[s]; }

    bool all_finite() const {
        for (const auto& r : rows_)
            for (Distance d : r)
                if (d.is_infinite()) return false;
        return true;
    }

    /// Sum of d(s,t) over ordered pairs; only meaningful when all_finite().
    std::uint64_t ordered_hop_sum() const {
        std::uint64_t total = 0;
        for (const auto& r : rows_)
            for (Distance d : r)
                if (d.is_finite()) total += d.hops();
        return total;
    }

private:
    std::vector<DistanceRow> rows_;
};

inline DistanceMatrix all_pairs_distances(const Graph& g) {
    std::vector<DistanceRow> rows;
    rows.reserve(g.node_count());
    for (NodeId s = 0; s < g.node_count(); ++s) rows.push_back(bfs_distances(g, s));
    return DistanceMatrix(std::move(rows));
}

/// Component label per node; labels are assigned in order of smallest member.
inline std::vector<std::uint32_t> component_labels(const Graph& g, std::size_t* count = nullptr) {
    const std::size_t n = g.node_count();
    constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> label(n, kNone);
    std::vector<NodeId> stack;
    std::uint32_t next = 0;
    for (NodeId s = 0; s < n; ++s) {
        if (label[s] != kNone) continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            const NodeId x = stack.back();
            stack.pop_back();
            for (NodeId y : g.neighbors(x))
                if (label[y] == kNone) {
                    label[y] = next;
                    stack.push_back(y);
                }
        }
        ++next;
    }
    if (count) *count = next;
    return label;
}

inline std::vector<std::vector<NodeId>> connected_components(const Graph& g) {
    std::size_t count = 0;
    const auto label = component_labels(g, &count);
    std::vector<std::vector<NodeId>> out(count);
    for (NodeId v = 0; v < g.node_count(); ++v) out[label[v]].push_back(v);
    return out;
}

inline bool is_connected(const Graph& g) {
    if (g.node_count() <= 1) return true;
    std::vector<std::int32_t> dist;
    std::vector<NodeId> queue;
    return detail::bfs_hops(g, 0, dist, queue) == g.node_count();
}

/// Mean geodesic distance over all node pairs. Throws DisconnectedGraph.
inline double average_distance(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n < 2) return 0.0;
    std::vector<std::int32_t> dist;
    std::vector<NodeId> queue;
    std::uint64_t total = 0;
    for (NodeId s = 0; s < n; ++s) {
        if (detail::bfs_hops(g, s, dist, queue) != n)
            throw Error(ErrorCode::DisconnectedGraph, "average distance undefined");
        for (auto d : dist) total += static_cast<std::uint64_t>(d);
    }
    return static_cast<double>(total) / (static_cast<double>(n) * static_cast<double>(n - 1));
}

/// Degrees sorted non-increasing.
inline std::vector<std::size_t> degree_sequence(const Graph& g) {
    std::vector<std::size_t> seq(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) seq[v] = g.degree(v);
    std::sort(seq.begin(), seq.end(), std::greater<>());
    return seq;
}

inline double local_clustering(const Graph& g, NodeId v) {
    const auto nb = g.neighbors(v);
    const std::size_t k = nb.size();
    if (k < 2) return 0.0;
    std::size_t links = 0;
    for (std::size_t i = 0; i < k; ++i) {
        // count neighbours of nb[i] that are also in nb and larger than nb[i]
        auto other = g.neighbors(nb[i]);
        auto it_a = std::upper_bound(nb.begin(), nb.end(), nb[i]);
        auto it_b = std::upper_bound(other.begin(), other.end(), nb[i]);
        while (it_a != nb.end() && it_b != other.end()) {
            if (*it_a < *it_b) ++it_a;
            else if (*it_b < *it_a) ++it_b;
            else { ++links; ++it_a; ++it_b; }
        }
    }
    return 2.0 * static_cast<double>(links) / (static_cast<double>(k) * static_cast<double>(k - 1));
}

/// Average local clustering; nodes of degree < 2 contribute 0.
inline double clustering_coefficient(const Graph& g) {
    if (g.node_count() == 0) return 0.0;
    double total = 0.0;
    for (NodeId v = 0; v < g.node_count(); ++v) total += local_clustering(g, v);
    return total / static_cast<double>(g.node_count());
}

/// FNV-1a over (n, canonical edge list).
inline std::uint64_t fingerprint(const Graph& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xffU;
            h *= 0x100000001b3ULL;
        }
    };
    mix(g.node_count());
    for (EdgeKey e : g.edges()) {
        mix(e.u);
        mix(e.v);
    }
    return h;
}

}  // namespace netcomp

#endif  // NETCOMP_GRAPH_HPP
