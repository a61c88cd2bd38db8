#ifndef NETCOMP_EVOLUTION_HPP
#define NETCOMP_EVOLUTION_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netcomp/centrality.hpp"
#include "netcomp/error.hpp"
#include "netcomp/graph.hpp"
#include "netcomp/rng.hpp"
#include "netcomp/spectral.hpp"

namespace netcomp {

/// Per-node admission rule for new edges: node v may receive an edge from a
/// when measure(δ_a, δ_v) < threshold[a].
struct NodeConstraint {
    using Measure = std::function<double(std::span<const double>, std::span<const double>)>;

    std::vector<std::vector<double>> attributes;  // δ_i, assigned once before a run
    std::vector<double> thresholds;               // c_i
    Measure measure;

    static double euclidean(std::span<const double> a, std::span<const double> b) {
        double s = 0.0;
        for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
        return std::sqrt(s);
    }

    static NodeConstraint radius(std::vector<std::vector<double>> coords, std::vector<double> radii) {
        return {std::move(coords), std::move(radii), &NodeConstraint::euclidean};
    }

    bool covers(std::size_t n) const { return attributes.size() >= n && thresholds.size() >= n; }

    bool admits(NodeId a, NodeId v) const { return measure(attributes[a], attributes[v]) < thresholds[a]; }
};

struct EvolutionConfig {
    double rewiring_fraction = 0.1;  // P_rew
    std::optional<NodeConstraint> constraint;
    std::size_t record_metrics_every = 1;  // 0 disables per-step D̄
    std::uint64_t seed = 0;
    bool randomize_ties = false;  // break exact score ties with the seeded RNG
    bool final_fiedler = false;   // add λ2 to the initial/final snapshots
};

struct EvolutionStep {
    std::size_t index = 0;  // 1-based; extension steps continue past N_max
    EdgeKey cut_edge;
    EdgeKey added_edge;
    double psi_cut = 0.0;  // +inf when the cut edge was a bridge
    double psi_add = 0.0;
    bool disconnected_after_cut = false;
    bool closes_on_anchor = false;
    bool constraint_relaxed = false;
    std::optional<double> avg_distance;
};

struct MetricSnapshot {
    double avg_distance = 0.0;
    double clustering = 0.0;
    std::optional<double> fiedler;
};

struct ConservationReport {
    bool nodes = false;
    bool edges = false;
    bool connected = false;
    bool degree_sequence = false;

    bool all() const noexcept { return nodes && edges && connected && degree_sequence; }
};

struct EvolutionTrajectory {
    std::uint64_t initial_fingerprint = 0;
    std::size_t planned_steps = 0;  // N_max
    NodeId anchor = 0;              // b
    std::vector<EvolutionStep> steps;
    Graph final_graph;
    MetricSnapshot initial_metrics;
    MetricSnapshot final_metrics;
    ConservationReport conservation;
    std::vector<std::string> warnings;
};

/// N_max = ceil(P_rew·|E|); must exceed 1.
inline std::size_t step_budget(double rewiring_fraction, std::size_t edge_count) {
    // the small offset keeps 0.3·390 from rounding up to 118
    const double raw = rewiring_fraction * static_cast<double>(edge_count);
    const double steps = std::ceil(raw - 1e-9);
    if (!(raw > 1.0) || steps < 2.0)
        throw Error(ErrorCode::InvalidConfig, "P_rew·|E| = " + std::to_string(raw) + " must exceed 1");
    return static_cast<std::size_t>(steps);
}

struct InitialEdge {
    EdgeKey edge;
    NodeId pivot = 0;   // a, smaller-degree endpoint
    NodeId anchor = 0;  // b
    double betweenness = 0.0;
};

struct RemovalChoice {
    EdgeKey edge;
    double psi = 0.0;
};

struct AdditionChoice {
    NodeId node = 0;
    double psi = 0.0;
};

struct ConstrainedCandidates {
    std::vector<NodeId> nodes;
    bool relaxed = false;  // every candidate violated the constraint
};

namespace detail {

inline InitialEdge orient_initial(const Graph& g, EdgeKey e, double b) {
    const bool u_first = g.degree(e.u) <= g.degree(e.v);
    return {e, u_first ? e.u : e.v, u_first ? e.v : e.u, b};
}

// Index of the best score; lower wins when `minimize`. Exact ties (within
// kScoreTolerance) go to the earliest index, or to a uniform pick when rng is set.
inline std::size_t pick_best(std::span<const double> scores, bool minimize, Xoshiro256* rng) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < scores.size(); ++i) {
        const double s = scores[i], b = scores[best];
        const bool better = minimize ? (s < b - kScoreTolerance || (std::isinf(b) && !std::isinf(s)))
                                     : (s > b + kScoreTolerance);
        if (better) best = i;
    }
    if (!rng) return best;
    std::vector<std::size_t> tied;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        const double s = scores[i], b = scores[best];
        const bool same = (std::isinf(s) && std::isinf(b)) || std::abs(s - b) <= kScoreTolerance;
        if (same) tied.push_back(i);
    }
    return tied[rng->uniform_below(tied.size())];
}

inline std::vector<NodeId> removal_candidates(const Graph& g, NodeId pivot, EdgeKey forbidden) {
    std::vector<NodeId> out;
    for (NodeId v : g.neighbors(pivot))
        if (!(forbidden.touches(pivot) && v == forbidden.other(pivot))) out.push_back(v);
    if (out.empty())
        throw Error(ErrorCode::NoRemovalCandidate, "node " + std::to_string(pivot) +
                                                       " has no removable edge besides " +
                                                       to_string(forbidden));
    return out;
}

}  // namespace detail

/// The edge of smallest betweenness; ties go to the smallest canonical key.
inline InitialEdge select_initial_edge(const Graph& g) {
    if (g.edge_count() < 2) throw Error(ErrorCode::GraphTooSmall, "need at least two edges");
    const EdgeBetweennessMap bet = edge_betweenness_all(g);
    const std::size_t i = detail::pick_best(bet.values(), true, nullptr);
    return detail::orient_initial(g, bet.edges()[i], bet.values()[i]);
}

/// Cut choice at `pivot`: the incident edge (other than `forbidden`) with the
/// smallest ψ = B(e)·d_{g-e}(pivot, v). Bridges score +inf.
inline RemovalChoice select_removal_edge(const Graph& g, NodeId pivot, EdgeKey forbidden,
                                         const EdgeBetweennessMap& bet, Xoshiro256* tie_rng = nullptr) {
    const auto cands = detail::removal_candidates(g, pivot, forbidden);
    std::vector<double> scores;
    scores.reserve(cands.size());
    for (NodeId v : cands) {
        const EdgeKey e = EdgeKey::of(pivot, v);
        scores.push_back(psi_removal(g, e, bet.at(e)));
    }
    const std::size_t i = detail::pick_best(scores, true, tie_rng);
    return {EdgeKey::of(pivot, cands[i]), scores[i]};
}

inline RemovalChoice select_removal_edge(const Graph& g, NodeId pivot, EdgeKey forbidden) {
    return select_removal_edge(g, pivot, forbidden, edge_betweenness_all(g));
}

/// Nodes that may receive the new edge from `a` after a cut of (a, prev_cut_far_end).
/// Connected g_cut: everything except a and its pre-cut neighbourhood.
/// Split g_cut: the component not holding a, minus prev_cut_far_end.
/// `anchor_b`, when given, is excluded in both cases.
inline std::vector<NodeId> admissible_addition_set(const Graph& g_cut, NodeId a, NodeId prev_cut_far_end,
                                                   std::optional<NodeId> anchor_b = std::nullopt) {
    const std::size_t n = g_cut.node_count();
    if (a >= n || prev_cut_far_end >= n) throw Error(ErrorCode::NodeOutOfRange, "admissible set");
    std::size_t components = 0;
    const auto label = component_labels(g_cut, &components);
    std::vector<char> excluded(n, 0);
    excluded[a] = 1;
    excluded[prev_cut_far_end] = 1;
    if (anchor_b) excluded[*anchor_b] = 1;
    std::vector<NodeId> out;
    if (components <= 1) {
        for (NodeId v : g_cut.neighbors(a)) excluded[v] = 1;
        for (NodeId v = 0; v < n; ++v)
            if (!excluded[v]) out.push_back(v);
    } else {
        for (NodeId v = 0; v < n; ++v)
            if (!excluded[v] && label[v] != label[a]) out.push_back(v);
    }
    if (out.empty())
        throw Error(ErrorCode::EmptyAdmissibleSet, "no admissible partner for node " + std::to_string(a));
    return out;
}

/// Keeps the candidates v with f_a(v) < c_a; falls back to all candidates if
/// none qualify.
inline ConstrainedCandidates apply_node_constraint(std::span<const NodeId> candidates, NodeId a,
                                                   const NodeConstraint& constraint) {
    NodeId top = a;
    for (NodeId v : candidates) top = std::max(top, v);
    if (!constraint.covers(static_cast<std::size_t>(top) + 1) || !constraint.measure)
        throw Error(ErrorCode::MissingAttributes, "constraint does not cover node " + std::to_string(top));
    ConstrainedCandidates out;
    for (NodeId v : candidates)
        if (constraint.admits(a, v)) out.nodes.push_back(v);
    if (out.nodes.empty()) {
        out.nodes.assign(candidates.begin(), candidates.end());
        out.relaxed = true;
    }
    return out;
}

/// Partner for the new edge at `a`: the candidate maximising
/// ψ = B_{g_cut+e}(e)·d_{g_cut}(a, v); ties go to the smallest id.
inline AdditionChoice select_addition_node(const Graph& g_cut, NodeId a, std::span<const NodeId> candidates,
                                           Xoshiro256* tie_rng = nullptr) {
    if (candidates.empty()) throw Error(ErrorCode::EmptyCandidates, "node " + std::to_string(a));
    const detail::AllPairsPaths paths(g_cut);
    std::vector<double> scores;
    scores.reserve(candidates.size());
    for (NodeId v : candidates) {
        const EdgeKey e = EdgeKey::of(a, v);
        if (g_cut.has_edge(e)) throw Error(ErrorCode::EdgeAlreadyExists, to_string(e));
        const std::int32_t hops = paths.dist[a * paths.n + v];
        const Distance d = hops == detail::kUnreached ? Distance::infinite()
                                                      : Distance(static_cast<std::uint32_t>(hops));
        scores.push_back(paths.betweenness_if_added(a, v) * detail::addition_distance_factor(d));
    }
    const std::size_t i = detail::pick_best(scores, false, tie_rng);
    return {candidates[i], scores[i]};
}

inline MetricSnapshot snapshot(const Graph& g, bool with_fiedler) {
    MetricSnapshot m;
    m.avg_distance = is_connected(g) ? average_distance(g) : std::numeric_limits<double>::infinity();
    m.clustering = clustering_coefficient(g);
    if (with_fiedler) m.fiedler = fiedler_value(g);
    return m;
}

inline ConservationReport check_conservation(const Graph& before, const Graph& after) {
    return {before.node_count() == after.node_count(), before.edge_count() == after.edge_count(),
            is_connected(after), degree_sequence(before) == degree_sequence(after)};
}

/// Chain-selection strategy used by the driver.
template <class P>
concept RewiringPolicy = requires(P p, const Graph& cg, NodeId v, EdgeKey e,
                                  std::span<const NodeId> c) {
    { p.initial(cg) } -> std::same_as<InitialEdge>;
    { p.removal(cg, v, e) } -> std::same_as<RemovalChoice>;
    { p.addition(cg, v, c) } -> std::same_as<AdditionChoice>;
};

/// ψ-guided choices.
class EffectivePolicy {
public:
    explicit EffectivePolicy(const EvolutionConfig& cfg) : rng_(cfg.seed), randomize_(cfg.randomize_ties) {}

    InitialEdge initial(const Graph& g) {
        if (g.edge_count() < 2) throw Error(ErrorCode::GraphTooSmall, "need at least two edges");
        const EdgeBetweennessMap bet = edge_betweenness_all(g);
        const std::size_t i = detail::pick_best(bet.values(), true, tie_rng());
        return detail::orient_initial(g, bet.edges()[i], bet.values()[i]);
    }
    RemovalChoice removal(const Graph& g, NodeId pivot, EdgeKey forbidden) {
        return select_removal_edge(g, pivot, forbidden, edge_betweenness_all(g), tie_rng());
    }
    AdditionChoice addition(const Graph& g_cut, NodeId a, std::span<const NodeId> candidates) {
        return select_addition_node(g_cut, a, candidates, tie_rng());
    }

private:
    Xoshiro256* tie_rng() { return randomize_ ? &rng_ : nullptr; }
    Xoshiro256 rng_;
    bool randomize_;
};

namespace detail {

template <RewiringPolicy Policy>
class ChainRunner {
public:
    ChainRunner(const Graph& input, const EvolutionConfig& config, Policy& policy)
        : input_(input), config_(config), policy_(policy), g_(input) {}

    EvolutionTrajectory run() {
        if (!is_valid(input_)) throw Error(ErrorCode::InvalidConfig, "input is not a simple graph");
        if (!is_connected(input_)) throw Error(ErrorCode::DisconnectedGraph, "input must be connected");
        if (input_.edge_count() < 2) throw Error(ErrorCode::GraphTooSmall, "need at least two edges");
        if (config_.constraint && !config_.constraint->covers(input_.node_count()))
            throw Error(ErrorCode::MissingAttributes, "constraint attributes do not cover every node");

        traj_.planned_steps = step_budget(config_.rewiring_fraction, input_.edge_count());
        traj_.initial_fingerprint = fingerprint(input_);
        traj_.initial_metrics = snapshot(input_, config_.final_fiedler);

        // step 1: cut the initial edge (a, b), attach a elsewhere
        const InitialEdge init = policy_.initial(g_);
        anchor_ = init.anchor;
        traj_.anchor = anchor_;
        const double psi0 = psi_removal(g_, init.edge, init.betweenness);
        g_.remove_edge(init.edge);
        NodeId tip = init.pivot;
        EdgeKey added = attach(tip, anchor_, anchor_, {init.edge, psi0});

        // steps 2 .. N_max-1
        for (std::size_t i = 2; i < traj_.planned_steps; ++i) {
            const NodeId pivot = added.other(tip);
            const RemovalChoice cut = policy_.removal(g_, pivot, added);
            g_.remove_edge(cut.edge);
            tip = cut.edge.other(pivot);
            added = attach(tip, pivot, std::nullopt, {cut.edge, cut.psi});
        }

        // step N_max, plus extension steps while the chain cannot close on b
        NodeId pivot = added.other(tip);
        RemovalChoice cut = policy_.removal(g_, pivot, added);
        g_.remove_edge(cut.edge);
        tip = cut.edge.other(pivot);
        for (std::size_t relocations = 0; !can_close(tip, pivot); ++relocations) {
            if (relocations >= input_.node_count())
                throw Error(ErrorCode::DuplicateClosingEdge,
                            "could not close the chain on node " + std::to_string(anchor_));
            added = attach(tip, pivot, std::nullopt, {cut.edge, cut.psi});
            pivot = added.other(tip);
            cut = policy_.removal(g_, pivot, added);
            g_.remove_edge(cut.edge);
            tip = cut.edge.other(pivot);
        }
        close(tip, cut);

        traj_.final_graph = g_;
        traj_.final_metrics = snapshot(g_, config_.final_fiedler);
        traj_.conservation = check_conservation(input_, g_);
        return std::move(traj_);
    }

private:
    struct PendingCut {
        EdgeKey edge;
        double psi;
    };

    // Closing re-adds the edge just cut when the cut started at b itself.
    bool can_close(NodeId tip, NodeId pivot) const {
        if (tip == anchor_ || pivot == anchor_ || g_.has_edge(tip, anchor_)) return false;
        if (is_connected(g_)) return true;
        const auto label = component_labels(g_);
        return label[tip] != label[anchor_];
    }

    // Adds the ψ-selected edge at `tip` after the cut of (tip, far_end).
    EdgeKey attach(NodeId tip, NodeId far_end, std::optional<NodeId> anchor, PendingCut cut) {
        EvolutionStep step;
        step.cut_edge = cut.edge;
        step.psi_cut = cut.psi;
        step.disconnected_after_cut = !is_connected(g_);
        std::vector<NodeId> cands = admissible_addition_set(g_, tip, far_end, anchor);
        if (config_.constraint) {
            ConstrainedCandidates cc = apply_node_constraint(cands, tip, *config_.constraint);
            if (cc.relaxed) {
                step.constraint_relaxed = true;
                traj_.warnings.push_back("step " + std::to_string(traj_.steps.size() + 1) +
                                         ": no candidate satisfies the node constraint for node " +
                                         std::to_string(tip) + "; using the unconstrained set");
            }
            cands = std::move(cc.nodes);
        }
        const AdditionChoice pick = policy_.addition(g_, tip, cands);
        step.added_edge = EdgeKey::of(tip, pick.node);
        step.psi_add = pick.psi;
        g_.add_edge(step.added_edge);
        record(step);
        return step.added_edge;
    }

    void close(NodeId tip, const RemovalChoice& cut) {
        EvolutionStep step;
        step.cut_edge = cut.edge;
        step.psi_cut = cut.psi;
        step.disconnected_after_cut = !is_connected(g_);
        step.added_edge = EdgeKey::of(tip, anchor_);
        step.psi_add = psi_addition(g_, step.added_edge);
        step.closes_on_anchor = true;
        g_.add_edge(step.added_edge);
        record(step);
    }

    void record(EvolutionStep& step) {
        step.index = traj_.steps.size() + 1;
        const std::size_t every = config_.record_metrics_every;
        if (every > 0 && step.index % every == 0) step.avg_distance = average_distance(g_);
        traj_.steps.push_back(step);
    }

    const Graph& input_;
    const EvolutionConfig& config_;
    Policy& policy_;
    Graph g_;
    NodeId anchor_ = 0;
    EvolutionTrajectory traj_;
};

}  // namespace detail

/// Runs the cut/add chain with an arbitrary selection policy.
template <RewiringPolicy Policy>
EvolutionTrajectory run_chain(const Graph& g, const EvolutionConfig& config, Policy& policy) {
    return detail::ChainRunner<Policy>(g, config, policy).run();
}

/// ψ-guided compression evolution. The result keeps |V|, |E|, connectivity and
/// the degree sequence of `g`.
inline EvolutionTrajectory compress(const Graph& g, const EvolutionConfig& config) {
    EffectivePolicy policy(config);
    return run_chain(g, config, policy);
}

}  // namespace netcomp

#endif  // NETCOMP_EVOLUTION_HPP
