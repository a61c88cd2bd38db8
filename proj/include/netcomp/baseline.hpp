#ifndef NETCOMP_BASELINE_HPP
#define NETCOMP_BASELINE_HPP

#include <span>

#include "netcomp/centrality.hpp"
#include "netcomp/evolution.hpp"
#include "netcomp/rng.hpp"

namespace netcomp {

/// Same chain mechanics as the ψ-guided evolution, with every choice drawn
/// uniformly from the admissible candidates. ψ of each choice is still
/// computed so trajectories are comparable.
class RandomPolicy {
public:
    explicit RandomPolicy(std::uint64_t seed) : rng_(seed) {}

    InitialEdge initial(const Graph& g) {
        if (g.edge_count() < 2) throw Error(ErrorCode::GraphTooSmall, "need at least two edges");
        const auto edges = g.edges();
        const EdgeKey e = edges[rng_.uniform_below(edges.size())];
        return detail::orient_initial(g, e, edge_betweenness_single(g, e));
    }

    RemovalChoice removal(const Graph& g, NodeId pivot, EdgeKey forbidden) {
        const auto cands = detail::removal_candidates(g, pivot, forbidden);
        const EdgeKey e = EdgeKey::of(pivot, cands[rng_.uniform_below(cands.size())]);
        return {e, psi_removal(g, e)};
    }

    AdditionChoice addition(const Graph& g_cut, NodeId a, std::span<const NodeId> candidates) {
        if (candidates.empty()) throw Error(ErrorCode::EmptyCandidates, "node " + std::to_string(a));
        const NodeId v = candidates[rng_.uniform_below(candidates.size())];
        return {v, psi_addition(g_cut, EdgeKey::of(a, v))};
    }

private:
    Xoshiro256 rng_;
};

/// Random-rewiring comparator, seeded by config.seed.
inline EvolutionTrajectory random_rewire(const Graph& g, const EvolutionConfig& config) {
    RandomPolicy policy(config.seed);
    return run_chain(g, config, policy);
}

}  // namespace netcomp

#endif  // NETCOMP_BASELINE_HPP
