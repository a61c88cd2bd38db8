#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <optional>
#include <random>

#include "netcomp/bounds.hpp"
#include "netcomp/evolution.hpp"
#include "netcomp/generators.hpp"
#include "netcomp/profile.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace netcomp;

namespace {

constexpr double kTol = 1e-9;

double oracle_psi_removal(const Graph& g, EdgeKey e) {
    if (oracle::is_bridge(g, e)) return std::numeric_limits<double>::infinity();
    const auto d = oracle::floyd_warshall(remove_edge(g, e));
    return oracle::betweenness_of(g, e) * d[e.u][e.v];
}

double oracle_psi_addition(const Graph& g_cut, EdgeKey e) {
    const auto d = oracle::floyd_warshall(g_cut);
    const double factor = d[e.u][e.v] >= oracle::kInf ? 1.0 : d[e.u][e.v];
    return oracle::betweenness_of(add_edge(g_cut, e), e) * factor;
}

bool same_score(double a, double b) {
    return (std::isinf(a) && std::isinf(b)) || std::abs(a - b) <= kTol;
}

// Replays a trajectory on `input`, checking the chain structure, conservation
// after every step, the degree deficit carried by the chain, the removal bound for
// every cut and, when `greedy`, that each choice is the oracle optimum with
// the smallest-id tie rule.
void replay(const Graph& input, const EvolutionTrajectory& t, bool greedy) {
    Graph g = input;
    const NodeId b = t.anchor;
    std::vector<std::size_t> deg0(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) deg0[v] = g.degree(v);
    std::optional<EdgeKey> prev_added;
    ASSERT_GE(t.steps.size(), t.planned_steps);

    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        const EvolutionStep& s = t.steps[i];
        SCOPED_TRACE("step " + std::to_string(i + 1));
        ASSERT_EQ(s.index, i + 1);
        ASSERT_NE(s.cut_edge, s.added_edge);
        ASSERT_TRUE(g.has_edge(s.cut_edge));

        NodeId tip, far_end;
        if (i == 0) {
            ASSERT_TRUE(s.cut_edge.touches(b));
            tip = s.cut_edge.other(b);
            far_end = b;
            ASSERT_LE(g.degree(tip), g.degree(b));
            if (g.degree(tip) == g.degree(b)) ASSERT_LT(tip, b);
            if (greedy) {
                const auto bet = oracle::betweenness(g);
                double best = std::numeric_limits<double>::infinity();
                for (auto [e, v] : bet) best = std::min(best, v);
                ASSERT_TRUE(same_score(bet.at(s.cut_edge), best));
                for (auto [e, v] : bet) {
                    if (!same_score(v, best)) continue;
                    ASSERT_EQ(e, s.cut_edge);  // first tied key in canonical order
                    break;
                }
            }
        } else {
            ASSERT_NE(s.cut_edge, *prev_added);
            const NodeId pivot = prev_added->touches(s.cut_edge.u) ? s.cut_edge.u : s.cut_edge.v;
            ASSERT_TRUE(prev_added->touches(pivot));
            tip = s.cut_edge.other(pivot);
            far_end = pivot;
            if (greedy) {
                double best = std::numeric_limits<double>::infinity();
                std::map<NodeId, double> scores;
                for (NodeId v : g.neighbors(pivot)) {
                    const EdgeKey e = EdgeKey::of(pivot, v);
                    if (e == *prev_added) continue;
                    scores[v] = oracle_psi_removal(g, e);
                    if (scores[v] < best) best = scores[v];
                }
                ASSERT_TRUE(same_score(scores.at(tip), best));
                for (auto [v, sc] : scores)
                    if (same_score(sc, best)) {
                        ASSERT_EQ(v, tip);
                        break;
                    }
                ASSERT_TRUE(same_score(s.psi_cut, best));
            }
        }
        if (!oracle::is_bridge(g, s.cut_edge))
            ASSERT_LE(delta_on_removal(g, s.cut_edge).mean_change(), removal_upper_bound(g, s.cut_edge) + kTol);

        g.remove_edge(s.cut_edge);
        ASSERT_EQ(s.disconnected_after_cut, !oracle::connected_without(g, nullptr));
        ASSERT_TRUE(s.added_edge.touches(tip));
        const NodeId partner = s.added_edge.other(tip);
        if (s.closes_on_anchor) {
            ASSERT_EQ(i + 1, t.steps.size());
            ASSERT_EQ(partner, b);
        } else if (greedy) {
            const auto cands = admissible_addition_set(g, tip, far_end, i == 0 ? std::optional<NodeId>(b) : std::nullopt);
            double best = -1.0;
            std::map<NodeId, double> scores;
            for (NodeId v : cands) {
                scores[v] = oracle_psi_addition(g, EdgeKey::of(tip, v));
                best = std::max(best, scores[v]);
            }
            ASSERT_TRUE(scores.count(partner));
            ASSERT_NEAR(scores.at(partner), best, kTol);
            for (auto [v, sc] : scores)
                if (std::abs(sc - best) <= kTol) {
                    ASSERT_EQ(v, partner);
                    break;
                }
            ASSERT_NEAR(s.psi_add, best, kTol);
        }
        g.add_edge(s.added_edge);

        ASSERT_TRUE(is_valid(g));
        ASSERT_EQ(g.edge_count(), input.edge_count());
        ASSERT_TRUE(oracle::connected_without(g, nullptr));
        if (s.avg_distance) ASSERT_NEAR(*s.avg_distance, oracle::average_distance(g), 1e-12);

        // b is one short and the head of the chain one over, unless they coincide
        std::map<NodeId, long> expect;
        if (i + 1 < t.steps.size()) {
            expect[b] -= 1;
            expect[partner] += 1;
        }
        for (NodeId v = 0; v < g.node_count(); ++v) {
            const long dev = static_cast<long>(g.degree(v)) - static_cast<long>(deg0[v]);
            ASSERT_EQ(dev, expect.count(v) ? expect[v] : 0) << "node " << v;
        }
        prev_added = s.added_edge;
    }
    ASSERT_EQ(g, t.final_graph);
    ASSERT_TRUE(t.conservation.nodes && t.conservation.edges && t.conservation.connected &&
                t.conservation.degree_sequence);
}

EvolutionConfig config_for(double fraction, std::uint64_t seed = 1) {
    EvolutionConfig c;
    c.rewiring_fraction = fraction;
    c.seed = seed;
    return c;
}

}  // namespace

TEST(StepBudget, CeilingAndPrecondition) {
    EXPECT_EQ(step_budget(0.2, 200), 40u);
    EXPECT_EQ(step_budget(0.3, 390), 117u);
    EXPECT_EQ(step_budget(0.34, 6), 3u);
    EXPECT_EQ(code_of([] { step_budget(0.001, 50); }), ErrorCode::InvalidConfig);
    EXPECT_EQ(code_of([] { step_budget(0.02, 50); }), ErrorCode::InvalidConfig);
}

TEST(InitialEdge, TieRule) {
    const auto c4 = select_initial_edge(oracle::cycle(4));
    EXPECT_EQ(c4.edge, EdgeKey::of(0, 1));
    EXPECT_EQ(c4.pivot, 0u);
    EXPECT_EQ(c4.anchor, 1u);
    const auto k3 = select_initial_edge(oracle::complete(3));
    EXPECT_EQ(k3.edge, EdgeKey::of(0, 1));
    EXPECT_EQ(k3.pivot, 0u);
    EXPECT_EQ(code_of([] { select_initial_edge(oracle::path(2)); }), ErrorCode::GraphTooSmall);
}

TEST(InitialEdge, PivotIsSmallerDegreeEndpoint) {
    // both edges of the path 1-0-2 have B 2; (0,1) wins the tie and leaf 1 is the pivot
    const auto init = select_initial_edge(from_edge_list(3, {{0, 1}, {0, 2}}));
    EXPECT_EQ(init.edge, EdgeKey::of(0, 1));
    EXPECT_EQ(init.pivot, 1u);
    EXPECT_EQ(init.anchor, 0u);
    // in a triangle with a tail the zero-betweenness edge (0,1) comes first
    EXPECT_EQ(select_initial_edge(from_edge_list(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}})).edge, EdgeKey::of(0, 1));
}

TEST(RemovalEdge, Examples) {
    EXPECT_EQ(code_of([] { select_removal_edge(oracle::path(3), 0, EdgeKey::of(0, 1)); }),
              ErrorCode::NoRemovalCandidate);
    // node 2 has the bridge (2,3) and the cycle edge (1,2)
    const Graph tail = from_edge_list(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    EXPECT_EQ(select_removal_edge(tail, 2, EdgeKey::of(0, 2)).edge, EdgeKey::of(1, 2));
    EXPECT_EQ(select_removal_edge(oracle::cycle(4), 0, EdgeKey::of(0, 1)).edge, EdgeKey::of(0, 3));
    const auto bridge_only = select_removal_edge(tail, 2, EdgeKey::of(1, 2));
    EXPECT_TRUE(std::isinf(select_removal_edge(tail, 3, EdgeKey::of(0, 1)).psi));
    EXPECT_EQ(bridge_only.edge, EdgeKey::of(0, 2));
}

TEST(AdmissibleSet, Examples) {
    const Graph cut = remove_edge(oracle::cycle(4), EdgeKey::of(0, 1));
    EXPECT_EQ(admissible_addition_set(cut, 1, 0, 0), (std::vector<NodeId>{3}));

    // two triangles joined by (2,3); cutting it leaves a in {0,1,2}
    const Graph split = from_edge_list(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    const auto cands = admissible_addition_set(split, 2, 3);
    EXPECT_EQ(cands, (std::vector<NodeId>{4, 5}));
    EXPECT_EQ(admissible_addition_set(split, 2, 3, 4), (std::vector<NodeId>{5}));

    const Graph tri_cut = remove_edge(oracle::complete(3), EdgeKey::of(0, 1));
    EXPECT_EQ(code_of([&] { admissible_addition_set(tri_cut, 0, 1); }), ErrorCode::EmptyAdmissibleSet);
}

TEST(NodeConstraint, Examples) {
    auto c = NodeConstraint::radius({{0.0}, {1.0}, {2.0}}, {1.5, 1.5, 1.5});
    const std::vector<NodeId> cands{1, 2};
    auto kept = apply_node_constraint(cands, 0, c);
    EXPECT_EQ(kept.nodes, (std::vector<NodeId>{1}));
    EXPECT_FALSE(kept.relaxed);

    c.thresholds[0] = std::numeric_limits<double>::infinity();
    EXPECT_EQ(apply_node_constraint(cands, 0, c).nodes, cands);

    c.thresholds[0] = 0.5;
    auto fallback = apply_node_constraint(cands, 0, c);
    EXPECT_EQ(fallback.nodes, cands);
    EXPECT_TRUE(fallback.relaxed);

    const auto short_attrs = NodeConstraint::radius({{0.0}}, {1.0});
    EXPECT_EQ(code_of([&] { apply_node_constraint(cands, 0, short_attrs); }), ErrorCode::MissingAttributes);
}

TEST(AdditionNode, Examples) {
    const Graph cut = remove_edge(oracle::cycle(4), EdgeKey::of(0, 1));
    const std::vector<NodeId> one{3};
    EXPECT_EQ(select_addition_node(cut, 1, one).node, 3u);

    const Graph c6_cut = remove_edge(oracle::cycle(6), EdgeKey::of(0, 1));
    const std::vector<NodeId> two{3, 4};
    const auto pick = select_addition_node(c6_cut, 1, two);
    const double s3 = oracle_psi_addition(c6_cut, EdgeKey::of(1, 3));
    const double s4 = oracle_psi_addition(c6_cut, EdgeKey::of(1, 4));
    EXPECT_EQ(pick.node, s4 > s3 + kTol ? 4u : 3u);
    EXPECT_NEAR(pick.psi, std::max(s3, s4), kTol);

    const std::vector<NodeId> leaves{2, 3};
    const auto zero = select_addition_node(oracle::star(3), 1, leaves);
    EXPECT_EQ(zero.node, 2u);
    EXPECT_NEAR(zero.psi, 0.0, kTol);

    EXPECT_EQ(code_of([&] { select_addition_node(cut, 1, {}); }), ErrorCode::EmptyCandidates);
    const std::vector<NodeId> dup{2};
    EXPECT_EQ(code_of([&] { select_addition_node(cut, 1, dup); }), ErrorCode::EdgeAlreadyExists);
}

TEST(Compress, InputValidation) {
    EXPECT_EQ(code_of([] { compress(oracle::cycle(50), config_for(0.001)); }), ErrorCode::InvalidConfig);
    EXPECT_EQ(code_of([] { compress(from_edge_list(4, {{0, 1}, {2, 3}}), config_for(1.0)); }),
              ErrorCode::DisconnectedGraph);
    EvolutionConfig cfg = config_for(0.5);
    cfg.constraint = NodeConstraint::radius({{0.0}}, {1.0});
    EXPECT_EQ(code_of([&] { compress(oracle::cycle(6), cfg); }), ErrorCode::MissingAttributes);
}

TEST(Compress, CycleOfSixRunsAtLeastThreeSteps) {
    const Graph c6 = oracle::cycle(6);
    const auto t = compress(c6, config_for(0.34));
    EXPECT_EQ(t.planned_steps, 3u);
    EXPECT_GE(t.steps.size(), 3u);
    EXPECT_TRUE(t.conservation.degree_sequence);
    replay(c6, t, true);
}

TEST(Compress, WsShrinksDistance) {
    const Graph g = ws_network({100, 4, 0.5}, 1);
    const auto t = compress(g, config_for(0.2));
    EXPECT_LT(t.final_metrics.avg_distance, t.initial_metrics.avg_distance);
    EXPECT_EQ(degree_sequence(t.final_graph), degree_sequence(g));
    EXPECT_TRUE(is_connected(t.final_graph));
    replay(g, t, false);
}

TEST(Compress, BaShrinksDistance) {
    const Graph g = ba_network({100, 4}, 1);
    const auto t = compress(g, config_for(0.2));
    EXPECT_LT(t.final_metrics.avg_distance, t.initial_metrics.avg_distance);
    replay(g, t, false);
}

TEST(Compress, GreedyChoicesMatchOracleOnSmallGraphs) {
    std::mt19937_64 rng(77);
    int completed = 0;
    for (int i = 0; i < 120; ++i) {
        const Graph g = oracle::random_connected(rng, 6 + rng() % 5, 0.35);
        if (g.edge_count() < 6) continue;
        try {
            const auto t = compress(g, config_for(0.5));
            replay(g, t, true);
            if (::testing::Test::HasFatalFailure()) return;
            ++completed;
        } catch (const Error& e) {
            // tiny graphs can run out of candidates; anything else is a bug
            const auto c = e.code();
            ASSERT_TRUE(c == ErrorCode::EmptyAdmissibleSet || c == ErrorCode::NoRemovalCandidate ||
                        c == ErrorCode::DuplicateClosingEdge)
                << e.what();
        }
    }
    EXPECT_GE(completed, 60);
}

TEST(Compress, ConservationAcrossGenerators) {
    const std::vector<GeneratorParams> kinds{BaParams{60, 3}, WsParams{60, 4, 0.5}, ErParams{60, 0.1},
                                             MultiPopParams{3, 20, 4, 0.5, 2}};
    for (const auto& params : kinds)
        for (double f : {0.1, 0.3}) {
            const Graph g = generate({params, 3});
            const auto t = compress(g, config_for(f));
            replay(g, t, false);
            if (HasFatalFailure()) return;
        }
}

TEST(Compress, DeterministicAndSeededTieBreaks) {
    const Graph g = ws_network({40, 4, 0.3}, 8);
    const auto a = compress(g, config_for(0.3));
    const auto b = compress(g, config_for(0.3, 99));
    EXPECT_EQ(a.final_graph, b.final_graph);  // seed only matters for randomized ties

    EvolutionConfig r1 = config_for(0.3, 5), r2 = config_for(0.3, 5);
    r1.randomize_ties = r2.randomize_ties = true;
    EXPECT_EQ(compress(g, r1).final_graph, compress(g, r2).final_graph);
    replay(g, compress(g, r1), false);
}

TEST(Compress, ConstraintRespectedOrFlagged) {
    const Graph g = ws_network({40, 4, 0.3}, 2);
    std::vector<std::vector<double>> coords;
    for (NodeId v = 0; v < g.node_count(); ++v) coords.push_back({std::cos(v * 0.157), std::sin(v * 0.157)});
    EvolutionConfig cfg = config_for(0.3);
    cfg.constraint = NodeConstraint::radius(coords, std::vector<double>(g.node_count(), 0.8));
    const auto t = compress(g, cfg);
    std::size_t relaxed = 0;
    for (const auto& s : t.steps) {
        if (s.closes_on_anchor) continue;
        if (s.constraint_relaxed) {
            ++relaxed;
            continue;
        }
        const NodeId tip = s.added_edge.touches(s.cut_edge.u) ? s.cut_edge.u : s.cut_edge.v;
        const NodeId partner = s.added_edge.other(tip);
        EXPECT_TRUE(cfg.constraint->admits(tip, partner));
    }
    EXPECT_EQ(relaxed, t.warnings.size());
    EXPECT_TRUE(t.conservation.degree_sequence);

    EvolutionConfig open = config_for(0.3);
    open.constraint = NodeConstraint::radius(coords, std::vector<double>(g.node_count(),
                                                                         std::numeric_limits<double>::infinity()));
    EXPECT_EQ(compress(g, open).final_graph, compress(g, config_for(0.3)).final_graph);

    EvolutionConfig shut = config_for(0.3);
    shut.constraint = NodeConstraint::radius(coords, std::vector<double>(g.node_count(), 0.0));
    const auto closed = compress(g, shut);
    EXPECT_FALSE(closed.warnings.empty());
    EXPECT_EQ(closed.final_graph, compress(g, config_for(0.3)).final_graph);
}

TEST(Profile, ZeroFractionIsIdentity) {
    const Graph g = ws_network({50, 4, 0.5}, 1);
    const std::vector<double> f{0.0};
    const std::vector<std::uint64_t> seeds{1, 2};
    const auto rows = compression_profile(g, f, seeds);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_DOUBLE_EQ(rows[0].avg_distance.mean, average_distance(g));
    EXPECT_DOUBLE_EQ(rows[0].clustering.mean, clustering_coefficient(g));
    const std::vector<double> unsorted{0.2, 0.1};
    EXPECT_EQ(code_of([&] { compression_profile(g, unsorted, seeds); }), ErrorCode::InvalidConfig);
    EXPECT_EQ(code_of([&] { compression_profile(g, f, {}); }), ErrorCode::InvalidConfig);
}

TEST(Profile, WsDistanceFallsWithFraction) {
    const std::vector<double> f{0.1, 0.2, 0.3};
    const std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
    const auto rows = compression_profile([](std::uint64_t s) { return ws_network({100, 4, 0.5}, s); }, f, seeds,
                                          Method::Effective, false);
    for (std::size_t i = 1; i < rows.size(); ++i)
        EXPECT_LE(rows[i].avg_distance.mean, rows[i - 1].avg_distance.mean + rows[i - 1].avg_distance.stddev);
}

TEST(Summary, MeanAndSampleDeviation) {
    const std::vector<double> xs{1.0, 2.0, 3.0, 4.0};
    const auto s = summarize(xs);
    EXPECT_DOUBLE_EQ(s.mean, 2.5);
    EXPECT_NEAR(s.stddev, std::sqrt(5.0 / 3.0), 1e-12);
    EXPECT_NEAR(s.standard_error(), std::sqrt(5.0 / 3.0) / 2.0, 1e-12);
}
