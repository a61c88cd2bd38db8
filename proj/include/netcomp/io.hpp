#ifndef NETCOMP_IO_HPP
#define NETCOMP_IO_HPP

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "netcomp/error.hpp"
#include "netcomp/evolution.hpp"
#include "netcomp/graph.hpp"

namespace netcomp {

/// Graph plus the external label of every node.
struct LabeledGraph {
    Graph graph;
    std::vector<std::string> labels;  // labels[id]
};

inline std::vector<std::string> numeric_labels(std::size_t n) {
    std::vector<std::string> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = std::to_string(i);
    return out;
}

namespace detail {

inline std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ' ' || ch == '\t' || ch == ',' || ch == '\r') {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

inline bool is_blank_or_comment(const std::string& line) {
    const auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == '#';
}

inline std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
    return in;
}

inline std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
    return out;
}

}  // namespace detail

/// Edge list: one "u v" pair per line, '#' lines ignored, labels mapped to
/// dense ids in order of first appearance.
inline LabeledGraph read_edge_list(std::istream& in, DuplicatePolicy duplicates = DuplicatePolicy::Error) {
    std::unordered_map<std::string, NodeId> ids;
    std::vector<std::string> labels;
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::vector<std::size_t> line_of;
    auto id_of = [&](const std::string& label) {
        auto [it, fresh] = ids.try_emplace(label, static_cast<NodeId>(labels.size()));
        if (fresh) labels.push_back(label);
        return it->second;
    };
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        if (detail::is_blank_or_comment(line)) continue;
        const auto fields = detail::split_fields(line);
        if (fields.size() != 2)
            throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected two labels");
        if (fields[0] == fields[1])
            throw Error(ErrorCode::SelfLoop, "line " + std::to_string(lineno) + ": " + fields[0]);
        const NodeId a = id_of(fields[0]);
        const NodeId b = id_of(fields[1]);
        edges.emplace_back(a, b);
        line_of.push_back(lineno);
    }
    LabeledGraph out{Graph(labels.size()), std::move(labels)};
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const EdgeKey e = EdgeKey::of(edges[i].first, edges[i].second);
        if (out.graph.has_edge(e)) {
            if (duplicates == DuplicatePolicy::Collapse) continue;
            throw Error(ErrorCode::DuplicateEdge, "line " + std::to_string(line_of[i]) + ": " +
                                                      out.labels[e.u] + " " + out.labels[e.v]);
        }
        out.graph.add_edge(e);
    }
    return out;
}

inline LabeledGraph read_edge_list(const std::filesystem::path& path,
                                   DuplicatePolicy duplicates = DuplicatePolicy::Error) {
    auto in = detail::open_in(path);
    return read_edge_list(in, duplicates);
}

inline void write_edge_list(const Graph& g, std::ostream& out, const std::vector<std::string>* labels = nullptr) {
    for (EdgeKey e : g.edges()) {
        if (labels) out << (*labels)[e.u] << ' ' << (*labels)[e.v] << '\n';
        else out << e.u << ' ' << e.v << '\n';
    }
}

inline void write_edge_list(const Graph& g, const std::filesystem::path& path,
                            const std::vector<std::string>* labels = nullptr) {
    auto out = detail::open_out(path);
    write_edge_list(g, out, labels);
}

/// Induced subgraph on the largest connected component (ties: the one with
/// the smallest node id), relabelled densely in id order.
inline LabeledGraph largest_component(const LabeledGraph& in) {
    const auto comps = connected_components(in.graph);
    if (comps.empty()) return in;
    std::size_t best = 0;
    for (std::size_t i = 1; i < comps.size(); ++i)
        if (comps[i].size() > comps[best].size()) best = i;
    const auto& keep = comps[best];
    std::vector<NodeId> remap(in.graph.node_count(), std::numeric_limits<NodeId>::max());
    for (std::size_t i = 0; i < keep.size(); ++i) remap[keep[i]] = static_cast<NodeId>(i);
    LabeledGraph out{Graph(keep.size()), {}};
    for (NodeId v : keep) out.labels.push_back(in.labels[v]);
    for (EdgeKey e : in.graph.edges())
        if (remap[e.u] != std::numeric_limits<NodeId>::max()) out.graph.add_edge({remap[e.u], remap[e.v]});
    return out;
}

/// Node attribute file: "label c_i δ_1 δ_2 ..." per line (whitespace or comma
/// separated). Produces a Euclidean radius constraint.
inline NodeConstraint read_node_constraint(std::istream& in, const std::vector<std::string>& labels) {
    std::unordered_map<std::string, NodeId> ids;
    for (std::size_t i = 0; i < labels.size(); ++i) ids.emplace(labels[i], static_cast<NodeId>(i));
    std::vector<std::vector<double>> attrs(labels.size());
    std::vector<double> thresholds(labels.size(), 0.0);
    std::vector<char> seen(labels.size(), 0);
    auto number = [](const std::string& s, std::size_t lineno) {
        double v = 0.0;
        if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size())
            throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": bad number '" + s + "'");
        return v;
    };
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        if (detail::is_blank_or_comment(line)) continue;
        const auto fields = detail::split_fields(line);
        if (fields.size() < 2)
            throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": need label and threshold");
        auto it = ids.find(fields[0]);
        if (it == ids.end()) continue;  // node not in the graph (e.g. outside the largest component)
        const NodeId id = it->second;
        thresholds[id] = number(fields[1], lineno);
        attrs[id].clear();
        for (std::size_t i = 2; i < fields.size(); ++i) attrs[id].push_back(number(fields[i], lineno));
        seen[id] = 1;
    }
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (!seen[i]) throw Error(ErrorCode::MissingAttributes, "no attributes for node " + labels[i]);
    return NodeConstraint::radius(std::move(attrs), std::move(thresholds));
}

inline NodeConstraint read_node_constraint(const std::filesystem::path& path, const std::vector<std::string>& labels) {
    auto in = detail::open_in(path);
    return read_node_constraint(in, labels);
}

/// Shortest round-trip decimal form; "inf" for infinity.
inline std::string format_number(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (std::isnan(x)) return "nan";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

inline constexpr const char* kTrajectoryHeader =
    "step,cut_u,cut_v,add_u,add_v,psi_cut,psi_add,disconnected_after_cut,avg_distance";

inline void write_trajectory_csv(const EvolutionTrajectory& t, std::ostream& out,
                                 const std::vector<std::string>* labels = nullptr) {
    auto name = [&](NodeId v) { return labels ? (*labels)[v] : std::to_string(v); };
    out << kTrajectoryHeader << '\n';
    for (const auto& s : t.steps) {
        out << s.index << ',' << name(s.cut_edge.u) << ',' << name(s.cut_edge.v) << ','
            << name(s.added_edge.u) << ',' << name(s.added_edge.v) << ',' << format_number(s.psi_cut) << ','
            << format_number(s.psi_add) << ',' << (s.disconnected_after_cut ? "true" : "false") << ','
            << (s.avg_distance ? format_number(*s.avg_distance) : "") << '\n';
    }
}

inline nlohmann::json metrics_json(const MetricSnapshot& m) {
    nlohmann::json j;
    j["avg_distance"] = m.avg_distance;
    j["clustering"] = m.clustering;
    j["fiedler"] = m.fiedler ? nlohmann::json(*m.fiedler) : nlohmann::json(nullptr);
    return j;
}

/// Run summary. Keys are stable; the four conservation booleans are always present.
inline nlohmann::json summary_json(const EvolutionTrajectory& t, const std::string& method, double p_rew,
                                   std::uint64_t seed) {
    nlohmann::json j;
    j["method"] = method;
    j["p_rew"] = p_rew;
    j["seed"] = seed;
    j["nodes"] = t.final_graph.node_count();
    j["edges"] = t.final_graph.edge_count();
    j["planned_steps"] = t.planned_steps;
    j["executed_steps"] = t.steps.size();
    j["initial_fingerprint"] = t.initial_fingerprint;
    j["initial"] = metrics_json(t.initial_metrics);
    j["final"] = metrics_json(t.final_metrics);
    j["conservation"] = {
        {"nodes_preserved", t.conservation.nodes},
        {"edges_preserved", t.conservation.edges},
        {"connectivity_preserved", t.conservation.connected},
        {"degree_sequence_preserved", t.conservation.degree_sequence},
    };
    j["warnings"] = t.warnings;
    return j;
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
    // write-then-rename so a reader never sees a partial file
    auto tmp = path;
    tmp += ".tmp";
    {
        auto out = detail::open_out(tmp);
        out << text;
        if (!out) throw Error(ErrorCode::IoError, "short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace netcomp

#endif  // NETCOMP_IO_HPP
