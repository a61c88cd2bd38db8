// netcomp: generate graphs, run compression evolution, reproduce figures.
//
//   netcomp generate --kind ba --n 100 --m 4 --seed 1 --out ba.txt
//   netcomp compress --in ba.txt --p-rew 0.2 --method both --out runs/
//   netcomp reproduce --figure s5 --out figs/
//
// Exit status: 0 ok, 1 usage error, 2 runtime error. Runtime errors print
// "error: <ErrorName>: <detail>" on stderr.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "netcomp/experiments.hpp"
#include "netcomp/generators.hpp"
#include "netcomp/io.hpp"
#include "netcomp/profile.hpp"

namespace fs = std::filesystem;
using namespace netcomp;

namespace {

struct GenerateArgs {
    std::string kind;
    std::size_t n = 0;
    std::size_t m = 4;
    std::size_t k = 4;
    double p = 0.5;
    std::size_t populations = 5;
    std::size_t module_size = 20;
    std::size_t inter_edges = 2;
    std::uint64_t seed = 1;
    std::string out;
};

struct CompressArgs {
    std::string in;
    GenerateArgs gen;  // used when --in is absent
    double p_rew = 0.1;
    std::string method = "effective";
    std::uint64_t seed = 1;
    std::vector<std::string> metrics{"avg_distance", "clustering", "fiedler"};
    std::size_t record_every = 1;
    std::string constraint;
    bool randomize_ties = false;
    std::string out = ".";
};

struct ReproduceArgs {
    std::string figure;
    std::string scale = "desk";
    std::optional<std::size_t> n;
    std::optional<std::size_t> seeds;
    std::uint64_t first_seed = 1;
    std::vector<double> fractions;
    std::string data;
    std::string out = ".";
};

void add_generator_flags(CLI::App* cmd, GenerateArgs& a) {
    cmd->add_option("--kind", a.kind, "ba | ws | er | multipop")
        ->check(CLI::IsMember({"ba", "ws", "er", "multipop"}));
    cmd->add_option("--n", a.n, "node count (multipop: ignored, use --populations/--module-size)");
    cmd->add_option("--m", a.m, "BA edges per new node");
    cmd->add_option("--k", a.k, "WS / module ring degree");
    cmd->add_option("--p", a.p, "WS rewiring or ER edge probability");
    cmd->add_option("--populations", a.populations, "multipop module count");
    cmd->add_option("--module-size", a.module_size, "multipop module size");
    cmd->add_option("--inter-edges", a.inter_edges, "multipop edges between consecutive modules");
}

GeneratorParams params_of(const GenerateArgs& a) {
    if (a.kind == "ba") return BaParams{a.n, a.m};
    if (a.kind == "ws") return WsParams{a.n, a.k, a.p};
    if (a.kind == "er") return ErParams{a.n, a.p};
    if (a.kind == "multipop") return MultiPopParams{a.populations, a.module_size, a.k, a.p, a.inter_edges};
    throw Error(ErrorCode::InvalidSpec, "missing or unknown --kind");
}

int run_generate(const GenerateArgs& a) {
    const Graph g = generate({params_of(a), a.seed});
    if (!a.out.empty()) {
        std::ostringstream text;
        write_edge_list(g, text);
        write_text(a.out, text.str());
    }
    std::cout << "nodes " << g.node_count() << "\n"
              << "edges " << g.edge_count() << "\n"
              << "avg_distance " << format_number(average_distance(g)) << "\n"
              << "clustering " << format_number(clustering_coefficient(g)) << "\n";
    return 0;
}

bool wants(const std::vector<std::string>& metrics, const std::string& name) {
    return std::find(metrics.begin(), metrics.end(), name) != metrics.end();
}

int run_compress(const CompressArgs& a) {
    LabeledGraph input;
    if (!a.in.empty()) {
        input = read_edge_list(fs::path(a.in));
    } else {
        input.graph = generate({params_of(a.gen), a.gen.seed});
        input.labels = numeric_labels(input.graph.node_count());
    }

    EvolutionConfig config;
    config.rewiring_fraction = a.p_rew;
    config.seed = a.seed;
    config.randomize_ties = a.randomize_ties;
    config.record_metrics_every = wants(a.metrics, "avg_distance") ? a.record_every : 0;
    config.final_fiedler = wants(a.metrics, "fiedler");
    if (!a.constraint.empty()) config.constraint = read_node_constraint(fs::path(a.constraint), input.labels);

    std::vector<Method> methods;
    if (a.method == "effective" || a.method == "both") methods.push_back(Method::Effective);
    if (a.method == "random" || a.method == "both") methods.push_back(Method::Random);

    fs::create_directories(a.out);
    for (Method method : methods) {
        const EvolutionTrajectory t = evolve(input.graph, config, method);
        const std::string name = method_name(method);
        std::ostringstream csv;
        write_trajectory_csv(t, csv, &input.labels);
        write_text(fs::path(a.out) / ("trajectory_" + name + ".csv"), csv.str());
        write_text(fs::path(a.out) / ("summary_" + name + ".json"),
                   summary_json(t, name, a.p_rew, a.seed).dump(2) + "\n");
        for (const auto& w : t.warnings) std::cerr << "warning: " << w << "\n";
        std::cout << name << ": steps " << t.steps.size() << ", avg_distance "
                  << format_number(t.initial_metrics.avg_distance) << " -> "
                  << format_number(t.final_metrics.avg_distance) << "\n";
    }
    return 0;
}

int run_reproduce(const ReproduceArgs& a) {
    FigureOptions opt;
    opt.figure = a.figure;
    opt.full_scale = a.scale == "full";
    opt.nodes = a.n;
    opt.seed_count = a.seeds;
    opt.first_seed = a.first_seed;
    opt.fractions = a.fractions;
    if (!a.data.empty()) opt.data = a.data;

    const FigureTable t = reproduce_figure(opt);
    fs::create_directories(a.out);
    write_text(fs::path(a.out) / ("figure_" + t.figure + ".csv"), t.csv());
    write_text(fs::path(a.out) / ("figure_" + t.figure + "_README.txt"), figure_readme(opt, t));
    std::cout << "figure " << t.figure << ": " << t.rows.size() << " rows\n";
    for (const auto& note : t.notes) std::cout << note << "\n";
    return 0;
}

// Unscoped keys in the config file belong to whichever subcommand was chosen,
// so the file can stay flat ("p-rew=0.2" rather than "compress.p-rew=0.2").
class FlatConfig : public CLI::ConfigBase {
public:
    explicit FlatConfig(const CLI::App& app) : app_(app) {}

    std::vector<CLI::ConfigItem> from_config(std::istream& in) const override {
        auto items = CLI::ConfigBase::from_config(in);
        const auto chosen = app_.get_subcommands();
        if (chosen.empty()) return items;
        for (auto& item : items)
            if (item.parents.empty() && item.name != "config") item.parents = {chosen.front()->get_name()};
        return items;
    }

private:
    const CLI::App& app_;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"network topological compression evolution"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value file; command-line flags win");
    app.config_formatter(std::make_shared<FlatConfig>(app));

    GenerateArgs gen;
    auto* generate_cmd = app.add_subcommand("generate", "write a synthetic network as an edge list");
    add_generator_flags(generate_cmd, gen);
    generate_cmd->get_option("--kind")->required();
    generate_cmd->add_option("--seed", gen.seed);
    generate_cmd->add_option("--out", gen.out, "edge list path; omitted: metrics only");

    CompressArgs comp;
    auto* compress_cmd = app.add_subcommand("compress", "run compression evolution and/or random rewiring");
    compress_cmd->add_option("--in", comp.in, "edge list; omitted: generate from --kind etc.");
    add_generator_flags(compress_cmd, comp.gen);
    compress_cmd->add_option("--graph-seed", comp.gen.seed, "generator seed when --in is absent");
    compress_cmd->add_option("--p-rew", comp.p_rew, "evolution fraction P_rew")->check(CLI::Range(0.0, 1.0));
    compress_cmd->add_option("--method", comp.method)->check(CLI::IsMember({"effective", "random", "both"}));
    compress_cmd->add_option("--seed", comp.seed, "random-baseline / tie-break seed");
    compress_cmd->add_option("--metrics", comp.metrics, "subset of avg_distance,clustering,fiedler")
        ->delimiter(',')
        ->check(CLI::IsMember({"avg_distance", "clustering", "fiedler"}));
    compress_cmd->add_option("--record-every", comp.record_every, "per-step D every k steps (0: never)");
    compress_cmd->add_option("--constraint", comp.constraint, "node attribute file");
    compress_cmd->add_flag("--randomize-ties", comp.randomize_ties);
    compress_cmd->add_option("--out", comp.out, "output directory");

    ReproduceArgs rep;
    auto* reproduce_cmd = app.add_subcommand("reproduce", "regenerate the data behind one figure");
    reproduce_cmd->add_option("--figure", rep.figure)->required()->check(CLI::IsMember(figure_ids()));
    reproduce_cmd->add_option("--scale", rep.scale)->check(CLI::IsMember({"desk", "full"}));
    reproduce_cmd->add_option("--n", rep.n, "override node count");
    reproduce_cmd->add_option("--seeds", rep.seeds, "override seed count");
    reproduce_cmd->add_option("--first-seed", rep.first_seed);
    reproduce_cmd->add_option("--fractions", rep.fractions, "override the P_rew grid")->delimiter(',');
    reproduce_cmd->add_option("--data", rep.data, "edge list for s7");
    reproduce_cmd->add_option("--out", rep.out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*generate_cmd) return run_generate(gen);
        if (*compress_cmd) return run_compress(comp);
        if (*reproduce_cmd) return run_reproduce(rep);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: IoError: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
