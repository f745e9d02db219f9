// gfree: maximum G-free subsets, their bounds, and verification campaigns.
//
// Exit codes: 0 ok, 1 campaign violations, 2 bad input, 3 instance over cap.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gfree/bounds.hpp"
#include "gfree/campaign.hpp"
#include "gfree/errors.hpp"
#include "gfree/generators.hpp"
#include "gfree/graph_io.hpp"
#include "gfree/pattern.hpp"
#include "gfree/solvers.hpp"

namespace {

using namespace gfree;

constexpr int kExitViolations = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitOverCap = 3;

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Named graph, "@file" (graph6 line or edge-list), edge-list text (has ';'),
// or a graph6 string.
Graph load_graph(const std::string& spec)
{
    if (auto g = named_graph(spec)) return *g;
    if (spec.starts_with("@")) {
        const std::string text = read_file(spec.substr(1));
        if (text.find(';') != std::string::npos) return parse_edge_list(text);
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) {
            if (line.find_first_not_of(" \t\r") != std::string::npos) return parse_graph6(line);
        }
        throw ParseError("'" + spec.substr(1) + "' holds no graph");
    }
    if (spec.find(';') != std::string::npos) return parse_edge_list(spec);
    return parse_graph6(spec);
}

void write_json(const std::string& path, const nlohmann::json& j)
{
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
}

std::string join(const std::vector<int>& xs)
{
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s + "}";
}

struct GraphArgs {
    std::string graph;
    std::string pattern = "K2";
    bool induced = false;
    std::string out;
};

void add_graph_args(CLI::App* cmd, GraphArgs& args)
{
    cmd->add_option("--graph,-g", args.graph,
                    "K6, C5, P4, E3, K1_4, petersen, @file, graph6 string, or edge list \"3; 0 1, 1 2\"")
        ->required();
    cmd->add_option("--pattern,-p", args.pattern, "K3, C4, P4, cycles, clique>=4, @file.g6")->capture_default_str();
    cmd->add_flag("--induced", args.induced, "count induced copies instead of subgraph copies");
    cmd->add_option("--out,-o", args.out, "write a JSON report here");
}

int run_solve(const GraphArgs& args, const std::string& mode_name, const SolverCaps& caps)
{
    const Graph g = load_graph(args.graph);
    const PatternSpec p = parse_pattern(args.pattern, args.induced ? CopyMode::Induced : CopyMode::Subgraph);
    const SolveMode mode = mode_name == "bruteforce" ? SolveMode::BruteForce : SolveMode::BranchAndBound;
    const SolveResult r = max_free_subset(g, p, mode, caps);

    std::cout << "graph    " << to_graph6(g) << "  (n=" << g.order() << ", e=" << g.edge_count() << ")\n"
              << "pattern  " << p.label() << (args.induced ? " [induced]" : "") << '\n'
              << "size     " << r.size << '\n'
              << "witness  " << join(r.best.to_vector()) << '\n'
              << "mode     " << to_string(r.mode) << ", " << r.nodes_explored << " nodes, "
              << (r.certified_optimal ? "certified optimal" : "not certified") << '\n';
    nlohmann::json j{{"graph6", to_graph6(g)}, {"pattern", p.label()}, {"result", to_json(r)}};
    if (p.kind() == PatternKind::Cycles) {
        std::cout << "decycling " << g.order() - r.size << '\n';
        j["decycling_number"] = g.order() - r.size;
    }
    write_json(args.out, j);
    return 0;
}

int run_bounds(const GraphArgs& args, const std::vector<std::string>& selection, const SolverCaps& caps)
{
    const Graph g = load_graph(args.graph);
    const PatternSpec p = parse_pattern(args.pattern, args.induced ? CopyMode::Induced : CopyMode::Subgraph);
    const SolveResult optimum = max_free_subset(g, p, SolveMode::BranchAndBound, caps);
    const auto reports = evaluate_bounds(g, p, optimum, selection, caps);

    std::cout << "graph " << to_graph6(g) << " (n=" << g.order() << ", e=" << g.edge_count() << "), pattern "
              << p.label() << ", exact " << optimum.size << "\n\n";
    std::cout << std::left << std::setw(18) << "bound" << std::setw(7) << "kind" << std::setw(12) << "value"
              << std::setw(7) << "int" << std::setw(8) << "gap" << "note\n";
    auto arr = nlohmann::json::array();
    for (const auto& r : reports) {
        std::cout << std::setw(18) << r.name << std::setw(7) << (r.kind == BoundKind::Lower ? "lower" : "upper");
        if (r.applicable) {
            const long long gap = r.kind == BoundKind::Lower ? optimum.size - *r.value_int()
                                                             : *r.value_int() - optimum.size;
            std::cout << std::setw(12) << format_rational(*r.value) << std::setw(7) << *r.value_int() << std::setw(8)
                      << gap << (r.holds_for(optimum.size) ? "" : "VIOLATED");
        } else {
            std::cout << std::setw(12) << "-" << std::setw(7) << "-" << std::setw(8) << "-"
                      << r.witness.value("reason", std::string{"n/a"});
        }
        std::cout << '\n';
        arr.push_back(to_json(r));
    }
    write_json(args.out, {{"graph6", to_graph6(g)},
                          {"pattern", p.label()},
                          {"optimum", to_json(optimum)},
                          {"profile", to_json(neighbor_profile(g, optimum.best))},
                          {"bounds", arr}});
    return 0;
}

int run_verify(const std::string& config_path, const std::vector<std::string>& overrides, const SolverCaps& caps)
{
    CampaignConfig base;
    base.caps = caps;
    std::string text = config_path.empty() ? std::string{} : read_file(config_path);
    for (const auto& kv : overrides) text += "\n" + kv;
    const CampaignConfig config = parse_config(text, base);

    std::ofstream file;
    if (!config.out.empty()) {
        file.open(config.out);
        if (!file) throw ParseError("cannot write '" + config.out + "'");
    }
    const CampaignSummary summary = run_campaign(config, config.out.empty() ? nullptr : &file);
    std::cout << "instances  " << summary.instances << '\n' << "violations " << summary.violations << "\n\n"
              << summary.csv();
    return summary.violations == 0 ? 0 : kExitViolations;
}

struct GenArgs {
    std::string family;
    int n = 0;
    std::vector<std::string> gnp;
    int count = 1;
    std::uint64_t seed = 1;
    std::string out;
};

int run_gen(const GenArgs& args)
{
    std::vector<Graph> graphs;
    if (!args.gnp.empty()) {
        if (args.gnp.size() != 2) throw ParseError("--gnp takes N P");
        const int n = std::stoi(args.gnp[0]);
        const double p = std::stod(args.gnp[1]);
        for (int i = 0; i < args.count; ++i) graphs.push_back(gnp_graph(n, p, args.seed + static_cast<std::uint64_t>(i)));
    } else if (args.family == "petersen") {
        graphs.push_back(petersen_graph());
    } else if (args.family == "complete") {
        graphs.push_back(complete_graph(args.n));
    } else if (args.family == "cycle") {
        graphs.push_back(cycle_graph(args.n));
    } else if (args.family == "path") {
        graphs.push_back(path_graph(args.n));
    } else if (args.family == "star") {
        graphs.push_back(star_graph(args.n));
    } else if (args.family == "empty") {
        graphs.push_back(empty_graph(args.n));
    } else {
        throw ParseError("choose --family {complete,cycle,path,star,empty,petersen} or --gnp N P");
    }

    std::ofstream file;
    if (!args.out.empty()) {
        file.open(args.out);
        if (!file) throw ParseError("cannot write '" + args.out + "'");
    }
    std::ostream& out = args.out.empty() ? std::cout : file;
    for (const auto& g : graphs) out << to_graph6(g) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Maximum G-free vertex subsets: exact solvers, bounds, verification campaigns"};
    app.require_subcommand(1);

    SolverCaps caps = SolverCaps::from_env();

    GraphArgs solve_args;
    std::string mode = "bnb";
    auto* solve = app.add_subcommand("solve", "exact maximum free subset");
    add_graph_args(solve, solve_args);
    solve->add_option("--mode", mode, "bnb or bruteforce")
        ->check(CLI::IsMember({"bnb", "bruteforce"}))
        ->capture_default_str();

    GraphArgs bounds_args;
    std::vector<std::string> selection;
    bool all = false;
    auto* bounds = app.add_subcommand("bounds", "evaluate every applicable bound against the exact optimum");
    add_graph_args(bounds, bounds_args);
    bounds->add_option("--bound,-b", selection, "restrict to these bounds (repeatable)");
    bounds->add_flag("--all", all, "all applicable bounds (the default)");

    std::string config_path;
    std::vector<std::string> overrides;
    auto* verify = app.add_subcommand("verify", "run a verification campaign");
    verify->add_option("--config,-c", config_path, "key = value config file");
    verify->add_option("--set", overrides, "override a config key, e.g. --set seed=7 (repeatable)");
    std::string verify_out;
    verify->add_option("--out,-o", verify_out, "JSON-lines output path");

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "write graph6 corpora");
    gen->add_option("--family", gen_args.family, "complete, cycle, path, star, empty, petersen");
    gen->add_option("--n", gen_args.n, "order (leaf count for star)");
    gen->add_option("--gnp", gen_args.gnp, "N P")->expected(2);
    gen->add_option("--count", gen_args.count)->capture_default_str();
    gen->add_option("--seed", gen_args.seed)->capture_default_str();
    gen->add_option("--out,-o", gen_args.out, "output file (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitBadInput;
    }

    try {
        if (*solve) return run_solve(solve_args, mode, caps);
        if (*bounds) return run_bounds(bounds_args, all ? std::vector<std::string>{} : selection, caps);
        if (*verify) {
            if (!verify_out.empty()) overrides.push_back("out=" + verify_out);
            return run_verify(config_path, overrides, caps);
        }
        if (*gen) return run_gen(gen_args);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitOverCap;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    return 0;
}
