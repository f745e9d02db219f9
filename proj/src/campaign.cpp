#include "gfree/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <chrono>
#include <condition_variable>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "gfree/errors.hpp"
#include "gfree/generators.hpp"
#include "gfree/graph_io.hpp"

namespace gfree {
namespace {

bool wants(const std::vector<std::string>& selection, const std::string& name)
{
    return selection.empty() || std::find(selection.begin(), selection.end(), name) != selection.end();
}

bool is_edge_pattern(const PatternSpec& p)
{
    return p.is_single() && p.graph().order() == 2 && p.graph().edge_count() == 1;
}

BoundReport over_cap(const std::string& name, BoundKind kind, const CapExceeded& e)
{
    BoundReport r;
    r.name = name;
    r.kind = kind;
    r.applicable = false;
    r.witness["reason"] = e.what();
    return r;
}

std::vector<std::string> split_list(const std::string& value)
{
    std::vector<std::string> out;
    std::stringstream in(value);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        const auto last = item.find_last_not_of(" \t");
        out.push_back(item.substr(first, last - first + 1));
    }
    return out;
}

bool parse_bool(const std::string& key, const std::string& value)
{
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw ParseError("config: '" + key + "' expects a boolean, got '" + value + "'");
}

long long parse_integer(const std::string& key, const std::string& value)
{
    try {
        std::size_t used = 0;
        const long long v = std::stoll(value, &used);
        if (used == value.size()) return v;
    } catch (const std::exception&) {
    }
    throw ParseError("config: '" + key + "' expects an integer, got '" + value + "'");
}

double parse_real(const std::string& key, const std::string& value)
{
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used == value.size()) return v;
    } catch (const std::exception&) {
    }
    throw ParseError("config: '" + key + "' expects a number, got '" + value + "'");
}

double as_double(const Rational& r) { return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()); }

}  // namespace

const std::vector<std::string>& known_bound_names()
{
    static const std::vector<std::string> names{"kwok",       "borg",      "henning",        "chi",
                                                "th1",        "th1_apriori", "th2_lower",    "th2_upper",
                                                "th3",        "th3_components", "forest_corollary", "layered"};
    return names;
}

std::vector<BoundReport> evaluate_bounds(const Graph& g, const PatternSpec& p, const SolveResult& optimum,
                                         const std::vector<std::string>& selection, const SolverCaps& caps)
{
    for (const auto& name : selection) {
        const auto& known = known_bound_names();
        if (std::find(known.begin(), known.end(), name) == known.end()) {
            throw ParseError("unknown bound '" + name + "'");
        }
    }

    std::vector<BoundReport> out;
    if (is_edge_pattern(p)) {
        if (wants(selection, "kwok")) out.push_back(kwok_upper(g));
        if (wants(selection, "borg")) out.push_back(borg_upper(g));
        if (wants(selection, "henning")) out.push_back(henning_lower(g));
    }
    if (wants(selection, "chi")) {
        try {
            out.push_back(chi_lower(g, p, caps));
        } catch (const CapExceeded& e) {
            out.push_back(over_cap("chi", BoundKind::Lower, e));
        }
    }
    if (p.is_single()) {
        if (wants(selection, "th1")) out.push_back(th1_lower(g, p, optimum));
        if (wants(selection, "th1_apriori")) out.push_back(th1_apriori_lower(g, p, optimum));
    }
    if (wants(selection, "th2_lower") || wants(selection, "th2_upper")) {
        auto [lower, upper] = th2_sandwich(g, optimum, p);
        if (wants(selection, "th2_lower")) out.push_back(std::move(lower));
        if (wants(selection, "th2_upper")) out.push_back(std::move(upper));
    }
    if (p.is_single() && (wants(selection, "th3") || wants(selection, "th3_components"))) {
        try {
            const SolveResult anchor = min_cut_optimum(g, p, caps);
            const RFamily r = build_r_family(g, p, anchor);
            if (wants(selection, "th3")) {
                BoundReport report = th3_lower(g, p, r);
                report.witness["r_family"] = to_json(r);
                out.push_back(std::move(report));
            }
            if (wants(selection, "th3_components")) out.push_back(th3_component_lower(g, p, r));
        } catch (const CapExceeded& e) {
            if (wants(selection, "th3")) out.push_back(over_cap("th3", BoundKind::Lower, e));
            if (wants(selection, "th3_components")) out.push_back(over_cap("th3_components", BoundKind::Lower, e));
        }
    }
    if (p.kind() == PatternKind::Cycles && wants(selection, "forest_corollary")) {
        try {
            out.push_back(forest_corollary(g, caps));
        } catch (const CapExceeded& e) {
            out.push_back(over_cap("forest_corollary", BoundKind::Lower, e));
        }
    }
    if (p.kind() == PatternKind::CliqueAtLeast && wants(selection, "layered")) {
        try {
            out.push_back(layered_lower(g, p.clique_threshold(), caps));
        } catch (const CapExceeded& e) {
            out.push_back(over_cap("layered", BoundKind::Lower, e));
        }
    }
    return out;
}

nlohmann::json to_json(const SolveResult& r)
{
    return {{"size", r.size},
            {"best", set_json(r.best)},
            {"nodes_explored", r.nodes_explored},
            {"mode", to_string(r.mode)},
            {"certified_optimal", r.certified_optimal}};
}

// Configuration

void apply_config_entry(CampaignConfig& c, const std::string& key, const std::string& value)
{
    if (key == "gnp_count" || key == "count") {
        c.gnp_count = static_cast<int>(parse_integer(key, value));
    } else if (key == "n_min") {
        c.n_min = static_cast<int>(parse_integer(key, value));
    } else if (key == "n_max") {
        c.n_max = static_cast<int>(parse_integer(key, value));
    } else if (key == "densities") {
        c.densities.clear();
        for (const auto& d : split_list(value)) c.densities.push_back(parse_real(key, d));
    } else if (key == "seed") {
        c.seed = static_cast<std::uint64_t>(parse_integer(key, value));
    } else if (key == "named") {
        c.named = split_list(value);
    } else if (key == "corpus_file") {
        c.corpus_file = value;
    } else if (key == "patterns") {
        c.patterns = split_list(value);
    } else if (key == "bounds") {
        c.bounds = value == "all" ? std::vector<std::string>{} : split_list(value);
    } else if (key == "exact_cap") {
        c.caps.exact = static_cast<int>(parse_integer(key, value));
    } else if (key == "bruteforce_cap") {
        c.caps.bruteforce = static_cast<int>(parse_integer(key, value));
    } else if (key == "chromatic_cap") {
        c.caps.chromatic = static_cast<int>(parse_integer(key, value));
    } else if (key == "cross_check") {
        c.cross_check = parse_bool(key, value);
    } else if (key == "timing") {
        c.timing = parse_bool(key, value);
    } else if (key == "workers") {
        c.workers = static_cast<int>(parse_integer(key, value));
    } else if (key == "out") {
        c.out = value;
    } else {
        throw ParseError("config: unknown key '" + key + "'");
    }
}

CampaignConfig parse_config(const std::string& text, CampaignConfig base)
{
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("config line " + std::to_string(line_no) + ": missing '='");
        auto trim = [](std::string s) {
            const auto first = s.find_first_not_of(" \t\r");
            if (first == std::string::npos) return std::string{};
            return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
        };
        apply_config_entry(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    if (base.n_min < 1 || base.n_max < base.n_min) throw ParseError("config: need 1 <= n_min <= n_max");
    if (base.gnp_count < 0) throw ParseError("config: gnp_count must be non-negative");
    if (base.workers < 1) throw ParseError("config: workers must be at least 1");
    if (base.gnp_count > 0 && base.densities.empty()) throw ParseError("config: densities must not be empty");
    if (base.n_max > kMaxVertices) throw ParseError("config: n_max exceeds " + std::to_string(kMaxVertices));
    for (double d : base.densities)
        if (!(d >= 0.0 && d <= 1.0)) throw ParseError("config: densities must lie in [0, 1]");
    for (int cap : {base.caps.exact, base.caps.bruteforce, base.caps.chromatic})
        if (cap < 0 || cap > kMaxVertices)
            throw ParseError("config: caps must lie in [0, " + std::to_string(kMaxVertices) + "]");
    for (const auto& p : base.patterns) parse_pattern(p);
    const auto& known = known_bound_names();
    for (const auto& b : base.bounds)
        if (std::find(known.begin(), known.end(), b) == known.end())
            throw ParseError("config: unknown bound '" + b + "'");
    return base;
}

std::vector<CorpusGraph> build_corpus(const CampaignConfig& config)
{
    std::vector<CorpusGraph> corpus;
    for (const auto& name : config.named) {
        auto g = named_graph(name);
        if (!g) throw ParseError("unknown named graph '" + name + "'");
        corpus.push_back({name, std::move(*g)});
    }
    if (!config.corpus_file.empty()) {
        std::ifstream in(config.corpus_file);
        if (!in) throw ParseError("cannot open corpus file '" + config.corpus_file + "'");
        std::string line;
        int index = 0;
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            corpus.push_back({"file:" + std::to_string(index++), parse_graph6(line)});
        }
    }
    const int span = config.n_max - config.n_min + 1;
    for (int i = 0; i < config.gnp_count; ++i) {
        const int n = config.n_min + i % span;
        const double p = config.densities[static_cast<std::size_t>(i / span) % config.densities.size()];
        const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(i);
        std::ostringstream id;
        id << "gnp:" << n << ":" << p << ":" << seed;
        corpus.push_back({id.str(), gnp_graph(n, p, seed)});
    }
    return corpus;
}

InstanceRecord evaluate_instance(const CorpusGraph& instance, const PatternSpec& p, const CampaignConfig& config)
{
    const auto start = std::chrono::steady_clock::now();
    const Graph& g = instance.graph;
    InstanceRecord record;
    auto& j = record.json;
    auto& violations = record.violations;
    j["id"] = instance.id;
    j["graph6"] = to_graph6(g);
    j["n"] = g.order();
    j["e"] = g.edge_count();
    j["pattern"] = p.label();

    SolveResult optimum;
    try {
        optimum = max_free_subset(g, p, SolveMode::BranchAndBound, config.caps);
    } catch (const CapExceeded& e) {
        j["error"] = e.what();
        j["violations"] = nlohmann::json::array();
        return record;
    }
    j["optimum"] = to_json(optimum);

    if (!is_free(g, optimum.best, p)) violations.push_back("optimum is not free");
    if (!is_maximal_free(g, optimum.best, p)) violations.push_back("optimum is not maximal");

    if (config.cross_check && g.order() <= config.caps.bruteforce) {
        const SolveResult oracle = max_free_subset(g, p, SolveMode::BruteForce, config.caps);
        j["bruteforce"] = to_json(oracle);
        if (oracle.size != optimum.size) violations.push_back("branch-and-bound size differs from brute force");
        if (oracle.best != optimum.best) violations.push_back("branch-and-bound witness differs from brute force");
    }

    if (p.is_single()) {
        const QuickExact quick = quick_exact(g, p);
        if (quick.value) {
            j["quick_exact"] = {{"value", *quick.value}, {"rule", quick.rule}, {"readings_differ", quick.readings_differ}};
            if (*quick.value != optimum.size) violations.push_back("quick_exact disagrees with the exact optimum");
        } else {
            j["quick_exact"] = nullptr;
        }
    }
    if (p.kind() == PatternKind::Cycles) {
        j["forest_number"] = optimum.size;
        j["decycling_number"] = g.order() - optimum.size;
    }

    const auto reports = evaluate_bounds(g, p, optimum, config.bounds, config.caps);
    auto bounds_json = nlohmann::json::array();
    std::optional<int> henning_p;
    std::optional<int> th3_P;
    for (const auto& r : reports) {
        bounds_json.push_back(to_json(r));
        if (!r.holds_for(optimum.size)) {
            violations.push_back(r.name + " bound " + format_rational(*r.value) + " vs optimum " +
                                 std::to_string(optimum.size));
        }
        if (r.name == "henning") henning_p = r.witness.at("p").get<int>();
        if (r.name == "th3" && r.applicable) {
            th3_P = r.witness.at("P").get<int>();
            if (r.witness.value("claim_unexplained", 0) > 0) violations.push_back("unexplained clique-claim failure");
        }
        if (r.name == "forest_corollary" && r.witness.value("claim_unexplained", 0) > 0) {
            violations.push_back("unexplained clique-claim failure (cycles)");
        }
    }
    j["bounds"] = std::move(bounds_json);
    if (henning_p && th3_P) {
        j["henning_vs_th3"] = {{"p", *henning_p},
                               {"P", *th3_P},
                               {"relation", *henning_p == *th3_P ? "equal" : (*henning_p < *th3_P ? "p<P" : "p>P")}};
    }
    j["violations"] = violations;
    if (config.timing) {
        j["timing_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    return record;
}

std::string CampaignSummary::csv() const
{
    std::ostringstream out;
    out << "bound,applicable,violations,tight,mean_gap\n";
    for (const auto& [name, s] : per_bound) {
        out << name << ',' << s.applicable << ',' << s.violations << ',' << s.tight << ','
            << (s.applicable > 0 ? s.gap_sum / s.applicable : 0.0) << '\n';
    }
    return out.str();
}

CampaignSummary run_campaign(const CampaignConfig& config, std::ostream* records)
{
    const auto corpus = build_corpus(config);
    std::vector<PatternSpec> patterns;
    for (const auto& text : config.patterns) patterns.push_back(parse_pattern(text));

    struct Task {
        std::size_t graph;
        std::size_t pattern;
    };
    std::vector<Task> tasks;
    for (std::size_t gi = 0; gi < corpus.size(); ++gi)
        for (std::size_t pi = 0; pi < patterns.size(); ++pi) tasks.push_back({gi, pi});

    std::vector<std::optional<InstanceRecord>> results(tasks.size());
    std::mutex mutex;
    std::condition_variable ready;
    std::atomic<std::size_t> next_task{0};
    std::exception_ptr failure;

    auto worker = [&] {
        for (;;) {
            const std::size_t t = next_task.fetch_add(1);
            if (t >= tasks.size()) return;
            InstanceRecord rec;
            try {
                rec = evaluate_instance(corpus[tasks[t].graph], patterns[tasks[t].pattern], config);
            } catch (...) {
                std::lock_guard lock(mutex);
                if (!failure) failure = std::current_exception();
                next_task = tasks.size();
                ready.notify_all();
                return;
            }
            std::lock_guard lock(mutex);
            results[t] = std::move(rec);
            ready.notify_all();
        }
    };

    std::vector<std::thread> pool;
    const int workers = std::max(1, config.workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);

    CampaignSummary summary;
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        InstanceRecord rec;
        {
            std::unique_lock lock(mutex);
            ready.wait(lock, [&] { return results[t].has_value() || failure; });
            if (failure) break;
            rec = std::move(*results[t]);
            results[t].reset();
        }
        ++summary.instances;
        summary.violations += static_cast<int>(rec.violations.size());
        if (records != nullptr) *records << rec.json.dump() << '\n';
        if (!rec.json.contains("optimum")) continue;
        const int optimum = rec.json["optimum"]["size"].get<int>();
        for (const auto& b : rec.json["bounds"]) {
            auto& stats = summary.per_bound[b["name"].get<std::string>()];
            if (!b["applicable"].get<bool>()) continue;
            ++stats.applicable;
            const Rational value(b["value_num"].get<long long>(), b["value_den"].get<long long>());
            const double gap = std::abs(as_double(value) - optimum);
            stats.gap_sum += gap;
            if (b["value_int"].get<long long>() == optimum) ++stats.tight;
            const bool lower = b["kind"] == "lower";
            if (lower ? value > Rational(optimum) : value < Rational(optimum)) ++stats.violations;
        }
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return summary;
}

std::string strip_timing(const std::string& jsonl)
{
    std::istringstream in(jsonl);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto j = nlohmann::json::parse(line);
        j.erase("timing_ms");
        out << j.dump() << '\n';
    }
    return out.str();
}

}  // namespace gfree
