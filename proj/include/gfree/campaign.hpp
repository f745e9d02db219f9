#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gfree/bounds.hpp"
#include "gfree/graph.hpp"
#include "gfree/pattern.hpp"
#include "gfree/solvers.hpp"

namespace gfree {

/// Bound names understood by `evaluate_bounds`.
const std::vector<std::string>& known_bound_names();

/// Every bound in `selection` (empty = all) that makes sense for `p`,
/// evaluated against the certified optimum. Bounds over a solver cap are
/// reported as inapplicable rather than thrown.
std::vector<BoundReport> evaluate_bounds(const Graph& g, const PatternSpec& p, const SolveResult& optimum,
                                         const std::vector<std::string>& selection, const SolverCaps& caps);

nlohmann::json to_json(const SolveResult& r);

struct CampaignConfig {
    // corpus
    int gnp_count = 0;
    int n_min = 1;
    int n_max = 8;
    std::vector<double> densities{0.3, 0.5};
    std::uint64_t seed = 1;
    std::vector<std::string> named;
    std::string corpus_file;

    std::vector<std::string> patterns{"K2"};
    std::vector<std::string> bounds;
    SolverCaps caps;
    /// Also run the 2^n brute force and compare with branch-and-bound.
    bool cross_check = false;
    bool timing = true;
    int workers = 1;
    std::string out;
};

/// Flat "key = value" file; '#' starts a comment. Keys mirror the fields
/// above (list values are comma separated). Throws ParseError.
CampaignConfig parse_config(const std::string& text, CampaignConfig base = {});
void apply_config_entry(CampaignConfig& config, const std::string& key, const std::string& value);

struct CorpusGraph {
    std::string id;
    Graph graph;
};

/// gnp instance i uses n = n_min + i mod (n_max - n_min + 1),
/// p = densities[(i / span) mod |densities|] and seed + i.
std::vector<CorpusGraph> build_corpus(const CampaignConfig& config);

struct InstanceRecord {
    nlohmann::json json;
    std::vector<std::string> violations;
};

InstanceRecord evaluate_instance(const CorpusGraph& graph, const PatternSpec& p, const CampaignConfig& config);

struct BoundStats {
    int applicable = 0;
    int violations = 0;
    int tight = 0;
    double gap_sum = 0.0;
};

struct CampaignSummary {
    int instances = 0;
    int violations = 0;
    std::map<std::string, BoundStats> per_bound;

    /// bound,applicable,violations,tight,mean_gap
    std::string csv() const;
};

/// Runs every (graph, pattern) pair; JSON-lines records go to `records` in
/// corpus order whatever the worker count.
CampaignSummary run_campaign(const CampaignConfig& config, std::ostream* records);

/// Drops timing fields so two record streams can be compared byte for byte.
std::string strip_timing(const std::string& jsonl);

}  // namespace gfree
