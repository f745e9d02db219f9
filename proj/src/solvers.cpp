#include "gfree/solvers.hpp"

#include <cstdlib>
#include <string>

#include "gfree/errors.hpp"
#include "gfree/generators.hpp"

namespace gfree {
namespace {

int env_int(const char* name, int fallback)
{
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return fallback;
    try {
        return std::stoi(raw);
    } catch (const std::exception&) {
        return fallback;
    }
}

void require_cap(const char* what, int n, int cap)
{
    if (n > cap || n > kMaxVertices) throw CapExceeded(what, n, cap);
}

class BranchAndBound {
public:
    BranchAndBound(const Graph& g, const PatternSpec& p) : g_(g), p_(p) {}

    SolveResult run(VertexSet universe)
    {
        VertexSet start;
        universe.for_each([&](int v) {
            if (stays_free_with(g_, VertexSet{}, v, p_)) start.insert(v);
        });
        search(VertexSet{}, start);
        return SolveResult{best_, best_.size(), nodes_, SolveMode::BranchAndBound, true};
    }

private:
    void search(VertexSet chosen, VertexSet candidates)
    {
        ++nodes_;
        if (chosen.size() > best_.size()) best_ = chosen;
        while (!candidates.empty() && chosen.size() + candidates.size() > best_.size()) {
            const int v = candidates.lowest();
            candidates.erase(v);
            const VertexSet grown = chosen.with(v);
            VertexSet next;
            candidates.for_each([&](int c) {
                if (stays_free_with(g_, grown, c, p_)) next.insert(c);
            });
            search(grown, next);
        }
    }

    const Graph& g_;
    const PatternSpec& p_;
    VertexSet best_;
    long long nodes_ = 0;
};

SolveResult brute_force(const Graph& g, VertexSet universe, const PatternSpec& p)
{
    const std::vector<int> members = universe.to_vector();
    const std::size_t k = members.size();
    SolveResult result{VertexSet{}, 0, 0, SolveMode::BruteForce, true};
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << k); ++code) {
        VertexSet s;
        for (std::size_t i = 0; i < k; ++i) {
            if ((code >> i) & 1U) s.insert(members[i]);
        }
        ++result.nodes_explored;
        if (s.size() < result.size) continue;
        if (s.size() == result.size && !lex_less_equal_size(s, result.best)) continue;
        if (!is_free(g, s, p)) continue;
        result.best = s;
        result.size = s.size();
    }
    return result;
}

// Enumerates every free set of a fixed size, keeping the one with the
// smallest cut.
class MinCutSearch {
public:
    MinCutSearch(const Graph& g, const PatternSpec& p, int target) : g_(g), p_(p), target_(target) {}

    std::optional<VertexSet> run()
    {
        VertexSet start;
        g_.vertices().for_each([&](int v) {
            if (stays_free_with(g_, VertexSet{}, v, p_)) start.insert(v);
        });
        search(VertexSet{}, start);
        return best_;
    }

    long long nodes() const { return nodes_; }

private:
    long long cut(VertexSet s) const
    {
        long long total = 0;
        s.for_each([&](int v) { total += (g_.neighbors(v) - s).size(); });
        return total;
    }

    void search(VertexSet chosen, VertexSet candidates)
    {
        ++nodes_;
        if (chosen.size() == target_) {
            const long long c = cut(chosen);
            if (!best_ || c < best_cut_) {
                best_ = chosen;
                best_cut_ = c;
            }
            return;
        }
        while (!candidates.empty() && chosen.size() + candidates.size() >= target_) {
            const int v = candidates.lowest();
            candidates.erase(v);
            const VertexSet grown = chosen.with(v);
            VertexSet next;
            candidates.for_each([&](int c) {
                if (stays_free_with(g_, grown, c, p_)) next.insert(c);
            });
            search(grown, next);
        }
    }

    const Graph& g_;
    const PatternSpec& p_;
    int target_;
    std::optional<VertexSet> best_;
    long long best_cut_ = 0;
    long long nodes_ = 0;
};

class ColoringSearch {
public:
    ColoringSearch(const Graph& g, const PatternSpec& p, int classes)
        : g_(g), p_(p), classes_(classes), color_(static_cast<std::size_t>(g.order()), -1),
          sets_(static_cast<std::size_t>(classes))
    {
    }

    bool run() { return assign(0, 0); }
    const std::vector<int>& colors() const { return color_; }
    const std::vector<VertexSet>& sets() const { return sets_; }

private:
    bool assign(int v, int used)
    {
        if (v == g_.order()) return true;
        const int limit = std::min(used + 1, classes_);
        for (int c = 0; c < limit; ++c) {
            if (!stays_free_with(g_, sets_[c], v, p_)) continue;
            sets_[c].insert(v);
            color_[v] = c;
            if (assign(v + 1, std::max(used, c + 1))) return true;
            sets_[c].erase(v);
            color_[v] = -1;
        }
        return false;
    }

    const Graph& g_;
    const PatternSpec& p_;
    int classes_;
    std::vector<int> color_;
    std::vector<VertexSet> sets_;
};

}  // namespace

std::string to_string(SolveMode mode)
{
    return mode == SolveMode::BruteForce ? "bruteforce" : "branch-and-bound";
}

SolverCaps SolverCaps::from_env()
{
    SolverCaps caps;
    caps.exact = env_int("GFREE_EXACT_CAP", caps.exact);
    caps.bruteforce = env_int("GFREE_BRUTEFORCE_CAP", caps.bruteforce);
    caps.chromatic = env_int("GFREE_CHROMATIC_CAP", caps.chromatic);
    return caps;
}

SolveResult max_free_subset_within(const Graph& g, VertexSet universe, const PatternSpec& p, SolveMode mode,
                                   const SolverCaps& caps)
{
    universe &= g.vertices();
    if (mode == SolveMode::BruteForce) {
        require_cap("brute-force search", universe.size(), caps.bruteforce);
        return brute_force(g, universe, p);
    }
    require_cap("branch-and-bound search", universe.size(), caps.exact);
    return BranchAndBound(g, p).run(universe);
}

SolveResult max_free_subset(const Graph& g, const PatternSpec& p, SolveMode mode, const SolverCaps& caps)
{
    return max_free_subset_within(g, g.vertices(), p, mode, caps);
}

SolveResult min_cut_optimum(const Graph& g, const PatternSpec& p, const SolverCaps& caps)
{
    const SolveResult optimum = max_free_subset(g, p, SolveMode::BranchAndBound, caps);
    MinCutSearch search(g, p, optimum.size);
    const auto best = search.run();
    if (!best) throw InvariantViolation("min-cut search found no free set of the certified optimum size");
    return SolveResult{*best, optimum.size, optimum.nodes_explored + search.nodes(), SolveMode::BranchAndBound, true};
}

bool is_maximal_free(const Graph& g, VertexSet s, const PatternSpec& p)
{
    bool maximal = true;
    (g.vertices() - s).for_each([&](int v) {
        if (maximal && stays_free_with(g, s, v, p)) maximal = false;
    });
    return maximal;
}

SolveResult independence_number(const Graph& g, const SolverCaps& caps)
{
    return max_free_subset(g, PatternSpec::single(complete_graph(2), CopyMode::Subgraph, "K2"),
                           SolveMode::BranchAndBound, caps);
}

ForestResult forest_number(const Graph& g, const SolverCaps& caps)
{
    ForestResult out;
    out.forest = max_free_subset(g, PatternSpec::cycles(), SolveMode::BranchAndBound, caps);
    out.forest_number = out.forest.size;
    out.decycling_number = g.order() - out.forest.size;
    return out;
}

FreeColoring gfree_chromatic_number(const Graph& g, const PatternSpec& p, const SolverCaps& caps)
{
    require_cap("free-colouring search", g.order(), caps.chromatic);
    FreeColoring out;
    if (g.order() == 0) return out;
    for (int k = 1; k <= g.order(); ++k) {
        ColoringSearch search(g, p, k);
        if (!search.run()) continue;
        out.classes = k;
        out.color_of = search.colors();
        out.class_sets = search.sets();
        return out;
    }
    // Singletons are always free for the supported patterns (every pattern has
    // an edge, cycles need 3 vertices, cliques need k >= 2).
    throw InvariantViolation("no free colouring found with n classes");
}

LayeredDecomposition layered_mis(const Graph& g, int k, const SolverCaps& caps)
{
    if (k < 2) throw ParseError("layered bound needs k >= 2");
    const PatternSpec edge = PatternSpec::single(complete_graph(2), CopyMode::Subgraph, "K2");
    LayeredDecomposition out;
    VertexSet remaining = g.vertices();
    for (int j = 1; j < k; ++j) {
        const SolveResult layer = max_free_subset_within(g, remaining, edge, SolveMode::BranchAndBound, caps);
        out.layers.push_back(layer.best);
        out.sizes.push_back(layer.size);
        out.union_set |= layer.best;
        out.total += layer.size;
        remaining -= layer.best;
        if (maximum_clique(g, out.union_set).size() > j) {
            throw InvariantViolation("layer union exceeds its clique-number budget");
        }
    }
    return out;
}

QuickExact quick_exact(const Graph& g, const PatternSpec& p)
{
    QuickExact out;
    if (!p.is_single()) return out;
    const Graph& pattern = p.graph();
    const int n = g.order();
    const int m = pattern.order();

    if (is_free(g, g.vertices(), p)) {
        out.value = n;
        out.rule = "host is free";
        return out;
    }

    // From here on H contains a copy of G, so m <= n.
    out.spanning_copy = (m == n);
    out.isomorphic = out.spanning_copy && pattern.edge_count() == g.edge_count();
    out.readings_differ = out.isomorphic != out.spanning_copy;
    if (out.isomorphic || out.spanning_copy) {
        out.value = n - 1;
        out.rule = out.isomorphic ? "host isomorphic to pattern" : "spanning copy of pattern";
        return out;
    }

    if (2 * g.edge_count() == n * (n - 1)) {
        out.value = m - 1;
        out.rule = "complete host";
        return out;
    }

    if (m == n - 1) {
        bool everywhere = true;
        for (int v = 0; v < n && everywhere; ++v) {
            everywhere = find_embedding(g, g.vertices().without(v), pattern, p.mode()).has_value();
        }
        if (everywhere) {
            out.value = n - 2;
            out.rule = "copy avoids every vertex";
            return out;
        }
    }
    return out;
}

}  // namespace gfree
