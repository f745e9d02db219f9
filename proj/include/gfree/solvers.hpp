#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gfree/graph.hpp"
#include "gfree/pattern.hpp"

namespace gfree {

enum class SolveMode { BruteForce, BranchAndBound };

std::string to_string(SolveMode mode);

/// Largest instance each exact search accepts. Defaults can be overridden
/// through GFREE_EXACT_CAP, GFREE_BRUTEFORCE_CAP and GFREE_CHROMATIC_CAP.
struct SolverCaps {
    int exact = 20;
    int bruteforce = 16;
    int chromatic = 12;

    static SolverCaps from_env();
};

struct SolveResult {
    VertexSet best;
    int size = 0;
    long long nodes_explored = 0;
    SolveMode mode = SolveMode::BranchAndBound;
    bool certified_optimal = false;
};

/// Maximum S with H[S] free of `p`, lexicographically smallest among maxima.
///
/// BruteForce walks all 2^n subsets and is the reference oracle.
/// BranchAndBound includes the lowest candidate first, drops candidates that
/// can no longer join the partial set (freeness is hereditary), and prunes
/// when |S| + |candidates| cannot beat the incumbent.
///
/// Throws CapExceeded past caps.bruteforce / caps.exact.
SolveResult max_free_subset(const Graph& g, const PatternSpec& p, SolveMode mode = SolveMode::BranchAndBound,
                            const SolverCaps& caps = {});

/// Same search restricted to vertices of `universe`.
SolveResult max_free_subset_within(const Graph& g, VertexSet universe, const PatternSpec& p,
                                   SolveMode mode = SolveMode::BranchAndBound, const SolverCaps& caps = {});

/// Among all maximum free sets, one minimising the cut |E(S, V \ S)|;
/// lexicographically smallest on ties.
SolveResult min_cut_optimum(const Graph& g, const PatternSpec& p, const SolverCaps& caps = {});

/// True when no outside vertex can be added to s without creating a copy.
bool is_maximal_free(const Graph& g, VertexSet s, const PatternSpec& p);

SolveResult independence_number(const Graph& g, const SolverCaps& caps = {});

struct ForestResult {
    SolveResult forest;
    int forest_number = 0;
    int decycling_number = 0;
};

ForestResult forest_number(const Graph& g, const SolverCaps& caps = {});

struct FreeColoring {
    int classes = 0;
    std::vector<int> color_of;
    std::vector<VertexSet> class_sets;
};

/// Minimum number of classes in a partition of V(H) into free sets.
/// Iterative deepening on the class count; vertex 0 is pinned to class 0 and
/// a new class is only opened as the next unused index.
FreeColoring gfree_chromatic_number(const Graph& g, const PatternSpec& p, const SolverCaps& caps = {});

struct LayeredDecomposition {
    std::vector<VertexSet> layers;
    std::vector<int> sizes;
    VertexSet union_set;
    int total = 0;
};

/// Peels k - 1 successive maximum independent sets; their union has clique
/// number at most k - 1 (checked before returning). Throws ParseError for
/// k < 2.
LayeredDecomposition layered_mis(const Graph& g, int k, const SolverCaps& caps = {});

struct QuickExact {
    std::optional<int> value;
    std::string rule;
    /// H isomorphic to G.
    bool isomorphic = false;
    /// |V(G)| = n and G is contained in H.
    bool spanning_copy = false;
    /// The two readings of the n - 1 rule disagree on this instance.
    bool readings_differ = false;
};

/// Closed-form optimum for the easy (H, G) configurations:
///   H is G-free                                   -> n
///   H ~ G, or |V(G)| = n with G in H              -> n - 1
///   H = K_n and |V(G)| = m <= n                   -> m - 1
///   |V(G)| = n - 1 and G in H - v for every v     -> n - 2
QuickExact quick_exact(const Graph& g, const PatternSpec& p);

}  // namespace gfree
