#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gfree/graph.hpp"

namespace gfree {

enum class PatternKind { Single, Cycles, CliqueAtLeast };

/// What counts as a copy of a single forbidden graph inside H[S].
enum class CopyMode {
    Subgraph,  ///< injective map sending pattern edges to host edges
    Induced,   ///< additionally sends pattern non-edges to host non-edges
};

/// The forbidden structure that defines "free":
///   single(G)          no copy of G
///   cycles             acyclic (no C_l for any l >= 3)
///   clique_at_least(k) clique number at most k - 1
class PatternSpec {
public:
    /// Throws ParseError if `g` has no edge.
    static PatternSpec single(Graph g, CopyMode mode = CopyMode::Subgraph, std::string label = {});
    static PatternSpec cycles();
    /// Throws ParseError for k < 2.
    static PatternSpec clique_at_least(int k);

    PatternKind kind() const { return kind_; }
    CopyMode mode() const { return mode_; }
    bool is_single() const { return kind_ == PatternKind::Single; }

    /// Only meaningful for kind() == Single.
    const Graph& graph() const { return graph_; }
    /// Only meaningful for kind() == CliqueAtLeast.
    int clique_threshold() const { return k_; }

    /// delta(G). Cycles report 2 (every cycle is 2-regular), clique_at_least(k)
    /// reports k - 1 (the sparsest forbidden member is K_k).
    int min_degree() const;
    /// e_G, single kind only.
    int edge_count() const { return graph_.edge_count(); }

    const std::string& label() const { return label_; }

private:
    PatternKind kind_ = PatternKind::Cycles;
    CopyMode mode_ = CopyMode::Subgraph;
    Graph graph_;
    int k_ = 0;
    std::string label_;
};

/// "K3", "C4", "P4", "K1_3", "petersen", "cycles", "clique>=4", "@file.g6".
/// Throws ParseError on anything else.
PatternSpec parse_pattern(std::string_view text, CopyMode mode = CopyMode::Subgraph);

/// map[i] = host vertex playing pattern vertex i.
struct Embedding {
    std::vector<int> map;
};

/// Pattern vertex -> host vertex assignments forced before the search.
using Anchors = std::vector<std::pair<int, int>>;

/// Backtracking subgraph-isomorphism search of `pattern` into host[within].
/// Pattern vertices are visited in connectivity-then-degree order; host
/// candidates are filtered by adjacency to already mapped neighbours and by
/// degree inside `within`.
std::optional<Embedding> find_embedding(const Graph& host, VertexSet within, const Graph& pattern, CopyMode mode,
                                        const Anchors& anchors = {});

/// Calls `visit` for every embedding until it returns false. Automorphic
/// images are reported separately.
void enumerate_embeddings(const Graph& host, VertexSet within, const Graph& pattern, CopyMode mode,
                          const Anchors& anchors, const std::function<bool(const Embedding&)>& visit);

/// A cycle of H[s] as a closed vertex sequence (first vertex not repeated).
std::optional<std::vector<int>> find_cycle(const Graph& g, VertexSet s);

/// A clique of exactly `size` vertices inside g[within], if one exists.
std::optional<VertexSet> find_clique_of_size(const Graph& g, VertexSet within, int size);

/// Maximum clique of g[within]; lexicographically smallest among maxima.
VertexSet maximum_clique(const Graph& g, VertexSet within);
inline VertexSet maximum_clique(const Graph& g) { return maximum_clique(g, g.vertices()); }
int clique_number(const Graph& g);

/// Pivoting Bron-Kerbosch. Pivot = vertex of P u X with most neighbours in P,
/// lowest index on ties. Output sorted lexicographically.
std::vector<VertexSet> maximal_cliques(const Graph& g, VertexSet within);
inline std::vector<VertexSet> maximal_cliques(const Graph& g) { return maximal_cliques(g, g.vertices()); }

bool is_clique(const Graph& g, VertexSet s);

struct FreeCheck {
    bool free = true;
    /// When not free: the embedding map (single), the cycle (cycles), or the
    /// clique members (clique_at_least).
    std::vector<int> witness;
};

FreeCheck check_free(const Graph& g, VertexSet s, const PatternSpec& p);
bool is_free(const Graph& g, VertexSet s, const PatternSpec& p);

/// Requires is_free(g, s, p). Decides is_free(g, s + v, p) by searching only
/// for copies through v.
bool stays_free_with(const Graph& g, VertexSet s, int v, const PatternSpec& p);

struct VertexRemoval {
    Graph remainder;    ///< G - v', relabeled in increasing order
    int removed = 0;    ///< v'
    int min_degree = 0; ///< deg_G(v')
};

/// G - v' for the lowest-index vertex v' of minimum degree. Throws ParseError
/// for a non-single pattern or |V(G)| < 2.
VertexRemoval pattern_minus_min_degree_vertex(const PatternSpec& p);

}  // namespace gfree
