#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gfree/vertex_set.hpp"

namespace gfree {

/// Undirected simple graph on vertices 0..n-1 with bitmask adjacency rows.
///
/// Immutable once built: construct through `Graph(n, edges)` or the
/// generators. `add_edge` exists for builders and rejects loops and
/// duplicates, so the simplicity invariant holds for every live Graph.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int edge_count() const { return edges_; }

    bool adjacent(int u, int v) const { return adj_[u].contains(v); }
    VertexSet neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].size(); }
    VertexSet vertices() const { return VertexSet::prefix(n_); }

    bool contains_set(VertexSet s) const { return s.is_subset_of(vertices()); }

    /// Throws ParseError on a loop, a duplicate, or an out-of-range endpoint.
    void add_edge(int u, int v);

    /// Sorted (u < v) edge list.
    std::vector<std::pair<int, int>> edges() const;

    /// |E(H[s])|
    int induced_edge_count(VertexSet s) const;
    /// H[s] relabeled to 0..|s|-1 in increasing vertex order.
    Graph induced_subgraph(VertexSet s) const;

    bool is_connected() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    int edges_ = 0;
    std::vector<VertexSet> adj_;
};

struct DegreeStats {
    int max_degree = 0;
    int min_degree = 0;
    /// Sorted descending.
    std::vector<int> sequence;
};

DegreeStats degree_stats(const Graph& g);

/// n_i(S) counts and the cut size beta(S) = |E(S, V \ S)|.
struct NeighborProfile {
    /// i -> number of outside vertices with exactly i neighbours in S. Zero
    /// counts are omitted.
    std::map<int, int> counts;
    long long cut_size = 0;

    int outside_count() const;
    long long weighted_sum() const;
};

NeighborProfile neighbor_profile(const Graph& g, VertexSet s);

}  // namespace gfree
