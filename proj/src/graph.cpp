#include "gfree/graph.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "gfree/errors.hpp"

namespace gfree {

namespace {

int checked_order(int n)
{
    if (n < 0 || n > kMaxVertices) {
        throw ParseError("graph order " + std::to_string(n) + " outside [0, " + std::to_string(kMaxVertices) + "]");
    }
    return n;
}

}  // namespace

Graph::Graph(int n) : n_(checked_order(n)), adj_(static_cast<std::size_t>(n_)) {}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n)
{
    for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v)
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
        throw ParseError("edge " + std::to_string(u) + "-" + std::to_string(v) + " has an endpoint outside 0.." +
                         std::to_string(n_ - 1));
    }
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u));
    if (adj_[u].contains(v)) throw ParseError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    adj_[u].insert(v);
    adj_[v].insert(u);
    ++edges_;
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edges_));
    for (int u = 0; u < n_; ++u) {
        (adj_[u] - VertexSet::prefix(u + 1)).for_each([&](int v) { out.emplace_back(u, v); });
    }
    return out;
}

int Graph::induced_edge_count(VertexSet s) const
{
    int twice = 0;
    s.for_each([&](int v) { twice += (adj_[v] & s).size(); });
    return twice / 2;
}

Graph Graph::induced_subgraph(VertexSet s) const
{
    const std::vector<int> members = s.to_vector();
    Graph h(static_cast<int>(members.size()));
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (adjacent(members[i], members[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return h;
}

bool Graph::is_connected() const
{
    if (n_ <= 1) return true;
    VertexSet seen{0};
    VertexSet frontier{0};
    while (!frontier.empty()) {
        VertexSet next;
        frontier.for_each([&](int v) { next |= adj_[v]; });
        frontier = next - seen;
        seen |= next;
    }
    return seen == vertices();
}

DegreeStats degree_stats(const Graph& g)
{
    DegreeStats stats;
    stats.sequence.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) stats.sequence.push_back(g.degree(v));
    std::sort(stats.sequence.begin(), stats.sequence.end(), std::greater<>());
    if (!stats.sequence.empty()) {
        stats.max_degree = stats.sequence.front();
        stats.min_degree = stats.sequence.back();
    }
    return stats;
}

int NeighborProfile::outside_count() const
{
    int total = 0;
    for (const auto& [i, c] : counts) total += c;
    return total;
}

long long NeighborProfile::weighted_sum() const
{
    long long total = 0;
    for (const auto& [i, c] : counts) total += static_cast<long long>(i) * c;
    return total;
}

NeighborProfile neighbor_profile(const Graph& g, VertexSet s)
{
    NeighborProfile profile;
    (g.vertices() - s).for_each([&](int v) {
        const int inside = (g.neighbors(v) & s).size();
        ++profile.counts[inside];
        profile.cut_size += inside;
    });
    return profile;
}

}  // namespace gfree
