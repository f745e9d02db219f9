#pragma once

// Brute-force reference implementations for the test suites. They only use
// Graph adjacency queries and exhaustive enumeration, never the library's
// search kernels, so they can check those kernels independently.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "gfree/graph.hpp"
#include "gfree/pattern.hpp"

namespace gfree::oracle {

inline std::vector<int> members(const Graph& g, std::uint64_t mask)
{
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if ((mask >> v) & 1U) out.push_back(v);
    return out;
}

inline bool is_clique(const Graph& g, const std::vector<int>& s)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j])) return false;
    return true;
}

/// Some injective map from pattern vertices into `host_set` that preserves
/// edges (and non-edges when induced). Tries every ordered selection.
inline bool contains_copy(const Graph& g, const std::vector<int>& host_set, const Graph& pattern, bool induced)
{
    const int k = pattern.order();
    const int m = static_cast<int>(host_set.size());
    if (k > m) return false;
    std::vector<int> image(static_cast<std::size_t>(k));
    std::vector<bool> used(static_cast<std::size_t>(m), false);
    std::function<bool(int)> place = [&](int i) {
        if (i == k) return true;
        for (int c = 0; c < m; ++c) {
            if (used[c]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                const bool pe = pattern.adjacent(i, j);
                const bool he = g.adjacent(host_set[c], image[j]);
                if (pe && !he) ok = false;
                if (induced && !pe && he) ok = false;
            }
            if (!ok) continue;
            used[c] = true;
            image[i] = host_set[c];
            if (place(i + 1)) return true;
            used[c] = false;
        }
        return false;
    };
    return place(0);
}

/// Forest iff |E| = |V| - #components.
inline bool is_acyclic(const Graph& g, const std::vector<int>& s)
{
    int edges = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) ++edges;
    std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
    int components = 0;
    for (int start : s) {
        if (comp[start] >= 0) continue;
        std::vector<int> stack{start};
        comp[start] = components;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int w : s) {
                if (comp[w] < 0 && g.adjacent(u, w)) {
                    comp[w] = components;
                    stack.push_back(w);
                }
            }
        }
        ++components;
    }
    return edges == static_cast<int>(s.size()) - components;
}

inline int clique_number(const Graph& g, const std::vector<int>& s)
{
    const int m = static_cast<int>(s.size());
    int best = 0;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << m); ++code) {
        std::vector<int> sub;
        for (int i = 0; i < m; ++i)
            if ((code >> i) & 1U) sub.push_back(s[i]);
        if (static_cast<int>(sub.size()) > best && is_clique(g, sub)) best = static_cast<int>(sub.size());
    }
    return best;
}

/// Maximum size over all masks with `free_pred`, plus the lexicographically
/// smallest maximiser.
inline std::pair<int, std::vector<int>> max_subset(const Graph& g,
                                                   const std::function<bool(const std::vector<int>&)>& free_pred)
{
    int best = -1;
    std::vector<int> witness;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask) {
        const auto s = members(g, mask);
        if (static_cast<int>(s.size()) < best) continue;
        if (!free_pred(s)) continue;
        if (static_cast<int>(s.size()) > best || s < witness) {
            best = static_cast<int>(s.size());
            witness = s;
        }
    }
    return {best, witness};
}

inline std::vector<std::vector<int>> maximal_cliques(const Graph& g)
{
    std::vector<std::vector<int>> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.order()); ++mask) {
        const auto s = members(g, mask);
        if (!is_clique(g, s)) continue;
        bool maximal = true;
        for (int v = 0; v < g.order() && maximal; ++v) {
            if ((mask >> v) & 1U) continue;
            auto t = s;
            t.push_back(v);
            if (is_clique(g, t)) maximal = false;
        }
        if (maximal) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// min p over every nonempty clique K of (min_{v in K} deg v + |K| + 1).
inline int henning_p(const Graph& g)
{
    int p = 1;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.order()); ++mask) {
        const auto s = members(g, mask);
        if (!is_clique(g, s)) continue;
        int low = g.order();
        for (int v : s) low = std::min(low, g.degree(v));
        p = std::max(p, low + static_cast<int>(s.size()) + 1);
    }
    return p;
}

/// Smallest k admitting a k-colouring whose classes all pass `free_pred`.
inline int free_chromatic_number(const Graph& g, const std::function<bool(const std::vector<int>&)>& free_pred)
{
    const int n = g.order();
    for (int k = 1; k <= n; ++k) {
        std::vector<int> colour(static_cast<std::size_t>(n), 0);
        for (;;) {
            bool ok = true;
            for (int c = 0; c < k && ok; ++c) {
                std::vector<int> cls;
                for (int v = 0; v < n; ++v)
                    if (colour[v] == c) cls.push_back(v);
                ok = free_pred(cls);
            }
            if (ok) return k;
            int i = 0;
            while (i < n && ++colour[i] == k) colour[i++] = 0;
            if (i == n) break;
        }
    }
    return n;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p)
{
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

/// Freeness decided by the exhaustive helpers above.
inline std::function<bool(const std::vector<int>&)> free_predicate(const Graph& g, const PatternSpec& p)
{
    switch (p.kind()) {
    case PatternKind::Single:
        return [&g, pat = p.graph(), induced = p.mode() == CopyMode::Induced](const std::vector<int>& s) {
            return !contains_copy(g, s, pat, induced);
        };
    case PatternKind::Cycles:
        return [&g](const std::vector<int>& s) { return is_acyclic(g, s); };
    case PatternKind::CliqueAtLeast:
        return [&g, k = p.clique_threshold()](const std::vector<int>& s) { return clique_number(g, s) < k; };
    }
    return {};
}

inline int cut_size(const Graph& g, const std::vector<int>& s)
{
    int cut = 0;
    for (int u : s)
        for (int v = 0; v < g.order(); ++v)
            if (std::find(s.begin(), s.end(), v) == s.end() && g.adjacent(u, v)) ++cut;
    return cut;
}

}  // namespace gfree::oracle
