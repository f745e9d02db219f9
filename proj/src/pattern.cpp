#include "gfree/pattern.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "gfree/errors.hpp"
#include "gfree/generators.hpp"
#include "gfree/graph_io.hpp"

namespace gfree {

// PatternSpec

PatternSpec PatternSpec::single(Graph g, CopyMode mode, std::string label)
{
    if (g.edge_count() == 0) throw ParseError("pattern graph must have at least one edge");
    PatternSpec p;
    p.kind_ = PatternKind::Single;
    p.mode_ = mode;
    p.label_ = label.empty() ? "g6:" + to_graph6(g) : std::move(label);
    p.graph_ = std::move(g);
    return p;
}

PatternSpec PatternSpec::cycles()
{
    PatternSpec p;
    p.kind_ = PatternKind::Cycles;
    p.label_ = "cycles";
    return p;
}

PatternSpec PatternSpec::clique_at_least(int k)
{
    if (k < 2) throw ParseError("clique threshold must be at least 2");
    PatternSpec p;
    p.kind_ = PatternKind::CliqueAtLeast;
    p.k_ = k;
    p.label_ = "clique>=" + std::to_string(k);
    return p;
}

int PatternSpec::min_degree() const
{
    switch (kind_) {
        case PatternKind::Single: return degree_stats(graph_).min_degree;
        case PatternKind::Cycles: return 2;
        case PatternKind::CliqueAtLeast: return k_ - 1;
    }
    return 0;
}

PatternSpec parse_pattern(std::string_view text, CopyMode mode)
{
    if (text == "cycles") return PatternSpec::cycles();
    if (text.starts_with("clique>=")) {
        const std::string digits(text.substr(8));
        int k = 0;
        std::istringstream in(digits);
        if (!(in >> k) || !in.eof()) throw ParseError("bad clique threshold in '" + std::string(text) + "'");
        return PatternSpec::clique_at_least(k);
    }
    if (text.starts_with("@")) {
        const std::string path(text.substr(1));
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open pattern file '" + path + "'");
        std::string line;
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            return PatternSpec::single(parse_graph6(line), mode, std::string(text));
        }
        throw ParseError("pattern file '" + path + "' is empty");
    }
    if (auto g = named_graph(text)) return PatternSpec::single(std::move(*g), mode, std::string(text));
    throw ParseError("unknown pattern '" + std::string(text) + "'");
}

// Embedding search

namespace {

class EmbeddingSearch {
public:
    EmbeddingSearch(const Graph& host, VertexSet within, const Graph& pattern, CopyMode mode)
        : host_(host), within_(within), pattern_(pattern), mode_(mode)
    {
        host_degree_.resize(static_cast<std::size_t>(host.order()));
        within.for_each([&](int v) { host_degree_[v] = (host.neighbors(v) & within).size(); });
    }

    void run(const Anchors& anchors, const std::function<bool(const Embedding&)>& visit)
    {
        const int k = pattern_.order();
        map_.assign(static_cast<std::size_t>(k), -1);
        VertexSet used;
        std::vector<bool> placed(static_cast<std::size_t>(k), false);
        for (const auto& [pv, hv] : anchors) {
            if (pv < 0 || pv >= k || !within_.contains(hv) || used.contains(hv) || placed[pv]) return;
            map_[pv] = hv;
            used.insert(hv);
            placed[pv] = true;
        }
        for (const auto& [pv, hv] : anchors) {
            for (const auto& [qv, hq] : anchors) {
                if (pv < qv && !consistent(pv, hv, qv, hq)) return;
            }
            if (host_degree_[hv] < pattern_.degree(pv)) return;
        }

        order_.clear();
        std::vector<int> links(static_cast<std::size_t>(k), 0);
        for (int u = 0; u < k; ++u) {
            if (placed[u]) pattern_.neighbors(u).for_each([&](int w) { ++links[w]; });
        }
        for (int step = static_cast<int>(anchors.size()); step < k; ++step) {
            int best = -1;
            for (int u = 0; u < k; ++u) {
                if (placed[u]) continue;
                if (best < 0 || links[u] > links[best] ||
                    (links[u] == links[best] && pattern_.degree(u) > pattern_.degree(best))) {
                    best = u;
                }
            }
            placed[best] = true;
            order_.push_back(best);
            pattern_.neighbors(best).for_each([&](int w) { ++links[w]; });
        }

        visit_ = &visit;
        stopped_ = false;
        extend(0, used);
    }

private:
    bool consistent(int pu, int hu, int pv, int hv) const
    {
        const bool pattern_edge = pattern_.adjacent(pu, pv);
        const bool host_edge = host_.adjacent(hu, hv);
        if (pattern_edge && !host_edge) return false;
        if (mode_ == CopyMode::Induced && !pattern_edge && host_edge) return false;
        return true;
    }

    void extend(std::size_t depth, VertexSet used)
    {
        if (depth == order_.size()) {
            stopped_ = !(*visit_)(Embedding{map_});
            return;
        }
        const int u = order_[depth];
        VertexSet candidates = within_ - used;
        for (int w = 0; w < pattern_.order() && !candidates.empty(); ++w) {
            if (map_[w] < 0 || w == u) continue;
            if (pattern_.adjacent(u, w)) {
                candidates &= host_.neighbors(map_[w]);
            } else if (mode_ == CopyMode::Induced) {
                candidates -= host_.neighbors(map_[w]);
            }
        }
        const int need = pattern_.degree(u);
        candidates.for_each([&](int h) {
            if (stopped_ || host_degree_[h] < need) return;
            map_[u] = h;
            extend(depth + 1, used.with(h));
            map_[u] = -1;
        });
    }

    const Graph& host_;
    VertexSet within_;
    const Graph& pattern_;
    CopyMode mode_;
    std::vector<int> host_degree_;
    std::vector<int> map_;
    std::vector<int> order_;
    const std::function<bool(const Embedding&)>* visit_ = nullptr;
    bool stopped_ = false;
};

}  // namespace

void enumerate_embeddings(const Graph& host, VertexSet within, const Graph& pattern, CopyMode mode,
                          const Anchors& anchors, const std::function<bool(const Embedding&)>& visit)
{
    if (pattern.order() > within.size()) return;
    EmbeddingSearch search(host, within, pattern, mode);
    search.run(anchors, visit);
}

std::optional<Embedding> find_embedding(const Graph& host, VertexSet within, const Graph& pattern, CopyMode mode,
                                        const Anchors& anchors)
{
    std::optional<Embedding> found;
    enumerate_embeddings(host, within, pattern, mode, anchors, [&](const Embedding& e) {
        found = e;
        return false;
    });
    return found;
}

// Cycles

std::optional<std::vector<int>> find_cycle(const Graph& g, VertexSet s)
{
    // Grow a spanning forest edge by edge; the first edge closing a loop gives
    // the cycle as the forest path between its endpoints.
    std::vector<int> root(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) root[v] = v;
    auto find = [&](int v) {
        while (root[v] != v) v = root[v] = root[root[v]];
        return v;
    };
    std::vector<VertexSet> forest(static_cast<std::size_t>(g.order()));
    for (const auto& [u, v] : g.edges()) {
        if (!s.contains(u) || !s.contains(v)) continue;
        const int ru = find(u);
        const int rv = find(v);
        if (ru != rv) {
            root[ru] = rv;
            forest[u].insert(v);
            forest[v].insert(u);
            continue;
        }
        std::vector<int> parent(static_cast<std::size_t>(g.order()), -1);
        std::vector<int> queue{u};
        parent[u] = u;
        for (std::size_t head = 0; head < queue.size() && parent[v] < 0; ++head) {
            forest[queue[head]].for_each([&](int w) {
                if (parent[w] < 0) {
                    parent[w] = queue[head];
                    queue.push_back(w);
                }
            });
        }
        std::vector<int> cycle;
        for (int w = v; w != u; w = parent[w]) cycle.push_back(w);
        cycle.push_back(u);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
    }
    return std::nullopt;
}

// Cliques

namespace {

bool clique_of_size(const Graph& g, VertexSet chosen, VertexSet candidates, int remaining, VertexSet& out)
{
    if (remaining == 0) {
        out = chosen;
        return true;
    }
    while (candidates.size() >= remaining) {
        const int v = candidates.lowest();
        candidates.erase(v);
        if (clique_of_size(g, chosen.with(v), candidates & g.neighbors(v), remaining - 1, out)) return true;
    }
    return false;
}

void grow_max_clique(const Graph& g, VertexSet chosen, VertexSet candidates, VertexSet& best)
{
    if (candidates.empty()) {
        if (chosen.size() > best.size()) best = chosen;
        return;
    }
    // Lowest-first inclusion visits equal-size cliques in lexicographic order,
    // so a strict improvement test keeps the lexicographically smallest.
    while (!candidates.empty() && chosen.size() + candidates.size() > best.size()) {
        const int v = candidates.lowest();
        candidates.erase(v);
        grow_max_clique(g, chosen.with(v), candidates & g.neighbors(v), best);
    }
    if (chosen.size() > best.size()) best = chosen;
}

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet>& out)
{
    if (p.empty()) {
        if (x.empty()) out.push_back(r);
        return;
    }
    int pivot = -1;
    int pivot_score = -1;
    (p | x).for_each([&](int u) {
        const int score = (p & g.neighbors(u)).size();
        if (score > pivot_score) {
            pivot = u;
            pivot_score = score;
        }
    });
    (p - g.neighbors(pivot)).for_each([&](int v) {
        bron_kerbosch(g, r.with(v), p & g.neighbors(v), x & g.neighbors(v), out);
        p.erase(v);
        x.insert(v);
    });
}

bool lex_less(VertexSet a, VertexSet b)
{
    const auto va = a.to_vector();
    const auto vb = b.to_vector();
    return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

}  // namespace

std::optional<VertexSet> find_clique_of_size(const Graph& g, VertexSet within, int size)
{
    if (size <= 0) return VertexSet{};
    VertexSet out;
    if (clique_of_size(g, VertexSet{}, within, size, out)) return out;
    return std::nullopt;
}

VertexSet maximum_clique(const Graph& g, VertexSet within)
{
    VertexSet best;
    grow_max_clique(g, VertexSet{}, within, best);
    return best;
}

int clique_number(const Graph& g) { return maximum_clique(g).size(); }

std::vector<VertexSet> maximal_cliques(const Graph& g, VertexSet within)
{
    std::vector<VertexSet> out;
    if (within.empty()) return out;
    bron_kerbosch(g, VertexSet{}, within, VertexSet{}, out);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

bool is_clique(const Graph& g, VertexSet s)
{
    bool ok = true;
    s.for_each([&](int v) {
        if (!(s.without(v)).is_subset_of(g.neighbors(v))) ok = false;
    });
    return ok;
}

// Freeness

FreeCheck check_free(const Graph& g, VertexSet s, const PatternSpec& p)
{
    FreeCheck result;
    switch (p.kind()) {
        case PatternKind::Single:
            if (auto e = find_embedding(g, s, p.graph(), p.mode())) {
                result.free = false;
                result.witness = std::move(e->map);
            }
            break;
        case PatternKind::Cycles:
            if (auto c = find_cycle(g, s)) {
                result.free = false;
                result.witness = std::move(*c);
            }
            break;
        case PatternKind::CliqueAtLeast:
            if (auto c = find_clique_of_size(g, s, p.clique_threshold())) {
                result.free = false;
                result.witness = c->to_vector();
            }
            break;
    }
    return result;
}

bool is_free(const Graph& g, VertexSet s, const PatternSpec& p) { return check_free(g, s, p).free; }

bool stays_free_with(const Graph& g, VertexSet s, int v, const PatternSpec& p)
{
    const VertexSet grown = s.with(v);
    switch (p.kind()) {
        case PatternKind::Single: {
            const Graph& pattern = p.graph();
            const int host_deg = (g.neighbors(v) & s).size();
            for (int u = 0; u < pattern.order(); ++u) {
                if (pattern.degree(u) > host_deg) continue;
                if (find_embedding(g, grown, pattern, p.mode(), {{u, v}})) return false;
            }
            return true;
        }
        case PatternKind::Cycles: {
            // s is a forest; v closes a cycle iff two of its neighbours share a tree.
            VertexSet unseen = g.neighbors(v) & s;
            while (!unseen.empty()) {
                VertexSet tree{unseen.lowest()};
                VertexSet frontier = tree;
                while (!frontier.empty()) {
                    VertexSet next;
                    frontier.for_each([&](int w) { next |= g.neighbors(w) & s; });
                    frontier = next - tree;
                    tree |= next;
                }
                if ((tree & g.neighbors(v)).size() >= 2) return false;
                unseen -= tree;
            }
            return true;
        }
        case PatternKind::CliqueAtLeast:
            return !find_clique_of_size(g, g.neighbors(v) & s, p.clique_threshold() - 1).has_value();
    }
    return true;
}

VertexRemoval pattern_minus_min_degree_vertex(const PatternSpec& p)
{
    if (!p.is_single()) throw ParseError("vertex removal needs a single forbidden graph");
    const Graph& g = p.graph();
    if (g.order() < 2) throw ParseError("pattern too small: needs at least 2 vertices");
    int chosen = 0;
    for (int v = 1; v < g.order(); ++v) {
        if (g.degree(v) < g.degree(chosen)) chosen = v;
    }
    return VertexRemoval{g.induced_subgraph(g.vertices().without(chosen)), chosen, g.degree(chosen)};
}

}  // namespace gfree
