#include "gfree/generators.hpp"

#include <charconv>
#include <random>
#include <string>

#include "gfree/errors.hpp"

namespace gfree {
namespace {

void require_order(int n, const char* family)
{
    if (n < 1) throw ParseError(std::string(family) + ": n must be at least 1");
}

std::optional<int> parse_count(std::string_view digits)
{
    if (digits.empty()) return std::nullopt;
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
    return value;
}

}  // namespace

Graph complete_graph(int n)
{
    require_order(n, "complete");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph cycle_graph(int n)
{
    if (n < 3) throw ParseError("cycle: n must be at least 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int n)
{
    require_order(n, "path");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph star_graph(int leaves)
{
    if (leaves < 0) throw ParseError("star: leaf count must be non-negative");
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph empty_graph(int n)
{
    require_order(n, "empty");
    return Graph(n);
}

Graph petersen_graph()
{
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, i + 5);
    }
    return g;
}

Graph gnp_graph(int n, double p, std::uint64_t seed)
{
    require_order(n, "gnp");
    if (!(p >= 0.0 && p <= 1.0)) throw ParseError("gnp: p must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < p) g.add_edge(i, j);
        }
    }
    return g;
}

std::optional<Graph> named_graph(std::string_view name)
{
    if (name == "petersen" || name == "Petersen") return petersen_graph();
    if (name.size() < 2) return std::nullopt;
    if (name.starts_with("K1_")) {
        if (auto m = parse_count(name.substr(3))) return star_graph(*m);
        return std::nullopt;
    }
    const auto count = parse_count(name.substr(1));
    if (!count) return std::nullopt;
    switch (name.front()) {
        case 'K': return complete_graph(*count);
        case 'C': return cycle_graph(*count);
        case 'P': return path_graph(*count);
        case 'E': return empty_graph(*count);
        default: return std::nullopt;
    }
}

}  // namespace gfree
