#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "gfree/graph.hpp"

namespace gfree {

Graph complete_graph(int n);
/// Throws ParseError for n < 3.
Graph cycle_graph(int n);
Graph path_graph(int n);
/// K_{1,leaves}; the centre is vertex 0.
Graph star_graph(int leaves);
Graph empty_graph(int n);
/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
Graph petersen_graph();

/// Erdos-Renyi G(n, p).
///
/// Pairs (i, j), i < j, are visited row by row (i outer, j inner). Each pair
/// consumes one output x of std::mt19937_64 seeded with `seed`, and the edge
/// is present iff (x >> 11) * 2^-53 < p. mt19937_64 is fully specified by
/// the C++ standard, so corpora are identical across platforms and across
/// any reimplementation of the same recipe.
Graph gnp_graph(int n, double p, std::uint64_t seed);

/// Built-in names: Kn, Cn, Pn, En (edgeless), K1_m (star), petersen.
/// Returns nullopt when the text is not one of these names.
std::optional<Graph> named_graph(std::string_view name);

}  // namespace gfree
