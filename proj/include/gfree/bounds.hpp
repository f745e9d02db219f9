#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "json.hpp"

#include "gfree/graph.hpp"
#include "gfree/pattern.hpp"
#include "gfree/solvers.hpp"

namespace gfree {

using Rational = boost::rational<long long>;

enum class BoundKind { Lower, Upper };

/// One evaluated bound. `value` is exact; `value_int()` is the integer bound
/// it implies for |S| (ceiling for lower bounds, floor for upper bounds).
struct BoundReport {
    std::string name;
    BoundKind kind = BoundKind::Lower;
    std::optional<Rational> value;
    bool applicable = false;
    bool depends_on_optimum = false;
    nlohmann::json witness = nlohmann::json::object();

    std::optional<long long> value_int() const;
    /// Inapplicable, or on the right side of `optimum`.
    bool holds_for(int optimum) const;
};

nlohmann::json to_json(const BoundReport& r);
std::string format_rational(const Rational& r);

// Independence-number bounds (pattern K2).

/// alpha <= n - e / Delta. Inapplicable when Delta = 0.
BoundReport kwok_upper(const Graph& g);

/// alpha <= n - ceil((n - 1) / Delta). Inapplicable when Delta = 0 and for
/// disconnected hosts, where the inequality fails (K2 plus an isolated
/// vertex has alpha = 2 > 3 - 2).
BoundReport borg_upper(const Graph& g);

/// Smallest p with: every clique K has a vertex v with deg(v) <= p - |K| - 1.
/// For a clique K the tightest p is min_{v in K} deg(v) + |K| + 1; over the
/// sub-cliques of one maximal clique the maximum is reached by the top-s
/// vertices by degree, so only maximal cliques are enumerated.
struct HenningParameter {
    int p = 0;
    /// A clique attaining p (the binding constraint).
    VertexSet critical_clique;
};
HenningParameter henning_min_p(const Graph& g);

/// alpha >= 2n / p with the minimal p.
BoundReport henning_lower(const Graph& g);

// Bounds on the maximum free subset.

/// |S| >= n / chi_G(H).
BoundReport chi_lower(const Graph& g, const PatternSpec& p, const SolverCaps& caps = {});

/// |S| >= n + (e_G + e_H' - e_H - Delta) / delta with e_H' = |E(H[V \ S])|
/// taken from the certified optimum. Inapplicable when S = V(H): the
/// inequality needs an outside vertex to witness maximality.
BoundReport th1_lower(const Graph& g, const PatternSpec& p, const SolveResult& optimum);
/// Same with e_H' := 0, which needs no optimum.
BoundReport th1_apriori_lower(const Graph& g, const PatternSpec& p, const SolveResult& optimum);

/// n - sum_i i*n_i(S) / delta <= |S| <= n - sum_i i*n_i(S) / Delta(H).
/// Throws InvariantViolation if n_i(S) > 0 for some i < delta (S is then not
/// maximal).
std::pair<BoundReport, BoundReport> th2_sandwich(const Graph& g, const SolveResult& optimum, const PatternSpec& p);

struct RFamilyEntry {
    int outside_vertex = 0;
    int copy_index = 0;
    /// Embeddings sharing this attachment set.
    int embeddings = 0;
    /// N_v^i = N(v) intersected with the copy of G - v' in S.
    VertexSet attachment;
    /// M_v^i = outside vertices u with N(u) cap S = N_v^i.
    VertexSet matching;
    bool matching_is_clique = false;
    /// [matching] when it is a clique, otherwise the maximal cliques of H[matching].
    std::vector<VertexSet> cliques;
    std::vector<VertexSet> components;
};

/// Outcome of testing "H[M] is a clique" on every entry whose attachment
/// set has exactly delta vertices.
struct CliqueClaimCheck {
    int checked = 0;
    int failures = 0;
    /// Failures where every swap S - x'' + {x, x'} (x, x' non-adjacent in M,
    /// x'' in N) contains a copy, so the exchange argument does not apply.
    int explained = 0;
    /// Failures where some swap is free: that contradicts the optimum.
    int unexplained = 0;
    std::vector<std::string> log;
};

struct RFamily {
    int delta = 0;
    VertexSet optimum;
    long long cut_size = 0;
    std::vector<RFamilyEntry> entries;
    CliqueClaimCheck claim;

    /// Distinct clique members X of R(H).
    std::vector<VertexSet> cliques() const;
    /// Distinct connected components of the H[M_v^i].
    std::vector<VertexSet> components() const;
};

/// For each v outside the optimum, every copy of G through v in which v
/// plays a minimum-degree vertex of G, grouped by attachment set.
/// Throws InvariantViolation if `optimum` is not maximal.
RFamily build_r_family(const Graph& g, const PatternSpec& p, const SolveResult& optimum);

/// The same construction for the cycle family: the copies through v are the
/// cycles closed by v over a tree path of the induced forest.
RFamily build_cycle_r_family(const Graph& g, const SolveResult& forest);

/// Smallest P with: every X in `family` has x with deg(x) <= P - |X| - delta.
/// Empty family: P = delta + 1.
int min_valid_P(const Graph& g, const std::vector<VertexSet>& family, int delta);
bool condition_holds(const Graph& g, const std::vector<VertexSet>& family, int delta, int P);

/// |S| >= (delta + 1) n / P quantified over the cliques of R(H). An empty
/// R(H) on a host that contains the pattern leaves the condition vacuous and
/// the report inapplicable; on a free host it gives P = delta + 1.
BoundReport th3_lower(const Graph& g, const PatternSpec& p, const RFamily& r);
/// The same bound quantified over connected components of the H[M_v^i].
BoundReport th3_component_lower(const Graph& g, const PatternSpec& p, const RFamily& r);

/// f(H) >= 3n / P, built from a minimum-cut maximum induced forest.
BoundReport forest_corollary(const Graph& g, const SolverCaps& caps = {});

/// Clique-number < k optimum >= sum of the first k - 1 layer sizes.
BoundReport layered_lower(const Graph& g, int k, const SolverCaps& caps = {});

nlohmann::json to_json(const NeighborProfile& profile);
nlohmann::json to_json(const RFamily& r);
nlohmann::json set_json(VertexSet s);

}  // namespace gfree
