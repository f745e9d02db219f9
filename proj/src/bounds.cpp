#include "gfree/bounds.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "gfree/errors.hpp"

namespace gfree {
namespace {

long long floor_div(long long num, long long den)
{
    long long q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

long long ceil_div(long long num, long long den) { return -floor_div(-num, den); }

BoundReport make_report(std::string name, BoundKind kind, bool depends_on_optimum)
{
    BoundReport r;
    r.name = std::move(name);
    r.kind = kind;
    r.depends_on_optimum = depends_on_optimum;
    return r;
}

void set_value(BoundReport& r, Rational value)
{
    r.value = value;
    r.applicable = true;
}

void mark_inapplicable(BoundReport& r, const std::string& reason)
{
    r.value.reset();
    r.applicable = false;
    r.witness["reason"] = reason;
}

int max_degree(const Graph& g) { return degree_stats(g).max_degree; }

int min_degree_in(const Graph& g, VertexSet x)
{
    int best = -1;
    x.for_each([&](int v) {
        if (best < 0 || g.degree(v) < best) best = g.degree(v);
    });
    return best;
}

int argmin_degree_in(const Graph& g, VertexSet x)
{
    int best = -1;
    x.for_each([&](int v) {
        if (best < 0 || g.degree(v) < g.degree(best)) best = v;
    });
    return best;
}

std::vector<VertexSet> components_of(const Graph& g, VertexSet within)
{
    std::vector<VertexSet> out;
    VertexSet unseen = within;
    while (!unseen.empty()) {
        VertexSet comp{unseen.lowest()};
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            frontier.for_each([&](int w) { next |= g.neighbors(w) & within; });
            frontier = next - comp;
            comp |= next;
        }
        out.push_back(comp);
        unseen -= comp;
    }
    return out;
}

std::vector<VertexSet> distinct(std::vector<VertexSet> sets)
{
    std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
        const auto va = a.to_vector();
        const auto vb = b.to_vector();
        return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    return sets;
}

std::vector<int> roles_of_min_degree(const Graph& pattern, int delta)
{
    std::vector<int> roles;
    for (int w = 0; w < pattern.order(); ++w) {
        if (pattern.degree(w) == delta) roles.push_back(w);
    }
    return roles;
}

// Fills matching / cliques / components and runs the clique-claim check.
void finish_entries(const Graph& g, const PatternSpec& p, RFamily& r)
{
    const VertexSet outside = g.vertices() - r.optimum;
    for (auto& e : r.entries) {
        outside.for_each([&](int u) {
            if ((g.neighbors(u) & r.optimum) == e.attachment) e.matching.insert(u);
        });
        // M is empty when v has neighbours in S outside the copy; it then
        // contributes no member to R(H).
        e.matching_is_clique = !e.matching.empty() && is_clique(g, e.matching);
        e.cliques = e.matching_is_clique ? std::vector<VertexSet>{e.matching} : maximal_cliques(g, e.matching);
        e.components = components_of(g, e.matching);
        if (e.matching.empty()) continue;

        if (e.attachment.size() != r.delta) continue;
        ++r.claim.checked;
        if (e.matching_is_clique) continue;
        ++r.claim.failures;
        bool some_swap_free = false;
        std::string detail;
        const auto members = e.matching.to_vector();
        for (std::size_t i = 0; i < members.size() && !some_swap_free; ++i) {
            for (std::size_t j = i + 1; j < members.size() && !some_swap_free; ++j) {
                const int x = members[i];
                const int y = members[j];
                if (g.adjacent(x, y)) continue;
                e.attachment.for_each([&](int drop) {
                    if (some_swap_free) return;
                    const VertexSet swapped = r.optimum.without(drop).with(x).with(y);
                    if (is_free(g, swapped, p)) {
                        some_swap_free = true;
                        detail = "swap -" + std::to_string(drop) + " +" + std::to_string(x) + " +" +
                                 std::to_string(y) + " is free";
                    }
                });
            }
        }
        std::string line = "v=" + std::to_string(e.outside_vertex) + " copy=" + std::to_string(e.copy_index) +
                           ": H[M] not a clique, ";
        if (some_swap_free) {
            ++r.claim.unexplained;
            line += "UNEXPLAINED (" + detail + ")";
        } else {
            ++r.claim.explained;
            line += "explained: every exchange S - x'' + {x, x'} contains a copy";
        }
        r.claim.log.push_back(std::move(line));
    }
}

BoundReport p_based_bound(const Graph& g, const std::string& name, int delta, const std::vector<VertexSet>& family,
                          const std::string& quantifier, bool host_free)
{
    BoundReport r = make_report(name, BoundKind::Lower, true);
    r.witness["delta"] = delta;
    r.witness["quantifier"] = quantifier;
    r.witness["family_size"] = family.size();
    if (family.empty() && !host_free) {
        // Every P satisfies an empty condition, and no P makes (delta+1)n/P a
        // bound here, since the optimum is below n.
        mark_inapplicable(r, "vacuous: R(H) is empty but the host contains the pattern");
        r.witness["vacuous"] = true;
        return r;
    }
    const int P = min_valid_P(g, family, delta);
    const int n = g.order();
    set_value(r, Rational(static_cast<long long>(delta + 1) * n, P));
    r.witness["P"] = P;
    auto certs = nlohmann::json::array();
    for (VertexSet x : family) {
        certs.push_back({{"X", set_json(x)}, {"x", argmin_degree_in(g, x)}});
    }
    r.witness["certificates"] = std::move(certs);
    if (family.empty()) r.witness["note"] = "host is free, R(H) is empty: P = delta + 1, the bound reads |S| >= n";
    return r;
}

}  // namespace

// BoundReport

std::optional<long long> BoundReport::value_int() const
{
    if (!applicable || !value) return std::nullopt;
    return kind == BoundKind::Lower ? ceil_div(value->numerator(), value->denominator())
                                    : floor_div(value->numerator(), value->denominator());
}

bool BoundReport::holds_for(int optimum) const
{
    if (!applicable || !value) return true;
    return kind == BoundKind::Lower ? *value <= Rational(optimum) : *value >= Rational(optimum);
}

std::string format_rational(const Rational& r)
{
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

nlohmann::json set_json(VertexSet s) { return s.to_vector(); }

nlohmann::json to_json(const BoundReport& r)
{
    nlohmann::json j;
    j["name"] = r.name;
    j["kind"] = r.kind == BoundKind::Lower ? "lower" : "upper";
    if (r.value) {
        j["value_num"] = r.value->numerator();
        j["value_den"] = r.value->denominator();
        j["value_int"] = *r.value_int();
    } else {
        j["value_num"] = nullptr;
        j["value_den"] = nullptr;
        j["value_int"] = nullptr;
    }
    j["applicable"] = r.applicable;
    j["depends_on_optimum"] = r.depends_on_optimum;
    j["witness"] = r.witness;
    return j;
}

nlohmann::json to_json(const NeighborProfile& profile)
{
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [i, c] : profile.counts) counts[std::to_string(i)] = c;
    return {{"counts", counts}, {"cut_size", profile.cut_size}};
}

nlohmann::json to_json(const RFamily& r)
{
    auto entries = nlohmann::json::array();
    for (const auto& e : r.entries) {
        auto cliques = nlohmann::json::array();
        for (VertexSet c : e.cliques) cliques.push_back(set_json(c));
        auto comps = nlohmann::json::array();
        for (VertexSet c : e.components) comps.push_back(set_json(c));
        entries.push_back({{"v", e.outside_vertex},
                           {"i", e.copy_index},
                           {"embeddings", e.embeddings},
                           {"N", set_json(e.attachment)},
                           {"M", set_json(e.matching)},
                           {"M_is_clique", e.matching_is_clique},
                           {"cliques", cliques},
                           {"components", comps}});
    }
    return {{"delta", r.delta},
            {"optimum", set_json(r.optimum)},
            {"cut_size", r.cut_size},
            {"entries", entries},
            {"claim",
             {{"checked", r.claim.checked},
              {"failures", r.claim.failures},
              {"explained", r.claim.explained},
              {"unexplained", r.claim.unexplained},
              {"log", r.claim.log}}}};
}

// Independence-number bounds

BoundReport kwok_upper(const Graph& g)
{
    BoundReport r = make_report("kwok", BoundKind::Upper, false);
    const int delta_max = max_degree(g);
    if (delta_max == 0) {
        mark_inapplicable(r, "edgeless graph: alpha = n");
        r.witness["alpha"] = g.order();
        return r;
    }
    set_value(r, Rational(g.order()) - Rational(g.edge_count(), delta_max));
    r.witness["Delta"] = delta_max;
    r.witness["e"] = g.edge_count();
    return r;
}

BoundReport borg_upper(const Graph& g)
{
    BoundReport r = make_report("borg", BoundKind::Upper, false);
    const int delta_max = max_degree(g);
    if (delta_max == 0) {
        mark_inapplicable(r, "edgeless graph: alpha = n");
        r.witness["alpha"] = g.order();
        return r;
    }
    if (!g.is_connected()) {
        mark_inapplicable(r, "disconnected host");
        return r;
    }
    set_value(r, Rational(g.order() - ceil_div(g.order() - 1, delta_max)));
    r.witness["Delta"] = delta_max;
    return r;
}

HenningParameter henning_min_p(const Graph& g)
{
    HenningParameter best{1, VertexSet{}};
    for (VertexSet clique : maximal_cliques(g)) {
        std::vector<int> members = clique.to_vector();
        std::stable_sort(members.begin(), members.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        VertexSet prefix;
        for (std::size_t s = 1; s <= members.size(); ++s) {
            prefix.insert(members[s - 1]);
            const int need = g.degree(members[s - 1]) + static_cast<int>(s) + 1;
            if (need > best.p) {
                best.p = need;
                best.critical_clique = prefix;
            }
        }
    }
    return best;
}

BoundReport henning_lower(const Graph& g)
{
    BoundReport r = make_report("henning", BoundKind::Lower, false);
    const HenningParameter hp = henning_min_p(g);
    set_value(r, Rational(2LL * g.order(), hp.p));
    r.witness["p"] = hp.p;
    r.witness["critical_clique"] = set_json(hp.critical_clique);
    auto certs = nlohmann::json::array();
    for (VertexSet clique : maximal_cliques(g)) {
        certs.push_back({{"clique", set_json(clique)}, {"vertex", argmin_degree_in(g, clique)}});
    }
    r.witness["certificates"] = std::move(certs);
    return r;
}

// Free-subset bounds

BoundReport chi_lower(const Graph& g, const PatternSpec& p, const SolverCaps& caps)
{
    BoundReport r = make_report("chi", BoundKind::Lower, false);
    if (g.order() == 0) {
        mark_inapplicable(r, "empty graph");
        return r;
    }
    const FreeColoring coloring = gfree_chromatic_number(g, p, caps);
    set_value(r, Rational(g.order(), coloring.classes));
    r.witness["chi"] = coloring.classes;
    auto classes = nlohmann::json::array();
    for (VertexSet c : coloring.class_sets) classes.push_back(set_json(c));
    r.witness["classes"] = std::move(classes);
    return r;
}

namespace {

BoundReport th1_impl(const Graph& g, const PatternSpec& p, const SolveResult& optimum, bool use_outside_edges)
{
    BoundReport r = make_report(use_outside_edges ? "th1" : "th1_apriori", BoundKind::Lower, use_outside_edges);
    if (!p.is_single()) {
        mark_inapplicable(r, "needs a single forbidden graph");
        return r;
    }
    const int delta = p.min_degree();
    if (delta < 1) {
        mark_inapplicable(r, "pattern has minimum degree 0");
        return r;
    }
    const int n = g.order();
    if (optimum.size >= n) {
        mark_inapplicable(r, "host is free: no outside vertex witnesses maximality");
        return r;
    }
    const int outside_edges = use_outside_edges ? g.induced_edge_count(g.vertices() - optimum.best) : 0;
    const int delta_max = max_degree(g);
    set_value(r, Rational(n) + Rational(p.edge_count() + outside_edges - g.edge_count() - delta_max, delta));
    r.witness["e_G"] = p.edge_count();
    r.witness["e_H"] = g.edge_count();
    r.witness["e_H_outside"] = outside_edges;
    r.witness["Delta"] = delta_max;
    r.witness["delta"] = delta;
    return r;
}

}  // namespace

BoundReport th1_lower(const Graph& g, const PatternSpec& p, const SolveResult& optimum)
{
    return th1_impl(g, p, optimum, true);
}

BoundReport th1_apriori_lower(const Graph& g, const PatternSpec& p, const SolveResult& optimum)
{
    return th1_impl(g, p, optimum, false);
}

std::pair<BoundReport, BoundReport> th2_sandwich(const Graph& g, const SolveResult& optimum, const PatternSpec& p)
{
    BoundReport lower = make_report("th2_lower", BoundKind::Lower, true);
    BoundReport upper = make_report("th2_upper", BoundKind::Upper, true);
    const NeighborProfile profile = neighbor_profile(g, optimum.best);
    const int delta = p.min_degree();
    for (const auto& [i, count] : profile.counts) {
        if (i < delta && count > 0) {
            throw InvariantViolation("profile has n_" + std::to_string(i) + " = " + std::to_string(count) +
                                     " below delta = " + std::to_string(delta) + ": S is not maximal");
        }
    }
    const long long weighted = profile.weighted_sum();
    const int n = g.order();
    const int delta_max = max_degree(g);
    const nlohmann::json profile_json = to_json(profile);

    if (delta < 1) {
        mark_inapplicable(lower, "pattern has minimum degree 0");
    } else {
        set_value(lower, Rational(n) - Rational(weighted, delta));
    }
    if (delta_max < 1) {
        mark_inapplicable(upper, "edgeless host");
    } else {
        set_value(upper, Rational(n) - Rational(weighted, delta_max));
    }
    for (BoundReport* r : {&lower, &upper}) {
        r->witness["profile"] = profile_json;
        r->witness["delta"] = delta;
        r->witness["Delta"] = delta_max;
    }
    return {lower, upper};
}

// R(H)

std::vector<VertexSet> RFamily::cliques() const
{
    std::vector<VertexSet> all;
    for (const auto& e : entries) all.insert(all.end(), e.cliques.begin(), e.cliques.end());
    return distinct(std::move(all));
}

std::vector<VertexSet> RFamily::components() const
{
    std::vector<VertexSet> all;
    for (const auto& e : entries) all.insert(all.end(), e.components.begin(), e.components.end());
    return distinct(std::move(all));
}

RFamily build_r_family(const Graph& g, const PatternSpec& p, const SolveResult& optimum)
{
    if (!p.is_single()) throw ParseError("R-family construction needs a single forbidden graph");
    if (!is_maximal_free(g, optimum.best, p)) {
        throw InvariantViolation("R-family needs a maximal free set; some outside vertex can be added");
    }
    const Graph& pattern = p.graph();
    RFamily r;
    r.delta = p.min_degree();
    r.optimum = optimum.best;
    r.cut_size = neighbor_profile(g, optimum.best).cut_size;
    const std::vector<int> roles = roles_of_min_degree(pattern, r.delta);

    (g.vertices() - optimum.best).for_each([&](int v) {
        std::map<std::uint64_t, int> groups;
        const VertexSet host = optimum.best.with(v);
        for (int role : roles) {
            enumerate_embeddings(g, host, pattern, p.mode(), {{role, v}}, [&](const Embedding& e) {
                VertexSet copy;
                for (int h : e.map) copy.insert(h);
                copy.erase(v);
                ++groups[(g.neighbors(v) & copy).bits()];
                return true;
            });
        }
        int index = 0;
        for (const auto& [bits, count] : groups) {
            RFamilyEntry entry;
            entry.outside_vertex = v;
            entry.copy_index = ++index;
            entry.embeddings = count;
            entry.attachment = VertexSet(bits);
            r.entries.push_back(std::move(entry));
        }
    });
    finish_entries(g, p, r);
    return r;
}

RFamily build_cycle_r_family(const Graph& g, const SolveResult& forest)
{
    const PatternSpec cycles = PatternSpec::cycles();
    if (!is_maximal_free(g, forest.best, cycles)) {
        throw InvariantViolation("R-family needs a maximal induced forest");
    }
    RFamily r;
    r.delta = 2;
    r.optimum = forest.best;
    r.cut_size = neighbor_profile(g, forest.best).cut_size;

    auto tree_path = [&](int from, int to) -> std::optional<VertexSet> {
        std::vector<int> parent(static_cast<std::size_t>(g.order()), -1);
        std::vector<int> queue{from};
        parent[from] = from;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            (g.neighbors(queue[head]) & forest.best).for_each([&](int w) {
                if (parent[w] < 0) {
                    parent[w] = queue[head];
                    queue.push_back(w);
                }
            });
        }
        if (parent[to] < 0) return std::nullopt;
        VertexSet path{from};
        for (int w = to; w != from; w = parent[w]) path.insert(w);
        return path;
    };

    (g.vertices() - forest.best).for_each([&](int v) {
        const std::vector<int> inside = (g.neighbors(v) & forest.best).to_vector();
        std::map<std::uint64_t, int> groups;
        for (std::size_t i = 0; i < inside.size(); ++i) {
            for (std::size_t j = i + 1; j < inside.size(); ++j) {
                if (auto path = tree_path(inside[i], inside[j])) ++groups[(g.neighbors(v) & *path).bits()];
            }
        }
        int index = 0;
        for (const auto& [bits, count] : groups) {
            RFamilyEntry entry;
            entry.outside_vertex = v;
            entry.copy_index = ++index;
            entry.embeddings = count;
            entry.attachment = VertexSet(bits);
            r.entries.push_back(std::move(entry));
        }
    });
    finish_entries(g, cycles, r);
    return r;
}

int min_valid_P(const Graph& g, const std::vector<VertexSet>& family, int delta)
{
    if (family.empty()) return delta + 1;
    int P = 1;
    for (VertexSet x : family) P = std::max(P, min_degree_in(g, x) + x.size() + delta);
    return P;
}

bool condition_holds(const Graph& g, const std::vector<VertexSet>& family, int delta, int P)
{
    return std::all_of(family.begin(), family.end(),
                       [&](VertexSet x) { return min_degree_in(g, x) <= P - x.size() - delta; });
}

BoundReport th3_lower(const Graph& g, const PatternSpec& p, const RFamily& r)
{
    BoundReport report = p_based_bound(g, "th3", r.delta, r.cliques(), "cliques", r.optimum == g.vertices());
    if (p.is_single() && p.graph().order() == 2) report.witness["form"] = "2n/P";
    report.witness["claim_failures"] = r.claim.failures;
    report.witness["claim_unexplained"] = r.claim.unexplained;
    return report;
}

BoundReport th3_component_lower(const Graph& g, const PatternSpec& p, const RFamily& r)
{
    (void)p;
    return p_based_bound(g, "th3_components", r.delta, r.components(), "components", r.optimum == g.vertices());
}

BoundReport forest_corollary(const Graph& g, const SolverCaps& caps)
{
    const SolveResult forest = min_cut_optimum(g, PatternSpec::cycles(), caps);
    const RFamily r = build_cycle_r_family(g, forest);
    BoundReport report = p_based_bound(g, "forest_corollary", 2, r.cliques(), "cliques", r.optimum == g.vertices());
    report.witness["forest_number"] = forest.size;
    report.witness["claim_failures"] = r.claim.failures;
    report.witness["claim_unexplained"] = r.claim.unexplained;
    return report;
}

BoundReport layered_lower(const Graph& g, int k, const SolverCaps& caps)
{
    BoundReport r = make_report("layered", BoundKind::Lower, false);
    const LayeredDecomposition layers = layered_mis(g, k, caps);
    set_value(r, Rational(layers.total));
    r.witness["k"] = k;
    r.witness["sizes"] = layers.sizes;
    auto sets = nlohmann::json::array();
    for (VertexSet s : layers.layers) sets.push_back(set_json(s));
    r.witness["layers"] = std::move(sets);
    return r;
}

}  // namespace gfree
