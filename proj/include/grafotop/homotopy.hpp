#pragma once

#include <cstdlib>
#include <optional>

#include "grafotop/cohomology.hpp"
#include "grafotop/dimension.hpp"
#include "grafotop/isomorphism.hpp"

namespace grafotop {

enum class Verdict { Yes, No, Unknown };

inline const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    default: return "unknown";
    }
}

/// One homotopy move: a pyramid extension over a contractible base, or the
/// removal of a vertex whose unit sphere is contractible.
struct Move {
    enum Kind { Extend, Reduce } kind;
    VertexSet base; // Extend only
    int vertex;
};

using MoveTrace = std::vector<Move>;

/// Semi-decision result. No always carries an invariant mismatch in reason;
/// Yes carries the move sequence(s) that witness it.
struct TriState {
    Verdict verdict = Verdict::Unknown;
    std::string reason;
    MoveTrace trace;   // reduction of the (first) graph
    MoveTrace trace_b; // reduction of the second graph, for equivalence checks

    bool yes() const { return verdict == Verdict::Yes; }
    bool no() const { return verdict == Verdict::No; }
};

/// Node budget for the reduction-order search; GRAFOTOP_BUDGET overrides.
inline int default_budget() {
    if (const char* e = std::getenv("GRAFOTOP_BUDGET")) {
        int b = std::atoi(e);
        if (b > 0)
            return b;
    }
    return 10000;
}

namespace detail {

enum class SearchResult { Found, Exhausted, Aborted };

/// Backtracking search for a full reduction sequence of the induced
/// subgraph on `sub` down to one vertex. Memoizes on vertex subsets (all
/// subgraphs met are induced subgraphs of g). Lowest-label removable vertex
/// first, so the first branch is the greedy order.
struct ReductionSearch {
    const Graph& g;
    long budget;
    long nodes = 0;
    std::map<VertexSet, bool> memo; // only complete results are recorded

    ReductionSearch(const Graph& g_, long budget_) : g(g_), budget(budget_) {}

    SearchResult reducible(const VertexSet& sub, std::vector<int>* order) {
        if (sub.size() == 1)
            return SearchResult::Found;
        auto it = memo.find(sub);
        if (it != memo.end() && !it->second)
            return SearchResult::Exhausted;
        if (it != memo.end() && it->second && order == nullptr)
            return SearchResult::Found;
        if (++nodes > budget)
            return SearchResult::Aborted;
        bool aborted = false;
        for (int z : sub) {
            VertexSet sphere = vs_intersect(g.neighbors(z), sub);
            if (sphere.empty())
                continue;
            SearchResult s = reducible(sphere, nullptr);
            if (s == SearchResult::Aborted)
                aborted = true;
            if (s != SearchResult::Found)
                continue;
            VertexSet rest = vs_difference(sub, {z});
            if (order)
                order->push_back(z);
            SearchResult r = reducible(rest, order);
            if (r == SearchResult::Found) {
                memo[sub] = true;
                return SearchResult::Found;
            }
            if (order)
                order->pop_back();
            if (r == SearchResult::Aborted)
                aborted = true;
        }
        if (aborted)
            return SearchResult::Aborted;
        memo[sub] = false;
        return SearchResult::Exhausted;
    }
};

} // namespace detail

/// Yes iff some sequence of sphere-contractible vertex removals reaches
/// K_1 (greedy order first, then backtracking within the node budget).
/// No when a homotopy invariant rules it out; Unknown otherwise -- spaces
/// like the dunce hat may need thickening before they contract, so
/// irreducibility alone never yields No.
inline TriState is_contractible(const Graph& g, long budget = -1) {
    if (budget < 0)
        budget = default_budget();
    TriState t;
    if (g.order() == 0) {
        t.verdict = Verdict::No;
        t.reason = "empty graph: chi 0 != 1";
        return t;
    }
    detail::ReductionSearch search(g, budget);
    std::vector<int> order;
    auto res = search.reducible(g.vertices(), &order);
    if (res == detail::SearchResult::Found) {
        t.verdict = Verdict::Yes;
        for (int z : order)
            t.trace.push_back({Move::Reduce, {}, z});
        t.reason = "reduction sequence to K_1";
        return t;
    }
    if (euler_characteristic(g) != 1) {
        t.verdict = Verdict::No;
        t.reason = "chi = " + std::to_string(euler_characteristic(g)) + " != 1";
        return t;
    }
    CohomologyProfile p = betti_numbers(g);
    for (size_t k = 0; k < p.betti.size(); ++k) {
        long expect = k == 0 ? 1 : 0;
        if (p.betti[k] != expect) {
            t.verdict = Verdict::No;
            t.reason = "b_" + std::to_string(k) + " = " + std::to_string(p.betti[k]);
            return t;
        }
    }
    t.verdict = Verdict::Unknown;
    t.reason = res == detail::SearchResult::Aborted
                   ? "search budget exhausted"
                   : "irreducible but all homotopy invariants match K_1";
    return t;
}

/// True iff the unit sphere of z is (verifiably) contractible.
inline bool is_vertex_removable(const Graph& g, int z, long budget = -1) {
    return is_contractible(unit_sphere(g, z), budget).yes();
}

/// Pyramid extension: new vertex attached to exactly `base`, which must be
/// verifiably contractible. Euler characteristic is unchanged (checked).
inline Graph pyramid_extend(const Graph& g, const VertexSet& base, long budget = -1) {
    Graph bg = induced_subgraph(g, base);
    TriState c = is_contractible(bg, budget);
    if (!c.yes())
        throw input_error(std::string("pyramid base not verifiably contractible (") +
                          to_string(c.verdict) + ": " + c.reason + ")");
    int z = g.fresh_label();
    VertexSet vs = g.vertices();
    vs.push_back(z);
    std::vector<Edge> es = g.edges();
    for (int b : base)
        es.push_back(make_edge(z, b));
    Graph out(vs, es);
    if (euler_characteristic(out) != euler_characteristic(g))
        throw internal_error("pyramid extension changed chi");
    return out;
}

/// Greedy collapse: repeatedly remove the lowest-labeled vertex with
/// contractible unit sphere. Deterministic given the graph; the result has
/// no removable vertices.
inline std::pair<Graph, MoveTrace> collapse(const Graph& g, long budget = -1) {
    if (budget < 0)
        budget = default_budget();
    detail::ReductionSearch search(g, budget);
    VertexSet cur = g.vertices();
    MoveTrace trace;
    bool changed = true;
    while (changed && cur.size() > 1) {
        changed = false;
        for (int z : cur) {
            VertexSet sphere = vs_intersect(g.neighbors(z), cur);
            if (sphere.empty())
                continue;
            if (search.reducible(sphere, nullptr) == detail::SearchResult::Found) {
                cur = vs_difference(cur, {z});
                trace.push_back({Move::Reduce, {}, z});
                changed = true;
                break;
            }
        }
    }
    return {induced_subgraph(g, cur), trace};
}

/// Replay a trace from a start graph; throws if any move is illegal.
inline Graph replay_trace(const Graph& start, const MoveTrace& trace, long budget = -1) {
    Graph cur = start;
    for (const Move& m : trace) {
        if (m.kind == Move::Extend) {
            cur = pyramid_extend(cur, m.base, budget);
        } else {
            if (!is_vertex_removable(cur, m.vertex, budget))
                throw internal_error("trace removes vertex with non-contractible sphere");
            VertexSet rest = vs_difference(cur.vertices(), {m.vertex});
            cur = induced_subgraph(cur, rest);
        }
    }
    return cur;
}

/// Yes when the collapsed cores are isomorphic or both graphs contract;
/// No on an invariant mismatch; matching invariants alone are never enough.
inline TriState homotopy_equivalent(const Graph& a, const Graph& b, long budget = -1) {
    TriState t;
    auto [core_a, trace_a] = collapse(a, budget);
    auto [core_b, trace_b] = collapse(b, budget);
    if (is_isomorphic(core_a, core_b)) {
        t.verdict = Verdict::Yes;
        t.reason = "collapsed cores isomorphic";
        t.trace = trace_a;
        t.trace_b = trace_b;
        return t;
    }
    TriState ca = is_contractible(a, budget);
    TriState cb = is_contractible(b, budget);
    if (ca.yes() && cb.yes()) {
        t.verdict = Verdict::Yes;
        t.reason = "both contractible";
        t.trace = trace_a;
        t.trace_b = trace_b;
        return t;
    }
    if (euler_characteristic(a) != euler_characteristic(b)) {
        t.verdict = Verdict::No;
        t.reason = "chi mismatch: " + std::to_string(euler_characteristic(a)) +
                   " vs " + std::to_string(euler_characteristic(b));
        return t;
    }
    if (betti_numbers(a).betti != betti_numbers(b).betti) {
        t.verdict = Verdict::No;
        t.reason = "Betti vectors differ";
        return t;
    }
    t.verdict = Verdict::Unknown;
    t.reason = "cores differ but invariants agree";
    return t;
}

} // namespace grafotop
