#pragma once

#include "grafotop/topology.hpp"

namespace grafotop {

/// One accepted optimizer step.
struct OptimizeStep {
    std::string move;
    Rational functional_after;
};

struct OptimizeResult {
    SubBasis basis;
    Rational functional;
    std::vector<OptimizeStep> trace;
    bool locally_optimal = false; // no single move improves
    bool minimal = true;          // no element deletable keeping validity
    TriState subfamily_intersections_contractible; // optimal-topology strengthening
    int moves_taken = 0;
};

namespace detail {

inline SubBasis with_elements(const Graph& host, std::vector<SubBasisElement> els) {
    return SubBasis(host, std::move(els));
}

/// Candidate single moves in deterministic order: per element grow / shrink
/// / split along a cut vertex, then merges of linked pairs, then deletions.
/// Modified elements become induced elements.
inline std::vector<std::pair<std::string, std::vector<SubBasisElement>>>
candidate_moves(const SubBasis& b) {
    std::vector<std::pair<std::string, std::vector<SubBasisElement>>> out;
    const auto& els = b.elements;
    int k = static_cast<int>(els.size());
    for (int i = 0; i < k; ++i) {
        const VertexSet& vs = els[i].vertices;
        VertexSet boundary;
        for (int v : vs)
            for (int u : b.host.neighbors(v))
                if (!vs_contains(vs, u))
                    boundary.push_back(u);
        boundary = make_vertex_set(boundary);
        for (int v : boundary) {
            auto cand = els;
            cand[i] = SubBasisElement::induced(vs_union(vs, {v}));
            out.push_back({"grow " + std::to_string(i) + " by " + std::to_string(v),
                           std::move(cand)});
        }
        if (vs.size() > 1)
            for (int v : vs) {
                auto cand = els;
                cand[i] = SubBasisElement::induced(vs_difference(vs, {v}));
                out.push_back({"shrink " + std::to_string(i) + " by " + std::to_string(v),
                               std::move(cand)});
            }
        Graph sub = els[i].element_graph(b.host);
        for (int v : vs) {
            Graph rest = induced_subgraph(sub, vs_difference(vs, {v}));
            auto comps = connected_components(rest);
            if (comps.size() < 2)
                continue;
            // two overlapping halves along the cut vertex v
            VertexSet h1 = vs_union(comps[0], {v});
            VertexSet h2{v};
            for (size_t c = 1; c < comps.size(); ++c)
                h2 = vs_union(h2, comps[c]);
            auto cand = els;
            cand[i] = SubBasisElement::induced(h1);
            cand.insert(cand.begin() + i + 1, SubBasisElement::induced(h2));
            out.push_back({"split " + std::to_string(i) + " at " + std::to_string(v),
                           std::move(cand)});
        }
    }
    std::vector<Rational> dims(k);
    for (int i = 0; i < k; ++i)
        dims[i] = dimension(els[i].element_graph(b.host));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (!elements_linked(b.host, els[i], els[j], dims[i], dims[j]))
                continue;
            std::vector<SubBasisElement> cand;
            cand.push_back(SubBasisElement::induced(
                vs_union(els[i].vertices, els[j].vertices)));
            for (int t = 0; t < k; ++t)
                if (t != i && t != j)
                    cand.push_back(els[t]);
            out.push_back({"merge " + std::to_string(i) + "," + std::to_string(j),
                           std::move(cand)});
        }
    if (k > 1)
        for (int i = 0; i < k; ++i) {
            auto cand = els;
            cand.erase(cand.begin() + i);
            out.push_back({"delete " + std::to_string(i), std::move(cand)});
        }
    return out;
}

/// Intersection graph of a whole sub-family, same pruning rule as pairs.
inline Graph family_intersection(const Graph& host,
                                 const std::vector<SubBasisElement>& els,
                                 const std::vector<int>& idx) {
    Graph acc = els[idx[0]].element_graph(host);
    VertexSet vs = acc.vertices();
    std::set<Edge> es(acc.edges().begin(), acc.edges().end());
    for (size_t t = 1; t < idx.size(); ++t) {
        Graph g = els[idx[t]].element_graph(host);
        vs = vs_intersect(vs, g.vertices());
        std::set<Edge> keep;
        for (auto e : g.edges())
            if (es.count(e))
                keep.insert(e);
        es = std::move(keep);
    }
    std::vector<Edge> ev(es.begin(), es.end());
    if (!ev.empty()) {
        VertexSet covered;
        for (auto [x, y] : ev) {
            covered.push_back(x);
            covered.push_back(y);
        }
        vs = make_vertex_set(covered);
    } else {
        VertexSet inside;
        for (int v : vs)
            inside.push_back(v);
        vs = inside;
    }
    return Graph(vs, ev);
}

} // namespace detail

/// Are all nonempty intersections of sub-families contractible? Empty
/// intersections are exempt. Unknown propagates.
inline TriState subfamily_intersections_contractible(const SubBasis& b, long budget = -1) {
    TriState t;
    int k = static_cast<int>(b.elements.size());
    if (k > 20) {
        t.verdict = Verdict::Unknown;
        t.reason = "too many elements for exhaustive sub-family scan";
        return t;
    }
    bool unknown = false;
    for (unsigned long mask = 1; mask < (1ul << k); ++mask) {
        if (__builtin_popcountl(mask) < 2)
            continue;
        std::vector<int> idx;
        for (int i = 0; i < k; ++i)
            if (mask & (1ul << i))
                idx.push_back(i);
        Graph inter = detail::family_intersection(b.host, b.elements, idx);
        if (inter.order() == 0)
            continue;
        TriState c = is_contractible(inter, budget);
        if (c.no()) {
            t.verdict = Verdict::No;
            std::ostringstream os;
            os << "sub-family {";
            for (int i : idx)
                os << i << " ";
            os << "} has non-contractible intersection";
            t.reason = os.str();
            return t;
        }
        if (c.verdict == Verdict::Unknown)
            unknown = true;
    }
    t.verdict = unknown ? Verdict::Unknown : Verdict::Yes;
    return t;
}

/// Deterministic first-improvement local search over the move set. Accepts
/// a move only when it strictly lowers the dimension functional and the
/// result still validates Yes. Ends with a minimality sweep that deletes
/// elements while validity holds and the functional does not increase.
inline OptimizeResult optimize(const SubBasis& b0, int budget = 100, long hbudget = -1) {
    if (validate(b0, hbudget).overall != Verdict::Yes)
        throw input_error("optimize requires a sub-basis that validates Yes");
    OptimizeResult res;
    res.basis = b0;
    res.functional = dimension_functional(b0);
    while (res.moves_taken < budget) {
        bool improved = false;
        for (auto& [name, cand] : detail::candidate_moves(res.basis)) {
            SubBasis sb;
            try {
                sb = detail::with_elements(res.basis.host, cand);
            } catch (const input_error&) {
                continue;
            }
            if (sb.elements.empty())
                continue;
            Rational f = dimension_functional(sb);
            if (f >= res.functional)
                continue;
            if (validate(sb, hbudget).overall != Verdict::Yes)
                continue;
            res.basis = std::move(sb);
            res.functional = f;
            res.trace.push_back({name, f});
            ++res.moves_taken;
            improved = true;
            break;
        }
        if (!improved) {
            res.locally_optimal = true;
            break;
        }
    }
    // minimality sweep: drop elements while validity holds and the
    // functional does not increase
    bool dropped = true;
    while (dropped && res.basis.elements.size() > 1) {
        dropped = false;
        for (size_t i = 0; i < res.basis.elements.size(); ++i) {
            auto cand = res.basis.elements;
            cand.erase(cand.begin() + i);
            SubBasis sb = detail::with_elements(res.basis.host, cand);
            Rational f = dimension_functional(sb);
            if (f > res.functional)
                continue;
            if (validate(sb, hbudget).overall != Verdict::Yes)
                continue;
            res.basis = std::move(sb);
            res.functional = f;
            res.trace.push_back({"drop " + std::to_string(i), f});
            dropped = true;
            break;
        }
    }
    for (size_t i = 0; i < res.basis.elements.size() && res.minimal; ++i) {
        if (res.basis.elements.size() == 1)
            break;
        auto cand = res.basis.elements;
        cand.erase(cand.begin() + i);
        SubBasis sb = detail::with_elements(res.basis.host, cand);
        if (validate(sb, hbudget).overall == Verdict::Yes)
            res.minimal = false;
    }
    res.subfamily_intersections_contractible =
        subfamily_intersections_contractible(res.basis, hbudget);
    return res;
}

} // namespace grafotop
