#pragma once

#include "grafotop/optimizer.hpp"

namespace grafotop {

/// A host graph together with a validated sub-basis and its weighted nerve.
struct TopologicalGraph {
    Graph graph;
    SubBasis subbasis;
    ValidationReport validation;
    std::string name; // how the topology was built, for reports

    static TopologicalGraph make(const SubBasis& b, std::string name = "",
                                 long budget = -1) {
        TopologicalGraph t;
        t.graph = b.host;
        t.subbasis = b;
        t.validation = validate(b, budget);
        t.name = std::move(name);
        return t;
    }

    bool valid() const { return validation.overall == Verdict::Yes; }
    const WeightedNerve& nerve() const { return validation.nerve; }
};

/// Map between the nerves of two topological graphs, recorded on nerve
/// nodes (= sub-basis element indices).
struct NerveMap {
    WeightedNerve source;
    WeightedNerve target;
    std::map<int, int> assignment;
};

/// Continuity: nerve nodes map to nerve nodes, adjacent nodes stay adjacent
/// or collapse together, and the dimension weight never increases.
inline bool check_continuous(const NerveMap& m) {
    for (int v : m.source.nerve.vertices())
        if (!m.assignment.count(v) || !m.target.nerve.has_vertex(m.assignment.at(v)))
            return false;
    for (auto [u, v] : m.source.nerve.edges()) {
        int iu = m.assignment.at(u), iv = m.assignment.at(v);
        if (iu != iv && !m.target.nerve.has_edge(iu, iv))
            return false;
    }
    for (int v : m.source.nerve.vertices())
        if (m.target.weights[m.assignment.at(v)] > m.source.weights[v])
            return false;
    return true;
}

/// Homeomorphism check: a weight-preserving isomorphism of the weighted
/// nerves (continuity both ways forces equal weights). Inputs must carry
/// validated topologies. On success the dimension spectra agree as
/// multisets; that consequence is asserted internally.
inline std::optional<NerveMap> check_homeomorphic(const TopologicalGraph& a,
                                                  const TopologicalGraph& b) {
    if (!a.valid() || !b.valid())
        throw input_error("check_homeomorphic requires topologies that validate Yes");
    VertexLabels la = a.nerve().labels(), lb = b.nerve().labels();
    auto iso = is_isomorphic(a.nerve().nerve, b.nerve().nerve, &la, &lb);
    if (!iso)
        return std::nullopt;
    std::multiset<Rational> sa(a.nerve().weights.begin(), a.nerve().weights.end());
    std::multiset<Rational> sb(b.nerve().weights.begin(), b.nerve().weights.end());
    if (sa != sb)
        throw internal_error("homeomorphism with unequal dimension spectra");
    NerveMap m;
    m.source = a.nerve();
    m.target = b.nerve();
    m.assignment = *iso;
    if (!check_continuous(m))
        throw internal_error("nerve isomorphism not continuous");
    return m;
}

struct EquivalenceReport {
    TriState verdict;
    std::string strategy_a, strategy_b; // witnesses on success
    std::optional<NerveMap> witness;
};

/// Canonical topology strategies tried on each side. Exhaustive topology
/// search is exponential, so Unknown is a legitimate outcome.
inline std::vector<std::pair<std::string, SubBasis>>
candidate_topologies(const Graph& g, long budget = -1) {
    std::vector<std::pair<std::string, SubBasis>> out;
    out.push_back({"star", star_topology(g)});
    out.push_back({"ball", unit_ball_topology(g)});
    out.push_back({"indiscrete", indiscrete_topology(g)});
    try {
        OptimizeResult r = optimize(star_topology(g), 100, budget);
        out.push_back({"optimized-star", r.basis});
    } catch (const input_error&) {
        // star topology failed to validate; nothing to optimize
    }
    return out;
}

/// Two graphs are equivalent when some pair of graph topologies makes them
/// homeomorphic. Searches the canonical strategy list; No needs a homotopy
/// invariant mismatch.
inline EquivalenceReport graphs_equivalent(const Graph& g, const Graph& h,
                                           long budget = -1) {
    EquivalenceReport rep;
    std::vector<std::pair<std::string, TopologicalGraph>> ta, tb;
    for (auto& [name, sb] : candidate_topologies(g, budget)) {
        auto t = TopologicalGraph::make(sb, name, budget);
        if (t.valid())
            ta.push_back({name, std::move(t)});
    }
    for (auto& [name, sb] : candidate_topologies(h, budget)) {
        auto t = TopologicalGraph::make(sb, name, budget);
        if (t.valid())
            tb.push_back({name, std::move(t)});
    }
    for (auto& [na, a] : ta)
        for (auto& [nb, b] : tb) {
            auto m = check_homeomorphic(a, b);
            if (m) {
                rep.verdict.verdict = Verdict::Yes;
                rep.verdict.reason = "homeomorphic via " + na + " / " + nb;
                rep.strategy_a = na;
                rep.strategy_b = nb;
                rep.witness = std::move(m);
                return rep;
            }
        }
    if (euler_characteristic(g) != euler_characteristic(h)) {
        rep.verdict.verdict = Verdict::No;
        rep.verdict.reason = "chi differs: " + std::to_string(euler_characteristic(g)) +
                             " vs " + std::to_string(euler_characteristic(h));
        return rep;
    }
    if (betti_numbers(g).betti != betti_numbers(h).betti) {
        rep.verdict.verdict = Verdict::No;
        rep.verdict.reason = "Betti vectors differ";
        return rep;
    }
    rep.verdict.verdict = Verdict::Unknown;
    rep.verdict.reason = "no witness among canonical topologies; invariants agree";
    return rep;
}

/// Barycentric refinement of one edge: a new vertex splits (u,v).
inline Graph subdivide_edge(const Graph& g, Edge e) {
    auto [u, v] = e;
    if (!g.has_edge(u, v))
        throw input_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                          ") not in graph");
    int z = g.fresh_label();
    VertexSet vs = g.vertices();
    vs.push_back(z);
    std::vector<Edge> es;
    for (auto ed : g.edges())
        if (!(ed == make_edge(u, v)))
            es.push_back(ed);
    es.push_back(make_edge(u, z));
    es.push_back(make_edge(z, v));
    return Graph(vs, es);
}

namespace detail {

/// Suppression normal form for subdivision equivalence: contract every
/// maximal chain of degree-2 vertices between branch vertices down to a
/// multigraph, then resubdivide each multigraph edge twice so the result
/// is again simple and canonical up to isomorphism. Pure cycle components
/// normalize to triangles.
inline Graph suppression_normal_form(const Graph& g) {
    std::set<int> branch;
    for (int v : g.vertices())
        if (g.degree(v) != 2)
            branch.insert(v);
    std::set<std::pair<int, int>> used; // darts consumed by chain walks
    struct MEdge { int u, w; };
    std::vector<MEdge> medges;
    for (int u : branch)
        for (int x : g.neighbors(u)) {
            if (used.count({u, x}))
                continue;
            int prev = u, cur = x;
            used.insert({u, x});
            while (!branch.count(cur)) {
                const VertexSet& nb = g.neighbors(cur);
                int nxt = nb[0] == prev ? nb[1] : nb[0];
                used.insert({cur, nxt});
                prev = cur;
                cur = nxt;
            }
            used.insert({cur, prev}); // reverse dart of the last step
            medges.push_back({u, cur});
        }
    int free_cycles = 0;
    for (const auto& comp : connected_components(g)) {
        bool all2 = true;
        for (int v : comp)
            if (g.degree(v) != 2)
                all2 = false;
        if (all2 && !comp.empty())
            ++free_cycles;
    }
    VertexSet vs(branch.begin(), branch.end());
    std::vector<Edge> es;
    int next = vs.empty() ? 0 : vs.back() + 1;
    for (const auto& m : medges) {
        int a = next++, b = next++;
        vs.push_back(a);
        vs.push_back(b);
        es.push_back(make_edge(m.u, a));
        es.push_back(make_edge(a, b));
        es.push_back(make_edge(b, m.w));
    }
    for (int c = 0; c < free_cycles; ++c) {
        int a = next++, b = next++, d = next++;
        vs.push_back(a);
        vs.push_back(b);
        vs.push_back(d);
        es.push_back(make_edge(a, b));
        es.push_back(make_edge(b, d));
        es.push_back(make_edge(a, d));
    }
    return Graph(make_vertex_set(vs), es);
}

} // namespace detail

/// Classical homeomorphism of graphs under edge subdivision and its
/// inverse, decided by comparing suppression normal forms. The budget
/// parameter is kept for interface stability; the normal form decides
/// without a search.
inline TriState is_one_homeomorphic(const Graph& a, const Graph& b, long = -1) {
    TriState t;
    Graph na = detail::suppression_normal_form(a);
    Graph nb = detail::suppression_normal_form(b);
    if (is_isomorphic(na, nb)) {
        t.verdict = Verdict::Yes;
        t.reason = "suppression normal forms isomorphic";
    } else {
        t.verdict = Verdict::No;
        t.reason = "suppression normal forms differ";
    }
    return t;
}

/// Cartesian product graph; vertex (u,v) gets the label
/// index(u)*|V(b)| + index(v) in sorted order.
inline Graph cartesian_product(const Graph& a, const Graph& b) {
    int nb = b.order();
    std::map<int, int> ia, ib;
    for (int u : a.vertices())
        ia[u] = static_cast<int>(ia.size());
    for (int v : b.vertices())
        ib[v] = static_cast<int>(ib.size());
    VertexSet vs;
    for (int u : a.vertices())
        for (int v : b.vertices())
            vs.push_back(ia[u] * nb + ib[v]);
    std::vector<Edge> es;
    for (int u : a.vertices())
        for (auto [x, y] : b.edges())
            es.push_back(make_edge(ia[u] * nb + ib[x], ia[u] * nb + ib[y]));
    for (auto [x, y] : a.edges())
        for (int v : b.vertices())
            es.push_back(make_edge(ia[x] * nb + ib[v], ia[y] * nb + ib[v]));
    return Graph(vs, es);
}

struct ProductExperiment {
    Graph product;
    SubBasis subbasis;
    ValidationReport report;
};

/// Element-wise product sub-basis on the Cartesian product graph. No
/// validity promise: the construction typically fails the axioms and the
/// report says how.
inline ProductExperiment product_topology_experiment(const TopologicalGraph& a,
                                                     const TopologicalGraph& b,
                                                     long budget = -1) {
    if (!a.valid() || !b.valid())
        throw input_error("product experiment requires validated topologies");
    ProductExperiment pe;
    pe.product = cartesian_product(a.graph, b.graph);
    int nb = b.graph.order();
    std::map<int, int> ia, ib;
    for (int u : a.graph.vertices())
        ia[u] = static_cast<int>(ia.size());
    for (int v : b.graph.vertices())
        ib[v] = static_cast<int>(ib.size());
    std::vector<SubBasisElement> els;
    for (const auto& ea : a.subbasis.elements)
        for (const auto& eb : b.subbasis.elements) {
            VertexSet vs;
            for (int u : ea.vertices)
                for (int v : eb.vertices)
                    vs.push_back(ia.at(u) * nb + ib.at(v));
            els.push_back(SubBasisElement::induced(vs));
        }
    pe.subbasis = SubBasis(pe.product, els);
    pe.report = validate(pe.subbasis, budget);
    return pe;
}

} // namespace grafotop
