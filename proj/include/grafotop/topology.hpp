#pragma once

#include <optional>
#include <sstream>

#include "grafotop/homotopy.hpp"
#include "grafotop/isomorphism.hpp"

namespace grafotop {

/// One sub-basis element. Induced elements are induced subgraphs of the
/// host on `vertices`; Star elements are star graphs (edges to the center
/// only), the one case where an element is not induced.
struct SubBasisElement {
    enum Mode { Induced, Star };
    VertexSet vertices;
    Mode mode = Induced;
    int star_center = -1;

    Graph element_graph(const Graph& host) const {
        if (mode == Induced)
            return induced_subgraph(host, vertices);
        std::vector<Edge> es;
        for (int y : vertices)
            if (y != star_center && host.has_edge(star_center, y))
                es.push_back(make_edge(star_center, y));
        return Graph(vertices, es);
    }

    std::tuple<int, int, VertexSet> key() const {
        return {static_cast<int>(mode), mode == Star ? star_center : -1, vertices};
    }

    bool operator==(const SubBasisElement& o) const { return key() == o.key(); }

    static SubBasisElement induced(VertexSet vs) {
        return {make_vertex_set(std::move(vs)), Induced, -1};
    }
    static SubBasisElement star(const Graph& host, int center) {
        VertexSet vs = host.neighbors(center);
        vs.insert(std::lower_bound(vs.begin(), vs.end(), center), center);
        return {std::move(vs), Star, center};
    }
};

/// Candidate generator of a graph topology: a finite family of contractible
/// subgraphs of a host graph.
struct SubBasis {
    Graph host;
    std::vector<SubBasisElement> elements;

    SubBasis() = default;
    SubBasis(Graph h, std::vector<SubBasisElement> els) : host(std::move(h)) {
        std::set<std::tuple<int, int, VertexSet>> seen;
        for (auto& e : els) {
            for (int v : e.vertices)
                if (!host.has_vertex(v))
                    throw input_error("element vertex " + std::to_string(v) +
                                      " not in host graph");
            if (e.mode == SubBasisElement::Star && !vs_contains(e.vertices, e.star_center))
                throw input_error("star element must contain its center");
            if (seen.insert(e.key()).second)
                elements.push_back(e);
        }
    }
};

/// Intersection of two elements as subgraphs: common vertices and common
/// edges. When common edges exist, common vertices not on any of them are
/// dropped; two stars with adjacent centers then meet in exactly K_2, which
/// is what makes the star topology work on every graph.
inline Graph element_intersection(const Graph& host, const SubBasisElement& a,
                                  const SubBasisElement& b) {
    Graph ga = a.element_graph(host);
    Graph gb = b.element_graph(host);
    VertexSet vs = vs_intersect(ga.vertices(), gb.vertices());
    std::vector<Edge> es;
    for (auto [x, y] : ga.edges())
        if (gb.has_edge(x, y))
            es.push_back({x, y});
    if (!es.empty()) {
        VertexSet covered;
        for (auto [x, y] : es) {
            covered.push_back(x);
            covered.push_back(y);
        }
        vs = make_vertex_set(covered);
    }
    return Graph(vs, es);
}

/// Nerve edge rule: the intersection must be nonempty, connected, and
/// satisfy the dimension assumption dim(A^B) >= min(dim A, dim B) with the
/// absolute dimensions of the element graphs. Disjoint or fragmented
/// overlaps never link.
inline bool elements_linked(const Graph& host, const SubBasisElement& a,
                            const SubBasisElement& b, const Rational& dim_a,
                            const Rational& dim_b, Graph* inter_out = nullptr,
                            Rational* dim_inter_out = nullptr) {
    Graph inter = element_intersection(host, a, b);
    if (inter_out)
        *inter_out = inter;
    if (inter.order() == 0) {
        if (dim_inter_out)
            *dim_inter_out = Rational(-1);
        return false;
    }
    Rational di = dimension(inter);
    if (dim_inter_out)
        *dim_inter_out = di;
    if (!is_connected(inter))
        return false;
    return di >= std::min(dim_a, dim_b);
}

/// Nerve graph with one node per element, weighted by element dimension.
struct WeightedNerve {
    Graph nerve;                   // nodes 0..k-1 in element order
    std::vector<Rational> weights; // dim of each element graph

    VertexLabels labels() const {
        VertexLabels l;
        for (size_t i = 0; i < weights.size(); ++i)
            l[static_cast<int>(i)] = weights[i];
        return l;
    }
};

inline WeightedNerve nerve(const SubBasis& b) {
    WeightedNerve wn;
    int k = static_cast<int>(b.elements.size());
    std::vector<Rational> dims(k);
    for (int i = 0; i < k; ++i)
        dims[i] = dimension(b.elements[i].element_graph(b.host));
    VertexSet nodes;
    for (int i = 0; i < k; ++i)
        nodes.push_back(i);
    std::vector<Edge> es;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (elements_linked(b.host, b.elements[i], b.elements[j], dims[i], dims[j]))
                es.push_back({i, j});
    wn.nerve = Graph(nodes, es);
    wn.weights = std::move(dims);
    return wn;
}

struct PairVerdict {
    int i = 0, j = 0;
    Rational dim_i, dim_j, dim_intersection;
    bool linked = false;
    TriState intersection_contractible; // checked for linked pairs
};

/// Per-axiom validation verdicts with witnesses. Overall is Yes only when
/// every element is contractible, every linked intersection is
/// contractible, every host edge is covered, and the nerve is homotopic to
/// the host. Unknown never silently promotes to Yes.
struct ValidationReport {
    std::vector<TriState> contractible_elements;
    std::vector<PairVerdict> dimension_pairs;
    std::vector<Edge> missing_edges;
    TriState nerve_homotopic;
    WeightedNerve nerve;
    Verdict overall = Verdict::Unknown;
};

inline ValidationReport validate(const SubBasis& b, long budget = -1) {
    ValidationReport rep;
    int k = static_cast<int>(b.elements.size());
    std::vector<Graph> graphs(k);
    std::vector<Rational> dims(k);
    bool any_no = false, any_unknown = false;
    for (int i = 0; i < k; ++i) {
        graphs[i] = b.elements[i].element_graph(b.host);
        dims[i] = dimension(graphs[i]);
        TriState c = is_contractible(graphs[i], budget);
        if (c.no())
            any_no = true;
        if (c.verdict == Verdict::Unknown)
            any_unknown = true;
        rep.contractible_elements.push_back(std::move(c));
    }
    VertexSet nodes;
    for (int i = 0; i < k; ++i)
        nodes.push_back(i);
    std::vector<Edge> nerve_edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            PairVerdict pv;
            pv.i = i;
            pv.j = j;
            pv.dim_i = dims[i];
            pv.dim_j = dims[j];
            Graph inter;
            pv.linked = elements_linked(b.host, b.elements[i], b.elements[j], dims[i],
                                        dims[j], &inter, &pv.dim_intersection);
            if (pv.linked) {
                nerve_edges.push_back({i, j});
                pv.intersection_contractible = is_contractible(inter, budget);
                if (pv.intersection_contractible.no())
                    any_no = true;
                if (pv.intersection_contractible.verdict == Verdict::Unknown)
                    any_unknown = true;
            }
            rep.dimension_pairs.push_back(std::move(pv));
        }
    rep.nerve.nerve = Graph(nodes, nerve_edges);
    rep.nerve.weights = dims;
    std::set<Edge> covered;
    for (int i = 0; i < k; ++i)
        for (auto e : graphs[i].edges())
            covered.insert(e);
    for (auto e : b.host.edges())
        if (!covered.count(e))
            rep.missing_edges.push_back(e);
    if (!rep.missing_edges.empty())
        any_no = true;
    if (k == 0 && b.host.size() == 0 && b.host.order() > 0)
        any_no = true; // vertices but no elements: nerve can't be homotopic
    rep.nerve_homotopic = homotopy_equivalent(b.host, rep.nerve.nerve, budget);
    if (rep.nerve_homotopic.no())
        any_no = true;
    if (rep.nerve_homotopic.verdict == Verdict::Unknown)
        any_unknown = true;
    rep.overall = any_no ? Verdict::No : (any_unknown ? Verdict::Unknown : Verdict::Yes);
    return rep;
}

/// Spectrum of element dimensions, their mean, and the dimension
/// functional: the mean deviation between each element's embedded dimension
/// (1 + relative dimension of its vertex set) and its own dimension.
struct DimensionSummary {
    std::vector<Rational> spectrum; // by element index
    Rational topological_dimension;
    Rational functional;
    int max_nerve_degree = 0; // covering-dimension style indicator
};

inline Rational dimension_functional(const SubBasis& b) {
    if (b.elements.empty())
        return Rational(0);
    Rational total = 0;
    for (const auto& e : b.elements) {
        Rational embedded = 1 + relative_dimension(b.host, e.vertices);
        Rational own = dimension(e.element_graph(b.host));
        total += abs(embedded - own);
    }
    return total / static_cast<int>(b.elements.size());
}

inline DimensionSummary dimension_summary(const SubBasis& b) {
    DimensionSummary s;
    WeightedNerve wn = nerve(b);
    s.spectrum = wn.weights;
    s.topological_dimension = 0;
    for (const auto& w : s.spectrum)
        s.topological_dimension += w;
    if (!s.spectrum.empty())
        s.topological_dimension /= static_cast<int>(s.spectrum.size());
    s.functional = dimension_functional(b);
    for (int v : wn.nerve.vertices())
        s.max_nerve_degree = std::max(s.max_nerve_degree, wn.nerve.degree(v));
    return s;
}

/// Star topology: one star element per non-isolated vertex plus singletons
/// for isolated vertices. Always validates Yes; its nerve is the graph.
inline SubBasis star_topology(const Graph& g) {
    std::vector<SubBasisElement> els;
    for (int v : g.vertices()) {
        if (g.degree(v) > 0)
            els.push_back(SubBasisElement::star(g, v));
        else
            els.push_back(SubBasisElement::induced({v}));
    }
    return SubBasis(g, els);
}

/// Deduplicated unit balls as induced elements. May validate No; validity
/// is reported, never assumed.
inline SubBasis unit_ball_topology(const Graph& g) {
    std::vector<SubBasisElement> els;
    for (int v : g.vertices()) {
        VertexSet b = g.neighbors(v);
        b.insert(std::lower_bound(b.begin(), b.end(), v), v);
        els.push_back(SubBasisElement::induced(b));
    }
    return SubBasis(g, els); // constructor deduplicates
}

/// Single whole-vertex-set element; valid iff the host is contractible.
inline SubBasis indiscrete_topology(const Graph& g) {
    return SubBasis(g, {SubBasisElement::induced(g.vertices())});
}

inline bool is_path_connected(const Graph& g) {
    return is_connected(g);
}

/// Topological connectedness: the family cannot be split into two nonempty
/// parts all of whose cross-intersections are empty. Computed on the
/// auxiliary graph whose edges are nonempty vertex intersections.
inline bool is_connected_topological(const SubBasis& b) {
    int k = static_cast<int>(b.elements.size());
    if (k == 0)
        return false;
    VertexSet nodes;
    for (int i = 0; i < k; ++i)
        nodes.push_back(i);
    std::vector<Edge> es;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (!vs_intersect(b.elements[i].vertices, b.elements[j].vertices).empty())
                es.push_back({i, j});
    return is_connected(Graph(nodes, es));
}

/// (homogeneous, maximal) for the induced subgraph K on w: homogeneous when
/// dim_K(x) is constant, maximal when dim_K(x) = dim_G(x) for all x in w.
inline std::pair<bool, bool> dimension_predicates(const Graph& g, const VertexSet& w) {
    if (w.empty())
        throw input_error("empty vertex set");
    Graph k = induced_subgraph(g, w);
    bool homogeneous = true, maximal = true;
    std::optional<Rational> first;
    for (int x : w) {
        Rational dk = dimension(unit_sphere(k, x));
        Rational dg = dimension(unit_sphere(g, x));
        if (!first)
            first = dk;
        else if (dk != *first)
            homogeneous = false;
        if (dk != dg)
            maximal = false;
    }
    return {homogeneous, maximal};
}

} // namespace grafotop
