#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "grafotop/rational.hpp"

namespace grafotop {

/// Sorted, duplicate-free list of vertex labels. Canonical representation:
/// set equality coincides with sequence equality.
using VertexSet = std::vector<int>;

inline VertexSet make_vertex_set(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline bool vs_contains(const VertexSet& s, int x) {
    return std::binary_search(s.begin(), s.end(), x);
}

inline VertexSet vs_intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet vs_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet vs_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

using Edge = std::pair<int, int>; // always stored with first < second

inline Edge make_edge(int a, int b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

/// Finite simple graph over integer vertex labels. Vertices and edges are
/// kept sorted so iteration order is deterministic. Immutable once built;
/// all operations return new graphs.
class Graph {
  public:
    Graph() = default;

    Graph(VertexSet vertices, std::vector<Edge> edges) {
        verts_ = make_vertex_set(std::move(vertices));
        std::set<Edge> es;
        for (auto [a, b] : edges) {
            if (a == b)
                throw input_error("self-loop at vertex " + std::to_string(a));
            if (!vs_contains(verts_, a) || !vs_contains(verts_, b))
                throw input_error("edge endpoint not a listed vertex: (" +
                                  std::to_string(a) + "," + std::to_string(b) + ")");
            es.insert(make_edge(a, b));
        }
        edges_.assign(es.begin(), es.end());
        for (int v : verts_)
            adj_[v];
        for (auto [a, b] : edges_) {
            adj_[a].push_back(b);
            adj_[b].push_back(a);
        }
        for (auto& [v, nb] : adj_)
            std::sort(nb.begin(), nb.end());
    }

    int order() const { return static_cast<int>(verts_.size()); }
    int size() const { return static_cast<int>(edges_.size()); }

    const VertexSet& vertices() const { return verts_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_vertex(int v) const { return vs_contains(verts_, v); }

    bool has_edge(int a, int b) const {
        auto it = adj_.find(a);
        if (it == adj_.end())
            return false;
        return std::binary_search(it->second.begin(), it->second.end(), b);
    }

    const VertexSet& neighbors(int v) const {
        auto it = adj_.find(v);
        if (it == adj_.end())
            throw input_error("unknown vertex " + std::to_string(v));
        return it->second;
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool operator==(const Graph& o) const {
        return verts_ == o.verts_ && edges_ == o.edges_;
    }

    /// Largest label + 1, convenient when adding fresh vertices.
    int fresh_label() const { return verts_.empty() ? 0 : verts_.back() + 1; }

  private:
    VertexSet verts_;
    std::vector<Edge> edges_;
    std::map<int, VertexSet> adj_;
};

/// Subgraph on w with exactly the host edges inside w.
inline Graph induced_subgraph(const Graph& g, const VertexSet& w) {
    VertexSet vs = make_vertex_set(w);
    for (int v : vs)
        if (!g.has_vertex(v))
            throw input_error("unknown vertex " + std::to_string(v));
    std::vector<Edge> es;
    for (int v : vs)
        for (int u : g.neighbors(v))
            if (u > v && vs_contains(vs, u))
                es.push_back({v, u});
    return Graph(vs, es);
}

/// Unit sphere: induced subgraph on the neighbors of x.
inline Graph unit_sphere(const Graph& g, int x) {
    return induced_subgraph(g, g.neighbors(x));
}

/// Unit ball: induced subgraph on {x} plus neighbors.
inline Graph unit_ball(const Graph& g, int x) {
    VertexSet w = g.neighbors(x);
    w.insert(std::lower_bound(w.begin(), w.end(), x), x);
    return induced_subgraph(g, w);
}

/// Star graph at x: the smallest graph containing all edges at x. Not an
/// induced subgraph -- edges among the neighbors are dropped.
inline Graph star_graph(const Graph& g, int x) {
    const VertexSet& nb = g.neighbors(x);
    VertexSet vs = nb;
    vs.insert(std::lower_bound(vs.begin(), vs.end(), x), x);
    std::vector<Edge> es;
    for (int y : nb)
        es.push_back(make_edge(x, y));
    return Graph(vs, es);
}

inline bool is_connected(const Graph& g) {
    if (g.order() == 0)
        return false;
    std::set<int> seen{g.vertices()[0]};
    std::vector<int> stack{g.vertices()[0]};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v))
            if (seen.insert(u).second)
                stack.push_back(u);
    }
    return static_cast<int>(seen.size()) == g.order();
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    std::set<int> left(g.vertices().begin(), g.vertices().end());
    while (!left.empty()) {
        int s = *left.begin();
        std::set<int> comp{s};
        std::vector<int> stack{s};
        left.erase(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v))
                if (left.count(u)) {
                    left.erase(u);
                    comp.insert(u);
                    stack.push_back(u);
                }
        }
        comps.emplace_back(comp.begin(), comp.end());
    }
    return comps;
}

/// Relabel with consecutive integers 0..n-1 in sorted label order; the i-th
/// entry of the returned map is the original label of vertex i.
inline std::pair<Graph, std::vector<int>> canonicalized(const Graph& g) {
    std::map<int, int> to_new;
    std::vector<int> orig;
    for (int v : g.vertices()) {
        to_new[v] = static_cast<int>(orig.size());
        orig.push_back(v);
    }
    VertexSet vs(orig.size());
    for (size_t i = 0; i < orig.size(); ++i)
        vs[i] = static_cast<int>(i);
    std::vector<Edge> es;
    for (auto [a, b] : g.edges())
        es.push_back(make_edge(to_new[a], to_new[b]));
    return {Graph(vs, es), orig};
}

inline Graph relabeled(const Graph& g, const std::map<int, int>& m) {
    VertexSet vs;
    for (int v : g.vertices())
        vs.push_back(m.at(v));
    std::vector<Edge> es;
    for (auto [a, b] : g.edges())
        es.push_back(make_edge(m.at(a), m.at(b)));
    return Graph(vs, es);
}

} // namespace grafotop
