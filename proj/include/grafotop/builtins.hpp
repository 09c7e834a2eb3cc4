#pragma once

#include <array>
#include <functional>
#include <numeric>

#include "grafotop/graph.hpp"

namespace grafotop {
namespace builtins {

inline Graph cycle(int n) {
    if (n < 3)
        throw input_error("cycle needs n >= 3");
    VertexSet vs(n);
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        es.push_back(make_edge(i, (i + 1) % n));
    return Graph(vs, es);
}

inline Graph path(int n) {
    if (n < 1)
        throw input_error("path needs n >= 1");
    VertexSet vs(n);
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i)
        es.push_back({i, i + 1});
    return Graph(vs, es);
}

inline Graph complete(int n) {
    if (n < 1)
        throw input_error("complete needs n >= 1");
    VertexSet vs(n);
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            es.push_back({i, j});
    return Graph(vs, es);
}

/// Star tree: center 0, leaves 1..n.
inline Graph star(int n) {
    if (n < 1)
        throw input_error("star needs n >= 1");
    VertexSet vs(n + 1);
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<Edge> es;
    for (int i = 1; i <= n; ++i)
        es.push_back({0, i});
    return Graph(vs, es);
}

/// Wheel: hub 0, rim cycle 1..n.
inline Graph wheel(int n) {
    if (n < 3)
        throw input_error("wheel needs rim >= 3");
    VertexSet vs(n + 1);
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<Edge> es;
    for (int i = 1; i <= n; ++i) {
        es.push_back({0, i});
        es.push_back(make_edge(i, i % n + 1));
    }
    return Graph(vs, es);
}

/// Sun graph over C_n: ring 0..n-1, then a path ray of a_i extra vertices
/// hanging off ring vertex i.
inline Graph sun(const std::vector<long>& rays) {
    int n = static_cast<int>(rays.size());
    if (n < 3)
        throw input_error("sun needs >= 3 ring vertices");
    std::vector<Edge> es;
    VertexSet vs;
    for (int i = 0; i < n; ++i) {
        vs.push_back(i);
        es.push_back(make_edge(i, (i + 1) % n));
    }
    int next = n;
    for (int i = 0; i < n; ++i) {
        int prev = i;
        for (long j = 0; j < rays[i]; ++j) {
            vs.push_back(next);
            es.push_back(make_edge(prev, next));
            prev = next++;
        }
    }
    return Graph(vs, es);
}

/// K_{a+1} and K_{b+1} joined by a line graph with n vertices whose ends
/// are the junction vertices; a+b+n vertices in total.
inline Graph dumbbell(int a, int b, int n) {
    if (a < 1 || b < 1 || n < 2)
        throw input_error("dumbbell needs a,b >= 1 and n >= 2");
    int total = a + b + n;
    VertexSet vs(total);
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<Edge> es;
    for (int i = 0; i <= a; ++i)
        for (int j = i + 1; j <= a; ++j)
            es.push_back({i, j});
    for (int i = a; i < a + n - 1; ++i)
        es.push_back({i, i + 1});
    for (int i = a + n - 1; i < total; ++i)
        for (int j = i + 1; j < total; ++j)
            es.push_back({i, j});
    return Graph(vs, es);
}

/// K_{2,2,2}; antipodal pairs (0,1), (2,3), (4,5).
inline Graph octahedron() {
    VertexSet vs{0, 1, 2, 3, 4, 5};
    std::vector<Edge> es;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (!(i / 2 == j / 2))
                es.push_back({i, j});
    return Graph(vs, es);
}

/// Octahedron plus an edge between the antipodes 0 and 1.
inline Graph octahedron_plus() {
    Graph o = octahedron();
    std::vector<Edge> es = o.edges();
    es.push_back({0, 1});
    return Graph(o.vertices(), es);
}

/// Top 0, upper ring 1..5, lower ring 6..10, bottom 11.
inline Graph icosahedron() {
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        int u = 1 + i, l = 6 + i;
        es.push_back(make_edge(0, u));
        es.push_back(make_edge(11, l));
        es.push_back(make_edge(u, 1 + (i + 1) % 5));
        es.push_back(make_edge(l, 6 + (i + 1) % 5));
        es.push_back(make_edge(u, l));
        es.push_back(make_edge(u, 6 + (i + 1) % 5));
    }
    VertexSet vs(12);
    std::iota(vs.begin(), vs.end(), 0);
    return Graph(vs, es);
}

/// Q_3 with binary vertex labels.
inline Graph cube() {
    VertexSet vs(8);
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<Edge> es;
    for (int v = 0; v < 8; ++v)
        for (int b = 0; b < 3; ++b)
            if (v < (v ^ (1 << b)))
                es.push_back({v, v ^ (1 << b)});
    return Graph(vs, es);
}

inline Graph petersen() {
    VertexSet vs(10);
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.push_back(make_edge(i, (i + 1) % 5));
        es.push_back(make_edge(5 + i, 5 + (i + 2) % 5));
        es.push_back({i, 5 + i});
    }
    return Graph(vs, es);
}

inline Graph utility() { // K_{3,3}
    VertexSet vs{0, 1, 2, 3, 4, 5};
    std::vector<Edge> es;
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j)
            es.push_back({i, j});
    return Graph(vs, es);
}

/// Triangulated prism surface: two triangles 012 / 345, verticals i~i+3,
/// and one diagonal per side square. A 6-vertex discrete sphere, chi = 2.
inline Graph prism() {
    return Graph({0, 1, 2, 3, 4, 5},
                 {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                  {0, 3}, {1, 4}, {2, 5}, {0, 4}, {1, 5}, {2, 3}});
}

inline Graph bull() {
    return Graph({0, 1, 2, 3, 4}, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}});
}

inline Graph house() { // square 0123 with roof apex 4 over edge 23
    return Graph({0, 1, 2, 3, 4}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {2, 4}, {3, 4}});
}

inline Graph kite() { // diamond 0123 (missing 03) with tail at 3
    return Graph({0, 1, 2, 3, 4}, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
}

inline Graph gem() { // fan: path 0-1-2-3 plus dominating vertex 4
    return Graph({0, 1, 2, 3, 4},
                 {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
}

inline Graph gate() { // wheel W_5 with one rim edge removed
    Graph w = wheel(5);
    std::vector<Edge> es;
    for (auto e : w.edges())
        if (!(e == Edge{1, 2}))
            es.push_back(e);
    return Graph(w.vertices(), es);
}

inline Graph fly() { // two triangles sharing the center 0
    return Graph({0, 1, 2, 3, 4}, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
}

inline Graph fork() { // chair tree: path 0-1-2-3 plus leaf 4 at 1
    return Graph({0, 1, 2, 3, 4}, {{0, 1}, {1, 2}, {2, 3}, {1, 4}});
}

inline Graph cricket() { // triangle 012 with two legs at 0
    return Graph({0, 1, 2, 3, 4}, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}});
}

inline Graph dart() { // diamond 0123 (missing 23) with tail at 0
    return Graph({0, 1, 2, 3, 4}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 4}});
}

inline Graph lollipop() { // K_4 with a two-vertex handle
    return Graph({0, 1, 2, 3, 4, 5},
                 {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}});
}

/// Triangulated cylinder: rings 0..3 and 4..7, verticals, one diagonal per
/// square. Uniformly two-dimensional with chi = 0.
inline Graph hole() {
    std::vector<Edge> es;
    for (int i = 0; i < 4; ++i) {
        es.push_back(make_edge(i, (i + 1) % 4));
        es.push_back(make_edge(4 + i, 4 + (i + 1) % 4));
        es.push_back(make_edge(i, 4 + i));
        es.push_back(make_edge(i, 4 + (i + 1) % 4));
    }
    VertexSet vs(8);
    std::iota(vs.begin(), vs.end(), 0);
    return Graph(vs, es);
}

/// Radius-2 disc in the triangular lattice: center 0, ring 1..6,
/// outer ring 7..18.
inline Graph hexregion() {
    std::vector<Edge> es;
    for (int i = 0; i < 6; ++i) {
        int r1 = 1 + i, r1n = 1 + (i + 1) % 6;
        es.push_back(make_edge(0, r1));
        es.push_back(make_edge(r1, r1n));
        int corner = 7 + 2 * i;            // aligned with r1
        int mid = 7 + 2 * i + 1;           // between r1 and r1n
        int prev_mid = 7 + (2 * i + 11) % 12;
        es.push_back(make_edge(r1, corner));
        es.push_back(make_edge(r1, mid));
        es.push_back(make_edge(r1, prev_mid));
        es.push_back(make_edge(corner, mid));
        es.push_back(make_edge(mid, 7 + (2 * i + 2) % 12));
    }
    VertexSet vs(19);
    std::iota(vs.begin(), vs.end(), 0);
    return Graph(vs, es);
}

inline Graph dihedral() { // hexagonal prism, the Cayley graph of D_6
    std::vector<Edge> es;
    for (int i = 0; i < 6; ++i) {
        es.push_back(make_edge(i, (i + 1) % 6));
        es.push_back(make_edge(6 + i, 6 + (i + 1) % 6));
        es.push_back(make_edge(i, 6 + i));
    }
    VertexSet vs(12);
    std::iota(vs.begin(), vs.end(), 0);
    return Graph(vs, es);
}

namespace detail {

using FaceList = std::vector<std::vector<int>>;

/// Snub of an oriented polyhedron: one vertex per dart, ring edges inside
/// each face, a triangle of out-darts around each seed vertex, and one
/// cross edge per seed edge. Gives the snub cube from the cube and the
/// snub dodecahedron from the dodecahedron.
inline Graph snub(const FaceList& faces) {
    std::map<std::pair<int, int>, int> idx;
    std::vector<std::pair<int, int>> darts;
    for (const auto& f : faces) {
        int k = static_cast<int>(f.size());
        for (int i = 0; i < k; ++i) {
            std::pair<int, int> d{f[i], f[(i + 1) % k]};
            if (idx.count(d))
                throw internal_error("face list is not an orientation");
            idx[d] = static_cast<int>(darts.size());
            darts.push_back(d);
        }
    }
    std::set<Edge> es;
    std::map<std::pair<int, int>, int> sigma; // (v,u) -> w for face ..u,v,w..
    for (const auto& f : faces) {
        int k = static_cast<int>(f.size());
        for (int i = 0; i < k; ++i) {
            int u = f[i], v = f[(i + 1) % k], w = f[(i + 2) % k];
            es.insert(make_edge(idx.at({u, v}), idx.at({v, w})));
            sigma[{v, u}] = w;
        }
    }
    for (const auto& [d, i] : idx) {
        auto [v, u] = d; // out-dart v->u
        int w = sigma.at({v, u});
        es.insert(make_edge(i, idx.at({v, w}))); // vertex ring at v
        es.insert(make_edge(i, idx.at({u, v}))); // cross edge
    }
    VertexSet vs(darts.size());
    std::iota(vs.begin(), vs.end(), 0);
    return Graph(vs, std::vector<Edge>(es.begin(), es.end()));
}

inline FaceList cube_faces() {
    return {{0, 2, 3, 1}, {4, 5, 7, 6}, {0, 1, 5, 4},
            {2, 6, 7, 3}, {0, 4, 6, 2}, {1, 3, 7, 5}};
}

inline FaceList dodecahedron_faces() {
    return {{0, 8, 4, 15, 9},  {0, 9, 1, 13, 10}, {0, 10, 2, 14, 8},
            {1, 9, 15, 5, 11}, {1, 11, 17, 3, 13}, {2, 10, 13, 3, 12},
            {2, 12, 18, 6, 14}, {3, 17, 7, 18, 12}, {4, 8, 14, 6, 16},
            {4, 16, 19, 5, 15}, {5, 19, 7, 17, 11}, {6, 18, 7, 19, 16}};
}

} // namespace detail

inline Graph snub_cube() { return detail::snub(detail::cube_faces()); }

/// The 60-vertex chiral solid with chi = -10 (snub of the dodecahedron).
inline Graph snub_octahedron() { return detail::snub(detail::dodecahedron_faces()); }

} // namespace builtins

/// Named graph library. Parameter counts are validated; unknown names are
/// input errors. See the CLI help for the catalogue.
inline Graph builtin(const std::string& name, const std::vector<long>& params = {}) {
    using namespace builtins;
    auto need = [&](size_t k) {
        if (params.size() != k)
            throw input_error("builtin '" + name + "' expects " + std::to_string(k) +
                              " parameter(s)");
    };
    auto p = [&](size_t i) { return static_cast<int>(params[i]); };
    if (name == "cycle") { need(1); return cycle(p(0)); }
    if (name == "path") { need(1); return path(p(0)); }
    if (name == "complete") { need(1); return complete(p(0)); }
    if (name == "star") { need(1); return star(p(0)); }
    if (name == "wheel") { need(1); return wheel(p(0)); }
    if (name == "sun") {
        if (params.size() < 3)
            throw input_error("sun needs >= 3 ray lengths");
        return sun(params);
    }
    if (name == "dumbbell") { need(3); return dumbbell(p(0), p(1), p(2)); }
    if (name == "octahedron") { need(0); return octahedron(); }
    if (name == "octahedronplus") { need(0); return octahedron_plus(); }
    if (name == "icosahedron") { need(0); return icosahedron(); }
    if (name == "cube") { need(0); return cube(); }
    if (name == "petersen") { need(0); return petersen(); }
    if (name == "utility") { need(0); return utility(); }
    if (name == "prism") { need(0); return prism(); }
    if (name == "bull") { need(0); return bull(); }
    if (name == "house") { need(0); return house(); }
    if (name == "kite") { need(0); return kite(); }
    if (name == "gem") { need(0); return gem(); }
    if (name == "gate") { need(0); return gate(); }
    if (name == "fly") { need(0); return fly(); }
    if (name == "fork") { need(0); return fork(); }
    if (name == "cricket") { need(0); return cricket(); }
    if (name == "dart") { need(0); return dart(); }
    if (name == "lollipop") { need(0); return lollipop(); }
    if (name == "hole") { need(0); return hole(); }
    if (name == "hexregion") { need(0); return hexregion(); }
    if (name == "dihedral") { need(0); return dihedral(); }
    if (name == "snubcube") { need(0); return snub_cube(); }
    if (name == "snuboctahedron") { need(0); return snub_octahedron(); }
    if (name == "tetrahedron") { need(0); return complete(4); }
    if (name == "hypertetrahedron") { need(0); return complete(5); }
    throw input_error("unknown builtin graph '" + name + "'");
}

inline std::vector<std::string> builtin_names() {
    return {"cycle n", "path n", "complete n", "star n", "wheel n",
            "sun a1 a2 ... (>=3 rays)", "dumbbell a b n", "octahedron",
            "octahedronplus", "icosahedron", "cube", "petersen", "utility",
            "prism", "bull", "house", "kite", "gem", "gate", "fly", "fork",
            "cricket", "dart", "lollipop", "hole", "hexregion", "dihedral",
            "snubcube", "snuboctahedron", "tetrahedron", "hypertetrahedron",
            "necklace10", "necklace15"};
}

} // namespace grafotop
