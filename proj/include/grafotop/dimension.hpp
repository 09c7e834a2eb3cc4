#pragma once

#include <map>

#include "grafotop/graph.hpp"

namespace grafotop {

namespace detail {

inline Rational dim_of_subset(const Graph& g, const VertexSet& sub,
                              std::map<VertexSet, Rational>& memo) {
    if (sub.empty())
        return Rational(-1);
    auto it = memo.find(sub);
    if (it != memo.end())
        return it->second;
    Rational total = 0;
    for (int x : sub) {
        VertexSet sphere = vs_intersect(g.neighbors(x), sub);
        total += 1 + dim_of_subset(g, sphere, memo);
    }
    Rational r = total / static_cast<int>(sub.size());
    memo.emplace(sub, r);
    return r;
}

} // namespace detail

/// Inductive dimension: dim(G) = (1/|V|) sum_x (1 + dim(S(x))), dim({}) = -1.
/// Spheres of spheres repeat heavily, so the recursion memoizes on the
/// vertex set of each induced subgraph it meets. The memo is per call; the
/// function is safe to use concurrently.
inline Rational dimension(const Graph& g) {
    std::map<VertexSet, Rational> memo;
    return detail::dim_of_subset(g, g.vertices(), memo);
}

/// Relative dimension of the vertex set w inside g: the mean of dim(S_g(x))
/// over x in w, spheres taken in g.
inline Rational relative_dimension(const Graph& g, const VertexSet& w) {
    if (w.empty())
        throw input_error("relative dimension of an empty vertex set");
    std::map<VertexSet, Rational> memo;
    Rational total = 0;
    for (int x : w) {
        if (!g.has_vertex(x))
            throw input_error("unknown vertex " + std::to_string(x));
        total += detail::dim_of_subset(g, g.neighbors(x), memo);
    }
    return total / static_cast<int>(w.size());
}

/// Local dimension of a vertex: dim_G(x) = dim(S(x)).
inline Rational local_dimension(const Graph& g, int x) {
    return relative_dimension(g, {x});
}

} // namespace grafotop
