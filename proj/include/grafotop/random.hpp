#pragma once

#include <random>

#include "grafotop/graph.hpp"
#include "grafotop/invariants.hpp"

namespace grafotop {

/// Seeded Erdos-Renyi graph on vertices 0..n-1; edge probability is
/// percent/100. mt19937_64 keeps the stream identical across platforms.
inline Graph random_graph(int n, int percent, std::mt19937_64& rng) {
    VertexSet vs;
    for (int i = 0; i < n; ++i)
        vs.push_back(i);
    std::vector<Edge> es;
    std::uniform_int_distribution<int> d(0, 99);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (d(rng) < percent)
                es.push_back({i, j});
    return Graph(vs, es);
}

/// Random injective vertex function: a shuffled ranking.
inline VertexValues random_injective(const Graph& g, std::mt19937_64& rng) {
    std::vector<int> order = g.vertices();
    std::shuffle(order.begin(), order.end(), rng);
    VertexValues f;
    for (size_t i = 0; i < order.size(); ++i)
        f[order[i]] = Rational(static_cast<int>(i));
    return f;
}

/// Random relabeling of the vertices onto 1000..1000+n-1 (disjoint from
/// typical small labels, shuffled).
inline std::map<int, int> random_relabeling(const Graph& g, std::mt19937_64& rng) {
    std::vector<int> fresh;
    for (int i = 0; i < g.order(); ++i)
        fresh.push_back(1000 + i);
    std::shuffle(fresh.begin(), fresh.end(), rng);
    std::map<int, int> m;
    int i = 0;
    for (int v : g.vertices())
        m[v] = fresh[i++];
    return m;
}

} // namespace grafotop
