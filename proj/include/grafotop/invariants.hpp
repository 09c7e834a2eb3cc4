#pragma once

#include <map>

#include "grafotop/cliques.hpp"
#include "grafotop/dimension.hpp"

namespace grafotop {

/// Curvature K(x) = sum_k (-1)^k V_{k-1}(x)/(k+1) with V_k(x) the number of
/// K_{k+1} subgraphs of the unit sphere and V_{-1} = 1.
inline Rational curvature(const Graph& g, int x) {
    Graph s = unit_sphere(g, x);
    auto counts = enumerate_cliques(s).counts();
    Rational k = 1; // V_{-1}/1
    int sign = -1;
    for (size_t i = 0; i < counts.size(); ++i) {
        k += Rational(sign * counts[i], static_cast<int>(i) + 2);
        sign = -sign;
    }
    return k;
}

/// Injective vertex function given by exact rational values.
using VertexValues = std::map<int, Rational>;

inline void check_injective(const Graph& g, const VertexValues& f) {
    std::set<Rational> seen;
    for (int v : g.vertices()) {
        auto it = f.find(v);
        if (it == f.end())
            throw input_error("function value missing for vertex " + std::to_string(v));
        if (!seen.insert(it->second).second)
            throw input_error("function is not injective");
    }
}

/// S^-(x) = {y in S(x) : f(y) <= f(x)}; with f injective this is a strict
/// sublevel sphere.
inline VertexSet lower_sphere(const Graph& g, const VertexValues& f, int x) {
    VertexSet w;
    for (int y : g.neighbors(x))
        if (f.at(y) <= f.at(x))
            w.push_back(y);
    return w;
}

/// Index i_f(x) = 1 - chi(S^-(x)).
inline long long poincare_hopf_index(const Graph& g, const VertexValues& f, int x) {
    if (!g.has_vertex(x))
        throw input_error("unknown vertex " + std::to_string(x));
    check_injective(g, f);
    return 1 - euler_characteristic(induced_subgraph(g, lower_sphere(g, f, x)));
}

struct MorseData {
    VertexValues f;
    std::map<int, VertexSet> lower_spheres;
    std::map<int, long long> indices;
};

inline MorseData morse_data(const Graph& g, const VertexValues& f) {
    check_injective(g, f);
    MorseData m;
    m.f = f;
    for (int x : g.vertices()) {
        m.lower_spheres[x] = lower_sphere(g, f, x);
        m.indices[x] = 1 - euler_characteristic(induced_subgraph(g, m.lower_spheres[x]));
    }
    return m;
}

struct PoincareHopfReport {
    long long index_sum = 0;
    long long chi = 0;
    bool equal = false;
    std::map<int, long long> indices;
};

/// Sum of all indices against the Euler characteristic. The theorem says
/// they agree; the report exposes the comparison rather than assuming it.
inline PoincareHopfReport poincare_hopf_check(const Graph& g, const VertexValues& f) {
    MorseData m = morse_data(g, f);
    PoincareHopfReport r;
    r.indices = m.indices;
    for (auto& [v, i] : m.indices)
        r.index_sum += i;
    r.chi = euler_characteristic(g);
    r.equal = r.index_sum == r.chi;
    return r;
}

/// Exact expectation of i_f(x) over uniformly random vertex orderings.
/// In a uniform random total order on {x} and its d neighbors, each subset
/// W of the sphere appears as S^-(x) with probability 1/((d+1) C(d,|W|)),
/// so E = sum_W (1 - chi(W)) / ((d+1) C(d,|W|)). Averaging the index this
/// way recovers the curvature exactly; the identity is a test target, not
/// an assumption.
inline Rational index_expectation(const Graph& g, int x) {
    const VertexSet& sphere = g.neighbors(x);
    int d = static_cast<int>(sphere.size());
    std::vector<Integer> binom(d + 1);
    binom[0] = 1;
    for (int j = 1; j <= d; ++j)
        binom[j] = binom[j - 1] * (d - j + 1) / j;
    Rational e = 0;
    for (unsigned long mask = 0; mask < (1ul << d); ++mask) {
        VertexSet w;
        for (int j = 0; j < d; ++j)
            if (mask & (1ul << j))
                w.push_back(sphere[j]);
        long long one_minus_chi = 1 - euler_characteristic(induced_subgraph(g, w));
        e += Rational(one_minus_chi) / (Rational(d + 1) * Rational(binom[w.size()]));
    }
    return e;
}

} // namespace grafotop
