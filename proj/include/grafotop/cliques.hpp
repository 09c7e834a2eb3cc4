#pragma once

#include <optional>
#include <vector>

#include "grafotop/graph.hpp"

namespace grafotop {

/// All complete subgraphs graded by order: by_grade[k] lists the k-cliques
/// (K_{k+1} subgraphs) as ascending vertex tuples, lexicographically sorted.
struct CliqueSet {
    std::vector<std::vector<VertexSet>> by_grade;

    int top_grade() const { return static_cast<int>(by_grade.size()) - 1; }

    std::vector<long> counts() const {
        std::vector<long> v;
        for (const auto& grade : by_grade)
            v.push_back(static_cast<long>(grade.size()));
        return v;
    }
};

/// Grade-by-grade extension: a (k+1)-clique is a k-clique plus a larger
/// vertex adjacent to all of it. Input adjacency is sorted, so output order
/// is lexicographic without an extra sort.
inline CliqueSet enumerate_cliques(const Graph& g, std::optional<int> k_max = {}) {
    CliqueSet cs;
    if (g.order() == 0)
        return cs;
    cs.by_grade.emplace_back();
    for (int v : g.vertices())
        cs.by_grade[0].push_back({v});
    while (!cs.by_grade.back().empty()) {
        int k = cs.top_grade();
        if (k_max && k >= *k_max)
            break;
        std::vector<VertexSet> next;
        for (const auto& c : cs.by_grade[k]) {
            VertexSet cand = g.neighbors(c[0]);
            for (size_t i = 1; i < c.size(); ++i)
                cand = vs_intersect(cand, g.neighbors(c[i]));
            for (int v : cand) {
                if (v <= c.back())
                    continue;
                VertexSet ext = c;
                ext.push_back(v);
                next.push_back(std::move(ext));
            }
        }
        if (next.empty())
            break;
        cs.by_grade.push_back(std::move(next));
    }
    return cs;
}

/// Alternating sum of clique counts.
inline long long euler_characteristic(const Graph& g) {
    long long chi = 0;
    int sign = 1;
    for (long c : enumerate_cliques(g).counts()) {
        chi += sign * c;
        sign = -sign;
    }
    return chi;
}

} // namespace grafotop
