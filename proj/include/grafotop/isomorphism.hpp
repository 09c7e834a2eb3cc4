#pragma once

#include <functional>
#include <map>
#include <optional>

#include "grafotop/graph.hpp"

namespace grafotop {

using VertexBijection = std::map<int, int>;
using VertexLabels = std::map<int, Rational>;

namespace detail {

struct IsoSearch {
    const Graph& a;
    const Graph& b;
    const VertexLabels* la;
    const VertexLabels* lb;
    bool collect_all = false;
    std::vector<VertexBijection> found;
    VertexBijection mapping;
    std::set<int> used;

    IsoSearch(const Graph& a_, const Graph& b_, const VertexLabels* la_,
              const VertexLabels* lb_)
        : a(a_), b(b_), la(la_), lb(lb_) {}

    Rational label_of(const VertexLabels* l, int v) const {
        if (!l)
            return Rational(0);
        auto it = l->find(v);
        return it == l->end() ? Rational(0) : it->second;
    }

    std::vector<int> degree_profile(const Graph& g, int v) const {
        std::vector<int> p;
        for (int u : g.neighbors(v))
            p.push_back(g.degree(u));
        std::sort(p.begin(), p.end());
        return p;
    }

    bool feasible(int u, int v) const {
        if (a.degree(u) != b.degree(v))
            return false;
        if (label_of(la, u) != label_of(lb, v))
            return false;
        if (degree_profile(a, u) != degree_profile(b, v))
            return false;
        for (int w : a.neighbors(u)) {
            auto it = mapping.find(w);
            if (it != mapping.end() && !b.has_edge(v, it->second))
                return false;
        }
        for (const auto& [w, img] : mapping)
            if (!a.has_edge(u, w) && b.has_edge(v, img))
                return false;
        return true;
    }

    // next vertex = unmapped with the most mapped neighbors (ties by label);
    // keeps the search anchored on connected regions.
    int pick_next() const {
        int best = -1, best_cnt = -1;
        for (int u : a.vertices()) {
            if (mapping.count(u))
                continue;
            int cnt = 0;
            for (int w : a.neighbors(u))
                if (mapping.count(w))
                    ++cnt;
            if (cnt > best_cnt) {
                best = u;
                best_cnt = cnt;
            }
        }
        return best;
    }

    bool run() {
        if (static_cast<int>(mapping.size()) == a.order()) {
            found.push_back(mapping);
            return !collect_all;
        }
        int u = pick_next();
        for (int v : b.vertices()) {
            if (used.count(v) || !feasible(u, v))
                continue;
            mapping[u] = v;
            used.insert(v);
            bool done = run();
            mapping.erase(u);
            used.erase(v);
            if (done)
                return true;
        }
        return false;
    }
};

} // namespace detail

/// Label-preserving graph isomorphism by backtracking. Returns a bijection
/// preserving adjacency and (when given) vertex labels, or nullopt.
inline std::optional<VertexBijection>
is_isomorphic(const Graph& a, const Graph& b,
              const VertexLabels* labels_a = nullptr,
              const VertexLabels* labels_b = nullptr) {
    if (a.order() != b.order() || a.size() != b.size())
        return std::nullopt;
    std::multiset<int> da, db;
    for (int v : a.vertices())
        da.insert(a.degree(v));
    for (int v : b.vertices())
        db.insert(b.degree(v));
    if (da != db)
        return std::nullopt;
    if ((labels_a == nullptr) != (labels_b == nullptr))
        throw input_error("labels must be given for both graphs or neither");
    if (labels_a) {
        std::multiset<Rational> sa, sb;
        for (int v : a.vertices())
            sa.insert(labels_a->count(v) ? labels_a->at(v) : Rational(0));
        for (int v : b.vertices())
            sb.insert(labels_b->count(v) ? labels_b->at(v) : Rational(0));
        if (sa != sb)
            return std::nullopt;
    }
    detail::IsoSearch s(a, b, labels_a, labels_b);
    if (s.run())
        return s.found.front();
    return std::nullopt;
}

/// Complete list of (label-preserving) automorphisms, deterministic order.
inline std::vector<VertexBijection>
all_automorphisms(const Graph& g, const VertexLabels* labels = nullptr) {
    detail::IsoSearch s(g, g, labels, labels);
    s.collect_all = true;
    s.run();
    return s.found;
}

} // namespace grafotop
