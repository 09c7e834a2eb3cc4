#pragma once

#include "grafotop/homeo.hpp"

namespace grafotop {

/// Weight- and adjacency-preserving permutations of the nerve nodes,
/// complete list in deterministic order.
inline std::vector<VertexBijection> nerve_automorphisms(const WeightedNerve& n) {
    VertexLabels l = n.labels();
    return all_automorphisms(n.nerve, &l);
}

inline bool is_automorphism(const Graph& g, const VertexBijection& f) {
    if (static_cast<int>(f.size()) != g.order())
        return false;
    std::set<int> image;
    for (int v : g.vertices()) {
        auto it = f.find(v);
        if (it == f.end() || !g.has_vertex(it->second) || !image.insert(it->second).second)
            return false;
    }
    for (auto [a, b] : g.edges())
        if (!g.has_edge(f.at(a), f.at(b)))
            return false;
    return true;
}

namespace detail {

/// Parity of the permutation sorting `tuple` ascending: +1 or -1.
inline int sort_parity(std::vector<int> tuple) {
    int inversions = 0;
    for (size_t i = 0; i < tuple.size(); ++i)
        for (size_t j = i + 1; j < tuple.size(); ++j)
            if (tuple[i] > tuple[j])
                ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

} // namespace detail

/// Signed permutation matrices U_k describing how the automorphism moves
/// oriented cliques: f permutes each grade, the sign is the parity of the
/// sort restoring ascending order. Satisfies d_k U_k = U_{k+1} d_k
/// (checked; violation is an internal error).
inline std::vector<IntMatrix> induced_cochain_maps(const Graph& g,
                                                   const VertexBijection& f) {
    if (!is_automorphism(g, f))
        throw input_error("map is not a graph automorphism");
    CliqueSet cs = enumerate_cliques(g);
    std::vector<IntMatrix> maps;
    for (int k = 0; k <= cs.top_grade(); ++k) {
        const auto& grade = cs.by_grade[k];
        std::map<VertexSet, int> index;
        for (size_t i = 0; i < grade.size(); ++i)
            index[grade[i]] = static_cast<int>(i);
        IntMatrix u(static_cast<int>(grade.size()), static_cast<int>(grade.size()));
        for (size_t i = 0; i < grade.size(); ++i) {
            std::vector<int> img;
            for (int v : grade[i])
                img.push_back(f.at(v));
            int sign = detail::sort_parity(img);
            VertexSet sorted_img = make_vertex_set(img);
            u.at(index.at(sorted_img), static_cast<int>(i)) = sign;
        }
        maps.push_back(std::move(u));
    }
    for (int k = 0; k + 1 <= cs.top_grade(); ++k) {
        IntMatrix dk = exterior_derivative_from(cs, k);
        if (!(dk * maps[k] == maps[k + 1] * dk))
            throw internal_error("induced cochain maps are not a chain map");
    }
    return maps;
}

struct FixedSimplex {
    VertexSet clique;
    int local_sign; // (-1)^dim times the permutation parity on the clique
};

struct LefschetzReport {
    std::vector<Rational> cohomology_traces; // tr(T_k) on H^k
    long long lefschetz = 0;                 // alternating sum of the above
    long long cochain_supertrace = 0;        // alternating sum of tr(U_k)
    std::vector<FixedSimplex> fixed_simplices;
    long long fixed_sum = 0;
};

namespace detail {

/// Trace of the map induced on H^k = ker(d_k)/im(d_{k-1}) by U_k over the
/// rationals: extend an image basis to a kernel basis, express U_k on it,
/// and take the trace of the quotient block.
inline Rational cohomology_trace(const IntMatrix& dk, const IntMatrix& dprev,
                                 const IntMatrix& uk) {
    int n = uk.rows();
    if (n == 0)
        return Rational(0);
    using Vec = std::vector<Rational>;
    std::vector<Vec> basis; // columns: image part then kernel completion
    // rational row-reduction bookkeeping for rank extension
    std::vector<Vec> reduced;
    std::vector<int> lead;
    auto try_add = [&](const Vec& v) {
        Vec w = v;
        for (size_t r = 0; r < reduced.size(); ++r)
            if (w[lead[r]] != 0) {
                Rational f = w[lead[r]] / reduced[r][lead[r]];
                for (int i = 0; i < n; ++i)
                    w[i] -= f * reduced[r][i];
            }
        int l = -1;
        for (int i = 0; i < n; ++i)
            if (w[i] != 0) {
                l = i;
                break;
            }
        if (l < 0)
            return false;
        reduced.push_back(w);
        lead.push_back(l);
        return true;
    };
    int image_rank = 0;
    if (dprev.rows() == n)
        for (int c = 0; c < dprev.cols(); ++c) {
            Vec v(n);
            for (int r = 0; r < n; ++r)
                v[r] = Rational(dprev.at(r, c));
            if (try_add(v)) {
                basis.push_back(v);
                ++image_rank;
            }
        }
    std::vector<Vec> kernel;
    if (dk.rows() == 0) {
        for (int i = 0; i < n; ++i) {
            Vec v(n);
            v[i] = 1;
            kernel.push_back(v);
        }
    } else {
        kernel = kernel_basis(dk);
    }
    for (const Vec& v : kernel)
        if (try_add(v))
            basis.push_back(v);
    int z = static_cast<int>(basis.size());
    if (z == image_rank)
        return Rational(0); // H^k = 0
    // solve basis * X = U_k * basis  (columns of X by Gaussian elimination)
    std::vector<Vec> a(n, Vec(z));
    for (int c = 0; c < z; ++c)
        for (int r = 0; r < n; ++r)
            a[r][c] = basis[c][r];
    std::vector<Vec> rhs(n, Vec(z));
    for (int c = 0; c < z; ++c)
        for (int r = 0; r < n; ++r) {
            Rational s = 0;
            for (int t = 0; t < n; ++t)
                if (uk.at(r, t) != 0)
                    s += Rational(uk.at(r, t)) * basis[c][t];
            rhs[r][c] = s;
        }
    // row-reduce [a | rhs]
    int pr = 0;
    std::vector<int> pivot_of_col(z, -1);
    for (int pc = 0; pc < z && pr < n; ++pc) {
        int piv = -1;
        for (int r = pr; r < n; ++r)
            if (a[r][pc] != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(a[piv], a[pr]);
        std::swap(rhs[piv], rhs[pr]);
        Rational inv = a[pr][pc];
        for (int c = 0; c < z; ++c) {
            a[pr][c] /= inv;
            rhs[pr][c] /= inv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == pr || a[r][pc] == 0)
                continue;
            Rational f = a[r][pc];
            for (int c = 0; c < z; ++c) {
                a[r][c] -= f * a[pr][c];
                rhs[r][c] -= f * rhs[pr][c];
            }
        }
        pivot_of_col[pc] = pr;
        ++pr;
    }
    Rational trace = 0;
    for (int c = image_rank; c < z; ++c) {
        int r = pivot_of_col[c];
        if (r < 0)
            throw internal_error("basis matrix singular in cohomology trace");
        trace += rhs[r][c];
    }
    return trace;
}

} // namespace detail

/// Lefschetz data for a graph automorphism: traces on cohomology, the
/// cochain super-trace shortcut, and the signed count of fixed cliques.
/// The three agree (Hopf trace); disagreement is an internal error.
inline LefschetzReport lefschetz_number(const Graph& g, const VertexBijection& f) {
    LefschetzReport rep;
    CliqueSet cs = enumerate_cliques(g);
    std::vector<IntMatrix> maps = induced_cochain_maps(g, f);
    int sign = 1;
    Integer super = 0;
    for (size_t k = 0; k < maps.size(); ++k) {
        super += sign * maps[k].trace();
        sign = -sign;
    }
    rep.cochain_supertrace = static_cast<long long>(super);
    Rational lef = 0;
    sign = 1;
    for (int k = 0; k <= cs.top_grade(); ++k) {
        IntMatrix dk = exterior_derivative_from(cs, k);
        IntMatrix dprev = k > 0 ? exterior_derivative_from(cs, k - 1) : IntMatrix(0, 0);
        Rational t = detail::cohomology_trace(dk, dprev, maps[k]);
        rep.cohomology_traces.push_back(t);
        lef += sign * t;
        sign = -sign;
    }
    if (denominator(lef) != 1)
        throw internal_error("non-integral Lefschetz number");
    rep.lefschetz = static_cast<long long>(numerator(lef));
    for (int k = 0; k <= cs.top_grade(); ++k) {
        int gsign = k % 2 == 0 ? 1 : -1;
        for (const auto& c : cs.by_grade[k]) {
            std::vector<int> img;
            for (int v : c)
                img.push_back(f.at(v));
            VertexSet sorted_img = make_vertex_set(img);
            if (sorted_img == c) {
                FixedSimplex fs;
                fs.clique = c;
                fs.local_sign = gsign * detail::sort_parity(img);
                rep.fixed_sum += fs.local_sign;
                rep.fixed_simplices.push_back(std::move(fs));
            }
        }
    }
    if (rep.lefschetz != rep.cochain_supertrace || rep.lefschetz != rep.fixed_sum)
        throw internal_error("Hopf trace identity failed");
    return rep;
}

struct InvariantSet {
    std::vector<int> nerve_simplex;      // mutually linked element indices
    std::vector<SubBasisElement> elements;
    VertexSet union_vertices;
    LefschetzReport lefschetz;           // of the automorphism on the nerve
    Rational diameter_bound;             // (dim(nerve)+1) * max element diameter
};

namespace detail {

inline int graph_diameter(const Graph& g) {
    int best = 0;
    for (int s : g.vertices()) {
        std::map<int, int> dist{{s, 0}};
        std::vector<int> queue{s};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int u : g.neighbors(v))
                if (!dist.count(u)) {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
        }
        for (auto& [v, d] : dist)
            best = std::max(best, d);
    }
    return best;
}

} // namespace detail

/// Invariant open set for a nerve automorphism with nonzero Lefschetz
/// number: the smallest nerve simplex mapped into itself, together with the
/// union of the corresponding sub-basis elements. Existence is guaranteed
/// when L != 0; exhaustion failure then is a hard internal error.
inline std::optional<InvariantSet> fixed_invariant_set(const TopologicalGraph& t,
                                                       const VertexBijection& a) {
    if (!t.valid())
        throw input_error("fixed_invariant_set requires a validated topology");
    const WeightedNerve& wn = t.nerve();
    if (!is_automorphism(wn.nerve, a))
        throw input_error("map is not an automorphism of the nerve");
    for (int v : wn.nerve.vertices())
        if (wn.weights[a.at(v)] != wn.weights[v])
            throw input_error("map does not preserve nerve weights");
    LefschetzReport rep = lefschetz_number(wn.nerve, a);
    CliqueSet cs = enumerate_cliques(wn.nerve);
    std::optional<InvariantSet> result;
    for (int k = 0; k <= cs.top_grade() && !result; ++k)
        for (const auto& c : cs.by_grade[k]) {
            std::vector<int> img;
            for (int v : c)
                img.push_back(a.at(v));
            if (make_vertex_set(img) == c) {
                InvariantSet is;
                is.nerve_simplex = c;
                VertexSet uni;
                for (int i : c) {
                    is.elements.push_back(t.subbasis.elements[i]);
                    uni = vs_union(uni, t.subbasis.elements[i].vertices);
                }
                is.union_vertices = uni;
                is.lefschetz = rep;
                int max_diam = 0;
                for (const auto& e : t.subbasis.elements)
                    max_diam = std::max(
                        max_diam, detail::graph_diameter(e.element_graph(t.graph)));
                is.diameter_bound = (dimension(wn.nerve) + 1) * max_diam;
                result = std::move(is);
                break;
            }
        }
    if (!result && rep.lefschetz != 0)
        throw internal_error("nonzero Lefschetz number but no invariant simplex");
    return result;
}

} // namespace grafotop
