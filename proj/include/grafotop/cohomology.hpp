#pragma once

#include <map>

#include "grafotop/cliques.hpp"
#include "grafotop/matrix.hpp"

namespace grafotop {

// Orientation convention: every clique is oriented by its ascending vertex
// tuple; the sign of any other ordering is the permutation parity. Betti
// numbers do not depend on this choice (there is a test for that).

/// d_k maps functions on k-cliques to functions on (k+1)-cliques:
/// rows are the (k+1)-cliques, columns the k-cliques, both in lexicographic
/// order, entries from the alternating face sum.
inline IntMatrix exterior_derivative_from(const CliqueSet& cs, int k) {
    if (k < 0)
        throw input_error("negative grade");
    int ncols = k <= cs.top_grade() ? static_cast<int>(cs.by_grade[k].size()) : 0;
    int nrows = k + 1 <= cs.top_grade() ? static_cast<int>(cs.by_grade[k + 1].size()) : 0;
    IntMatrix d(nrows, ncols);
    if (nrows == 0 || ncols == 0)
        return d;
    std::map<VertexSet, int> index;
    for (int i = 0; i < ncols; ++i)
        index[cs.by_grade[k][i]] = i;
    for (int r = 0; r < nrows; ++r) {
        const VertexSet& c = cs.by_grade[k + 1][r];
        int sign = 1;
        for (size_t i = 0; i < c.size(); ++i) {
            VertexSet face;
            face.reserve(c.size() - 1);
            for (size_t j = 0; j < c.size(); ++j)
                if (j != i)
                    face.push_back(c[j]);
            d.at(r, index.at(face)) = sign;
            sign = -sign;
        }
    }
    return d;
}

inline IntMatrix exterior_derivative(const Graph& g, int k) {
    return exterior_derivative_from(enumerate_cliques(g), k);
}

struct CohomologyProfile {
    std::vector<long> betti;
    std::vector<long> clique_counts;
    long long chi_combinatorial = 0;
    long long chi_cohomological = 0;
};

/// b_k = v_k - rank(d_k) - rank(d_{k-1}), exact. Checks Euler-Poincare
/// before returning.
inline CohomologyProfile betti_numbers(const Graph& g) {
    CohomologyProfile p;
    CliqueSet cs = enumerate_cliques(g);
    p.clique_counts = cs.counts();
    int top = cs.top_grade();
    std::vector<int> rank(top + 2, 0);
    for (int k = 0; k <= top; ++k)
        rank[k] = rank_bareiss(exterior_derivative_from(cs, k));
    for (int k = 0; k <= top; ++k) {
        long vk = p.clique_counts[k];
        p.betti.push_back(vk - rank[k] - (k > 0 ? rank[k - 1] : 0));
    }
    int sign = 1;
    for (long v : p.clique_counts) {
        p.chi_combinatorial += sign * v;
        sign = -sign;
    }
    sign = 1;
    for (long b : p.betti) {
        p.chi_cohomological += sign * b;
        sign = -sign;
    }
    if (p.chi_combinatorial != p.chi_cohomological)
        throw internal_error("Euler-Poincare identity failed");
    for (long b : p.betti)
        if (b < 0)
            throw internal_error("negative Betti number");
    while (p.betti.size() > 1 && p.betti.back() == 0)
        p.betti.pop_back();
    return p;
}

/// Hodge Laplacian L_k = d_k^T d_k + d_{k-1} d_{k-1}^T on grade k.
inline IntMatrix hodge_laplacian(const Graph& g, int k) {
    CliqueSet cs = enumerate_cliques(g);
    IntMatrix dk = exterior_derivative_from(cs, k);
    IntMatrix up = dk.transpose() * dk;
    if (k == 0)
        return up;
    IntMatrix dprev = exterior_derivative_from(cs, k - 1);
    if (dprev.rows() == 0)
        return up;
    return up + dprev * dprev.transpose();
}

/// Dirac operator D = d + d^* as one block matrix on the direct sum of all
/// grades; D^2 is block diagonal with the L_k as blocks (checked by tests).
inline IntMatrix dirac_operator(const Graph& g) {
    CliqueSet cs = enumerate_cliques(g);
    auto counts = cs.counts();
    int total = 0;
    std::vector<int> offset;
    for (long c : counts) {
        offset.push_back(total);
        total += static_cast<int>(c);
    }
    IntMatrix D(total, total);
    for (int k = 0; k + 1 <= cs.top_grade(); ++k) {
        IntMatrix dk = exterior_derivative_from(cs, k);
        for (int r = 0; r < dk.rows(); ++r)
            for (int c = 0; c < dk.cols(); ++c) {
                D.at(offset[k + 1] + r, offset[k] + c) = dk.at(r, c);
                D.at(offset[k] + c, offset[k + 1] + r) = dk.at(r, c);
            }
    }
    return D;
}

struct EulerPoincareReport {
    long long chi_combinatorial = 0;
    long long chi_cohomological = 0;
    bool equal = false;
    std::vector<long> clique_counts;
    std::vector<long> betti;
};

/// Both sides of the Euler-Poincare formula computed independently.
inline EulerPoincareReport euler_poincare_check(const Graph& g) {
    EulerPoincareReport r;
    r.chi_combinatorial = euler_characteristic(g);
    CohomologyProfile p = betti_numbers(g);
    r.chi_cohomological = p.chi_cohomological;
    r.clique_counts = p.clique_counts;
    r.betti = p.betti;
    r.equal = r.chi_combinatorial == r.chi_cohomological;
    return r;
}

} // namespace grafotop
