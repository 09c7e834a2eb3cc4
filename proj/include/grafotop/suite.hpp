#pragma once

#include <chrono>
#include <functional>

#include "grafotop/builtins.hpp"
#include "grafotop/examples.hpp"
#include "grafotop/fixedpoint.hpp"
#include "grafotop/random.hpp"

namespace grafotop {

struct SuiteRow {
    int theorem;
    std::string name;
    bool pass;
    std::string detail;
    double seconds;
};

namespace detail {

/// Builtin graphs small enough for exhaustive automorphism sweeps.
inline std::vector<std::pair<std::string, Graph>> small_corpus() {
    std::vector<std::pair<std::string, Graph>> out;
    for (const char* n : {"octahedron", "cube", "petersen", "utility", "prism",
                          "bull", "house", "kite", "gem", "gate", "fly", "fork",
                          "cricket", "dart", "lollipop", "hole", "dihedral",
                          "icosahedron"})
        out.push_back({n, builtin(n)});
    out.push_back({"cycle 4", builtin("cycle", {4})});
    out.push_back({"cycle 6", builtin("cycle", {6})});
    out.push_back({"wheel 5", builtin("wheel", {5})});
    out.push_back({"wheel 6", builtin("wheel", {6})});
    out.push_back({"complete 5", builtin("complete", {5})});
    out.push_back({"star 5", builtin("star", {5})});
    out.push_back({"dumbbell 3 4 3", builtin("dumbbell", {3, 4, 3})});
    return out;
}

/// The full builtin corpus, including the big snub solids.
inline std::vector<std::pair<std::string, Graph>> full_corpus() {
    auto out = small_corpus();
    out.push_back({"hexregion", builtin("hexregion")});
    out.push_back({"snubcube", builtin("snubcube")});
    out.push_back({"snuboctahedron", builtin("snuboctahedron")});
    out.push_back({"necklace10", builtin("necklace10")});
    out.push_back({"necklace15", builtin("necklace15")});
    out.push_back({"sun 1 2 3 0", builtin("sun", {1, 2, 3, 0})});
    return out;
}

/// Validated homeomorphic witness pairs used by the invariance suites.
inline std::vector<std::pair<TopologicalGraph, TopologicalGraph>>
witness_pairs(long budget = -1) {
    std::vector<std::pair<TopologicalGraph, TopologicalGraph>> out;
    out.push_back({TopologicalGraph::make(examples::necklace10_basis(), "necklace10"),
                   TopologicalGraph::make(examples::necklace15_basis(), "necklace15")});
    Graph t1 = builtin("path", {5});
    Graph t2 = builtin("star", {4});
    out.push_back({TopologicalGraph::make(indiscrete_topology(t1), "tree path"),
                   TopologicalGraph::make(indiscrete_topology(t2), "tree star")});
    Graph sun6 = builtin("sun", {1, 1, 1, 1, 1, 1});
    out.push_back({TopologicalGraph::make(examples::sun_ray_basis(sun6, 6), "sun rays"),
                   TopologicalGraph::make(unit_ball_topology(builtin("cycle", {6})), "C6 balls")});
    out.push_back({TopologicalGraph::make(indiscrete_topology(builtin("wheel", {5})), "W5"),
                   TopologicalGraph::make(indiscrete_topology(builtin("wheel", {6})), "W6")});
    for (auto& [a, b] : out) {
        if (!a.valid() || !b.valid())
            throw internal_error("witness pair topology failed to validate");
    }
    return out;
}

template <typename F>
inline SuiteRow timed(int theorem, const std::string& name, F&& body) {
    auto start = std::chrono::steady_clock::now();
    SuiteRow row{theorem, name, true, "", 0.0};
    try {
        std::string detail = body();
        row.detail = detail;
    } catch (const std::exception& e) {
        row.pass = false;
        row.detail = e.what();
    }
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return row;
}

inline void require(bool cond, const std::string& msg) {
    if (!cond)
        throw internal_error(msg);
}

} // namespace detail

/// Executable checks for the eight headline statements, keyed by number.
/// Each check throws on failure, so a false row carries its reason.
inline std::vector<SuiteRow> run_theorem_suite(const std::vector<int>& theorems,
                                               unsigned long seed = 7,
                                               int random_graphs = 50) {
    using namespace detail;
    std::vector<SuiteRow> rows;
    auto want = [&](int t) {
        return theorems.empty() ||
               std::find(theorems.begin(), theorems.end(), t) != theorems.end();
    };
    if (want(1))
        rows.push_back(timed(1, "every graph carries the star topology", [&] {
            int count = 0;
            for (auto& [name, g] : full_corpus()) {
                ValidationReport r = validate(star_topology(g));
                require(r.overall == Verdict::Yes, name + ": star topology not valid");
                require(is_isomorphic(r.nerve.nerve, g).has_value(),
                        name + ": star nerve not isomorphic to host");
                ++count;
            }
            std::mt19937_64 rng(seed);
            for (int i = 0; i < random_graphs; ++i) {
                Graph g = random_graph(4 + static_cast<int>(rng() % 6),
                                       30 + static_cast<int>(rng() % 41), rng);
                ValidationReport r = validate(star_topology(g));
                require(r.overall == Verdict::Yes, "random graph: star topology not valid");
                require(is_isomorphic(r.nerve.nerve, g).has_value(),
                        "random graph: star nerve not isomorphic");
                ++count;
            }
            return std::to_string(count) + " graphs";
        }));
    if (want(2) || want(3) || want(4) || want(5)) {
        auto pairs = witness_pairs();
        if (want(2))
            rows.push_back(timed(2, "homeomorphisms preserve the dimension spectrum", [&] {
                for (auto& [a, b] : pairs) {
                    auto m = check_homeomorphic(a, b);
                    require(m.has_value(), "witness pair not homeomorphic");
                    std::multiset<Rational> sa(a.nerve().weights.begin(), a.nerve().weights.end());
                    std::multiset<Rational> sb(b.nerve().weights.begin(), b.nerve().weights.end());
                    require(sa == sb, "spectra differ");
                }
                return std::to_string(pairs.size()) + " homeomorphic pairs";
            }));
        if (want(3))
            rows.push_back(timed(3, "homeomorphic graphs are homotopic", [&] {
                for (auto& [a, b] : pairs) {
                    require(check_homeomorphic(a, b).has_value(), "pair not homeomorphic");
                    TriState h = homotopy_equivalent(a.graph, b.graph);
                    require(h.verdict != Verdict::No, "homotopy equivalence refuted");
                }
                return std::to_string(pairs.size()) + " pairs";
            }));
        if (want(4))
            rows.push_back(timed(4, "homeomorphic graphs have the same cohomology", [&] {
                for (auto& [a, b] : pairs)
                    require(betti_numbers(a.graph).betti == betti_numbers(b.graph).betti,
                            "Betti vectors differ");
                return std::to_string(pairs.size()) + " pairs";
            }));
        if (want(5))
            rows.push_back(timed(5, "homeomorphic graphs have the same chi", [&] {
                for (auto& [a, b] : pairs)
                    require(euler_characteristic(a.graph) == euler_characteristic(b.graph),
                            "chi differs");
                return std::to_string(pairs.size()) + " pairs";
            }));
    }
    if (want(6))
        rows.push_back(timed(6, "connected equals path connected", [&] {
            std::mt19937_64 rng(seed + 1);
            int count = 0;
            for (int i = 0; i < random_graphs * 2; ++i) {
                Graph g = random_graph(2 + static_cast<int>(rng() % 8),
                                       static_cast<int>(rng() % 80), rng);
                if (g.order() == 0)
                    continue;
                SubBasis st = star_topology(g);
                require(is_connected_topological(st) == is_path_connected(g),
                        "connectedness predicates disagree");
                ++count;
            }
            return std::to_string(count) + " random star topologies";
        }));
    if (want(7))
        rows.push_back(timed(7, "1-homeomorphic triangle-free graphs are homeomorphic", [&] {
            int count = 0;
            // tree pairs via subdivision, indiscrete witnesses
            Graph t = builtin("star", {3});
            Graph ts = subdivide_edge(t, {0, 1});
            require(is_one_homeomorphic(t, ts).yes(), "subdivided tree not 1-homeomorphic");
            require(check_homeomorphic(TopologicalGraph::make(indiscrete_topology(t)),
                                       TopologicalGraph::make(indiscrete_topology(ts)))
                        .has_value(),
                    "subdivided trees not homeomorphic");
            ++count;
            // sun graphs: ray subdivision, ray-pair bases
            Graph s1 = builtin("sun", {1, 1, 1, 1});
            Graph s2 = builtin("sun", {2, 1, 1, 1});
            require(is_one_homeomorphic(s1, s2).yes(), "sun pair not 1-homeomorphic");
            auto a = TopologicalGraph::make(examples::sun_ray_basis(s1, 4));
            auto b = TopologicalGraph::make(examples::sun_ray_basis(s2, 4));
            require(a.valid() && b.valid(), "sun ray bases invalid");
            require(check_homeomorphic(a, b).has_value(), "sun pair not homeomorphic");
            ++count;
            return std::to_string(count) + " triangle-free pairs";
        }));
    if (want(8))
        rows.push_back(timed(8, "nonzero Lefschetz number forces an invariant set", [&] {
            int autos = 0, nonzero = 0;
            for (auto& [name, g] : small_corpus()) {
                for (auto& [tname, sb] :
                     {std::pair<std::string, SubBasis>{"star", star_topology(g)},
                      std::pair<std::string, SubBasis>{"ball", unit_ball_topology(g)}}) {
                    TopologicalGraph t = TopologicalGraph::make(sb, tname);
                    if (!t.valid())
                        continue;
                    for (const auto& a : nerve_automorphisms(t.nerve())) {
                        LefschetzReport rep = lefschetz_number(t.nerve().nerve, a);
                        ++autos;
                        bool identity = true;
                        for (auto& [k, v] : a)
                            if (k != v)
                                identity = false;
                        if (identity)
                            require(rep.lefschetz == euler_characteristic(t.nerve().nerve),
                                    name + ": identity Lefschetz != chi");
                        auto inv = fixed_invariant_set(t, a);
                        if (rep.lefschetz != 0) {
                            ++nonzero;
                            require(inv.has_value(), name + ": no invariant set");
                            for (size_t i = 0; i < inv->nerve_simplex.size(); ++i)
                                for (size_t j = i + 1; j < inv->nerve_simplex.size(); ++j)
                                    require(!vs_intersect(inv->elements[i].vertices,
                                                          inv->elements[j].vertices)
                                                 .empty(),
                                            "invariant family not mutually intersecting");
                        }
                    }
                }
            }
            return std::to_string(autos) + " automorphisms, " +
                   std::to_string(nonzero) + " with L != 0";
        }));
    return rows;
}

} // namespace grafotop
