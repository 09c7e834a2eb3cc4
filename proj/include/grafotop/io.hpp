#pragma once

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "grafotop/topology.hpp"

namespace grafotop {

using json = nlohmann::json;

// ---- graph ----------------------------------------------------------------

inline json graph_to_json(const Graph& g) {
    json j;
    j["vertices"] = g.vertices();
    json edges = json::array();
    for (auto [a, b] : g.edges())
        edges.push_back(json::array({a, b}));
    j["edges"] = edges;
    return j;
}

inline Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw input_error("graph JSON needs 'vertices' and 'edges'");
    VertexSet vs;
    std::set<int> seen;
    for (const auto& v : j.at("vertices")) {
        int x = v.get<int>();
        if (!seen.insert(x).second)
            throw input_error("duplicate vertex label " + std::to_string(x));
        vs.push_back(x);
    }
    std::vector<Edge> es;
    std::set<Edge> eseen;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw input_error("edge must be a pair");
        Edge ed = make_edge(e[0].get<int>(), e[1].get<int>());
        if (!eseen.insert(ed).second)
            throw input_error("duplicate edge");
        es.push_back(ed);
    }
    return Graph(vs, es);
}

/// Undirected DOT subset: `graph name { a -- b; c; }`, no attributes.
/// Vertex names must be integers. Multi-edges and loops are rejected.
inline Graph graph_from_dot(const std::string& text) {
    auto open = text.find('{');
    auto close = text.rfind('}');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw input_error("DOT input needs a { ... } block");
    std::string body = text.substr(open + 1, close - open - 1);
    std::set<int> vs;
    std::set<Edge> es;
    std::string stmt;
    std::stringstream ss(body);
    auto parse_int = [](const std::string& tok) {
        try {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size())
                throw std::invalid_argument("");
            return v;
        } catch (...) {
            throw input_error("DOT vertex names must be integers, got '" + tok + "'");
        }
    };
    while (std::getline(ss, stmt, ';')) {
        std::string s;
        for (char c : stmt)
            if (!std::isspace(static_cast<unsigned char>(c)))
                s += c;
        if (s.empty())
            continue;
        auto dash = s.find("--");
        if (dash == std::string::npos) {
            vs.insert(parse_int(s));
            continue;
        }
        int a = parse_int(s.substr(0, dash));
        int b = parse_int(s.substr(dash + 2));
        if (a == b)
            throw input_error("loops are not allowed");
        Edge e = make_edge(a, b);
        if (!es.insert(e).second)
            throw input_error("multi-edges are not allowed");
        vs.insert(a);
        vs.insert(b);
    }
    return Graph(VertexSet(vs.begin(), vs.end()),
                 std::vector<Edge>(es.begin(), es.end()));
}

inline Graph load_graph(const std::string& path, const std::string& format = "") {
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string fmt = format;
    if (fmt.empty())
        fmt = path.size() > 4 && path.substr(path.size() - 4) == ".dot" ? "dot" : "json";
    if (fmt == "dot")
        return graph_from_dot(buf.str());
    if (fmt == "json") {
        json j = json::parse(buf.str(), nullptr, true);
        return graph_from_json(j);
    }
    throw input_error("unknown format '" + fmt + "'");
}

// ---- sub-basis ------------------------------------------------------------

inline json subbasis_to_json(const SubBasis& b) {
    json j;
    j["graph"] = graph_to_json(b.host);
    json els = json::array();
    for (const auto& e : b.elements) {
        json je;
        je["vertices"] = e.vertices;
        if (e.mode == SubBasisElement::Star)
            je["mode"] = json{{"star", e.star_center}};
        else
            je["mode"] = "induced";
        els.push_back(je);
    }
    j["elements"] = els;
    return j;
}

inline SubBasis subbasis_from_json(const json& j) {
    if (!j.contains("graph") || !j.contains("elements"))
        throw input_error("sub-basis JSON needs 'graph' and 'elements'");
    Graph host = graph_from_json(j.at("graph"));
    std::vector<SubBasisElement> els;
    for (const auto& je : j.at("elements")) {
        VertexSet vs;
        for (const auto& v : je.at("vertices"))
            vs.push_back(v.get<int>());
        SubBasisElement e = SubBasisElement::induced(vs);
        if (je.contains("mode") && je.at("mode").is_object()) {
            e.mode = SubBasisElement::Star;
            e.star_center = je.at("mode").at("star").get<int>();
            if (!vs_contains(e.vertices, e.star_center))
                throw input_error("star element must contain its center");
        }
        els.push_back(e);
    }
    return SubBasis(host, els);
}

inline SubBasis load_subbasis(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open " + path);
    json j = json::parse(in, nullptr, true);
    return subbasis_from_json(j);
}

// ---- reports --------------------------------------------------------------

inline json tristate_to_json(const TriState& t) {
    json j;
    j["verdict"] = to_string(t.verdict);
    j["reason"] = t.reason;
    if (!t.trace.empty()) {
        json moves = json::array();
        for (const auto& m : t.trace) {
            if (m.kind == Move::Reduce)
                moves.push_back(json{{"reduce", m.vertex}});
            else
                moves.push_back(json{{"extend", json{{"base", m.base},
                                                     {"vertex", m.vertex}}}});
        }
        j["trace"] = moves;
    }
    return j;
}

inline json nerve_to_json(const WeightedNerve& n) {
    json j;
    j["graph"] = graph_to_json(n.nerve);
    json w = json::array();
    for (const auto& r : n.weights)
        w.push_back(to_fraction_string(r));
    j["weights"] = w;
    return j;
}

inline json validation_to_json(const ValidationReport& r) {
    json j;
    j["overall"] = to_string(r.overall);
    json els = json::array();
    for (const auto& t : r.contractible_elements)
        els.push_back(tristate_to_json(t));
    j["contractible_elements"] = els;
    json pairs = json::array();
    for (const auto& p : r.dimension_pairs) {
        json jp;
        jp["i"] = p.i;
        jp["j"] = p.j;
        jp["dim_i"] = to_fraction_string(p.dim_i);
        jp["dim_j"] = to_fraction_string(p.dim_j);
        jp["dim_intersection"] = to_fraction_string(p.dim_intersection);
        jp["linked"] = p.linked;
        if (p.linked)
            jp["intersection_contractible"] = tristate_to_json(p.intersection_contractible);
        pairs.push_back(jp);
    }
    j["dimension_pairs"] = pairs;
    json miss = json::array();
    for (auto [a, b] : r.missing_edges)
        miss.push_back(json::array({a, b}));
    j["missing_edges"] = miss;
    j["nerve_homotopic"] = tristate_to_json(r.nerve_homotopic);
    j["nerve"] = nerve_to_json(r.nerve);
    return j;
}

inline json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c)
            row.push_back(m.at(r, c).str());
        rows.push_back(row);
    }
    return rows;
}

} // namespace grafotop
