#include "gbslide/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace gbslide {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    check_input(in.good(), "cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InputError("invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

json to_json(const NumberedGraph& g) {
    json vertices = json::array();
    for (int v = 0; v < g.vertex_count(); ++v)
        vertices.push_back({{"id", g.graph().vertex_name(v)}, {"d", g.vertex_label(v)}});
    json edges = json::array();
    for (int p = 0; p < g.pair_count(); ++p)
        edges.push_back({{"id", g.graph().pair_name(p)},
                         {"ends", {g.graph().vertex_name(g.graph().from(p)),
                                   g.graph().vertex_name(g.graph().to(p))}},
                         {"d", g.edge_label(p)}});
    return json{{"vertices", vertices}, {"edges", edges}};
}

NumberedGraph numbered_graph_from_json(const json& j) {
    check_input(j.is_object() && j.contains("vertices") && j.contains("edges"),
                "graph JSON must have 'vertices' and 'edges'");
    std::vector<std::pair<std::string, long long>> vertices;
    for (const json& v : j.at("vertices"))
        vertices.emplace_back(v.at("id").get<std::string>(), v.value("d", 1LL));
    std::vector<std::tuple<std::string, std::string, std::string, long long>> edges;
    for (const json& e : j.at("edges")) {
        const json& ends = e.at("ends");
        check_input(ends.is_array() && ends.size() == 2, "edge 'ends' must list two vertices");
        edges.emplace_back(e.at("id").get<std::string>(), ends[0].get<std::string>(),
                           ends[1].get<std::string>(), e.value("d", 1LL));
    }
    return make_numbered_graph(std::move(vertices), std::move(edges));
}

json to_json(const GraphAutomorphism& f) {
    const SerreGraph& g = f.base();
    json vertices = json::array();
    for (int v = 0; v < g.vertex_count(); ++v) vertices.push_back({{"id", g.vertex_name(v)}});
    json edges = json::array();
    for (int p = 0; p < g.pair_count(); ++p)
        edges.push_back({{"id", g.pair_name(p)},
                         {"ends", {g.vertex_name(g.from(p)), g.vertex_name(g.to(p))}}});
    json vmap = json::object();
    for (int v = 0; v < g.vertex_count(); ++v)
        vmap[g.vertex_name(v)] = g.vertex_name(f.map_vertex(v));
    json emap = json::object();
    for (int p = 0; p < g.pair_count(); ++p) {
        Dart img = f.pair_map()[p];
        emap[g.pair_name(p)] = {{"image", g.pair_name(img.pair)}, {"reversed", img.rev}};
    }
    return json{{"vertices", vertices}, {"edges", edges}, {"vertex_map", vmap},
                {"edge_map", emap}};
}

GraphAutomorphism automorphism_from_json(const json& j) {
    check_input(j.is_object() && j.contains("vertices") && j.contains("edges") &&
                    j.contains("vertex_map") && j.contains("edge_map"),
                "automorphism JSON must have vertices, edges, vertex_map, edge_map");
    std::vector<std::pair<std::string, long long>> vrows;
    for (const json& v : j.at("vertices"))
        vrows.emplace_back(v.at("id").get<std::string>(), v.value("d", 1LL));
    std::sort(vrows.begin(), vrows.end());
    std::vector<std::tuple<std::string, std::string, std::string>> erows;
    for (const json& e : j.at("edges")) {
        const json& ends = e.at("ends");
        erows.emplace_back(e.at("id").get<std::string>(), ends[0].get<std::string>(),
                           ends[1].get<std::string>());
    }
    std::sort(erows.begin(), erows.end());

    SerreGraph g;
    for (auto& [name, d] : vrows) {
        (void)d;
        g.add_vertex(name);
    }
    for (auto& [name, a, b] : erows) {
        int va = g.find_vertex(a), vb = g.find_vertex(b);
        check_input(va >= 0 && vb >= 0, "edge '" + name + "' references a missing vertex");
        g.add_edge(name, va, vb);
    }

    std::vector<int> vmap(g.vertex_count(), -1);
    for (auto& [key, val] : j.at("vertex_map").items()) {
        int v = g.find_vertex(key);
        int w = g.find_vertex(val.get<std::string>());
        check_input(v >= 0 && w >= 0, "vertex_map mentions unknown vertex '" + key + "'");
        vmap[v] = w;
    }
    std::vector<Dart> pmap(g.pair_count(), Dart{-1, false});
    for (auto& [key, val] : j.at("edge_map").items()) {
        int p = g.find_pair(key);
        check_input(p >= 0, "edge_map mentions unknown edge '" + key + "'");
        int q = g.find_pair(val.at("image").get<std::string>());
        check_input(q >= 0, "edge_map image unknown for edge '" + key + "'");
        pmap[p] = Dart{q, val.value("reversed", false)};
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        check_input(vmap[v] >= 0, "vertex_map is missing vertex '" + g.vertex_name(v) + "'");
    for (int p = 0; p < g.pair_count(); ++p)
        check_input(pmap[p].pair >= 0, "edge_map is missing edge '" + g.pair_name(p) + "'");
    return GraphAutomorphism(std::move(g), std::move(vmap), std::move(pmap));
}

json to_json(const TaggedPoset& p) {
    auto covers = p.covers();
    json elements = json::array();
    for (int i = 0; i < p.size(); ++i) {
        const PosetElement& el = p.elements[i];
        json cov = json::array();
        for (auto [lo, hi] : covers)
            if (lo == i) cov.push_back(p.elements[hi].id());
        elements.push_back({{"id", el.id()},
                            {"level", el.level},
                            {"tag", el.tag},
                            {"vertices", el.component.vertices},
                            {"edges", el.component.pairs},
                            {"covers", cov}});
    }
    return json{{"elements", elements}};
}

TaggedPoset poset_from_json(const json& j) {
    check_input(j.contains("elements"), "poset JSON must have 'elements'");
    TaggedPoset p;
    std::map<std::string, int> by_id;
    for (const json& e : j.at("elements")) {
        PosetElement el;
        el.level = e.at("level").get<long long>();
        el.tag = e.at("tag").get<int>();
        el.component.vertices = e.value("vertices", std::vector<int>{});
        el.component.pairs = e.value("edges", std::vector<int>{});
        el.index_in_level = 1;
        // Recover the per-level index from the id when present.
        std::string id = e.value("id", std::string());
        auto dot = id.find('.');
        if (dot != std::string::npos)
            el.index_in_level = std::stoi(id.substr(dot + 1));
        check_input(by_id.emplace(el.id(), p.size()).second,
                    "poset JSON has duplicate element id '" + el.id() + "'");
        p.elements.push_back(std::move(el));
    }
    // The order is the reflexive-transitive closure of the covers.
    const int n = p.size();
    p.leq.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) p.leq[i][i] = true;
    int idx = 0;
    for (const json& e : j.at("elements")) {
        for (const json& cov : e.value("covers", json::array())) {
            auto it = by_id.find(cov.get<std::string>());
            check_input(it != by_id.end(),
                        "poset JSON cover references unknown element '" +
                            cov.get<std::string>() + "'");
            p.leq[idx][it->second] = true;
        }
        ++idx;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (p.leq[i][k])
                for (int m = 0; m < n; ++m)
                    if (p.leq[k][m]) p.leq[i][m] = true;
    return p;
}

json to_json(const SlideSequence& s) {
    auto collapse_rows = [](const std::vector<CollapseStep>& steps) {
        json rows = json::array();
        for (const CollapseStep& c : steps)
            rows.push_back({{"edge", c.edge}, {"removed", c.removed_vertex},
                            {"kept", c.kept_vertex}});
        return rows;
    };
    // Moves address pairs of the reduced source by name; pair ids survive
    // collapses and slides.
    NumberedGraph reduced = s.source;
    for (const CollapseStep& c : s.source_collapses) reduced = apply_collapse(reduced, c);
    json moves = json::array();
    for (const SlideMove& m : s.moves)
        moves.push_back({{"edge", reduced.graph().pair_name(m.moved.pair)},
                         {"edge_reversed", m.moved.rev},
                         {"along", reduced.graph().pair_name(m.along.pair)},
                         {"along_reversed", m.along.rev}});
    json vbij = json::object();
    NumberedGraph rtarget = s.target;
    for (const CollapseStep& c : s.target_collapses) rtarget = apply_collapse(rtarget, c);
    for (int v = 0; v < reduced.vertex_count(); ++v)
        vbij[reduced.graph().vertex_name(v)] =
            rtarget.graph().vertex_name(s.vertex_bijection[v]);
    json ebij = json::object();
    for (int p = 0; p < reduced.pair_count(); ++p) {
        if (p >= static_cast<int>(s.edge_bijection.size()) || s.edge_bijection[p].pair < 0)
            continue;
        ebij[reduced.graph().pair_name(p)] = {
            {"image", rtarget.graph().pair_name(s.edge_bijection[p].pair)},
            {"reversed", s.edge_bijection[p].rev}};
    }
    json hashes = json::array();
    for (std::uint64_t h : s.state_hashes) {
        std::ostringstream os;
        os << std::hex << h;
        hashes.push_back(os.str());
    }
    return json{{"source", to_json(s.source)},
                {"target", to_json(s.target)},
                {"source_collapses", collapse_rows(s.source_collapses)},
                {"target_collapses", collapse_rows(s.target_collapses)},
                {"moves", moves},
                {"vertex_bijection", vbij},
                {"edge_bijection", ebij},
                {"state_hashes", hashes}};
}

SlideSequence sequence_from_json(const json& j) {
    SlideSequence s;
    s.source = numbered_graph_from_json(j.at("source"));
    s.target = numbered_graph_from_json(j.at("target"));
    auto read_collapses = [](const json& rows) {
        std::vector<CollapseStep> out;
        for (const json& r : rows)
            out.push_back(CollapseStep{r.at("edge").get<std::string>(),
                                       r.at("removed").get<std::string>(),
                                       r.at("kept").get<std::string>()});
        return out;
    };
    s.source_collapses = read_collapses(j.value("source_collapses", json::array()));
    s.target_collapses = read_collapses(j.value("target_collapses", json::array()));

    NumberedGraph reduced = s.source;
    for (const CollapseStep& c : s.source_collapses) reduced = apply_collapse(reduced, c);
    NumberedGraph rtarget = s.target;
    for (const CollapseStep& c : s.target_collapses) rtarget = apply_collapse(rtarget, c);

    for (const json& m : j.value("moves", json::array())) {
        int p = reduced.graph().find_pair(m.at("edge").get<std::string>());
        int q = reduced.graph().find_pair(m.at("along").get<std::string>());
        check_input(p >= 0 && q >= 0, "witness move references an unknown edge");
        s.moves.push_back(SlideMove{Dart{p, m.value("edge_reversed", false)},
                                    Dart{q, m.value("along_reversed", false)}});
    }
    for (const json& h : j.value("state_hashes", json::array()))
        s.state_hashes.push_back(std::stoull(h.get<std::string>(), nullptr, 16));

    s.vertex_bijection.assign(reduced.vertex_count(), -1);
    for (auto& [key, val] : j.at("vertex_bijection").items()) {
        int v = reduced.graph().find_vertex(key);
        int w = rtarget.graph().find_vertex(val.get<std::string>());
        check_input(v >= 0 && w >= 0, "witness bijection references an unknown vertex");
        s.vertex_bijection[v] = w;
    }
    for (int v : s.vertex_bijection)
        check_input(v >= 0, "witness bijection does not cover all vertices");
    s.edge_bijection.assign(reduced.pair_count(), Dart{-1, false});
    if (j.contains("edge_bijection")) {
        for (auto& [key, val] : j.at("edge_bijection").items()) {
            int p = reduced.graph().find_pair(key);
            int q = rtarget.graph().find_pair(val.at("image").get<std::string>());
            check_input(p >= 0 && q >= 0, "witness edge bijection references an unknown edge");
            s.edge_bijection[p] = Dart{q, val.value("reversed", false)};
        }
    }
    return s;
}

json to_json(const Presentation& p) {
    json gens = json::array();
    for (const std::string& g : p.generators) gens.push_back(g);
    json relators = json::array();
    for (const Word& w : p.relators) {
        json row = json::array();
        for (auto [g, e] : w.syllables) row.push_back({p.generators[g], e});
        relators.push_back(row);
    }
    return json{{"generators", gens}, {"relators", relators}};
}

Presentation presentation_from_json(const json& j) {
    Presentation p;
    check_input(j.contains("generators") && j.contains("relators"),
                "presentation JSON must have 'generators' and 'relators'");
    for (const json& g : j.at("generators")) p.generators.push_back(g.get<std::string>());
    for (size_t i = 0; i < p.generators.size(); ++i)
        for (size_t k = i + 1; k < p.generators.size(); ++k)
            check_input(p.generators[i] != p.generators[k],
                        "duplicate generator '" + p.generators[i] + "'");
    for (const json& row : j.at("relators")) {
        Word w;
        for (const json& syl : row) {
            check_input(syl.is_array() && syl.size() == 2,
                        "relator syllable must be [symbol, exponent]");
            int g = p.generator_index(syl[0].get<std::string>());
            check_input(g >= 0, "relator uses undeclared generator '" +
                                    syl[0].get<std::string>() + "'");
            w.syllables.emplace_back(g, syl[1].get<int>());
        }
        p.relators.push_back(free_reduce(w));
    }
    return p;
}

std::string poset_text(const TaggedPoset& p) {
    auto covers = p.covers();
    std::ostringstream os;
    for (int i = 0; i < p.size(); ++i) {
        const PosetElement& el = p.elements[i];
        os << el.id() << "  level=" << el.level << "  tag=" << el.tag << "  covers=[";
        bool first = true;
        for (auto [lo, hi] : covers)
            if (lo == i) {
                if (!first) os << ",";
                os << p.elements[hi].id();
                first = false;
            }
        os << "]\n";
    }
    return os.str();
}

std::string graph_dot(const NumberedGraph& g) {
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        os << "  \"" << g.graph().vertex_name(v) << "\" [label=\""
           << g.graph().vertex_name(v) << ":" << g.vertex_label(v) << "\"];\n";
    for (int p = 0; p < g.pair_count(); ++p)
        os << "  \"" << g.graph().vertex_name(g.graph().from(p)) << "\" -- \""
           << g.graph().vertex_name(g.graph().to(p)) << "\" [label=\""
           << g.graph().pair_name(p) << ":" << g.edge_label(p) << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string poset_dot(const TaggedPoset& p) {
    std::ostringstream os;
    os << "digraph P {\n  rankdir=BT;\n";
    for (int i = 0; i < p.size(); ++i)
        os << "  \"" << p.elements[i].id() << "\" [label=\"" << p.elements[i].id()
           << " tag " << p.elements[i].tag << "\"];\n";
    for (auto [lo, hi] : p.covers())
        os << "  \"" << p.elements[lo].id() << "\" -> \"" << p.elements[hi].id() << "\";\n";
    os << "}\n";
    return os.str();
}

} // namespace gbslide
