#include "seifnet/network.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include <json.hpp>

namespace seifnet {

std::optional<std::size_t> NetworkGraph::find(const std::string& knot, Int slope) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].knot == knot && vertices[i].slope == slope) return i;
    return std::nullopt;
}

bool NetworkGraph::contains(const SurgeryVertex& v) const {
    if (!v.slope.is_integer()) return false;
    return find(v.knot.to_string(), v.slope.num()).has_value();
}

namespace {

struct LineState {
    std::size_t sf; // index into the registered seiferter list
    Int ambient;    // slope of the torus vertex the line starts at
    Int t;          // accumulated twists along the line
    friend bool operator<(const LineState& a, const LineState& b) {
        if (a.sf != b.sf) return a.sf < b.sf;
        if (a.ambient != b.ambient) return a.ambient < b.ambient;
        return a.t < b.t;
    }
};

struct BuildVertex {
    std::string key;  // canonical label "knot(slope)"
    std::string knot;
    Int slope = 0;
    Int dist = 0;
    std::optional<OrbifoldTriple> orbifold;
    SfsClass cls;
    bool is_trefoil_vertex = false;
    bool identity_known = true;
    std::set<std::string> words;
    std::set<LineState> lines;
};

std::string annular_metadata_entry(PairFamily f, Int m) { return family_name(f, m); }

} // namespace

NetworkGraph build(const std::vector<SurgeryVertex>& seeds,
                   const std::vector<SeiferterDesc>& seiferters, Int radius) {
    if (radius < Int(1)) throw std::invalid_argument("build: radius must be >= 1");

    std::vector<BuildVertex> verts;
    std::map<std::string, std::size_t> index_of;
    std::set<std::tuple<std::string, std::string, std::string>> edge_keys; // +1-oriented
    std::vector<bool> seiferter_used(seiferters.size(), false);
    std::vector<std::string> warnings;

    auto fresh_lines = [&](const SurgeryVertex& v) {
        std::set<LineState> lines;
        for (std::size_t i = 0; i < seiferters.size(); ++i)
            if (seiferters[i].valid_at(v)) lines.insert(LineState{i, v.slope.num(), 0});
        return lines;
    };

    // Creates or merges. Twist words are attached separately, one per
    // discovered edge, so merged vertices keep every arrival's provenance.
    auto ensure_vertex = [&](const SurgeryVertex& v, std::optional<OrbifoldTriple> triple,
                             bool identity_known, Int dist) -> std::size_t {
        std::string key = v.knot.to_string() + "(" + v.slope.to_string() + ")";
        auto it = index_of.find(key);
        if (it != index_of.end()) {
            BuildVertex& b = verts[it->second];
            if (dist < b.dist) b.dist = dist; // seeds are processed first
            if (!b.orbifold && triple) {
                b.orbifold = triple;
                b.cls = classify_triple(*triple);
            }
            return it->second;
        }
        BuildVertex b;
        b.key = key;
        b.knot = v.knot.to_string();
        b.slope = v.slope.num();
        b.dist = dist;
        b.orbifold = triple;
        if (triple) b.cls = classify_triple(*triple);
        const TorusKnot* tk = v.knot.as_torus();
        b.is_trefoil_vertex = tk && *tk == trefoil();
        b.identity_known = identity_known;
        b.lines = fresh_lines(v);
        verts.push_back(std::move(b));
        index_of[key] = verts.size() - 1;
        return verts.size() - 1;
    };

    // Vertex of a seiferter line after t twists from its ambient slope.
    auto line_vertex = [&](const SeiferterDesc& s, Int ambient, Int t) {
        SurgeryVertex raw{KnotDesc::twisted(KnotDesc(s.knot), s.name, t),
                          Fraction(ambient + t * s.lk_with_knot * s.lk_with_knot)};
        bool identity = t == Int(0);
        if (std::optional<NamedKnot> name = resolve_name(raw)) {
            raw.knot = KnotDesc(*name);
            identity = true;
        }
        std::optional<OrbifoldTriple> triple;
        if (t == Int(0))
            triple = moser_classify(s.knot, Fraction(ambient)).triple;
        else
            triple = triple_after_twist(s, ambient, t);
        return std::make_pair(raw, std::make_pair(triple, identity));
    };

    // Seeds.
    std::deque<std::size_t> queue;
    for (const SurgeryVertex& seed : seeds) {
        if (!seed.slope.is_integer()) {
            warnings.push_back("seed " + seed.to_string() + " skipped: slope is not integral");
            continue;
        }
        std::optional<OrbifoldTriple> triple;
        if (const TorusKnot* tk = seed.knot.as_torus())
            triple = moser_classify(*tk, seed.slope).triple;
        std::size_t id = ensure_vertex(seed, triple, true, 0);
        verts[id].words.insert(seed.to_string());
        queue.push_back(id);
    }

    std::set<std::pair<std::size_t, LineState>> expanded;
    while (!queue.empty()) {
        std::size_t u = queue.front();
        queue.pop_front();
        if (verts[u].dist >= radius) continue;
        // copy: expansion may grow verts and merge lines
        std::set<LineState> lines = verts[u].lines;
        for (const LineState& line : lines) {
            if (expanded.count({u, line})) continue;
            expanded.insert({u, line});
            const SeiferterDesc& s = seiferters[line.sf];
            seiferter_used[line.sf] = true;
            for (int delta : {+1, -1}) {
                std::string word = *verts[u].words.begin() + " >" + s.name +
                                   (delta > 0 ? "+1" : "-1");
                std::size_t child;
                if (s.preserves_knot) {
                    // meridian step: same knot, slope shifts by lk^2
                    Int slope2 = verts[u].slope + Int(delta) * s.lk_with_knot * s.lk_with_knot;
                    SurgeryVertex v{KnotDesc(s.knot), Fraction(slope2)};
                    child = ensure_vertex(v, moser_classify(s.knot, Fraction(slope2)).triple,
                                          true, verts[u].dist + Int(1));
                } else {
                    Int t2 = line.t + Int(delta);
                    auto [v, info] = line_vertex(s, line.ambient, t2);
                    child = ensure_vertex(v, info.first, info.second, verts[u].dist + Int(1));
                    verts[child].lines.insert(LineState{line.sf, line.ambient, t2});
                }
                std::size_t from = delta > 0 ? u : child;
                std::size_t to = delta > 0 ? child : u;
                if (edge_keys.insert({verts[from].key, verts[to].key, s.name}).second)
                    verts[child].words.insert(word);
                if (verts[child].dist < radius) queue.push_back(child);
            }
        }
    }

    for (std::size_t i = 0; i < seiferters.size(); ++i)
        if (!seiferter_used[i])
            warnings.push_back("seiferter " + seiferters[i].name +
                               " was never valid at a reached vertex");

    // Canonical order and final assembly.
    std::vector<std::size_t> order(verts.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (verts[a].knot != verts[b].knot) return verts[a].knot < verts[b].knot;
        return verts[a].slope < verts[b].slope;
    });
    std::map<std::string, std::size_t> final_index;
    NetworkGraph g;
    g.warnings = std::move(warnings);
    std::sort(g.warnings.begin(), g.warnings.end());
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        const BuildVertex& b = verts[order[rank]];
        final_index[b.key] = rank;
        NetworkVertex v;
        v.knot = b.knot;
        v.slope = b.slope;
        v.orbifold = b.orbifold;
        v.cls = b.cls;
        v.provenance.assign(b.words.begin(), b.words.end());
        if (b.is_trefoil_vertex)
            for (PairFamily f : all_pair_families)
                if (family_defined_at(f, b.slope))
                    v.annular_pairs.push_back(annular_metadata_entry(f, b.slope));
        v.frontier = b.dist == radius;
        v.identity_known = b.identity_known;
        g.vertices.push_back(std::move(v));
    }
    for (const auto& [from_key, to_key, name] : edge_keys)
        g.edges.push_back(NetworkEdge{final_index.at(from_key), final_index.at(to_key), name, +1});
    std::sort(g.edges.begin(), g.edges.end(), [](const NetworkEdge& a, const NetworkEdge& b) {
        return std::tie(a.from, a.to, a.seiferter) < std::tie(b.from, b.to, b.seiferter);
    });
    return g;
}

NetworkGraph preset_trefoil_neighborhood(Int radius) {
    SurgeryVertex a{KnotDesc(trefoil()), Fraction(-1)};
    SurgeryVertex b{KnotDesc(trefoil()), Fraction(-6)};
    return build({a, b},
                 {basic_seiferter_data(trefoil(), BasicSeiferterKind::CMu), cm_family(-1),
                  cm_family(-6), seiferter_c()},
                 radius);
}

NetworkGraph preset_cm_lines(Int m, Int radius) {
    SurgeryVertex seed{KnotDesc(trefoil()), Fraction(m)};
    return build({seed},
                 {basic_seiferter_data(trefoil(), BasicSeiferterKind::CMu), cm_family(m),
                  cm_family(m + Int(1)), cm_family(m + Int(2))},
                 radius);
}

std::string export_dot(const NetworkGraph& g) {
    std::string out = "digraph network {\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        const NetworkVertex& v = g.vertices[i];
        out += "  v" + std::to_string(i) + " [label=\"" + v.label() + "\"";
        if (v.frontier) out += " style=dashed";
        out += "];\n";
    }
    for (const NetworkEdge& e : g.edges)
        out += "  v" + std::to_string(e.from) + " -> v" + std::to_string(e.to) + " [label=\"" +
               e.seiferter + ",+1\"];\n";
    out += "}\n";
    return out;
}

std::string export_json(const NetworkGraph& g) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (const NetworkVertex& v : g.vertices) {
        nlohmann::json jv;
        jv["knot"] = v.knot;
        jv["slope"] = v.slope.value();
        jv["class"] = v.cls.tag();
        if (v.orbifold) {
            nlohmann::json arr = nlohmann::json::array();
            for (Int i : v.orbifold->indices()) arr.push_back(i.value());
            jv["orbifold"] = arr;
        }
        jv["provenance"] = v.provenance;
        jv["annular_pairs"] = v.annular_pairs;
        jv["frontier"] = v.frontier;
        jv["identity_known"] = v.identity_known;
        j["vertices"].push_back(jv);
    }
    j["edges"] = nlohmann::json::array();
    for (const NetworkEdge& e : g.edges) {
        nlohmann::json je;
        je["from"] = e.from;
        je["to"] = e.to;
        je["seiferter"] = e.seiferter;
        je["sign"] = e.sign;
        j["edges"].push_back(je);
    }
    j["warnings"] = g.warnings;
    return j.dump(2) + "\n";
}

NetworkGraph load_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    NetworkGraph g;
    for (const nlohmann::json& jv : j.at("vertices")) {
        NetworkVertex v;
        v.knot = jv.at("knot").get<std::string>();
        v.slope = Int(jv.at("slope").get<long long>());
        if (jv.contains("orbifold")) {
            std::vector<Int> idx;
            for (const nlohmann::json& x : jv.at("orbifold")) idx.push_back(Int(x.get<long long>()));
            v.orbifold = OrbifoldTriple(std::move(idx));
            v.cls = classify_triple(*v.orbifold);
        }
        if (jv.contains("provenance"))
            v.provenance = jv.at("provenance").get<std::vector<std::string>>();
        if (jv.contains("annular_pairs"))
            v.annular_pairs = jv.at("annular_pairs").get<std::vector<std::string>>();
        v.frontier = jv.value("frontier", false);
        v.identity_known = jv.value("identity_known", true);
        if (jv.at("class").get<std::string>() != v.cls.tag())
            throw std::invalid_argument("load_json: class tag does not match orbifold data");
        g.vertices.push_back(std::move(v));
    }
    for (const nlohmann::json& je : j.at("edges")) {
        NetworkEdge e;
        e.from = je.at("from").get<std::size_t>();
        e.to = je.at("to").get<std::size_t>();
        e.seiferter = je.at("seiferter").get<std::string>();
        e.sign = je.at("sign").get<int>();
        if (e.from >= g.vertices.size() || e.to >= g.vertices.size())
            throw std::invalid_argument("load_json: edge endpoint out of range");
        g.edges.push_back(std::move(e));
    }
    if (j.contains("warnings")) g.warnings = j.at("warnings").get<std::vector<std::string>>();
    return g;
}

} // namespace seifnet
