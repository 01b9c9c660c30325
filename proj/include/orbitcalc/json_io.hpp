#pragma once

// JSON (de)serialization for the toolkit's value types. Loaders report
// problems as SchemaError with a JSON-pointer location ("/junctions/0/kind")
// and never let malformed documents reach the combinatorial layers unchecked;
// emitters produce canonical documents (sorted keys, 12-significant-digit
// floats) so that emit → load → emit is byte-stable.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include <orbitcalc/actions.hpp>
#include <orbitcalc/birkhoff.hpp>
#include <orbitcalc/blockflow.hpp>
#include <orbitcalc/chain.hpp>
#include <orbitcalc/errors.hpp>
#include <orbitcalc/fatgraph.hpp>
#include <orbitcalc/format.hpp>
#include <orbitcalc/smale.hpp>

namespace orbitcalc {

using nlohmann::json;

namespace jio {

inline validation_error schema_error(const std::string& ptr, const std::string& msg) {
    return validation_error("SchemaError", (ptr.empty() ? "/" : ptr) + ": " + msg);
}

inline const json& member(const json& j, const std::string& key, const std::string& ptr) {
    if (!j.is_object()) throw schema_error(ptr, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw schema_error(ptr + "/" + key, "missing required field");
    return *it;
}

inline const json* opt_member(const json& j, const std::string& key, const std::string& ptr) {
    if (!j.is_object()) throw schema_error(ptr, "expected an object");
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

inline std::string get_string(const json& j, const std::string& ptr) {
    if (!j.is_string()) throw schema_error(ptr, "expected a string");
    return j.get<std::string>();
}

inline int get_int(const json& j, const std::string& ptr) {
    if (!j.is_number_integer() && !j.is_number_unsigned())
        throw schema_error(ptr, "expected an integer");
    return j.get<int>();
}

inline double get_double(const json& j, const std::string& ptr) {
    if (!j.is_number()) throw schema_error(ptr, "expected a number");
    return j.get<double>();
}

inline bool get_bool(const json& j, const std::string& ptr) {
    if (!j.is_boolean()) throw schema_error(ptr, "expected a boolean");
    return j.get<bool>();
}

inline const json& get_array(const json& j, const std::string& ptr) {
    if (!j.is_array()) throw schema_error(ptr, "expected an array");
    return j;
}

inline FoliationLabel get_label(const json& j, const std::string& ptr) {
    std::string s = get_string(j, ptr);
    if (s == "plus") return FoliationLabel::Plus;
    if (s == "minus") return FoliationLabel::Minus;
    throw schema_error(ptr, "expected \"plus\" or \"minus\", got \"" + s + "\"");
}

} // namespace jio

// Parse raw text, converting parser failures into SchemaError diagnostics.
inline json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw jio::schema_error("", e.what());
    }
}

// ---------------------------------------------------------------------------
// Chain <-> JSON

inline Chain chain_from_json(const json& j) {
    Chain c;
    std::string topo = jio::get_string(jio::member(j, "topology", ""), "/topology");
    if (topo == "linear") c.topology = ChainTopology::Linear;
    else if (topo == "cyclic") c.topology = ChainTopology::Cyclic;
    else throw jio::schema_error("/topology", "expected \"linear\" or \"cyclic\", got \"" + topo + "\"");

    const json& corners = jio::get_array(jio::member(j, "corners", ""), "/corners");
    for (size_t i = 0; i < corners.size(); ++i) {
        const std::string ptr = "/corners/" + std::to_string(i);
        Corner k;
        k.id = jio::get_string(jio::member(corners[i], "id", ptr), ptr + "/id");
        k.prong = jio::get_int(jio::member(corners[i], "prong", ptr), ptr + "/prong");
        c.corners.push_back(k);
    }

    const json& lozenges = jio::get_array(jio::member(j, "lozenges", ""), "/lozenges");
    for (size_t i = 0; i < lozenges.size(); ++i) {
        const std::string ptr = "/lozenges/" + std::to_string(i);
        const json& cs = jio::get_array(jio::member(lozenges[i], "corners", ptr), ptr + "/corners");
        const json& qs = jio::get_array(jio::member(lozenges[i], "quadrants", ptr), ptr + "/quadrants");
        if (cs.size() != 2) throw jio::schema_error(ptr + "/corners", "expected exactly 2 corner ids");
        if (qs.size() != 2) throw jio::schema_error(ptr + "/quadrants", "expected exactly 2 quadrant indices");
        Lozenge l;
        for (int s = 0; s < 2; ++s) {
            l.corners[s] = jio::get_string(cs[s], ptr + "/corners/" + std::to_string(s));
            l.quadrants[s] = jio::get_int(qs[s], ptr + "/quadrants/" + std::to_string(s));
        }
        c.lozenges.push_back(l);
    }

    const json& junctions = jio::get_array(jio::member(j, "junctions", ""), "/junctions");
    for (size_t i = 0; i < junctions.size(); ++i) {
        const std::string ptr = "/junctions/" + std::to_string(i);
        Junction jx;
        jx.corner = jio::get_string(jio::member(junctions[i], "corner", ptr), ptr + "/corner");
        std::string kind = jio::get_string(jio::member(junctions[i], "kind", ptr), ptr + "/kind");
        if (kind == "side") {
            jx.kind = Junction::Kind::SharedSide;
            jx.label = jio::get_label(jio::member(junctions[i], "label", ptr), ptr + "/label");
        } else if (kind == "corner") {
            jx.kind = Junction::Kind::CornerOnly;
            jx.gap = jio::get_int(jio::member(junctions[i], "gap", ptr), ptr + "/gap");
        } else {
            throw jio::schema_error(ptr + "/kind", "expected \"side\" or \"corner\", got \"" + kind + "\"");
        }
        c.junctions.push_back(jx);
    }

    validate_chain(c);
    return c;
}

inline json chain_to_json(const Chain& c) {
    json j;
    j["topology"] = c.topology == ChainTopology::Cyclic ? "cyclic" : "linear";
    json corners = json::array();
    std::vector<Corner> sorted = c.corners;
    std::sort(sorted.begin(), sorted.end(), [](const Corner& a, const Corner& b) { return a.id < b.id; });
    for (const Corner& k : sorted) corners.push_back({{"id", k.id}, {"prong", k.prong}});
    j["corners"] = corners;
    json lozenges = json::array();
    for (const Lozenge& l : c.lozenges)
        lozenges.push_back({{"corners", {l.corners[0], l.corners[1]}},
                            {"quadrants", {l.quadrants[0], l.quadrants[1]}}});
    j["lozenges"] = lozenges;
    json junctions = json::array();
    for (const Junction& x : c.junctions) {
        json e;
        e["corner"] = x.corner;
        if (x.kind == Junction::Kind::SharedSide) {
            e["kind"] = "side";
            e["label"] = to_string(x.label);
        } else {
            e["kind"] = "corner";
            e["gap"] = x.gap;
        }
        junctions.push_back(e);
    }
    j["junctions"] = junctions;
    return j;
}

// ---------------------------------------------------------------------------
// Files

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error("IoError", "cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw validation_error("IoError", "cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw validation_error("IoError", "failed writing '" + path + "'");
}

// Doubles pass through the canonical 12-significant-digit format before they
// are stored, so emitted JSON is byte-stable and load/emit round-trips.
inline double round12(double x) { return std::stod(num12(x)); }

// ---------------------------------------------------------------------------
// Annulus <-> JSON

inline AnnulusCombinatorics annulus_from_json(const json& j) {
    AnnulusCombinatorics a;
    const json& boundary = jio::get_array(jio::member(j, "boundary", ""), "/boundary");
    if (boundary.size() != 2)
        throw jio::schema_error("/boundary", "expected exactly 2 boundary orbit ids");
    for (int s = 0; s < 2; ++s)
        a.boundary[static_cast<size_t>(s)] =
            jio::get_string(boundary[static_cast<size_t>(s)], "/boundary/" + std::to_string(s));
    if (const json* prongs = jio::opt_member(j, "boundary_prongs", "")) {
        const json& arr = jio::get_array(*prongs, "/boundary_prongs");
        if (arr.size() != 2)
            throw jio::schema_error("/boundary_prongs", "expected exactly 2 prong counts");
        for (int s = 0; s < 2; ++s)
            a.boundary_prongs[static_cast<size_t>(s)] =
                jio::get_int(arr[static_cast<size_t>(s)], "/boundary_prongs/" + std::to_string(s));
    }
    const json& leaves = jio::get_array(jio::member(j, "interior_leaves", ""), "/interior_leaves");
    for (size_t i = 0; i < leaves.size(); ++i)
        a.interior_leaves.push_back(
            jio::get_label(leaves[i], "/interior_leaves/" + std::to_string(i)));
    return a;
}

inline json annulus_to_json(const AnnulusCombinatorics& a) {
    json j;
    j["boundary"] = {a.boundary[0], a.boundary[1]};
    j["boundary_prongs"] = {a.boundary_prongs[0], a.boundary_prongs[1]};
    json leaves = json::array();
    for (FoliationLabel l : a.interior_leaves) leaves.push_back(to_string(l));
    j["interior_leaves"] = leaves;
    return j;
}

// ---------------------------------------------------------------------------
// Torus <-> JSON

inline TorusCombinatorics torus_from_json(const json& j) {
    TorusCombinatorics t;
    const json& items = jio::get_array(jio::member(j, "items", ""), "/items");
    for (size_t i = 0; i < items.size(); ++i) {
        const std::string ptr = "/items/" + std::to_string(i);
        TorusItem item;
        const std::string kind = jio::get_string(jio::member(items[i], "kind", ptr), ptr + "/kind");
        if (kind == "annulus") {
            item.kind = TorusItem::Kind::Annulus;
            // re-point schema errors beneath the nested annulus object
            try {
                item.annulus = annulus_from_json(jio::member(items[i], "annulus", ptr));
            } catch (const validation_error& e) {
                throw jio::schema_error(ptr + "/annulus", e.what());
            }
        } else if (kind == "orbit") {
            item.kind = TorusItem::Kind::Orbit;
            item.gap = jio::get_int(jio::member(items[i], "gap", ptr), ptr + "/gap");
            item.prong = jio::get_int(jio::member(items[i], "prong", ptr), ptr + "/prong");
            if (const json* label = jio::opt_member(items[i], "label", ptr))
                item.label = jio::get_label(*label, ptr + "/label");
        } else if (kind == "glue") {
            item.kind = TorusItem::Kind::Glue;
            item.label = jio::get_label(jio::member(items[i], "label", ptr), ptr + "/label");
        } else {
            throw jio::schema_error(ptr + "/kind",
                                    "expected \"annulus\", \"orbit\", or \"glue\", got \"" + kind +
                                        "\"");
        }
        t.items.push_back(item);
    }
    return t;
}

inline json torus_to_json(const TorusCombinatorics& t) {
    json items = json::array();
    for (const TorusItem& item : t.items) {
        json e;
        switch (item.kind) {
            case TorusItem::Kind::Annulus:
                e["kind"] = "annulus";
                e["annulus"] = annulus_to_json(item.annulus);
                break;
            case TorusItem::Kind::Orbit:
                e["kind"] = "orbit";
                e["gap"] = item.gap;
                e["prong"] = item.prong;
                if (item.label) e["label"] = to_string(*item.label);
                break;
            case TorusItem::Kind::Glue:
                e["kind"] = "glue";
                e["label"] = to_string(item.label.value_or(FoliationLabel::Plus));
                break;
        }
        items.push_back(e);
    }
    json j;
    j["items"] = items;
    return j;
}

// ---------------------------------------------------------------------------
// Fatgraph <-> JSON

inline Fatgraph fatgraph_from_json(const json& j) {
    Fatgraph fg;
    const json& vertices = jio::get_array(jio::member(j, "vertices", ""), "/vertices");
    for (size_t i = 0; i < vertices.size(); ++i) {
        const std::string ptr = "/vertices/" + std::to_string(i);
        Fatgraph::Vertex v;
        v.id = jio::get_string(jio::member(vertices[i], "id", ptr), ptr + "/id");
        const json& order = jio::get_array(jio::member(vertices[i], "order", ptr), ptr + "/order");
        for (size_t s = 0; s < order.size(); ++s)
            v.order.push_back(jio::get_string(order[s], ptr + "/order/" + std::to_string(s)));
        fg.vertices.push_back(v);
    }
    const json& edges = jio::get_array(jio::member(j, "edges", ""), "/edges");
    for (size_t e = 0; e < edges.size(); ++e) {
        const std::string ptr = "/edges/" + std::to_string(e);
        const json& pair = jio::get_array(edges[e], ptr);
        if (pair.size() != 2) throw jio::schema_error(ptr, "expected exactly 2 half-edge ids");
        fg.edges.push_back({jio::get_string(pair[0], ptr + "/0"), jio::get_string(pair[1], ptr + "/1")});
    }
    if (const json* flips = jio::opt_member(j, "flips", "")) {
        const json& arr = jio::get_array(*flips, "/flips");
        for (size_t f = 0; f < arr.size(); ++f) {
            const int idx = jio::get_int(arr[f], "/flips/" + std::to_string(f));
            if (idx < 0)
                throw jio::schema_error("/flips/" + std::to_string(f),
                                        "expected a non-negative edge index");
            fg.flips.insert(static_cast<size_t>(idx));
        }
    }
    return fg;
}

inline json fatgraph_to_json(const Fatgraph& fg) {
    json j;
    json vertices = json::array();
    for (const Fatgraph::Vertex& v : fg.vertices)
        vertices.push_back({{"id", v.id}, {"order", v.order}});
    j["vertices"] = vertices;
    json edges = json::array();
    for (const auto& e : fg.edges) edges.push_back({e[0], e[1]});
    j["edges"] = edges;
    json flips = json::array();
    for (size_t f : fg.flips) flips.push_back(f);
    j["flips"] = flips;
    return j;
}

// ---------------------------------------------------------------------------
// Smale graph <-> JSON

inline SmaleGraph smale_from_json(const json& j) {
    SmaleGraph g;
    const json& nodes = jio::get_array(jio::member(j, "nodes", ""), "/nodes");
    for (size_t i = 0; i < nodes.size(); ++i) {
        const std::string ptr = "/nodes/" + std::to_string(i);
        SmaleNode node;
        node.id = jio::get_string(jio::member(nodes[i], "id", ptr), ptr + "/id");
        if (const json* s = jio::opt_member(nodes[i], "singular", ptr))
            node.singular = jio::get_bool(*s, ptr + "/singular");
        if (const json* p = jio::opt_member(nodes[i], "isolated_prong", ptr))
            node.isolated_prong = jio::get_bool(*p, ptr + "/isolated_prong");
        g.nodes.push_back(node);
    }
    const json& edges = jio::get_array(jio::member(j, "edges", ""), "/edges");
    for (size_t e = 0; e < edges.size(); ++e) {
        const std::string ptr = "/edges/" + std::to_string(e);
        const json& pair = jio::get_array(edges[e], ptr);
        if (pair.size() != 2) throw jio::schema_error(ptr, "expected exactly 2 node ids");
        g.edges.push_back({jio::get_string(pair[0], ptr + "/0"), jio::get_string(pair[1], ptr + "/1")});
    }
    validate_smale_graph(g);
    return g;
}

inline json smale_to_json(const SmaleGraph& g) {
    json j;
    json nodes = json::array();
    for (const SmaleNode& node : g.nodes)
        nodes.push_back({{"id", node.id},
                         {"singular", node.singular},
                         {"isolated_prong", node.isolated_prong}});
    j["nodes"] = nodes;
    json edges = json::array();
    for (const auto& e : g.edges) edges.push_back({e[0], e[1]});
    j["edges"] = edges;
    return j;
}

// ---------------------------------------------------------------------------
// Group-action elements <-> JSON

struct ActionElement {
    enum class Type { Affine, Suspension, Skew };
    Type type = Type::Affine;
    AffineElement affine;
    SuspensionElement suspension;
    SkewLiftElement skew;
};

inline ActionElement action_from_json(const json& j) {
    ActionElement out;
    const std::string type = jio::get_string(jio::member(j, "type", ""), "/type");
    if (type == "affine") {
        out.type = ActionElement::Type::Affine;
        out.affine.a = jio::get_double(jio::member(j, "a", ""), "/a");
        out.affine.b = jio::get_double(jio::member(j, "b", ""), "/b");
        out.affine.c = jio::get_double(jio::member(j, "c", ""), "/c");
        out.affine.d = jio::get_double(jio::member(j, "d", ""), "/d");
    } else if (type == "suspension") {
        out.type = ActionElement::Type::Suspension;
        out.suspension.n = jio::get_int(jio::member(j, "n", ""), "/n");
        const json& v = jio::get_array(jio::member(j, "v", ""), "/v");
        if (v.size() != 2) throw jio::schema_error("/v", "expected exactly 2 coordinates");
        out.suspension.v = {jio::get_int(v[0], "/v/0"), jio::get_int(v[1], "/v/1")};
        if (const json* A = jio::opt_member(j, "A", "")) {
            const json& rows = jio::get_array(*A, "/A");
            if (rows.size() != 2) throw jio::schema_error("/A", "expected a 2x2 integer matrix");
            for (int r = 0; r < 2; ++r) {
                const std::string ptr = "/A/" + std::to_string(r);
                const json& row = jio::get_array(rows[static_cast<size_t>(r)], ptr);
                if (row.size() != 2) throw jio::schema_error(ptr, "expected 2 entries");
                for (int c = 0; c < 2; ++c)
                    out.suspension.A[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                        jio::get_int(row[static_cast<size_t>(c)], ptr + "/" + std::to_string(c));
            }
        }
    } else if (type == "skew") {
        out.type = ActionElement::Type::Skew;
        const json& rows = jio::get_array(jio::member(j, "matrix", ""), "/matrix");
        if (rows.size() != 2) throw jio::schema_error("/matrix", "expected a 2x2 matrix");
        std::array<double, 4> m{};
        for (int r = 0; r < 2; ++r) {
            const std::string ptr = "/matrix/" + std::to_string(r);
            const json& row = jio::get_array(rows[static_cast<size_t>(r)], ptr);
            if (row.size() != 2) throw jio::schema_error(ptr, "expected 2 entries");
            for (int c = 0; c < 2; ++c)
                m[static_cast<size_t>(2 * r + c)] =
                    jio::get_double(row[static_cast<size_t>(c)], ptr + "/" + std::to_string(c));
        }
        long long k = 0;
        if (const json* kj = jio::opt_member(j, "k", "")) k = jio::get_int(*kj, "/k");
        out.skew = skew_element(m, k);
    } else {
        throw jio::schema_error("/type",
                                "expected \"affine\", \"suspension\", or \"skew\", got \"" + type +
                                    "\"");
    }
    return out;
}

inline json action_to_json(const ActionElement& g) {
    json j;
    switch (g.type) {
        case ActionElement::Type::Affine:
            j["type"] = "affine";
            j["a"] = round12(g.affine.a);
            j["b"] = round12(g.affine.b);
            j["c"] = round12(g.affine.c);
            j["d"] = round12(g.affine.d);
            break;
        case ActionElement::Type::Suspension:
            j["type"] = "suspension";
            j["n"] = g.suspension.n;
            j["v"] = {g.suspension.v[0], g.suspension.v[1]};
            j["A"] = {{g.suspension.A[0][0], g.suspension.A[0][1]},
                      {g.suspension.A[1][0], g.suspension.A[1][1]}};
            break;
        case ActionElement::Type::Skew:
            j["type"] = "skew";
            j["matrix"] = {{round12(g.skew.m[0]), round12(g.skew.m[1])},
                           {round12(g.skew.m[2]), round12(g.skew.m[3])}};
            j["k"] = g.skew.k;
            break;
    }
    return j;
}

// ---------------------------------------------------------------------------
// Report serializers (output only)

inline json chain_class_to_json(const ChainClass& c) {
    return {{"is_line", c.is_line}, {"is_string", c.is_string}, {"mixed", c.mixed}};
}

inline json chain_tree_to_json(const ChainTree& t) {
    json vertices = json::array();
    for (const ChainTree::Vertex& v : t.vertices)
        vertices.push_back({{"label", v.label}, {"shifted", v.shifted}});
    json edges = json::array();
    for (const auto& e : t.edges) edges.push_back({e[0], e[1]});
    return {{"edges", edges}, {"vertices", vertices}};
}

inline json foliation_to_json(const FoliationComponentReport& r) {
    json components = json::array();
    for (const auto& c : r.components)
        components.push_back({{"label", to_string(c.label)},
                              {"reeb", c.reeb},
                              {"separating_count", c.separating_count}});
    return {{"components", components}};
}

inline json torus_classification_to_json(const TorusClassification& c) {
    return {{"alternating", c.alternating},
            {"maximally_periodic", c.maximally_periodic},
            {"maximally_transverse", c.maximally_transverse},
            {"one_sided", c.one_sided},
            {"orientation_profile", c.orientation_profile},
            {"transverse", c.transverse}};
}

inline json torus_trace_to_json(const TorusTrace& t) {
    return {{"chain", chain_to_json(t.chain)}, {"trace_corners", t.trace_corners}};
}

inline json admissibility_to_json(const AdmissibilityReport& r) {
    json j;
    j["bipartition"] = r.bipartition ? json(*r.bipartition) : json(nullptr);
    json loops = json::array();
    for (const auto& loop : r.boundary_loops) loops.push_back(loop);
    j["boundary_loops"] = loops;
    j["failure_reasons"] = r.failure_reasons;
    j["loop_edge_counts"] = r.loop_edge_counts;
    j["min_valence_ok"] = r.min_valence_ok;
    j["valences"] = r.valences;
    j["verdict"] = r.verdict;
    return j;
}

inline json surface_to_json(const SurfaceInvariants& s) {
    return {{"boundary_count", s.boundary_count},
            {"chi", s.chi},
            {"crosscaps", s.crosscaps},
            {"genus", s.genus},
            {"orientable", s.orientable}};
}

inline json seifert_piece_to_json(const SeifertPieceDescriptor& p) {
    json tori = json::array();
    for (const auto& bt : p.boundary_tori)
        tori.push_back({{"loop", bt.loop}, {"side", bt.side}, {"trace", chain_to_json(bt.trace)}});
    json spine = json::array();
    for (const auto& e : p.spine_edges)
        spine.push_back({{"from", e.from},
                         {"half_edges", {e.half_edges[0], e.half_edges[1]}},
                         {"to", e.to}});
    json orbits = json::array();
    for (const auto& vo : p.vertical_orbits)
        orbits.push_back({{"prong", vo.prong}, {"vertex", vo.vertex}});
    json surgeries = json::array();
    for (const auto& [vertex, coefficient] : p.surgeries)
        surgeries.push_back({{"coefficient", coefficient}, {"vertex", vertex}});
    return {{"boundary_tori", tori},
            {"spine_edges", spine},
            {"surface", surface_to_json(p.surface)},
            {"surgeries", surgeries},
            {"vertical_orbits", orbits},
            {"warnings", p.warnings}};
}

inline json smale_classes_to_json(const SmaleClassification& c) {
    json classes = json::array();
    for (const SmaleClass& cls : c.classes)
        classes.push_back({{"isolated", cls.isolated},
                           {"members", cls.members},
                           {"singular", cls.singular}});
    json order = json::array();
    for (const auto& pair : c.order) order.push_back({pair[0], pair[1]});
    return {{"classes", classes}, {"order", order}, {"transitive", c.transitive}};
}

inline json fixed_point_report_to_json(const FixedPointReport& r) {
    json j;
    switch (r.kind) {
        case FixedPointReport::Kind::Free:
            j["kind"] = "free";
            break;
        case FixedPointReport::Kind::Unique:
            j["kind"] = "unique";
            j["point"] = {round12(r.point[0]), round12(r.point[1])};
            j["multipliers"] = {round12(r.multipliers[0]), round12(r.multipliers[1])};
            j["expanding"] = r.expanding;
            break;
        case FixedPointReport::Kind::CornerChain: {
            j["kind"] = "corner_chain";
            json pts = json::array();
            for (const auto& fp : r.circle_fixed_points)
                pts.push_back({{"attracting", fp.attracting},
                               {"multiplier", round12(fp.multiplier)},
                               {"t", round12(fp.t)}});
            j["circle_fixed_points"] = pts;
            if (r.chain) j["chain"] = chain_to_json(*r.chain);
            break;
        }
    }
    return j;
}

inline json a1_to_json(const A1Report& r) {
    return {{"detail", r.detail}, {"pass", r.pass}};
}

inline json transit_to_json(const TransitRecord& t) {
    auto state = [](const BlockState& s) {
        return json{round12(s.x), round12(s.y), round12(s.z)};
    };
    return {{"delta_z", round12(t.delta_z)},
            {"entry", state(t.entry)},
            {"exit", state(t.exit)},
            {"time", round12(t.time)}};
}

inline json profile_to_json(const std::vector<TransitRecord>& rows) {
    json arr = json::array();
    for (const TransitRecord& r : rows) arr.push_back(transit_to_json(r));
    return arr;
}

inline json trajectory_to_json(const std::vector<TrajectorySample>& samples) {
    json arr = json::array();
    for (const TrajectorySample& s : samples)
        arr.push_back({{"state", {round12(s.state.x), round12(s.state.y), round12(s.state.z)}},
                       {"t", round12(s.t)}});
    return arr;
}

} // namespace orbitcalc
