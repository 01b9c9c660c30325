#pragma once

// Fatgraphs (ribbon graphs), boundary tracing, admissibility, and assembly
// into periodic Seifert-piece descriptors.
//
// A fatgraph is a graph with a cyclic order of half-edges at each vertex and
// an optional side-flip bit per edge (flipped edges make the thickened
// surface non-orientable). Boundary components are traced on the orientation
// double cover: a walk state is (half-edge, local side); crossing an edge
// toggles the side by the edge's flip bit and the turn at the far vertex
// follows the cyclic order forwards on one side, backwards on the other.
// States come in mirror pairs (the two directions of one boundary circle), so
// components are orbit pairs matched by the set of ribbon sides they cover.

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <orbitcalc/birkhoff.hpp>
#include <orbitcalc/chain.hpp>
#include <orbitcalc/errors.hpp>

namespace orbitcalc {

struct Fatgraph {
    struct Vertex {
        std::string id;
        std::vector<std::string> order; // incident half-edges, counterclockwise
    };
    std::vector<Vertex> vertices;
    std::vector<std::array<std::string, 2>> edges; // half-edge pairs
    std::set<size_t> flips;                        // indices into edges
};

namespace fat_detail {

struct Ribbon {
    const Fatgraph* fg = nullptr;
    std::map<std::string, int> dart_index;
    std::vector<std::string> dart_id;
    std::vector<int> dart_vertex; // vertex index per dart
    std::vector<int> dart_edge;   // edge index per dart
    std::vector<int> sigma;       // next dart in the cyclic order at its vertex
    std::vector<int> sigma_inv;
    std::vector<int> alpha;       // other half of the edge

    int dart_count() const { return static_cast<int>(dart_id.size()); }
    bool twisted(int dart) const {
        return fg->flips.count(static_cast<size_t>(dart_edge[static_cast<size_t>(dart)])) > 0;
    }
};

inline Ribbon build_ribbon(const Fatgraph& fg) {
    Ribbon r;
    r.fg = &fg;

    for (size_t e = 0; e < fg.edges.size(); ++e) {
        for (int half = 0; half < 2; ++half) {
            const std::string& h = fg.edges[e][static_cast<size_t>(half)];
            if (h.empty())
                throw validation_error("MalformedFatgraph",
                                       "edge #" + std::to_string(e) + " has an empty half-edge id");
            if (!r.dart_index.emplace(h, r.dart_count()).second)
                throw validation_error("MalformedFatgraph",
                                       "half-edge '" + h + "' appears in more than one edge slot");
            r.dart_id.push_back(h);
            r.dart_edge.push_back(static_cast<int>(e));
            r.dart_vertex.push_back(-1);
        }
    }
    for (size_t f : fg.flips)
        if (f >= fg.edges.size())
            throw validation_error("MalformedFatgraph",
                                   "flip index " + std::to_string(f) + " names no edge");

    r.alpha.assign(static_cast<size_t>(r.dart_count()), 0);
    for (size_t e = 0; e < fg.edges.size(); ++e) {
        const int a = r.dart_index.at(fg.edges[e][0]);
        const int b = r.dart_index.at(fg.edges[e][1]);
        r.alpha[static_cast<size_t>(a)] = b;
        r.alpha[static_cast<size_t>(b)] = a;
    }

    r.sigma.assign(static_cast<size_t>(r.dart_count()), -1);
    r.sigma_inv.assign(static_cast<size_t>(r.dart_count()), -1);
    std::set<std::string> vertex_ids;
    for (size_t v = 0; v < fg.vertices.size(); ++v) {
        const Fatgraph::Vertex& vx = fg.vertices[v];
        if (vx.id.empty() || !vertex_ids.insert(vx.id).second)
            throw validation_error("MalformedFatgraph",
                                   "vertex #" + std::to_string(v) + " has an empty or repeated id");
        if (vx.order.empty())
            throw validation_error("MalformedFatgraph",
                                   "vertex '" + vx.id + "' has no incident half-edges");
        for (size_t i = 0; i < vx.order.size(); ++i) {
            auto it = r.dart_index.find(vx.order[i]);
            if (it == r.dart_index.end())
                throw validation_error("MalformedFatgraph",
                                       "vertex '" + vx.id + "' lists unknown half-edge '" +
                                           vx.order[i] + "'");
            const int d = it->second;
            if (r.dart_vertex[static_cast<size_t>(d)] != -1)
                throw validation_error("MalformedFatgraph",
                                       "half-edge '" + vx.order[i] + "' is incident to two vertices");
            r.dart_vertex[static_cast<size_t>(d)] = static_cast<int>(v);
        }
        for (size_t i = 0; i < vx.order.size(); ++i) {
            const int d = r.dart_index.at(vx.order[i]);
            const int next = r.dart_index.at(vx.order[(i + 1) % vx.order.size()]);
            r.sigma[static_cast<size_t>(d)] = next;
        }
    }
    for (int d = 0; d < r.dart_count(); ++d) {
        if (r.dart_vertex[static_cast<size_t>(d)] == -1)
            throw validation_error("MalformedFatgraph",
                                   "half-edge '" + r.dart_id[static_cast<size_t>(d)] +
                                       "' is incident to no vertex");
        r.sigma_inv[static_cast<size_t>(r.sigma[static_cast<size_t>(d)])] = d;
    }

    // Connectivity over vertices (a spine is connected).
    if (!fg.vertices.empty()) {
        std::vector<char> seen(fg.vertices.size(), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (const std::string& h : fg.vertices[static_cast<size_t>(v)].order) {
                const int d = r.dart_index.at(h);
                const int w = r.dart_vertex[static_cast<size_t>(r.alpha[static_cast<size_t>(d)])];
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        for (size_t v = 0; v < fg.vertices.size(); ++v)
            if (!seen[v])
                throw validation_error("MalformedFatgraph",
                                       "fatgraph is disconnected (vertex '" + fg.vertices[v].id +
                                           "' unreachable)");
    } else {
        throw validation_error("MalformedFatgraph", "fatgraph has no vertices");
    }
    return r;
}

// Doubled walk: state = 2*dart + side.
inline int step_state(const Ribbon& r, int state) {
    const int d = state / 2;
    const int s = state % 2;
    const int d2 = r.alpha[static_cast<size_t>(d)];
    const int s2 = s ^ (r.twisted(d) ? 1 : 0);
    const int next = s2 == 0 ? r.sigma[static_cast<size_t>(d2)] : r.sigma_inv[static_cast<size_t>(d2)];
    return 2 * next + s2;
}

// Physical ribbon side covered by a state: side k of edge e encoded 2e + k.
// Walking the second half-edge of an edge sees the sides swapped (direction
// reversal), and swapped again if the ribbon is flipped.
inline int side_of_state(const Ribbon& r, int state) {
    const int d = state / 2;
    const int s = state % 2;
    const int e = r.dart_edge[static_cast<size_t>(d)];
    const bool second_half = r.fg->edges[static_cast<size_t>(e)][1] == r.dart_id[static_cast<size_t>(d)];
    int k = s;
    if (second_half) k ^= 1 ^ (r.twisted(d) ? 1 : 0);
    return 2 * e + k;
}

struct TracedBoundaries {
    // Per boundary component: the dart sequence of one traversal direction
    // (the orbit containing the smallest state), and the ribbon sides covered.
    std::vector<std::vector<int>> loop_darts;
    std::vector<std::vector<int>> loop_sides; // sorted, one entry per covered side
    std::vector<int> side_boundary;           // boundary index per ribbon side (2E entries)
};

inline TracedBoundaries trace_boundaries(const Ribbon& r) {
    const int n_states = 2 * r.dart_count();
    std::vector<int> orbit_of(static_cast<size_t>(n_states), -1);
    std::vector<std::vector<int>> orbits;
    for (int s0 = 0; s0 < n_states; ++s0) {
        if (orbit_of[static_cast<size_t>(s0)] != -1) continue;
        std::vector<int> orbit;
        int s = s0;
        do {
            orbit_of[static_cast<size_t>(s)] = static_cast<int>(orbits.size());
            orbit.push_back(s);
            s = step_state(r, s);
        } while (s != s0);
        orbits.push_back(std::move(orbit));
    }

    // Pair mirror orbits by the multiset of ribbon sides they cover.
    std::map<std::vector<int>, std::vector<int>> by_sides;
    for (size_t i = 0; i < orbits.size(); ++i) {
        std::vector<int> key;
        for (int s : orbits[i]) key.push_back(side_of_state(r, s));
        std::sort(key.begin(), key.end());
        by_sides[key].push_back(static_cast<int>(i));
    }

    std::vector<int> reps;
    TracedBoundaries tb;
    tb.side_boundary.assign(static_cast<size_t>(2 * static_cast<int>(r.fg->edges.size())), -1);
    std::vector<std::pair<int, std::pair<std::vector<int>, std::vector<int>>>> collected;
    for (const auto& [key, members] : by_sides) {
        if (members.size() != 2)
            throw validation_error("MalformedFatgraph",
                                   "internal: boundary orbits failed to pair up");
        // Prefer the orbit that reaches local side 0 earliest (for flip-free
        // graphs that is the forward face walk; its mirror runs every side
        // reversed). Orbits stuck on side 1 rank after all side-0 orbits.
        const auto rank = [](const std::vector<int>& orbit) {
            int best = std::numeric_limits<int>::max();
            for (int s : orbit)
                if (s % 2 == 0) best = std::min(best, s);
            if (best == std::numeric_limits<int>::max())
                best = (1 << 28) + *std::min_element(orbit.begin(), orbit.end());
            return best;
        };
        const auto& o0 = orbits[static_cast<size_t>(members[0])];
        const auto& o1 = orbits[static_cast<size_t>(members[1])];
        const int r0 = rank(o0), r1 = rank(o1);
        const auto& rep = r0 < r1 ? o0 : o1;
        const int min_state = std::min(r0, r1);
        // rotate the representative to start at its ranking state
        std::vector<int> darts;
        int anchor = std::numeric_limits<int>::max();
        for (int s : rep)
            if (s % 2 == 0) anchor = std::min(anchor, s);
        if (anchor == std::numeric_limits<int>::max())
            anchor = *std::min_element(rep.begin(), rep.end());
        const size_t start =
            static_cast<size_t>(std::find(rep.begin(), rep.end(), anchor) - rep.begin());
        for (size_t i = 0; i < rep.size(); ++i)
            darts.push_back(rep[(start + i) % rep.size()] / 2);
        collected.push_back({min_state, {darts, key}});
    }
    std::sort(collected.begin(), collected.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [min_state, pair] : collected) {
        (void)min_state;
        for (int side : pair.second)
            tb.side_boundary[static_cast<size_t>(side)] = static_cast<int>(tb.loop_darts.size());
        tb.loop_darts.push_back(std::move(pair.first));
        tb.loop_sides.push_back(std::move(pair.second));
    }
    return tb;
}

} // namespace fat_detail

// ---------------------------------------------------------------------------
// Boundary loops and admissibility

// Boundary components as cyclic half-edge sequences (one traversal direction
// each; a half-edge can recur when the surface is non-orientable).
inline std::vector<std::vector<std::string>> boundary_loops(const Fatgraph& fg) {
    const auto r = fat_detail::build_ribbon(fg);
    const auto tb = fat_detail::trace_boundaries(r);
    std::vector<std::vector<std::string>> loops;
    for (const auto& darts : tb.loop_darts) {
        std::vector<std::string> loop;
        for (int d : darts) loop.push_back(r.dart_id[static_cast<size_t>(d)]);
        loops.push_back(std::move(loop));
    }
    return loops;
}

struct AdmissibilityReport {
    std::map<std::string, int> valences;
    std::vector<std::vector<std::string>> boundary_loops;
    std::vector<int> loop_edge_counts; // sides per loop
    std::optional<std::vector<std::string>> bipartition; // per loop: "in"/"out"
    bool verdict = false;        // even valences + bipartition + even loops
    bool min_valence_ok = false; // every valence >= 4
    std::vector<std::string> failure_reasons;
};

inline AdmissibilityReport check_admissible(const Fatgraph& fg) {
    const auto r = fat_detail::build_ribbon(fg);
    const auto tb = fat_detail::trace_boundaries(r);

    AdmissibilityReport rep;
    bool valences_even = true;
    rep.min_valence_ok = true;
    for (const auto& v : fg.vertices) {
        const int val = static_cast<int>(v.order.size());
        rep.valences[v.id] = val;
        if (val % 2 != 0) valences_even = false;
        if (val < 4) rep.min_valence_ok = false;
    }

    rep.boundary_loops = boundary_loops(fg);
    bool loops_even = true;
    for (const auto& sides : tb.loop_sides) {
        rep.loop_edge_counts.push_back(static_cast<int>(sides.size()));
        if (sides.size() % 2 != 0) loops_even = false;
    }

    // 2-color the loops so the two sides of every edge get opposite colors.
    const size_t n_loops = tb.loop_darts.size();
    std::vector<std::vector<int>> adj(n_loops);
    bool colorable = true;
    for (size_t e = 0; e < fg.edges.size(); ++e) {
        const int b0 = tb.side_boundary[2 * e];
        const int b1 = tb.side_boundary[2 * e + 1];
        if (b0 == b1) colorable = false;
        adj[static_cast<size_t>(b0)].push_back(b1);
        adj[static_cast<size_t>(b1)].push_back(b0);
    }
    std::vector<int> color(n_loops, -1);
    if (colorable) {
        for (size_t start = 0; start < n_loops && colorable; ++start) {
            if (color[start] != -1) continue;
            color[start] = 0;
            std::vector<size_t> stack{start};
            while (!stack.empty() && colorable) {
                const size_t u = stack.back();
                stack.pop_back();
                for (int w : adj[u]) {
                    if (color[static_cast<size_t>(w)] == -1) {
                        color[static_cast<size_t>(w)] = 1 - color[u];
                        stack.push_back(static_cast<size_t>(w));
                    } else if (color[static_cast<size_t>(w)] == color[u]) {
                        colorable = false;
                    }
                }
            }
        }
    }
    if (colorable) {
        std::vector<std::string> sides;
        for (size_t i = 0; i < n_loops; ++i) sides.push_back(color[i] == 0 ? "in" : "out");
        rep.bipartition = std::move(sides);
    }

    if (!valences_even) rep.failure_reasons.push_back("odd_valence");
    if (!loops_even) rep.failure_reasons.push_back("odd_loop_parity");
    if (!colorable) rep.failure_reasons.push_back("no_bipartition");
    if (!rep.min_valence_ok) rep.failure_reasons.push_back("below_min_valence");
    rep.verdict = valences_even && loops_even && colorable;
    return rep;
}

// ---------------------------------------------------------------------------
// Surface invariants and assembly

struct SurfaceInvariants {
    int chi = 0;
    int boundary_count = 0;
    bool orientable = true;
    int genus = 0;     // when orientable
    int crosscaps = 0; // when not
};

inline SurfaceInvariants surface_invariants(const Fatgraph& fg) {
    const auto r = fat_detail::build_ribbon(fg);
    const auto tb = fat_detail::trace_boundaries(r);

    SurfaceInvariants s;
    s.chi = static_cast<int>(fg.vertices.size()) - static_cast<int>(fg.edges.size());
    s.boundary_count = static_cast<int>(tb.loop_darts.size());

    // Orientable iff the flip bits form a coboundary: o(u) xor o(v) = flip(e).
    std::vector<int> o(fg.vertices.size(), -1);
    s.orientable = true;
    o[0] = 0;
    std::vector<int> stack{0};
    while (!stack.empty() && s.orientable) {
        const int v = stack.back();
        stack.pop_back();
        for (const std::string& h : fg.vertices[static_cast<size_t>(v)].order) {
            const int d = r.dart_index.at(h);
            const int w = r.dart_vertex[static_cast<size_t>(r.alpha[static_cast<size_t>(d)])];
            const int want = o[static_cast<size_t>(v)] ^ (r.twisted(d) ? 1 : 0);
            if (o[static_cast<size_t>(w)] == -1) {
                o[static_cast<size_t>(w)] = want;
                stack.push_back(w);
            } else if (o[static_cast<size_t>(w)] != want) {
                s.orientable = false;
            }
        }
    }

    if (s.orientable)
        s.genus = (2 - s.boundary_count - s.chi) / 2;
    else
        s.crosscaps = 2 - s.chi - s.boundary_count;
    return s;
}

struct SeifertPieceDescriptor {
    SurfaceInvariants surface;

    struct VerticalOrbit {
        std::string vertex;
        int prong = 2; // valence / 2
    };
    std::vector<VerticalOrbit> vertical_orbits;

    struct SpineEdge {
        std::array<std::string, 2> half_edges;
        std::string from, to; // vertical orbits joined by the elementary annulus
    };
    std::vector<SpineEdge> spine_edges;

    struct BoundaryTorus {
        std::string side; // "in" or "out"
        std::vector<std::string> loop; // half-edge trace
        Chain trace;                   // cyclic trace chain
    };
    std::vector<BoundaryTorus> boundary_tori;

    std::vector<std::pair<std::string, int>> surgeries;
    std::vector<std::string> warnings;
};

// Assemble an admissible fatgraph into a periodic Seifert-piece descriptor:
// one model block per edge, one vertical orbit of prong valence/2 per vertex,
// and one alternating boundary torus per traced loop (blocks glued around a
// vertex sit one diagonal quadrant apart). Dehn surgery coefficients are
// carried as annotations on vertical orbits.
inline SeifertPieceDescriptor assemble(const Fatgraph& fg,
                                       const std::vector<std::pair<std::string, int>>& surgeries = {}) {
    const auto rep = check_admissible(fg);
    if (!rep.verdict || !rep.min_valence_ok) {
        std::string why;
        for (const auto& reason : rep.failure_reasons) {
            if (!why.empty()) why += ", ";
            why += reason;
        }
        throw validation_error("NotAdmissible", "fatgraph is not assemblable: " + why);
    }

    const auto r = fat_detail::build_ribbon(fg);
    const auto tb = fat_detail::trace_boundaries(r);

    SeifertPieceDescriptor d;
    d.surface = surface_invariants(fg);
    if (!d.surface.orientable)
        d.warnings.push_back("base surface is non-orientable; realization is stated for "
                             "orientable bases");

    std::map<std::string, int> prong_of;
    for (const auto& v : fg.vertices) {
        const int prong = static_cast<int>(v.order.size()) / 2;
        prong_of[v.id] = prong;
        d.vertical_orbits.push_back({v.id, prong});
    }

    for (size_t e = 0; e < fg.edges.size(); ++e) {
        const int d0 = r.dart_index.at(fg.edges[e][0]);
        const int d1 = r.dart_index.at(fg.edges[e][1]);
        d.spine_edges.push_back({fg.edges[e],
                                 fg.vertices[static_cast<size_t>(r.dart_vertex[static_cast<size_t>(d0)])].id,
                                 fg.vertices[static_cast<size_t>(r.dart_vertex[static_cast<size_t>(d1)])].id});
    }

    for (size_t li = 0; li < tb.loop_darts.size(); ++li) {
        const auto& darts = tb.loop_darts[li];
        const size_t k = darts.size();

        // Vertex visited between consecutive sides; one corner id per visit.
        std::vector<std::string> turn_vertex(k), visit_id(k);
        std::map<std::string, int> seen;
        for (size_t i = 0; i < k; ++i) {
            const int far = r.dart_vertex[static_cast<size_t>(r.alpha[static_cast<size_t>(darts[i])])];
            turn_vertex[i] = fg.vertices[static_cast<size_t>(far)].id;
        }
        for (size_t i = 0; i < k; ++i) {
            const int n = ++seen[turn_vertex[i]];
            visit_id[i] = n == 1 ? turn_vertex[i] : turn_vertex[i] + "@" + std::to_string(n);
        }

        TorusCombinatorics word;
        for (size_t i = 0; i < k; ++i) {
            AnnulusCombinatorics a;
            a.boundary = {visit_id[(i + k - 1) % k], visit_id[i]};
            a.boundary_prongs = {prong_of.at(turn_vertex[(i + k - 1) % k]),
                                 prong_of.at(turn_vertex[i])};
            TorusItem ai;
            ai.kind = TorusItem::Kind::Annulus;
            ai.annulus = a;
            word.items.push_back(ai);
            TorusItem oi;
            oi.kind = TorusItem::Kind::Orbit;
            oi.gap = 1;
            oi.prong = prong_of.at(turn_vertex[i]);
            word.items.push_back(oi);
        }
        const TorusClassification cls = classify_torus(word);
        if (!cls.alternating)
            throw validation_error("NotAdmissible",
                                   "internal: boundary torus of an admissible fatgraph must be "
                                   "alternating");

        SeifertPieceDescriptor::BoundaryTorus bt;
        bt.side = (*rep.bipartition)[li];
        for (int dart : darts) bt.loop.push_back(r.dart_id[static_cast<size_t>(dart)]);
        bt.trace = torus_trace(word).chain;
        d.boundary_tori.push_back(std::move(bt));
    }

    for (const auto& [vertex, coeff] : surgeries)
        if (!prong_of.count(vertex))
            throw validation_error("MalformedFatgraph",
                                   "surgery names unknown vertex '" + vertex + "'");
    d.surgeries = surgeries;
    std::sort(d.surgeries.begin(), d.surgeries.end());
    return d;
}

} // namespace orbitcalc
