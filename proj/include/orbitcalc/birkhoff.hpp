#pragma once

// Dictionary between Birkhoff-annulus / quasi-transverse-torus combinatorics
// and chains of lozenges, plus reconstruction of the induced boundary
// foliations and classification of torus positions.
//
// An annulus is recorded by its two boundary periodic orbits and the ordered
// closed leaves of the induced foliations in its interior; its trace in the
// orbit plane is a linear chain with one lozenge per complementary band and a
// shared side per closed leaf. A torus is a cyclic word of annuli separated
// either by contained periodic orbits (corner contacts, or side contacts when
// the annuli meet on adjacent quadrants) or by direct transverse gluings.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <orbitcalc/chain.hpp>
#include <orbitcalc/errors.hpp>

namespace orbitcalc {

struct AnnulusCombinatorics {
    std::array<std::string, 2> boundary;     // periodic-orbit ids (walk order)
    std::array<int, 2> boundary_prongs{2, 2};
    std::vector<FoliationLabel> interior_leaves; // closed leaves c_1..c_{n-1}

    bool operator==(const AnnulusCombinatorics&) const = default;
};

namespace detail {

inline void check_annulus_fields(const AnnulusCombinatorics& a) {
    if (a.boundary[0].empty() || a.boundary[1].empty())
        throw validation_error("NotRealizable", "annulus boundary orbits need nonempty ids");
    if (a.boundary_prongs[0] < 2 || a.boundary_prongs[1] < 2)
        throw validation_error("NotRealizable", "boundary orbit prongs must be at least 2");
}

} // namespace detail

// Trace of a Birkhoff annulus: a linear chain of |interior_leaves| + 1
// lozenges walking from one boundary orbit to the other; junction i shares a
// side along closed leaf i. Pivot corners between shared sides are regular
// (prong 2) and get fresh ids.
inline Chain annulus_to_chain(const AnnulusCombinatorics& a) {
    detail::check_annulus_fields(a);
    if (a.boundary[0] == a.boundary[1])
        throw validation_error("NotRealizable",
                               "a standalone annulus trace needs distinct boundary orbits");

    const size_t n = a.interior_leaves.size() + 1;
    Chain c;
    c.topology = ChainTopology::Linear;

    std::set<std::string> used{a.boundary[0], a.boundary[1]};
    std::vector<std::string> ids;
    ids.push_back(a.boundary[0]);
    for (size_t i = 1; i < n; ++i) {
        std::string id = "p" + std::to_string(i);
        while (used.count(id)) id += "'";
        used.insert(id);
        ids.push_back(id);
    }
    ids.push_back(a.boundary[1]);

    c.corners.push_back({a.boundary[0], a.boundary_prongs[0]});
    for (size_t i = 1; i < n; ++i) c.corners.push_back({ids[i], 2});
    c.corners.push_back({a.boundary[1], a.boundary_prongs[1]});

    for (size_t i = 0; i < n; ++i) {
        Lozenge l;
        l.corners = {ids[i], ids[i + 1]};
        l.quadrants = {1, 0}; // enter beside the previous side, exit below the next
        c.lozenges.push_back(l);
    }
    for (size_t i = 0; i + 1 < n; ++i) {
        Junction j;
        j.kind = Junction::Kind::SharedSide;
        j.corner = ids[i + 1];
        j.label = a.interior_leaves[i];
        c.junctions.push_back(j);
    }
    validate_chain(c);
    return c;
}

// Inverse direction: a linear chain is an annulus trace exactly when adjacent
// lozenges always share a side and no three consecutive lozenges share a
// corner.
inline AnnulusCombinatorics chain_to_annulus(const Chain& c) {
    validate_chain(c);
    if (c.topology != ChainTopology::Linear)
        throw validation_error("NotRealizable", "annulus traces are linear chains");
    for (size_t i = 0; i < c.junctions.size(); ++i)
        if (c.junctions[i].kind != Junction::Kind::SharedSide)
            throw validation_error("NotRealizable",
                                   "junction #" + std::to_string(i) +
                                       " does not share a side, so the chain is not an annulus trace");
    if (!no_triple_shared_corner(c))
        throw validation_error("NotRealizable",
                               "three consecutive lozenges share a corner");

    const auto prongs = corner_prongs(c);
    AnnulusCombinatorics a;
    a.boundary = {c.lozenges.front().corners[0], c.lozenges.back().corners[1]};
    a.boundary_prongs = {prongs.at(a.boundary[0]), prongs.at(a.boundary[1])};
    for (const Junction& j : c.junctions) a.interior_leaves.push_back(j.label);
    return a;
}

// ---------------------------------------------------------------------------
// Induced foliations on the annulus

// The two boundary orbits count as closed leaves of BOTH induced foliations.
// For each consecutive pair of same-label closed leaves the band between them
// is a Reeb component exactly when an odd number of opposite-label closed
// leaves separates the pair.
struct FoliationComponentReport {
    struct Component {
        FoliationLabel label;
        int separating_count = 0;
        bool reeb = false;

        bool operator==(const Component&) const = default;
    };
    std::vector<Component> components; // all Plus bands in order, then all Minus
};

inline FoliationComponentReport foliation_components(const AnnulusCombinatorics& a) {
    detail::check_annulus_fields(a);
    FoliationComponentReport r;
    const auto& leaves = a.interior_leaves;
    for (FoliationLabel side : {FoliationLabel::Plus, FoliationLabel::Minus}) {
        // Positions of same-label leaves in the bracketed word b0 . leaves . b1.
        std::vector<size_t> pos;
        pos.push_back(0);
        for (size_t i = 0; i < leaves.size(); ++i)
            if (leaves[i] == side) pos.push_back(i + 1);
        pos.push_back(leaves.size() + 1);
        for (size_t k = 0; k + 1 < pos.size(); ++k) {
            int between = 0;
            for (size_t i = pos[k] + 1; i < pos[k + 1]; ++i)
                if (leaves[i - 1] == opposite(side)) ++between;
            r.components.push_back({side, between, between % 2 != 0});
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Quasi-transverse tori

// A torus is a cyclic, alternating word  annulus, separator, annulus, ... ;
// item 0 must be an annulus and each separator glues its predecessor's second
// boundary orbit to its successor's first. Separators:
//   Orbit(gap >= 1, prong):        contained periodic orbit, corner contact;
//   Orbit(gap == 0, prong, label): contained orbit with the annuli on adjacent
//                                  quadrants (they share a side there);
//   Glue(label):                   direct transverse gluing, orbit not on the
//                                  torus.
struct TorusItem {
    enum class Kind { Annulus, Orbit, Glue };

    Kind kind = Kind::Annulus;
    AnnulusCombinatorics annulus;        // Kind::Annulus
    int gap = 1;                         // Kind::Orbit
    int prong = 2;                       // Kind::Orbit
    std::optional<FoliationLabel> label; // Glue always; Orbit exactly when gap == 0
};

struct TorusCombinatorics {
    std::vector<TorusItem> items;
};

struct TorusTrace {
    Chain chain;                             // cyclic trace chain
    std::vector<std::string> trace_corners;  // corner ids lying on the torus (sorted)
};

struct TorusClassification {
    bool transverse = false;           // no contained orbits at all
    bool maximally_transverse = false; // every contained orbit is a corner contact
    bool maximally_periodic = false;   // every chain corner carries a contained orbit
    bool alternating = false;          // corner contacts only, odd gaps, evenly many
    bool one_sided = false;            // transverse orientation flips an odd number of times
    std::vector<int> orientation_profile; // sign (+1/-1) while crossing each annulus
};

namespace detail {

inline void check_torus_shape(const TorusCombinatorics& t) {
    if (t.items.empty())
        throw validation_error("NotRealizable", "a torus needs at least one annulus");
    if (t.items.size() % 2 != 0)
        throw validation_error("NotRealizable",
                               "torus items must alternate annulus, separator, ... "
                               "(even item count)");
    for (size_t i = 0; i < t.items.size(); ++i) {
        const TorusItem& it = t.items[i];
        const bool want_annulus = i % 2 == 0;
        if (want_annulus != (it.kind == TorusItem::Kind::Annulus))
            throw validation_error("NotRealizable",
                                   "torus item #" + std::to_string(i) + " must be " +
                                       (want_annulus ? "an annulus" : "a separator"));
        if (it.kind == TorusItem::Kind::Annulus) {
            check_annulus_fields(it.annulus);
        } else if (it.kind == TorusItem::Kind::Orbit) {
            if (it.prong < 2)
                throw validation_error("NotRealizable",
                                       "orbit item #" + std::to_string(i) + " has prong < 2");
            if (it.gap < 0 || it.gap > 2 * it.prong - 2)
                throw validation_error("NotRealizable",
                                       "orbit item #" + std::to_string(i) + " gap outside [0, 2p-2]");
            if ((it.gap == 0) != it.label.has_value())
                throw validation_error("NotRealizable",
                                       "orbit item #" + std::to_string(i) +
                                           " needs a side label exactly when its gap is 0");
        } else {
            if (!it.label.has_value())
                throw validation_error("NotRealizable",
                                       "glue item #" + std::to_string(i) + " needs a side label");
        }
    }
}

} // namespace detail

// Trace chain of a quasi-transverse torus: each annulus contributes its own
// linear trace; each separator becomes the junction at the glued boundary
// orbit. Contained orbits are reported in trace_corners; direct gluings leave
// the orbit off the torus. Chain-level inconsistencies (mismatched boundary
// ids, gaps too wide for an interior junction) surface via validate_chain.
inline TorusTrace torus_trace(const TorusCombinatorics& t) {
    detail::check_torus_shape(t);
    const size_t n_ann = t.items.size() / 2;

    TorusTrace out;
    Chain& c = out.chain;
    c.topology = ChainTopology::Cyclic;

    // Corner table: boundary orbits keyed by id (prongs must agree wherever an
    // id recurs), pivots fresh per annulus.
    std::map<std::string, int> prong_of;
    auto add_corner = [&](const std::string& id, int p, const std::string& where) {
        auto [it, fresh] = prong_of.emplace(id, p);
        if (!fresh && it->second != p)
            throw validation_error("NotRealizable",
                                   where + ": orbit '" + id + "' is listed with prongs " +
                                       std::to_string(it->second) + " and " + std::to_string(p));
    };
    for (size_t ai = 0; ai < n_ann; ++ai) {
        const AnnulusCombinatorics& a = t.items[2 * ai].annulus;
        add_corner(a.boundary[0], a.boundary_prongs[0], "annulus #" + std::to_string(ai));
        add_corner(a.boundary[1], a.boundary_prongs[1], "annulus #" + std::to_string(ai));
    }

    std::set<std::string> used;
    for (const auto& [id, p] : prong_of) used.insert(id);
    std::set<std::string> trace_ids;
    std::vector<size_t> first_lozenge_of; // per annulus

    for (size_t ai = 0; ai < n_ann; ++ai) {
        const AnnulusCombinatorics& a = t.items[2 * ai].annulus;
        const TorusItem& sep = t.items[2 * ai + 1];
        const size_t m = a.interior_leaves.size() + 1; // lozenges of this annulus
        first_lozenge_of.push_back(c.lozenges.size());

        std::vector<std::string> ids;
        ids.push_back(a.boundary[0]);
        for (size_t i = 1; i < m; ++i) {
            std::string id = "a" + std::to_string(ai) + ".p" + std::to_string(i);
            while (used.count(id)) id += "'";
            used.insert(id);
            prong_of.emplace(id, 2);
            ids.push_back(id);
        }
        ids.push_back(a.boundary[1]);

        for (size_t i = 0; i < m; ++i) {
            Lozenge l;
            l.corners = {ids[i], ids[i + 1]};
            l.quadrants = {1, 0};
            c.lozenges.push_back(l);
        }
        for (size_t i = 0; i + 1 < m; ++i) {
            Junction j;
            j.kind = Junction::Kind::SharedSide;
            j.corner = ids[i + 1];
            j.label = a.interior_leaves[i];
            c.junctions.push_back(j);
        }

        // Separator junction at the orbit glued to the next annulus.
        const AnnulusCombinatorics& next = t.items[2 * ((ai + 1) % n_ann)].annulus;
        const std::string& at = a.boundary[1];
        const int p = prong_of.at(at);
        Junction j;
        j.corner = at;
        if (sep.kind == TorusItem::Kind::Glue || sep.gap == 0) {
            j.kind = Junction::Kind::SharedSide;
            j.label = *sep.label;
        } else {
            j.kind = Junction::Kind::CornerOnly;
            j.gap = sep.gap;
        }
        if (sep.kind == TorusItem::Kind::Orbit) {
            if (sep.prong != p)
                throw validation_error("NotRealizable",
                                       "orbit item prong " + std::to_string(sep.prong) +
                                           " disagrees with boundary orbit '" + at + "'");
            if (sep.prong != prong_of.at(next.boundary[0]))
                throw validation_error("NotRealizable",
                                       "orbit item prong " + std::to_string(sep.prong) +
                                           " disagrees with boundary orbit '" + next.boundary[0] + "'");
            trace_ids.insert(at);
            trace_ids.insert(next.boundary[0]);
        }
        c.junctions.push_back(j);
    }

    // Entry quadrants: each annulus's first lozenge enters the glued orbit
    // right beside the previous annulus's exit side, or `gap` quadrants away
    // for a corner contact.
    for (size_t ai = 0; ai < n_ann; ++ai) {
        const TorusItem& sep = t.items[2 * ai + 1];
        int enter_q = 1;
        if (sep.kind == TorusItem::Kind::Orbit && sep.gap >= 1) {
            const int p = prong_of.at(t.items[2 * ai].annulus.boundary[1]);
            enter_q = (sep.gap + 1) % (2 * p);
        }
        c.lozenges[first_lozenge_of[(ai + 1) % n_ann]].quadrants[0] = enter_q;
    }

    for (const auto& [id, p] : prong_of)
        if (std::any_of(c.lozenges.begin(), c.lozenges.end(), [&](const Lozenge& l) {
                return l.corners[0] == id || l.corners[1] == id;
            }))
            c.corners.push_back({id, p});

    validate_chain(c);
    out.trace_corners.assign(trace_ids.begin(), trace_ids.end());
    return out;
}

// Position classification straight from the torus word; the trace chain is not
// needed. Orientation bookkeeping: the transverse orientation flips exactly at
// odd-parity junctions, and only separator junctions can be odd (shared sides
// are even), so the per-annulus profile flips at odd-gap orbit items.
inline TorusClassification classify_torus(const TorusCombinatorics& t) {
    detail::check_torus_shape(t);
    TorusClassification r;

    size_t orbit_items = 0, odd_flips = 0;
    bool all_corner_contacts = true, all_gaps_odd = true;
    bool interior_leaf_somewhere = false, all_separators_orbits = true;

    int sign = 1;
    for (size_t i = 0; i < t.items.size(); ++i) {
        const TorusItem& it = t.items[i];
        if (it.kind == TorusItem::Kind::Annulus) {
            r.orientation_profile.push_back(sign);
            if (!it.annulus.interior_leaves.empty()) interior_leaf_somewhere = true;
            continue;
        }
        if (it.kind == TorusItem::Kind::Orbit) {
            ++orbit_items;
            if (it.gap == 0) all_corner_contacts = false;
            if (it.gap % 2 == 0) all_gaps_odd = false;
            if (it.gap % 2 != 0) { ++odd_flips; sign = -sign; }
        } else {
            all_separators_orbits = false;
        }
    }

    r.transverse = orbit_items == 0;
    r.maximally_transverse = all_corner_contacts;
    r.maximally_periodic = all_separators_orbits && !interior_leaf_somewhere;
    r.alternating = r.maximally_transverse && all_gaps_odd && orbit_items % 2 == 0;
    r.one_sided = odd_flips % 2 != 0;
    return r;
}

} // namespace orbitcalc
