#pragma once

// Lozenge-chain combinatorics on a bifoliated plane.
//
// A lozenge is recorded by its two corners (ordered along the walk direction
// of the chain that contains it) plus, for each corner, the index of the
// quadrant the lozenge occupies there. A corner of prong p (p >= 2) has 2p
// quadrants, indexed 0..2p-1 counterclockwise. Consecutive lozenges of a
// chain share a corner; the junction records whether they also share a side
// (a half-leaf of one foliation) or only the corner, in which case it stores
// the number of quadrants strictly between them on a designated circular
// side. The two circular gaps at a corner of prong p sum to 2p-2, so gap
// parity does not depend on the designated side.
//
// Cyclic chains store one period of a shift-invariant bi-infinite chain;
// corner ids name shift-orbits of plane corners. Two consequences are
// documented at is_minimal() and chain_tree() below.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <orbitcalc/errors.hpp>

namespace orbitcalc {

enum class FoliationLabel { Plus, Minus };

inline FoliationLabel opposite(FoliationLabel l) {
    return l == FoliationLabel::Plus ? FoliationLabel::Minus : FoliationLabel::Plus;
}

inline const char* to_string(FoliationLabel l) {
    return l == FoliationLabel::Plus ? "plus" : "minus";
}

struct Corner {
    std::string id;
    int prong = 2; // p >= 2; regular corners have p = 2 (four quadrants)
};

struct Lozenge {
    std::array<std::string, 2> corners;  // (entering, exiting) along the walk
    std::array<int, 2> quadrants{0, 0};  // quadrant index at each corner

    bool operator==(const Lozenge&) const = default;
};

struct Junction {
    enum class Kind { SharedSide, CornerOnly };

    Kind kind = Kind::SharedSide;
    std::string corner;                          // shared corner id
    FoliationLabel label = FoliationLabel::Plus; // SharedSide: label of the shared side
    int gap = 1;                                 // CornerOnly: quadrants between, >= 1

    bool operator==(const Junction&) const = default;
};

enum class ChainTopology { Linear, Cyclic };

struct Chain {
    ChainTopology topology = ChainTopology::Linear;
    std::vector<Corner> corners;    // corner table; every referenced id appears once
    std::vector<Lozenge> lozenges;  // walk order
    std::vector<Junction> junctions; // |lozenges|-1 (linear) or |lozenges| (cyclic);
                                     // junction i joins lozenge i to lozenge i+1 (mod n)
};

enum class Parity { Even, Odd };

// Parity of the quadrant count a junction inserts between its lozenges.
// SharedSide junctions separate nothing (even); CornerOnly parity is the gap
// parity, independent of the designated side since the two gaps sum to 2p-2.
inline Parity junction_parity(const Junction& j) {
    if (j.kind == Junction::Kind::SharedSide) return Parity::Even;
    return (j.gap % 2 != 0) ? Parity::Odd : Parity::Even;
}

namespace detail {

inline int mod(int a, int m) {
    int r = a % m;
    return r < 0 ? r + m : r;
}

// Index of `id` among the lozenge's two corners, or -1.
inline int corner_slot(const Lozenge& l, const std::string& id) {
    if (l.corners[0] == id) return 0;
    if (l.corners[1] == id) return 1;
    return -1;
}

} // namespace detail

// Lookup table for corner prongs; validates the corner table itself.
inline std::map<std::string, int> corner_prongs(const Chain& c) {
    std::map<std::string, int> prongs;
    for (size_t i = 0; i < c.corners.size(); ++i) {
        const Corner& k = c.corners[i];
        if (k.id.empty())
            throw validation_error("MalformedJunction",
                                   "corner #" + std::to_string(i) + " has an empty id");
        if (k.prong < 2)
            throw validation_error("MalformedJunction",
                                   "corner '" + k.id + "' has prong " + std::to_string(k.prong) +
                                       " (minimum is 2)");
        if (!prongs.emplace(k.id, k.prong).second)
            throw validation_error("MalformedJunction", "corner id '" + k.id + "' is listed twice");
    }
    return prongs;
}

// Full structural check. Verifies, for every junction i between lozenges i
// and i+1 (mod n for cyclic chains):
//   - the declared corner is a corner of both lozenges;
//   - SharedSide: the two lozenges occupy adjacent quadrants there;
//   - CornerOnly: gap lies in [1, 2p-2] and matches one of the two circular
//     gaps computed from the stored quadrant indices.
// The quadrant cross-checks are skipped for the closing junction of a cyclic
// chain: its two corner occurrences are different plane points (they differ
// by the deck shift, which may relabel quadrants), so only corner membership
// and the gap range are meaningful there.
// Also rejects corner ids reused at junction-unrelated positions, which would
// make the chain's corner-incidence structure cyclic and hence unrealizable
// by disjoint plane lozenges.
inline void validate_chain(const Chain& c) {
    if (c.lozenges.empty())
        throw validation_error("EmptyChain", "a chain needs at least one lozenge");

    const bool cyclic = c.topology == ChainTopology::Cyclic;
    const size_t n = c.lozenges.size();
    const size_t expected_junctions = cyclic ? n : n - 1;
    if (c.junctions.size() != expected_junctions)
        throw validation_error("MalformedJunction",
                               "expected " + std::to_string(expected_junctions) + " junction(s) for a " +
                                   (cyclic ? "cyclic" : "linear") + " chain of " + std::to_string(n) +
                                   " lozenge(s), got " + std::to_string(c.junctions.size()));

    const auto prongs = corner_prongs(c);
    auto prong_of = [&](const std::string& id, const std::string& where) {
        auto it = prongs.find(id);
        if (it == prongs.end())
            throw validation_error("MalformedJunction", where + " references unknown corner '" + id + "'");
        return it->second;
    };

    for (size_t i = 0; i < n; ++i) {
        const Lozenge& l = c.lozenges[i];
        const std::string where = "lozenge #" + std::to_string(i);
        if (l.corners[0] == l.corners[1])
            throw validation_error("MalformedJunction", where + " lists the same corner twice");
        for (int s = 0; s < 2; ++s) {
            int p = prong_of(l.corners[s], where);
            if (l.quadrants[s] < 0 || l.quadrants[s] >= 2 * p)
                throw validation_error("MalformedJunction",
                                       where + " quadrant index " + std::to_string(l.quadrants[s]) +
                                           " out of range for prong-" + std::to_string(p) + " corner '" +
                                           l.corners[s] + "'");
        }
    }

    for (size_t i = 0; i < c.junctions.size(); ++i) {
        const Junction& j = c.junctions[i];
        const Lozenge& a = c.lozenges[i];
        const Lozenge& b = c.lozenges[(i + 1) % n];
        const std::string where = "junction #" + std::to_string(i);
        const int p = prong_of(j.corner, where);
        const int sa = detail::corner_slot(a, j.corner);
        const int sb = detail::corner_slot(b, j.corner);
        if (sa < 0 || sb < 0)
            throw validation_error("MalformedJunction",
                                   where + " corner '" + j.corner +
                                       "' is not a corner of both adjacent lozenges");

        if (j.kind == Junction::Kind::CornerOnly && (j.gap < 1 || j.gap > 2 * p - 2))
            throw validation_error("GapOutOfRange",
                                   where + " gap " + std::to_string(j.gap) +
                                       " outside [1, " + std::to_string(2 * p - 2) +
                                       "] at prong-" + std::to_string(p) + " corner '" + j.corner + "'");

        const bool closing = cyclic && i + 1 == n;
        if (closing) continue; // quadrant indices not comparable across the shift

        const int qa = a.quadrants[sa];
        const int qb = b.quadrants[sb];
        const int d = detail::mod(qb - qa, 2 * p);
        if (j.kind == Junction::Kind::SharedSide) {
            if (d != 1 && d != 2 * p - 1)
                throw validation_error("MalformedJunction",
                                       where + " declares a shared side but the lozenges sit in "
                                               "non-adjacent quadrants " +
                                           std::to_string(qa) + " and " + std::to_string(qb) +
                                           " of corner '" + j.corner + "'");
        } else {
            if (d < 2 || d > 2 * p - 2)
                throw validation_error("MalformedJunction",
                                       where + " declares corner-only contact but the lozenges sit in "
                                               "adjacent or equal quadrants " +
                                           std::to_string(qa) + " and " + std::to_string(qb) +
                                           " of corner '" + j.corner + "'");
            const int gap_ccw = d - 1;
            const int gap_cw = 2 * p - 1 - d;
            if (j.gap != gap_ccw && j.gap != gap_cw)
                throw validation_error("GapOutOfRange",
                                       where + " gap " + std::to_string(j.gap) +
                                           " matches neither circular gap (" + std::to_string(gap_ccw) +
                                           " or " + std::to_string(gap_cw) + ") at corner '" + j.corner +
                                           "'");
        }
    }

    // Corner-occurrence gluing: occurrences of one id must form a single
    // junction-connected block (the closing junction counts as a connection
    // for this purpose). Anything else names two junction-unrelated plane
    // corners identically, i.e. closes a cycle in the incidence structure.
    std::vector<int> parent(2 * n);
    for (size_t i = 0; i < 2 * n; ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
        return x;
    };
    auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
    auto occ = [&](size_t loz, int slot) { return static_cast<int>(2 * loz + static_cast<size_t>(slot)); };

    for (size_t i = 0; i < c.junctions.size(); ++i) {
        const size_t a = i, b = (i + 1) % n;
        unite(occ(a, detail::corner_slot(c.lozenges[a], c.junctions[i].corner)),
              occ(b, detail::corner_slot(c.lozenges[b], c.junctions[i].corner)));
    }
    std::map<std::string, std::set<int>> blocks;
    for (size_t i = 0; i < n; ++i)
        for (int s = 0; s < 2; ++s)
            blocks[c.lozenges[i].corners[s]].insert(find(occ(i, s)));
    for (const auto& [id, roots] : blocks)
        if (roots.size() > 1)
            throw validation_error("MalformedJunction",
                                   "corner id '" + id +
                                       "' recurs at junction-unrelated positions; the incidence "
                                       "structure of a chain must be acyclic");
}

// ---------------------------------------------------------------------------
// Chain tree

struct ChainTree {
    struct Vertex {
        std::string label;  // corner id, or id+"+1" for the shifted copy
        bool shifted = false;
    };
    std::vector<Vertex> vertices;
    std::vector<std::array<int, 2>> edges; // edge k joins the corners of lozenge k
};

// The incidence tree of the chain: one vertex per corner, one edge per
// lozenge. For a cyclic chain this reports one *unrolled* period of the
// bi-infinite chain: the closing junction's corner appears twice, as a base
// vertex and as a marked shifted copy ("+1"), unless the shift fixes that
// corner (which happens exactly when the two closing occurrences are already
// junction-connected within the period). The result is always connected and
// acyclic for a valid chain.
inline ChainTree chain_tree(const Chain& c) {
    validate_chain(c);
    const size_t n = c.lozenges.size();
    const bool cyclic = c.topology == ChainTopology::Cyclic;

    std::vector<int> parent(2 * n);
    for (size_t i = 0; i < 2 * n; ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
        return x;
    };
    auto occ = [&](size_t loz, int slot) { return static_cast<int>(2 * loz + static_cast<size_t>(slot)); };

    const size_t glued = cyclic ? n - 1 : n - 1; // closing junction handled separately
    for (size_t i = 0; i < glued; ++i) {
        const size_t a = i, b = i + 1;
        int x = occ(a, detail::corner_slot(c.lozenges[a], c.junctions[i].corner));
        int y = occ(b, detail::corner_slot(c.lozenges[b], c.junctions[i].corner));
        parent[find(x)] = find(y);
    }

    int shifted_root = -1;
    if (cyclic) {
        const Junction& close = c.junctions[n - 1];
        int x = occ(n - 1, detail::corner_slot(c.lozenges[n - 1], close.corner));
        int y = occ(0, detail::corner_slot(c.lozenges[0], close.corner));
        if (find(x) == find(y)) {
            // Shift fixes this corner; the period closes at the same plane
            // point and no split copy is needed.
        } else {
            shifted_root = find(x);
        }
    }

    ChainTree t;
    std::map<int, int> vertex_of_root;
    auto vertex_for = [&](size_t loz, int slot) {
        int root = find(occ(loz, slot));
        auto it = vertex_of_root.find(root);
        if (it != vertex_of_root.end()) return it->second;
        ChainTree::Vertex v;
        v.label = c.lozenges[loz].corners[static_cast<size_t>(slot)];
        v.shifted = (root == shifted_root);
        if (v.shifted) v.label += "+1";
        int idx = static_cast<int>(t.vertices.size());
        t.vertices.push_back(v);
        vertex_of_root.emplace(root, idx);
        return idx;
    };

    for (size_t i = 0; i < n; ++i)
        t.edges.push_back({vertex_for(i, 0), vertex_for(i, 1)});
    return t;
}

// ---------------------------------------------------------------------------
// Classification and minimality

struct ChainClass {
    bool is_line = false;   // all junctions share a side with one common label
    std::optional<FoliationLabel> line_label;
    bool is_string = false; // no two consecutive lozenges share a side
    bool mixed = false;
};

inline ChainClass classify_chain(const Chain& c) {
    validate_chain(c);
    ChainClass r;
    bool all_side = true, all_corner = true;
    std::optional<FoliationLabel> label;
    bool label_uniform = true;
    for (const Junction& j : c.junctions) {
        if (j.kind == Junction::Kind::SharedSide) {
            all_corner = false;
            if (!label) label = j.label;
            else if (*label != j.label) label_uniform = false;
        } else {
            all_side = false;
        }
    }
    r.is_line = all_side && label_uniform;
    if (r.is_line) r.line_label = label; // empty for a single-lozenge chain
    r.is_string = all_corner;
    r.mixed = !r.is_line && !r.is_string;
    return r;
}

// Minimality of a cyclic chain: no three consecutive lozenges (cyclically,
// across the period seam) share a corner. Equivalent formulation used here:
// the two junction corners flanking a middle lozenge are corners of that
// lozenge, whose two corner ids are distinct, so the triple shares a plane
// corner exactly when consecutive junctions name the same id. (A three-way
// intersection of corner-id *sets* would over-report in the quotient: the
// 2-lozenge geodesic string repeats both ids yet is minimal.)
inline bool is_minimal(const Chain& c) {
    validate_chain(c);
    if (c.topology != ChainTopology::Cyclic)
        throw validation_error("NotCyclic", "minimality is defined for cyclic chains");
    const size_t m = c.junctions.size();
    for (size_t i = 0; i < m; ++i)
        if (c.junctions[i].corner == c.junctions[(i + 1) % m].corner) return false;
    return true;
}

// Linear-chain variant of the same test, used by the splice preconditions.
inline bool no_triple_shared_corner(const Chain& c) {
    for (size_t i = 0; i + 1 < c.junctions.size(); ++i)
        if (c.junctions[i].corner == c.junctions[i + 1].corner) return false;
    return true;
}

// A cyclic chain is the trace of a transverse torus (or Klein bottle) exactly
// when it is minimal and consecutive lozenges always share a side. Labels may
// differ from junction to junction: the criterion is weaker than line-ness.
inline bool transverse_torus_criterion(const Chain& c) {
    validate_chain(c);
    if (c.topology != ChainTopology::Cyclic)
        throw validation_error("NotCyclic", "the torus criterion applies to cyclic chains");
    for (const Junction& j : c.junctions)
        if (j.kind != Junction::Kind::SharedSide) return false;
    return is_minimal(c);
}

// ---------------------------------------------------------------------------
// Splicing ("merging") linear chains

namespace detail {

// Conditions of the splice: (i) no three consecutive lozenges share a corner,
// (ii) consecutive lozenges share a side.
inline void check_merge_conditions(const Chain& c, const std::string& name) {
    if (c.topology != ChainTopology::Linear)
        throw validation_error("ConditionViolation", name + " must be a linear chain");
    if (!no_triple_shared_corner(c))
        throw validation_error("ConditionViolation",
                               name + " violates condition (i): three consecutive lozenges share a corner");
    for (size_t i = 0; i < c.junctions.size(); ++i)
        if (c.junctions[i].kind != Junction::Kind::SharedSide)
            throw validation_error("ConditionViolation",
                                   name + " violates condition (ii): junction #" + std::to_string(i) +
                                       " does not share a side");
}

} // namespace detail

// Splice two side-sharing chains that agree on indices 0..k: the result keeps
// lozenges 0..k of `w` and continues with lozenges k+1.. of `w2`. Lozenges are
// stored with ordered corner pairs (entering, exiting), so agreement at index
// 0 already pins the corner through which the walk enters index 0 — the extra
// side condition the k = 0 case needs. Both inputs must satisfy conditions
// (i) and (ii) above; the output is re-validated and re-checked rather than
// assumed correct.
inline Chain merge_chains(const Chain& w, const Chain& w2, size_t k) {
    validate_chain(w);
    validate_chain(w2);
    detail::check_merge_conditions(w, "first chain");
    detail::check_merge_conditions(w2, "second chain");

    if (k >= w.lozenges.size() || k >= w2.lozenges.size())
        throw validation_error("PrefixMismatch",
                               "agreement index k=" + std::to_string(k) +
                                   " exceeds a chain length (" + std::to_string(w.lozenges.size()) +
                                   ", " + std::to_string(w2.lozenges.size()) + ")");
    for (size_t i = 0; i <= k; ++i)
        if (!(w.lozenges[i] == w2.lozenges[i]))
            throw validation_error("PrefixMismatch",
                                   "chains disagree on lozenge #" + std::to_string(i));
    for (size_t i = 0; i + 1 <= k; ++i)
        if (!(w.junctions[i] == w2.junctions[i]))
            throw validation_error("PrefixMismatch",
                                   "chains disagree on junction #" + std::to_string(i));

    Chain out;
    out.topology = ChainTopology::Linear;
    out.lozenges.assign(w.lozenges.begin(), w.lozenges.begin() + static_cast<long>(k + 1));
    out.lozenges.insert(out.lozenges.end(), w2.lozenges.begin() + static_cast<long>(k + 1),
                        w2.lozenges.end());
    out.junctions.assign(w.junctions.begin(), w.junctions.begin() + static_cast<long>(k));
    out.junctions.insert(out.junctions.end(), w2.junctions.begin() + static_cast<long>(k),
                         w2.junctions.end());

    // Union of the two corner tables; shared ids must agree on prong.
    std::map<std::string, int> prong;
    for (const Chain* src : {&w, &w2})
        for (const Corner& c : src->corners) {
            auto [it, fresh] = prong.emplace(c.id, c.prong);
            if (!fresh && it->second != c.prong)
                throw validation_error("PrefixMismatch",
                                       "corner '" + c.id + "' has different prongs in the two chains");
        }
    std::set<std::string> used;
    for (const Lozenge& l : out.lozenges) { used.insert(l.corners[0]); used.insert(l.corners[1]); }
    for (const auto& [id, p] : prong)
        if (used.count(id)) out.corners.push_back({id, p});

    validate_chain(out);
    detail::check_merge_conditions(out, "spliced chain");
    return out;
}

// ---------------------------------------------------------------------------
// Small utilities (used by property tests and emitters)

inline Chain rotated(const Chain& c, size_t s) {
    if (c.topology != ChainTopology::Cyclic)
        throw validation_error("NotCyclic", "rotation applies to cyclic chains");
    const size_t n = c.lozenges.size();
    Chain out = c;
    for (size_t i = 0; i < n; ++i) {
        out.lozenges[i] = c.lozenges[(i + s) % n];
        out.junctions[i] = c.junctions[(i + s) % n];
    }
    return out;
}

inline Chain reversed(const Chain& c) {
    const size_t n = c.lozenges.size();
    Chain out = c;
    for (size_t i = 0; i < n; ++i) {
        const Lozenge& l = c.lozenges[n - 1 - i];
        out.lozenges[i].corners = {l.corners[1], l.corners[0]};
        out.lozenges[i].quadrants = {l.quadrants[1], l.quadrants[0]};
    }
    const size_t m = c.junctions.size();
    for (size_t i = 0; i < m; ++i) {
        size_t src = (c.topology == ChainTopology::Cyclic)
                         ? (2 * n - 2 - i) % n
                         : n - 2 - i;
        out.junctions[i] = c.junctions[src];
    }
    return out;
}

} // namespace orbitcalc
