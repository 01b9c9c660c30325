#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include <orbitcalc/chain.hpp>

using namespace orbitcalc;

namespace {

// -- construction helpers ----------------------------------------------------

// Linear chain whose lozenges walk c0 - c1 - ... - cn; junction i sits at
// c_{i+1}. kinds[i]: 's'+label or 'c'+gap (gap 1 at regular pivots).
struct JunctionSpec {
    Junction::Kind kind;
    FoliationLabel label = FoliationLabel::Plus;
    int gap = 1;
};

JunctionSpec side(FoliationLabel l) { return {Junction::Kind::SharedSide, l, 0}; }
JunctionSpec corner1() { return {Junction::Kind::CornerOnly, FoliationLabel::Plus, 1}; }

Chain path_chain(const std::vector<JunctionSpec>& js, ChainTopology topo = ChainTopology::Linear) {
    const size_t n = js.size() + (topo == ChainTopology::Linear ? 1 : 0);
    Chain c;
    c.topology = topo;
    const size_t n_corners = topo == ChainTopology::Linear ? n + 1 : n;
    for (size_t i = 0; i < n_corners; ++i)
        c.corners.push_back({"c" + std::to_string(i), 2});
    for (size_t i = 0; i < n; ++i) {
        Lozenge l;
        l.corners = {"c" + std::to_string(i), "c" + std::to_string((i + 1) % n_corners)};
        c.lozenges.push_back(l);
    }
    for (size_t i = 0; i < js.size(); ++i) {
        Junction j;
        j.corner = "c" + std::to_string((i + 1) % n_corners);
        j.kind = js[i].kind;
        if (j.kind == Junction::Kind::SharedSide) {
            j.label = js[i].label;
            c.lozenges[i].quadrants[1] = 0;
            c.lozenges[(i + 1) % n].quadrants[0] = 1;
        } else {
            j.gap = js[i].gap;
            c.lozenges[i].quadrants[1] = 0;
            c.lozenges[(i + 1) % n].quadrants[0] = js[i].gap + 1;
        }
        c.junctions.push_back(j);
    }
    return c;
}

std::string validation_code(const Chain& c) {
    try {
        validate_chain(c);
    } catch (const validation_error& e) {
        return e.code();
    }
    return "";
}

// -- oracles ------------------------------------------------------------------

// Independent acyclicity/connectivity check by plain union-find over the
// emitted tree (multi-edges close cycles too, which DFS-with-parent misses).
bool tree_oracle(const ChainTree& t) {
    std::vector<int> parent(t.vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& e : t.edges) {
        int a = find(e[0]), b = find(e[1]);
        if (a == b) return false; // cycle
        parent[a] = b;
    }
    int root = find(0);
    for (size_t i = 0; i < t.vertices.size(); ++i)
        if (find(static_cast<int>(i)) != root) return false; // disconnected
    return true;
}

// Splice-condition oracle, written directly against the two conditions.
bool merge_conditions_oracle(const Chain& c) {
    for (const Junction& j : c.junctions)
        if (j.kind != Junction::Kind::SharedSide) return false;
    for (size_t i = 0; i + 1 < c.junctions.size(); ++i)
        if (c.junctions[i].corner == c.junctions[i + 1].corner) return false;
    return true;
}

// -- random valid chains -------------------------------------------------------

Chain random_chain(std::mt19937& rng, int max_len) {
    std::uniform_int_distribution<int> len_d(1, max_len);
    std::uniform_int_distribution<int> prong_d(2, 4);
    std::uniform_int_distribution<int> coin(0, 1);
    const int n = len_d(rng);
    const bool cyclic = coin(rng) == 1 && n >= 1;

    Chain c;
    c.topology = cyclic ? ChainTopology::Cyclic : ChainTopology::Linear;
    int fresh = 0;
    auto new_corner = [&]() {
        Corner k{"k" + std::to_string(fresh++), prong_d(rng)};
        c.corners.push_back(k);
        return k;
    };
    auto prong_of = [&](const std::string& id) {
        for (const Corner& k : c.corners)
            if (k.id == id) return k.prong;
        return 2;
    };

    Corner first = new_corner();
    Corner second = new_corner();
    Lozenge l0;
    l0.corners = {first.id, second.id};
    l0.quadrants = {std::uniform_int_distribution<int>(0, 2 * first.prong - 1)(rng),
                    std::uniform_int_distribution<int>(0, 2 * second.prong - 1)(rng)};
    c.lozenges.push_back(l0);

    for (int i = 1; i < n; ++i) {
        const Lozenge& prev = c.lozenges.back();
        // attach at the exiting corner usually, sometimes at the entering one
        // (which manufactures triple-shared corners)
        const int slot = (coin(rng) == 0 || i == 1) ? 1 : (coin(rng) ? 1 : 0);
        const std::string at = prev.corners[slot];
        const int p = prong_of(at);
        const int q_prev = prev.quadrants[slot];

        Junction j;
        j.corner = at;
        int q_next;
        if (coin(rng) == 0) {
            j.kind = Junction::Kind::SharedSide;
            j.label = coin(rng) ? FoliationLabel::Plus : FoliationLabel::Minus;
            q_next = (q_prev + (coin(rng) ? 1 : 2 * p - 1)) % (2 * p);
        } else {
            j.kind = Junction::Kind::CornerOnly;
            const int d = std::uniform_int_distribution<int>(2, 2 * p - 2)(rng);
            q_next = (q_prev + d) % (2 * p);
            j.gap = coin(rng) ? d - 1 : 2 * p - 1 - d;
        }

        const bool last_of_cycle = cyclic && i == n - 1;
        Corner out = last_of_cycle ? Corner{c.lozenges[0].corners[0], prong_of(c.lozenges[0].corners[0])}
                                   : new_corner();
        Lozenge l;
        l.corners = {at, out.id};
        l.quadrants = {q_next, std::uniform_int_distribution<int>(0, 2 * out.prong - 1)(rng)};
        c.lozenges.push_back(l);
        c.junctions.push_back(j);
    }

    if (cyclic) {
        // closing junction, seam-consistent so the chain survives rotation
        const Lozenge& last = c.lozenges.back();
        const Lozenge& head = c.lozenges.front();
        const std::string at = n == 1 ? last.corners[0] : last.corners[1];
        const int p = prong_of(at);
        Junction j;
        j.corner = at;
        if (n == 1) {
            j.kind = Junction::Kind::CornerOnly;
            j.gap = std::uniform_int_distribution<int>(1, 2 * p - 2)(rng);
        } else {
            const int q_last = last.quadrants[1];
            const int q_head = head.quadrants[0];
            int d = ((q_head - q_last) % (2 * p) + 2 * p) % (2 * p);
            if (d == 1 || d == 2 * p - 1) {
                j.kind = Junction::Kind::SharedSide;
                j.label = coin(rng) ? FoliationLabel::Plus : FoliationLabel::Minus;
            } else if (d >= 2 && d <= 2 * p - 2) {
                j.kind = Junction::Kind::CornerOnly;
                j.gap = coin(rng) ? d - 1 : 2 * p - 1 - d;
            } else { // d == 0: nudge the head quadrant to make the seam legal
                Lozenge& h = c.lozenges.front();
                h.quadrants[0] = (q_last + 1) % (2 * p);
                j.kind = Junction::Kind::SharedSide;
                j.label = coin(rng) ? FoliationLabel::Plus : FoliationLabel::Minus;
            }
        }
        c.junctions.push_back(j);
    }
    return c;
}

} // namespace

// -----------------------------------------------------------------------------

TEST_CASE("validate_chain accepts small well-formed chains") {
    SECTION("single lozenge, no junctions") {
        Chain c = path_chain({});
        REQUIRE(c.lozenges.size() == 1);
        REQUIRE_NOTHROW(validate_chain(c));
    }
    SECTION("two lozenges sharing a side") {
        Chain c = path_chain({side(FoliationLabel::Plus)});
        REQUIRE_NOTHROW(validate_chain(c));
    }
    SECTION("two lozenges sharing only a corner, gap 1") {
        Chain c = path_chain({corner1()});
        REQUIRE_NOTHROW(validate_chain(c));
    }
    SECTION("cyclic one-lozenge chain closing around a corner") {
        Chain c;
        c.topology = ChainTopology::Cyclic;
        c.corners = {{"a", 2}, {"b", 2}};
        c.lozenges = {{{"a", "b"}, {0, 0}}};
        Junction j;
        j.kind = Junction::Kind::CornerOnly;
        j.corner = "a";
        j.gap = 2;
        c.junctions = {j};
        REQUIRE_NOTHROW(validate_chain(c));
    }
}

TEST_CASE("validate_chain rejects malformed chains with the documented codes") {
    SECTION("no lozenges") {
        Chain c;
        REQUIRE(validation_code(c) == "EmptyChain");
    }
    SECTION("junction names a corner of only one lozenge") {
        Chain c = path_chain({side(FoliationLabel::Plus)});
        c.junctions[0].corner = "c0"; // corner of lozenge 0 only
        REQUIRE(validation_code(c) == "MalformedJunction");
    }
    SECTION("junction count mismatch") {
        Chain c = path_chain({side(FoliationLabel::Plus)});
        c.junctions.clear();
        REQUIRE(validation_code(c) == "MalformedJunction");
    }
    SECTION("corner-only gap below range") {
        Chain c = path_chain({corner1()});
        c.junctions[0].gap = 0;
        REQUIRE(validation_code(c) == "GapOutOfRange");
    }
    SECTION("corner-only gap above range at a regular corner") {
        Chain c = path_chain({corner1()});
        c.junctions[0].gap = 3; // 2p-2 = 2
        REQUIRE(validation_code(c) == "GapOutOfRange");
    }
    SECTION("declared shared side but non-adjacent quadrants") {
        Chain c = path_chain({side(FoliationLabel::Plus)});
        c.lozenges[1].quadrants[0] = 2; // two quadrants away from the exit
        REQUIRE(validation_code(c) == "MalformedJunction");
    }
    SECTION("declared gap inconsistent with quadrants") {
        Chain c = path_chain({corner1()});
        c.junctions[0].gap = 2; // both circular gaps are 1 at a regular corner
        REQUIRE(validation_code(c) == "GapOutOfRange");
    }
    SECTION("lozenge with equal corners") {
        Chain c = path_chain({});
        c.lozenges[0].corners[1] = c.lozenges[0].corners[0];
        REQUIRE(validation_code(c) == "MalformedJunction");
    }
    SECTION("unknown corner id") {
        Chain c = path_chain({});
        c.lozenges[0].corners[1] = "ghost";
        REQUIRE(validation_code(c) == "MalformedJunction");
    }
    SECTION("quadrant out of range") {
        Chain c = path_chain({});
        c.lozenges[0].quadrants[0] = 4; // prong 2 has quadrants 0..3
        REQUIRE(validation_code(c) == "MalformedJunction");
    }
    SECTION("corner id reused at junction-unrelated positions") {
        // c0-c1, c1-c2, c2-c0 would close an incidence cycle
        Chain c = path_chain({side(FoliationLabel::Plus), side(FoliationLabel::Plus)});
        c.lozenges[2].corners[1] = "c0";
        c.corners.pop_back(); // drop the now-unused c3
        REQUIRE(validation_code(c) == "MalformedJunction");
    }
}

TEST_CASE("chain_tree produces the documented small trees") {
    SECTION("one lozenge: path on 2 vertices") {
        ChainTree t = chain_tree(path_chain({}));
        REQUIRE(t.vertices.size() == 2);
        REQUIRE(t.edges.size() == 1);
    }
    SECTION("two side-sharing lozenges: path on 3 vertices") {
        ChainTree t = chain_tree(path_chain({side(FoliationLabel::Minus)}));
        REQUIRE(t.vertices.size() == 3);
        REQUIRE(t.edges.size() == 2);
    }
    SECTION("string of three lozenges: path on 4 vertices") {
        ChainTree t = chain_tree(path_chain({corner1(), corner1()}));
        REQUIRE(t.vertices.size() == 4);
        REQUIRE(t.edges.size() == 3);
        REQUIRE(tree_oracle(t));
    }
    SECTION("cyclic two-lozenge string unrolls with a shifted corner copy") {
        Chain c = path_chain({corner1(), corner1()}, ChainTopology::Cyclic);
        ChainTree t = chain_tree(c);
        REQUIRE(t.vertices.size() == 3);
        REQUIRE(t.edges.size() == 2);
        int shifted = 0;
        for (const auto& v : t.vertices) shifted += v.shifted ? 1 : 0;
        REQUIRE(shifted == 1);
        bool found = false;
        for (const auto& v : t.vertices) found = found || v.label == "c0+1";
        REQUIRE(found);
        REQUIRE(tree_oracle(t));
    }
    SECTION("cyclic one-lozenge chain: shift fixes the corner, no split") {
        Chain c;
        c.topology = ChainTopology::Cyclic;
        c.corners = {{"a", 3}, {"b", 2}};
        c.lozenges = {{{"a", "b"}, {0, 0}}};
        Junction j;
        j.kind = Junction::Kind::CornerOnly;
        j.corner = "a";
        j.gap = 3;
        c.junctions = {j};
        ChainTree t = chain_tree(c);
        REQUIRE(t.vertices.size() == 2);
        REQUIRE(t.edges.size() == 1);
        for (const auto& v : t.vertices) REQUIRE_FALSE(v.shifted);
    }
}

TEST_CASE("chain_tree is acyclic and connected on random valid chains") {
    std::mt19937 rng(20260813u);
    for (int trial = 0; trial < 600; ++trial) {
        Chain c = random_chain(rng, 12);
        INFO("trial " << trial << ", " << c.lozenges.size() << " lozenges, "
                      << (c.topology == ChainTopology::Cyclic ? "cyclic" : "linear"));
        REQUIRE_NOTHROW(validate_chain(c));
        ChainTree t = chain_tree(c);
        REQUIRE(tree_oracle(t));
        REQUIRE(t.edges.size() == c.lozenges.size());
        REQUIRE(t.vertices.size() == t.edges.size() + 1);
    }
}

TEST_CASE("is_minimal matches the three-consecutive-corners characterization") {
    SECTION("two junctions at distinct corners: minimal") {
        Chain c = path_chain({corner1(), corner1()}, ChainTopology::Cyclic);
        REQUIRE(is_minimal(c));
    }
    SECTION("junctions 1 and 2 at the same corner: not minimal") {
        // A fan: L0=(a,b), L1=(b,c), L2=(b,d), every junction at b.
        Chain c;
        c.topology = ChainTopology::Cyclic;
        c.corners = {{"a", 3}, {"b", 3}, {"c", 2}, {"d", 2}};
        c.lozenges = {{{"a", "b"}, {0, 0}},
                      {{"b", "c"}, {1, 0}},
                      {{"b", "d"}, {2, 0}}};
        Junction j0{Junction::Kind::SharedSide, "b", FoliationLabel::Plus, 0};
        Junction j1{Junction::Kind::SharedSide, "b", FoliationLabel::Minus, 0};
        Junction close{Junction::Kind::CornerOnly, "b", FoliationLabel::Plus, 1};
        c.junctions = {j0, j1, close};
        REQUIRE_NOTHROW(validate_chain(c));
        REQUIRE_FALSE(is_minimal(c));
        // the shift fixes b here, so the unrolled tree needs no split copy
        ChainTree t = chain_tree(c);
        REQUIRE(t.vertices.size() == 4);
        for (const auto& v : t.vertices) REQUIRE_FALSE(v.shifted);
    }
    SECTION("one-lozenge cyclic chain is never minimal") {
        Chain c;
        c.topology = ChainTopology::Cyclic;
        c.corners = {{"a", 2}, {"b", 2}};
        c.lozenges = {{{"a", "b"}, {0, 0}}};
        c.junctions = {{Junction::Kind::CornerOnly, "a", FoliationLabel::Plus, 2}};
        REQUIRE_FALSE(is_minimal(c));
    }
    SECTION("linear chains are rejected") {
        Chain c = path_chain({corner1()});
        REQUIRE_THROWS_AS(is_minimal(c), validation_error);
    }
    SECTION("invariant under rotation and reversal") {
        std::mt19937 rng(77u);
        int cyclic_seen = 0;
        for (int trial = 0; trial < 400 || cyclic_seen < 50; ++trial) {
            Chain c = random_chain(rng, 8);
            if (c.topology != ChainTopology::Cyclic) continue;
            ++cyclic_seen;
            const bool base = is_minimal(c);
            for (size_t s = 0; s < c.lozenges.size(); ++s)
                REQUIRE(is_minimal(rotated(c, s)) == base);
            REQUIRE(is_minimal(reversed(c)) == base);
            if (trial > 2000) break;
        }
        REQUIRE(cyclic_seen >= 50);
    }
}

TEST_CASE("classify_chain distinguishes lines, strings, and mixed chains") {
    SECTION("all SharedSide(Plus): line with label Plus") {
        Chain c = path_chain({side(FoliationLabel::Plus), side(FoliationLabel::Plus)});
        ChainClass r = classify_chain(c);
        REQUIRE(r.is_line);
        REQUIRE(r.line_label == FoliationLabel::Plus);
        REQUIRE_FALSE(r.is_string);
        REQUIRE_FALSE(r.mixed);
    }
    SECTION("all CornerOnly: string") {
        Chain c = path_chain({corner1(), corner1()});
        ChainClass r = classify_chain(c);
        REQUIRE(r.is_string);
        REQUIRE_FALSE(r.is_line);
        REQUIRE_FALSE(r.mixed);
    }
    SECTION("alternating kinds: mixed") {
        Chain c = path_chain({side(FoliationLabel::Plus), corner1()});
        ChainClass r = classify_chain(c);
        REQUIRE(r.mixed);
        REQUIRE_FALSE(r.is_line);
        REQUIRE_FALSE(r.is_string);
    }
    SECTION("shared sides with differing labels: not a line") {
        Chain c = path_chain({side(FoliationLabel::Plus), side(FoliationLabel::Minus)});
        ChainClass r = classify_chain(c);
        REQUIRE_FALSE(r.is_line);
        REQUIRE(r.mixed);
    }
    SECTION("single lozenge: vacuously both line and string, no label") {
        ChainClass r = classify_chain(path_chain({}));
        REQUIRE(r.is_line);
        REQUIRE_FALSE(r.line_label.has_value());
        REQUIRE(r.is_string);
        REQUIRE_FALSE(r.mixed);
    }
}

TEST_CASE("transverse_torus_criterion") {
    SECTION("minimal cyclic line: true") {
        Chain c = path_chain({side(FoliationLabel::Plus), side(FoliationLabel::Plus)},
                             ChainTopology::Cyclic);
        REQUIRE(transverse_torus_criterion(c));
    }
    SECTION("one CornerOnly junction: false") {
        Chain c = path_chain({side(FoliationLabel::Plus), corner1()}, ChainTopology::Cyclic);
        REQUIRE_FALSE(transverse_torus_criterion(c));
    }
    SECTION("all shared sides but a triple-shared corner: false") {
        // Both junctions (interior and closing) at b: L0, L1 and the shifted
        // copy of L0 all touch b.
        Chain c;
        c.topology = ChainTopology::Cyclic;
        c.corners = {{"a", 3}, {"b", 3}, {"c", 2}};
        c.lozenges = {{{"a", "b"}, {0, 0}}, {{"b", "c"}, {1, 0}}};
        Junction j0{Junction::Kind::SharedSide, "b", FoliationLabel::Plus, 0};
        Junction j1{Junction::Kind::SharedSide, "b", FoliationLabel::Plus, 0};
        c.junctions = {j0, j1};
        REQUIRE_NOTHROW(validate_chain(c));
        REQUIRE_FALSE(transverse_torus_criterion(c));
    }
    SECTION("criterion holds with mixed labels (not a line)") {
        Chain c = path_chain({side(FoliationLabel::Plus), side(FoliationLabel::Minus)},
                             ChainTopology::Cyclic);
        REQUIRE(transverse_torus_criterion(c));
        REQUIRE_FALSE(classify_chain(c).is_line);
        for (const Junction& j : c.junctions)
            REQUIRE(j.kind == Junction::Kind::SharedSide);
    }
    SECTION("linear chains are rejected") {
        REQUIRE_THROWS_AS(transverse_torus_criterion(path_chain({side(FoliationLabel::Plus)})),
                          validation_error);
    }
}

TEST_CASE("merge_chains splices side-sharing chains") {
    auto labels = [](int bits, size_t count) {
        std::vector<JunctionSpec> js;
        for (size_t i = 0; i < count; ++i)
            js.push_back(side((bits >> i) & 1 ? FoliationLabel::Plus : FoliationLabel::Minus));
        return js;
    };

    SECTION("documented splice [A,B,C] + [A,B,D] at k=1") {
        Chain w = path_chain(labels(0b11, 2));
        Chain w2 = w;
        w2.lozenges[2].corners[1] = "d";
        w2.corners.push_back({"d", 2});
        // w2's third lozenge now exits to a different corner: same prefix 0..1
        Chain m = merge_chains(w, w2, 1);
        REQUIRE(m.lozenges.size() == 3);
        REQUIRE(m.lozenges[2].corners[1] == "d");
        REQUIRE(merge_conditions_oracle(m));
    }
    SECTION("identity splice") {
        Chain w = path_chain(labels(0b101, 3));
        for (size_t k = 0; k < w.lozenges.size(); ++k) {
            Chain m = merge_chains(w, w, k);
            REQUIRE(m.lozenges.size() == w.lozenges.size());
            for (size_t i = 0; i < m.lozenges.size(); ++i)
                REQUIRE(m.lozenges[i] == w.lozenges[i]);
        }
    }
    SECTION("prefix mismatch is rejected") {
        Chain w = path_chain(labels(0b0, 2));
        Chain w2 = path_chain(labels(0b1, 2)); // differing junction label at index 0
        REQUIRE_THROWS_AS(merge_chains(w, w2, 1), validation_error);
        try {
            merge_chains(w, w2, 1);
        } catch (const validation_error& e) {
            REQUIRE(e.code() == "PrefixMismatch");
        }
    }
    SECTION("corner-only junction violates condition (ii)") {
        Chain w = path_chain({corner1()});
        REQUIRE_THROWS_AS(merge_chains(w, w, 0), validation_error);
        try {
            merge_chains(w, w, 0);
        } catch (const validation_error& e) {
            REQUIRE(e.code() == "ConditionViolation");
        }
    }
    SECTION("triple-shared corner violates condition (i)") {
        Chain w;
        w.topology = ChainTopology::Linear;
        w.corners = {{"a", 2}, {"b", 3}, {"c", 2}, {"d", 2}};
        w.lozenges = {{{"a", "b"}, {0, 0}}, {{"b", "c"}, {1, 0}}, {{"b", "d"}, {2, 0}}};
        Junction j0{Junction::Kind::SharedSide, "b", FoliationLabel::Plus, 0};
        Junction j1{Junction::Kind::SharedSide, "b", FoliationLabel::Plus, 0};
        w.junctions = {j0, j1};
        REQUIRE_NOTHROW(validate_chain(w));
        try {
            merge_chains(w, w, 2);
            FAIL("expected ConditionViolation");
        } catch (const validation_error& e) {
            REQUIRE(e.code() == "ConditionViolation");
        }
    }
    SECTION("exhaustive splices of side-sharing chains up to length 6") {
        long cases = 0;
        for (size_t n1 = 1; n1 <= 6; ++n1)
            for (size_t n2 = 1; n2 <= 6; ++n2)
                for (size_t k = 0; k < std::min(n1, n2); ++k)
                    for (int b1 = 0; b1 < (1 << (n1 - 1)); ++b1)
                        for (int b2 = 0; b2 < (1 << (n2 > k + 1 ? n2 - 1 - k : 0)); ++b2) {
                            Chain w = path_chain(labels(b1, n1 - 1));
                            // w2: same prefix through index k, fresh tail
                            std::vector<JunctionSpec> js2;
                            for (size_t i = 0; i + 1 < n2; ++i) {
                                if (i < k)
                                    js2.push_back(side((b1 >> i) & 1 ? FoliationLabel::Plus
                                                                     : FoliationLabel::Minus));
                                else
                                    js2.push_back(side((b2 >> (i - k)) & 1 ? FoliationLabel::Plus
                                                                           : FoliationLabel::Minus));
                            }
                            Chain w2 = path_chain(js2);
                            // rename w2's corners after the agreement point so the
                            // tails genuinely diverge
                            for (size_t i = k + 2; i <= n2; ++i) {
                                std::string fresh = "t" + std::to_string(i);
                                for (Corner& kc : w2.corners)
                                    if (kc.id == "c" + std::to_string(i)) kc.id = fresh;
                                for (Lozenge& l : w2.lozenges)
                                    for (auto& cid : l.corners)
                                        if (cid == "c" + std::to_string(i)) cid = fresh;
                                for (Junction& j : w2.junctions)
                                    if (j.corner == "c" + std::to_string(i)) j.corner = fresh;
                            }
                            Chain m = merge_chains(w, w2, k);
                            ++cases;
                            REQUIRE(m.lozenges.size() == k + 1 + (n2 - (k + 1)));
                            REQUIRE(merge_conditions_oracle(m));
                            for (size_t i = 0; i <= k; ++i) REQUIRE(m.lozenges[i] == w.lozenges[i]);
                            for (size_t i = k + 1; i < n2; ++i)
                                REQUIRE(m.lozenges[i] == w2.lozenges[i]);
                        }
        REQUIRE(cases > 1000);
    }
}

TEST_CASE("junction_parity") {
    SECTION("shared side: even") {
        Junction j{Junction::Kind::SharedSide, "a", FoliationLabel::Minus, 0};
        REQUIRE(junction_parity(j) == Parity::Even);
    }
    SECTION("gap 1 at a regular corner: odd") {
        Junction j{Junction::Kind::CornerOnly, "a", FoliationLabel::Plus, 1};
        REQUIRE(junction_parity(j) == Parity::Odd);
    }
    SECTION("gap 2 at a 3-prong corner: even") {
        Junction j{Junction::Kind::CornerOnly, "a", FoliationLabel::Plus, 2};
        REQUIRE(junction_parity(j) == Parity::Even);
    }
    SECTION("invariant under swapping the designated side") {
        for (int p = 2; p <= 5; ++p)
            for (int g = 1; g <= 2 * p - 3; ++g) {
                Junction a{Junction::Kind::CornerOnly, "x", FoliationLabel::Plus, g};
                Junction b{Junction::Kind::CornerOnly, "x", FoliationLabel::Plus, 2 * p - 2 - g};
                REQUIRE(junction_parity(a) == junction_parity(b));
            }
    }
}
