// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
//
//   acceptance <cli-binary> <data-dir> <golden-dir> <manifest>
//
// Criteria 1-10 exercise the library against closed forms, exhaustive small
// families, and independent oracles implemented locally in this file.
// Criterion 11 replays every manifest command through the CLI twice and
// demands byte equality between both runs and the frozen golden files.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <orbitcalc/actions.hpp>
#include <orbitcalc/birkhoff.hpp>
#include <orbitcalc/blockflow.hpp>
#include <orbitcalc/chain.hpp>
#include <orbitcalc/errors.hpp>
#include <orbitcalc/fatgraph.hpp>
#include <orbitcalc/smale.hpp>

using namespace orbitcalc;

namespace {

constexpr auto P = FoliationLabel::Plus;
constexpr auto M = FoliationLabel::Minus;

// A criterion body returns "" on success or a short failure description.
using Body = std::function<std::string()>;

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

// ---------------------------------------------------------------------------
// Shared construction helpers (mirroring the demo inputs)

AnnulusCombinatorics ann(const std::vector<FoliationLabel>& leaves,
                         const std::string& b0 = "x", const std::string& b1 = "y") {
    AnnulusCombinatorics a;
    a.boundary = {b0, b1};
    a.interior_leaves = leaves;
    return a;
}

TorusItem annulus_item(const AnnulusCombinatorics& a) {
    TorusItem it;
    it.kind = TorusItem::Kind::Annulus;
    it.annulus = a;
    return it;
}

TorusItem orbit_item(int gap, int prong = 2) {
    TorusItem it;
    it.kind = TorusItem::Kind::Orbit;
    it.gap = gap;
    it.prong = prong;
    return it;
}

TorusItem glue_item(FoliationLabel l) {
    TorusItem it;
    it.kind = TorusItem::Kind::Glue;
    it.label = l;
    return it;
}

Fatgraph two_vertex_parallel(int n_edges) {
    Fatgraph fg;
    Fatgraph::Vertex u{"u", {}}, v{"v", {}};
    for (int i = 1; i <= n_edges; ++i) {
        const std::string a = "e" + std::to_string(i) + ".u";
        const std::string b = "e" + std::to_string(i) + ".v";
        fg.edges.push_back({a, b});
        u.order.push_back(a);
    }
    for (int i = n_edges; i >= 1; --i) v.order.push_back("e" + std::to_string(i) + ".v");
    fg.vertices = {u, v};
    return fg;
}

Fatgraph figure_eight() {
    Fatgraph fg;
    fg.vertices = {{"v", {"a1", "a2", "b1", "b2"}}};
    fg.edges = {{"a1", "a2"}, {"b1", "b2"}};
    return fg;
}

Fatgraph loop_vertex() {
    Fatgraph fg;
    fg.vertices = {{"v", {"m1", "m2"}}};
    fg.edges = {{"m1", "m2"}};
    return fg;
}

// Linear chain c0 - c1 - ... with a shared side at every junction; bit i of
// `labels` picks the label of junction i.
Chain side_path_chain(size_t lozenges, int labels) {
    Chain c;
    c.topology = ChainTopology::Linear;
    for (size_t i = 0; i <= lozenges; ++i) c.corners.push_back({"c" + std::to_string(i), 2});
    for (size_t i = 0; i < lozenges; ++i) {
        Lozenge l;
        l.corners = {"c" + std::to_string(i), "c" + std::to_string(i + 1)};
        c.lozenges.push_back(l);
    }
    for (size_t i = 0; i + 1 < lozenges; ++i) {
        Junction j;
        j.kind = Junction::Kind::SharedSide;
        j.corner = "c" + std::to_string(i + 1);
        j.label = (labels >> i) & 1 ? P : M;
        c.lozenges[i].quadrants[1] = 0;
        c.lozenges[i + 1].quadrants[0] = 1;
        c.junctions.push_back(j);
    }
    return c;
}

// Splice-condition oracle, written directly against the two conditions.
bool merge_conditions_oracle(const Chain& c) {
    for (const Junction& j : c.junctions)
        if (j.kind != Junction::Kind::SharedSide) return false;
    for (size_t i = 0; i + 1 < c.junctions.size(); ++i)
        if (c.junctions[i].corner == c.junctions[i + 1].corner) return false;
    return true;
}

Mat2i mat_mul(const Mat2i& a, const Mat2i& b) {
    Mat2i r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

Mat2i mat_pow_abs(const Mat2i& a, long long n) {
    Mat2i r{{{1, 0}, {0, 1}}};
    for (long long i = 0; i < std::llabs(n); ++i) r = mat_mul(r, a);
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 11 plumbing

struct RunResult {
    int exit = -1;
    std::string output;
};

RunResult run_command(const std::string& shell_cmd) {
    RunResult r;
    FILE* pipe = popen(shell_cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) r.exit = WEXITSTATUS(status);
    return r;
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct ManifestRow {
    std::string file;
    int expect = 0;
    std::string args;
};

std::vector<ManifestRow> load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read manifest '" + path + "'");
    std::vector<ManifestRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const size_t p1 = line.find('|');
        const size_t p2 = line.find('|', p1 + 1);
        if (p1 == std::string::npos || p2 == std::string::npos)
            throw std::runtime_error("malformed manifest line: " + line);
        rows.push_back({line.substr(0, p1), std::stoi(line.substr(p1 + 1, p2 - p1 - 1)),
                        line.substr(p2 + 1)});
    }
    return rows;
}

std::string expand(std::string s, const std::string& token, const std::string& value) {
    size_t pos = 0;
    while ((pos = s.find(token, pos)) != std::string::npos) {
        s.replace(pos, token.size(), value);
        pos += value.size();
    }
    return s;
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const std::string data_dir = argc > 2 ? argv[2] : "";
    const std::string golden_dir = argc > 3 ? argv[3] : "";
    const std::string manifest = argc > 4 ? argv[4] : "";

    std::vector<std::pair<std::string, Body>> criteria;

    // 1 -------------------------------------------------------------------
    criteria.emplace_back("block transit closed forms", [] {
        const auto t0 = std::chrono::steady_clock::now();
        for (double lambda : {1.5, 2.0, 4.0})
            for (double x : {0.0, 0.3, -0.3, 0.7, -0.7, 1.2, -1.2, 1.4, -1.4}) {
                const TransitRecord rec = transit_map(x, 0.0, BlockParams{lambda});
                const double T = M_PI / std::cos(x);
                const double dz = 2.0 * lambda * x / std::cos(x);
                if (std::abs(rec.time - T) > 1e-6)
                    return "T(" + fmt(x) + ") off by " + fmt(rec.time - T);
                if (std::abs(rec.delta_z - dz) > 1e-6)
                    return "delta_z(" + fmt(x) + ", lambda=" + fmt(lambda) + ") off by " +
                           fmt(rec.delta_z - dz);
            }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs >= 5.0) return "27 transits took " + fmt(secs) + " s (budget 5 s)";
        return std::string();
    });

    // 2 -------------------------------------------------------------------
    criteria.emplace_back("block symmetry and shear linearity", [] {
        for (double lambda : {1.5, 2.0, 4.0})
            for (double x : {0.3, 0.7, 1.2}) {
                const TransitRecord plus = transit_map(x, 0.0, BlockParams{lambda});
                const TransitRecord minus = transit_map(-x, 0.0, BlockParams{lambda});
                if (std::abs(plus.time - minus.time) > 1e-8)
                    return "T asymmetric at x=" + fmt(x);
                if (std::abs(plus.delta_z + minus.delta_z) > 1e-8)
                    return "delta_z not odd at x=" + fmt(x);
            }
        for (double x : {0.3, 0.7, 1.2}) {
            const double q15 = transit_map(x, 0.0, BlockParams{1.5}).delta_z / 1.5;
            const double q40 = transit_map(x, 0.0, BlockParams{4.0}).delta_z / 4.0;
            if (std::abs(q15 - q40) > 1e-8)
                return "delta_z/lambda differs by " + fmt(q15 - q40) + " at x=" + fmt(x);
        }
        return std::string();
    });

    // 3 -------------------------------------------------------------------
    criteria.emplace_back("annulus/chain roundtrip, 2046 words", [] {
        long cases = 0;
        for (int len = 1; len <= 10; ++len)
            for (long bits = 0; bits < (1L << len); ++bits) {
                AnnulusCombinatorics a = ann({}, "left", "right");
                for (int i = 0; i < len; ++i)
                    a.interior_leaves.push_back((bits >> i) & 1 ? P : M);
                const Chain c = annulus_to_chain(a);
                if (c.topology != ChainTopology::Linear) return std::string("trace not linear");
                validate_chain(c);
                if (c.lozenges.size() != a.interior_leaves.size() + 1)
                    return std::string("wrong lozenge count");
                if (!no_triple_shared_corner(c)) return std::string("triple shared corner");
                for (size_t i = 0; i < c.junctions.size(); ++i) {
                    if (c.junctions[i].kind != Junction::Kind::SharedSide)
                        return std::string("junction is not a shared side");
                    if (c.junctions[i].label != a.interior_leaves[i])
                        return std::string("junction label out of order");
                }
                if (c.lozenges.front().corners[0] != "left" ||
                    c.lozenges.back().corners[1] != "right")
                    return std::string("boundary corners lost");
                if (!(chain_to_annulus(c) == a)) return std::string("roundtrip failed");
                ++cases;
            }
        if (cases != 2046) return "expected 2046 cases, ran " + std::to_string(cases);
        return std::string();
    });

    // 4 -------------------------------------------------------------------
    criteria.emplace_back("Reeb bands by separation parity, words <= 12", [] {
        for (int len = 0; len <= 12; ++len)
            for (long bits = 0; bits < (1L << len); ++bits) {
                AnnulusCombinatorics a = ann({});
                for (int i = 0; i < len; ++i)
                    a.interior_leaves.push_back((bits >> i) & 1 ? P : M);
                const FoliationComponentReport r = foliation_components(a);
                for (const auto& comp : r.components)
                    if (comp.reeb != (comp.separating_count % 2 != 0))
                        return "parity violated for word bits=" + std::to_string(bits) +
                               " len=" + std::to_string(len);
            }
        return std::string();
    });

    // 5 -------------------------------------------------------------------
    criteria.emplace_back("quasi-transverse torus trio", [] {
        TorusCombinatorics geodesic;
        geodesic.items = {annulus_item(ann({}, "a", "r")), orbit_item(1),
                          annulus_item(ann({}, "r", "a")), orbit_item(1)};
        const TorusClassification g = classify_torus(geodesic);
        if (!(g.alternating && g.maximally_transverse && g.maximally_periodic && !g.transverse &&
              !g.one_sided))
            return std::string("geodesic-model torus misclassified");

        TorusCombinatorics allglue;
        allglue.items = {annulus_item(ann({P}, "g", "g")), glue_item(P)};
        const TorusClassification t = classify_torus(allglue);
        if (!(t.transverse && t.maximally_transverse))
            return std::string("all-glue torus not transverse");

        TorusCombinatorics onesided;
        onesided.items = {annulus_item(ann({M}, "g", "g")), orbit_item(1)};
        const TorusClassification o = classify_torus(onesided);
        if (!(o.one_sided && !o.alternating && o.maximally_transverse))
            return std::string("single-orbit torus not one-sided");
        return std::string();
    });

    // 6 -------------------------------------------------------------------
    criteria.emplace_back("fatgraph admissibility and assembly", [] {
        const AdmissibilityReport rep = check_admissible(two_vertex_parallel(4));
        if (!rep.verdict) return std::string("2v/4-edge graph rejected");
        if (rep.loop_edge_counts != std::vector<int>({2, 2, 2, 2}))
            return std::string("expected 4 boundary loops of 2 sides");

        const SeifertPieceDescriptor piece = assemble(two_vertex_parallel(4));
        if (piece.surface.chi != -2) return "chi = " + std::to_string(piece.surface.chi);
        if (piece.surface.genus != 0 || !piece.surface.orientable)
            return std::string("expected an orientable genus-0 surface");
        if (piece.boundary_tori.size() != 4)
            return "expected 4 boundary tori, got " + std::to_string(piece.boundary_tori.size());
        int ins = 0;
        for (const auto& bt : piece.boundary_tori) {
            ins += bt.side == "in" ? 1 : 0;
            const Chain& tr = bt.trace;
            validate_chain(tr);
            if (tr.topology != ChainTopology::Cyclic) return std::string("trace not cyclic");
            if (!is_minimal(tr)) return std::string("trace not minimal");
            if (tr.junctions.size() % 2 != 0)
                return std::string("trace has oddly many junctions");
            for (const Junction& j : tr.junctions)
                if (j.kind != Junction::Kind::CornerOnly || j.gap % 2 == 0)
                    return std::string("trace junction not an odd-gap corner contact");
        }
        if (ins != 2) return "expected 2 'in' tori, got " + std::to_string(ins);

        const AdmissibilityReport fig8 = check_admissible(figure_eight());
        if (fig8.verdict || fig8.failure_reasons != std::vector<std::string>({"odd_loop_parity"}))
            return std::string("figure-eight reasons wrong");
        const AdmissibilityReport loop = check_admissible(loop_vertex());
        if (loop.verdict ||
            loop.failure_reasons != std::vector<std::string>({"odd_loop_parity", "below_min_valence"}))
            return std::string("valence-2 loop reasons wrong");
        for (const Fatgraph& bad : {figure_eight(), loop_vertex()}) {
            try {
                assemble(bad);
                return std::string("assemble accepted an inadmissible spine");
            } catch (const validation_error& e) {
                if (std::string(e.code()) != "NotAdmissible") return "assemble threw " + e.code();
            }
        }
        return std::string();
    });

    // 7 -------------------------------------------------------------------
    criteria.emplace_back("suspension orbit counts and freeness", [] {
        const std::array<long long, 3> expected{1, 5, 16};
        for (long long n = 1; n <= 3; ++n) {
            const long long got = suspension_orbit_count(n);
            const Mat2i An = mat_pow_abs(kDefaultSuspensionMatrix, n);
            const long long lefschetz =
                std::llabs((An[0][0] - 1) * (An[1][1] - 1) - An[0][1] * An[1][0]);
            if (got != expected[static_cast<size_t>(n - 1)])
                return "count(" + std::to_string(n) + ") = " + std::to_string(got);
            if (got != lefschetz)
                return "count(" + std::to_string(n) + ") disagrees with the Lefschetz oracle";
        }
        for (long long n = -3; n <= 3; ++n)
            for (long long vx = -3; vx <= 3; ++vx)
                for (long long vy = -3; vy <= 3; ++vy) {
                    if (n == 0 && vx == 0 && vy == 0) continue;
                    const FixedPointReport rep = suspension_fixed_points({n, {vx, vy}});
                    if (n == 0) {
                        if (rep.kind != FixedPointReport::Kind::Free)
                            return std::string("translation reported a fixed point");
                        continue;
                    }
                    if (rep.kind != FixedPointReport::Kind::Unique)
                        return "element n=" + std::to_string(n) + " not unique-fixed";
                    Mat2i An = mat_pow_abs(kDefaultSuspensionMatrix, n);
                    if (n < 0) {
                        // A in SL(2,Z): A^-1 = [[d,-b],[-c,a]], then the |n|-th power
                        const Mat2i inv{{{An[1][1], -An[0][1]}, {-An[1][0], An[0][0]}}};
                        An = inv;
                    }
                    const long long det = (An[0][0] - 1) * (An[1][1] - 1) - An[0][1] * An[1][0];
                    if (det == 0) return std::string("degenerate element in the family");
                    const auto image = suspension_act({n, {vx, vy}}, rep.point);
                    if (std::abs(image[0] - rep.point[0]) > 1e-9 ||
                        std::abs(image[1] - rep.point[1]) > 1e-9)
                        return std::string("reported point is not fixed");
                }
        return std::string();
    });

    // 8 -------------------------------------------------------------------
    criteria.emplace_back("skew strip suite", [] {
        if (translation_number(eta(), 10000) != 1.0)
            return std::string("tau(eta) != 1 exactly");

        const SkewLiftElement hyp = skew_element({std::exp(1.0), 0.0, 0.0, std::exp(-1.0)});
        const double tau = translation_number(hyp, 10000);
        if (std::abs(tau) > 1e-4) return "hyperbolic zero-lift tau = " + fmt(tau);

        const FixedPointReport rep = skew_fixed_points(hyp);
        if (rep.circle_fixed_points.size() != 2)
            return std::string("expected two circle fixed points");
        const auto& c0 = rep.circle_fixed_points[0];
        const auto& c1 = rep.circle_fixed_points[1];
        if (std::abs(c0.t - 0.0) > 1e-9 || !c0.attracting)
            return std::string("attracting fixed point not at 0");
        if (std::abs(c1.t - 0.5) > 1e-9 || c1.attracting)
            return std::string("repelling fixed point not at 1/2");

        for (const std::array<double, 2> p : {std::array<double, 2>{0.25, 0.5},
                                              std::array<double, 2>{-0.75, 0.0}}) {
            const auto twice = half_step_up(half_step_up(p));
            if (twice[0] != p[0] + 1.0 || twice[1] != p[1] + 1.0)
                return std::string("half_step_up^2 is not the one-step-up map");
        }

        const Chain str = lozenge_string_of(hyp);
        if (str.topology != ChainTopology::Cyclic || str.lozenges.size() != 2)
            return std::string("fixed string is not a cyclic 2-lozenge chain");
        if (!is_minimal(str) || !classify_chain(str).is_string)
            return std::string("fixed string is not a minimal string");
        return std::string();
    });

    // 9 -------------------------------------------------------------------
    criteria.emplace_back("Smale classes vs reachability oracle", [] {
        SmaleGraph fw;
        fw.nodes = {{"R", false, false}, {"A", false, false}};
        fw.edges = {{"R", "A"}};
        const SmaleClassification cfw = smale_classes(fw);
        if (cfw.classes.size() != 2 || cfw.classes[0].members != std::vector<std::string>({"R"}))
            return std::string("attractor/repeller classes wrong");
        if (cfw.order != std::vector<std::array<size_t, 2>>({{0, 1}}))
            return std::string("attractor/repeller order wrong");
        if (is_transitive(fw)) return std::string("two-class model reported transitive");

        SmaleGraph loop;
        loop.nodes = {{"x", false, false}};
        loop.edges = {{"x", "x"}};
        if (!is_transitive(loop)) return std::string("single loop not transitive");

        std::mt19937 rng(48121);
        std::uniform_int_distribution<size_t> size(1, 20);
        std::bernoulli_distribution singular(0.2), prong(0.15);
        for (int trial = 0; trial < 200; ++trial) {
            SmaleGraph g;
            const size_t n = size(rng);
            for (size_t i = 0; i < n; ++i)
                g.nodes.push_back({"n" + std::to_string(i), singular(rng), prong(rng)});
            std::uniform_real_distribution<double> density(0.0, 2.5);
            std::bernoulli_distribution edge(std::min(0.9, density(rng) / static_cast<double>(n)));
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) {
                    if (g.nodes[i].isolated_prong || g.nodes[j].isolated_prong) continue;
                    if (edge(rng)) g.edges.push_back({g.nodes[i].id, g.nodes[j].id});
                }

            // brute-force reachability
            std::map<std::string, size_t> index;
            for (size_t i = 0; i < n; ++i) index[g.nodes[i].id] = i;
            std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
            std::vector<std::vector<size_t>> adj(n);
            for (const auto& e : g.edges) adj[index.at(e[0])].push_back(index.at(e[1]));
            for (size_t s = 0; s < n; ++s) {
                std::vector<size_t> stack{s};
                std::vector<bool> seen(n, false);
                while (!stack.empty()) {
                    const size_t v = stack.back();
                    stack.pop_back();
                    for (size_t w : adj[v])
                        if (!seen[w]) {
                            seen[w] = true;
                            reach[s][w] = true;
                            stack.push_back(w);
                        }
                }
            }

            const SmaleClassification c = smale_classes(g);
            std::map<std::string, size_t> class_of;
            for (size_t ci = 0; ci < c.classes.size(); ++ci)
                for (const std::string& m : c.classes[ci].members) class_of[m] = ci;
            if (class_of.size() != n) return std::string("classes do not partition the nodes");
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) {
                    const bool together = class_of.at(g.nodes[i].id) == class_of.at(g.nodes[j].id);
                    const bool mutual = i == j || (reach[i][j] && reach[j][i]);
                    if (together != mutual) return std::string("class partition disagrees with oracle");
                }
            std::set<std::array<size_t, 2>> order(c.order.begin(), c.order.end());
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) {
                    const size_t ci = class_of.at(g.nodes[i].id);
                    const size_t cj = class_of.at(g.nodes[j].id);
                    if (ci == cj) continue;
                    if (order.count({ci, cj}) != (reach[i][j] ? 1u : 0u))
                        return std::string("quotient order disagrees with oracle");
                }
            for (const auto& [lo, hi] : order) {
                if (order.count({hi, lo})) return std::string("order not antisymmetric");
                for (const auto& [lo2, hi2] : order)
                    if (lo2 == hi && !order.count({lo, hi2}))
                        return std::string("order not transitive");
            }
        }
        return std::string();
    });

    // 10 ------------------------------------------------------------------
    criteria.emplace_back("splice conditions hold on chains <= 6", [] {
        long cases = 0;
        for (size_t n1 = 1; n1 <= 6; ++n1)
            for (size_t n2 = 1; n2 <= 6; ++n2)
                for (size_t k = 0; k < std::min(n1, n2); ++k)
                    for (int b1 = 0; b1 < (1 << (n1 - 1)); ++b1) {
                        const int tail_bits = n2 > k + 1 ? static_cast<int>(n2 - 1 - k) : 0;
                        for (int b2 = 0; b2 < (1 << tail_bits); ++b2) {
                            const Chain w = side_path_chain(n1, b1);
                            int labels2 = 0;
                            for (size_t i = 0; i + 1 < n2; ++i) {
                                const int bit = i < k ? (b1 >> i) & 1
                                                      : (b2 >> (i - k)) & 1;
                                labels2 |= bit << i;
                            }
                            Chain w2 = side_path_chain(n2, labels2);
                            // rename corners after the agreement point so tails diverge
                            for (size_t i = k + 2; i <= n2; ++i) {
                                const std::string old = "c" + std::to_string(i);
                                const std::string fresh = "t" + std::to_string(i);
                                for (Corner& kc : w2.corners)
                                    if (kc.id == old) kc.id = fresh;
                                for (Lozenge& l : w2.lozenges)
                                    for (auto& cid : l.corners)
                                        if (cid == old) cid = fresh;
                                for (Junction& j : w2.junctions)
                                    if (j.corner == old) j.corner = fresh;
                            }
                            const Chain m = merge_chains(w, w2, k);
                            validate_chain(m);
                            if (!merge_conditions_oracle(m))
                                return std::string("spliced chain violates (i) or (ii)");
                            if (m.lozenges.size() != n2)
                                return std::string("spliced chain has the wrong length");
                            for (size_t i = 0; i <= k; ++i)
                                if (!(m.lozenges[i] == w.lozenges[i]))
                                    return std::string("prefix not preserved");
                            ++cases;
                        }
                    }
        if (cases < 1000) return "family too small: " + std::to_string(cases);
        return std::string();
    });

    // 11 ------------------------------------------------------------------
    criteria.emplace_back("CLI determinism against frozen goldens", [&] {
        if (cli.empty() || data_dir.empty() || golden_dir.empty() || manifest.empty())
            return std::string("usage: acceptance <cli> <data-dir> <golden-dir> <manifest>");
        const std::vector<ManifestRow> rows = load_manifest(manifest);
        if (rows.empty()) return std::string("manifest is empty");
        for (const ManifestRow& row : rows) {
            const std::string args = expand(row.args, "@DATA@", data_dir);
            const std::string cmd = "\"" + cli + "\" " + args +
                                    (row.expect == 0 ? " 2>/dev/null" : " 2>&1 1>/dev/null");
            const RunResult first = run_command(cmd);
            const RunResult second = run_command(cmd);
            if (first.exit != row.expect)
                return row.file + ": exit " + std::to_string(first.exit) + ", expected " +
                       std::to_string(row.expect);
            if (first.exit != second.exit || first.output != second.output)
                return row.file + ": two runs differ";
            const auto golden = read_file(golden_dir + "/" + row.file);
            if (!golden) return row.file + ": golden file missing";
            if (first.output != *golden) return row.file + ": output drifted from golden";
        }
        return std::string();
    });

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        try {
            detail = criteria[i].second();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const bool ok = detail.empty();
        failures += ok ? 0 : 1;
        std::cout << (ok ? "PASS" : "FAIL") << "  " << std::setw(2) << i + 1 << "  "
                  << criteria[i].first << (ok ? "" : ": " + detail) << "\n";
    }
    return failures;
}
