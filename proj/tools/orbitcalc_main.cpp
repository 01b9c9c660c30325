// Command-line front door: load and validate JSON inputs, dispatch to the
// library, and emit JSON/DOT/SVG/CSV/text artifacts. Output is a pure
// function of the arguments, so golden-file tests can compare bytes.
//
// Exit codes: 0 success, 2 validation failure (bad input, schema, format,
// unknown command), 3 numeric failure (integration limits, overflow).

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <orbitcalc/emit.hpp>
#include <orbitcalc/json_io.hpp>

using namespace orbitcalc;

namespace {

struct GlobalOpts {
    std::string format = "json";
    std::string out;    // empty: stdout
    unsigned seed = 0;  // reserved for sampling commands
    double tol = 1e-10; // event tolerance for the block integrator
};

struct CmdOpts {
    std::string input;
    std::string input2;
    std::size_t at = 0;
    std::vector<std::string> surgeries;
    double lambda = 2.0;
    std::vector<double> xs;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    double time = 0.0;
    double h = 1e-3;
    double step = 1e-3;
    long long n = 0;
    long long big_n = 10000;
    long long times = 1;
};

// Positional inputs are file paths unless they look like inline JSON.
json load_input(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '{' || text[first] == '['))
        return parse_json_text(text);
    return parse_json_text(read_text_file(text));
}

[[noreturn]] void unsupported(const std::string& cmd, const std::string& fmt,
                              const std::string& supported) {
    throw validation_error("UnsupportedFormat", "'" + cmd + "' cannot emit '" + fmt +
                                                    "'; supported formats: " + supported);
}

void deliver(const std::string& artifact, const GlobalOpts& g) {
    if (g.out.empty())
        std::cout << artifact;
    else
        write_text_file(g.out, artifact);
}

std::string bool_word(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------------------
// chain

std::string run_chain_validate(const Chain& c, const std::string& fmt) {
    if (fmt == "json") return canonical_json(chain_to_json(c));
    if (fmt == "svg") return svg_chain(c);
    if (fmt == "text")
        return std::string("valid ") +
               (c.topology == ChainTopology::Cyclic ? "cyclic" : "linear") + " chain: " +
               std::to_string(c.lozenges.size()) + " lozenges, " +
               std::to_string(c.corners.size()) + " corners, " +
               std::to_string(c.junctions.size()) + " junctions\n";
    unsupported("chain validate", fmt, "json, svg, text");
}

std::string run_chain_classify(const Chain& c, const std::string& fmt) {
    const ChainClass cls = classify_chain(c);
    if (fmt == "json") return canonical_json(chain_class_to_json(cls));
    if (fmt == "text") {
        if (cls.is_line && cls.is_string) return "line string\n";
        if (cls.is_line) return "line\n";
        if (cls.is_string) return "string\n";
        return "mixed\n";
    }
    unsupported("chain classify", fmt, "json, text");
}

std::string run_chain_tree(const Chain& c, const std::string& fmt) {
    const ChainTree t = chain_tree(c);
    if (fmt == "json") return canonical_json(chain_tree_to_json(t));
    if (fmt == "dot") return dot_chain_tree(t);
    unsupported("chain tree", fmt, "json, dot");
}

std::string run_chain_merge(const Chain& w, const Chain& w2, std::size_t at,
                            const std::string& fmt) {
    const Chain merged = merge_chains(w, w2, at);
    if (fmt == "json") return canonical_json(chain_to_json(merged));
    if (fmt == "svg") return svg_chain(merged);
    unsupported("chain merge", fmt, "json, svg");
}

std::string run_chain_minimal(const Chain& c, const std::string& fmt) {
    const bool m = is_minimal(c);
    if (fmt == "json") return canonical_json(json{{"minimal", m}});
    if (fmt == "text") return bool_word(m) + "\n";
    unsupported("chain minimal", fmt, "json, text");
}

std::string run_chain_torus_criterion(const Chain& c, const std::string& fmt) {
    const bool ok = transverse_torus_criterion(c);
    if (fmt == "json") return canonical_json(json{{"transverse_torus_criterion", ok}});
    if (fmt == "text") return bool_word(ok) + "\n";
    unsupported("chain torus-criterion", fmt, "json, text");
}

// ---------------------------------------------------------------------------
// birkhoff

std::string run_birkhoff_to_chain(const AnnulusCombinatorics& a, const std::string& fmt) {
    const Chain c = annulus_to_chain(a);
    if (fmt == "json") return canonical_json(chain_to_json(c));
    if (fmt == "svg") return svg_chain(c);
    unsupported("birkhoff to-chain", fmt, "json, svg");
}

std::string run_birkhoff_from_chain(const Chain& c, const std::string& fmt) {
    const AnnulusCombinatorics a = chain_to_annulus(c);
    if (fmt == "json") return canonical_json(annulus_to_json(a));
    if (fmt == "svg") return svg_annulus(a);
    unsupported("birkhoff from-chain", fmt, "json, svg");
}

std::string run_birkhoff_foliation(const AnnulusCombinatorics& a, const std::string& fmt) {
    const FoliationComponentReport r = foliation_components(a);
    if (fmt == "json") return canonical_json(foliation_to_json(r));
    if (fmt == "text") {
        std::string out;
        for (const auto& c : r.components)
            out += std::string(to_string(c.label)) + " separating=" +
                   std::to_string(c.separating_count) + " reeb=" + bool_word(c.reeb) + "\n";
        return out;
    }
    unsupported("birkhoff foliation", fmt, "json, text");
}

std::string run_birkhoff_classify(const TorusCombinatorics& t, const std::string& fmt) {
    const TorusClassification c = classify_torus(t);
    if (fmt == "json") return canonical_json(torus_classification_to_json(c));
    if (fmt == "text") {
        std::string out;
        out += "transverse " + bool_word(c.transverse) + "\n";
        out += "maximally_transverse " + bool_word(c.maximally_transverse) + "\n";
        out += "maximally_periodic " + bool_word(c.maximally_periodic) + "\n";
        out += "alternating " + bool_word(c.alternating) + "\n";
        out += "one_sided " + bool_word(c.one_sided) + "\n";
        return out;
    }
    unsupported("birkhoff classify", fmt, "json, text");
}

// ---------------------------------------------------------------------------
// fatgraph

std::string run_fatgraph_validate(const Fatgraph& fg, const std::string& fmt) {
    const AdmissibilityReport rep = check_admissible(fg);
    if (fmt == "json") return canonical_json(admissibility_to_json(rep));
    if (fmt == "dot") return dot_fatgraph(fg);
    if (fmt == "text") {
        if (rep.verdict && rep.min_valence_ok) return "admissible\n";
        std::string out = "not admissible:";
        for (const auto& reason : rep.failure_reasons) out += " " + reason;
        return out + "\n";
    }
    unsupported("fatgraph validate", fmt, "json, dot, text");
}

std::vector<std::pair<std::string, int>> parse_surgeries(const std::vector<std::string>& specs) {
    std::vector<std::pair<std::string, int>> out;
    for (const std::string& s : specs) {
        const auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0)
            throw validation_error("InvalidParameter",
                                   "surgery must be vertex=coefficient, got '" + s + "'");
        try {
            out.emplace_back(s.substr(0, eq), std::stoi(s.substr(eq + 1)));
        } catch (const std::exception&) {
            throw validation_error("InvalidParameter",
                                   "surgery coefficient must be an integer, got '" + s + "'");
        }
    }
    return out;
}

std::string run_fatgraph_assemble(const Fatgraph& fg, const std::vector<std::string>& surgeries,
                                  const std::string& fmt) {
    const SeifertPieceDescriptor piece = assemble(fg, parse_surgeries(surgeries));
    if (fmt == "json") return canonical_json(seifert_piece_to_json(piece));
    unsupported("fatgraph assemble", fmt, "json");
}

std::string run_fatgraph_invariants(const Fatgraph& fg, const std::string& fmt) {
    const SurfaceInvariants s = surface_invariants(fg);
    if (fmt == "json") return canonical_json(surface_to_json(s));
    if (fmt == "text") {
        std::string out;
        out += "chi " + std::to_string(s.chi) + "\n";
        out += "boundary_count " + std::to_string(s.boundary_count) + "\n";
        out += "orientable " + bool_word(s.orientable) + "\n";
        out += s.orientable ? "genus " + std::to_string(s.genus) + "\n"
                            : "crosscaps " + std::to_string(s.crosscaps) + "\n";
        return out;
    }
    unsupported("fatgraph invariants", fmt, "json, text");
}

// ---------------------------------------------------------------------------
// block

std::string run_block_transit(const CmdOpts& o, const IntegratorConfig& cfg,
                              const std::string& fmt) {
    const TransitRecord rec = transit_map(o.x, o.z, BlockParams{o.lambda}, cfg);
    if (fmt == "json") return canonical_json(transit_to_json(rec));
    if (fmt == "csv") return csv_table({"x", "T", "delta_z"}, {{o.x, rec.time, rec.delta_z}});
    if (fmt == "text")
        return "T = " + num12(rec.time) + "\ndelta_z = " + num12(rec.delta_z) + "\n";
    unsupported("block transit", fmt, "json, csv, text");
}

std::string run_block_profile(const CmdOpts& o, const IntegratorConfig& cfg,
                              const std::string& fmt) {
    if (o.xs.empty())
        throw validation_error("InvalidParameter", "profile needs at least one --x value");
    const auto rows = shear_profile(BlockParams{o.lambda}, o.xs, cfg);
    if (fmt == "json") return canonical_json(profile_to_json(rows));
    if (fmt == "csv") {
        std::vector<std::vector<double>> table;
        for (std::size_t i = 0; i < rows.size(); ++i)
            table.push_back({o.xs[i], rows[i].time, rows[i].delta_z});
        return csv_table({"x", "T", "delta_z"}, table);
    }
    unsupported("block profile", fmt, "json, csv");
}

std::string run_block_orbit(const CmdOpts& o, const IntegratorConfig& cfg,
                            const std::string& fmt) {
    const auto samples = integrate_orbit({o.x, o.y, o.z}, o.time, BlockParams{o.lambda}, cfg);
    if (fmt == "json") return canonical_json(trajectory_to_json(samples));
    if (fmt == "csv") {
        std::vector<std::vector<double>> table;
        for (const TrajectorySample& s : samples)
            table.push_back({s.t, s.state.x, s.state.y, s.state.z});
        return csv_table({"t", "x", "y", "z"}, table);
    }
    unsupported("block orbit", fmt, "json, csv");
}

std::string run_block_derivative(const CmdOpts& o, const IntegratorConfig& cfg,
                                 const std::string& fmt) {
    const double d = transit_derivative(o.x, BlockParams{o.lambda}, cfg, o.h);
    if (fmt == "json")
        return canonical_json(json{{"derivative", round12(d)}, {"x", round12(o.x)}});
    if (fmt == "text") return num12(d) + "\n";
    unsupported("block derivative", fmt, "json, text");
}

// ---------------------------------------------------------------------------
// action

const SkewLiftElement& require_skew(const ActionElement& e, const std::string& op) {
    if (e.type != ActionElement::Type::Skew)
        throw validation_error("InvalidParameter", op + " applies to skew elements only");
    return e.skew;
}

std::string fixed_point_text(const FixedPointReport& rep) {
    switch (rep.kind) {
        case FixedPointReport::Kind::Free:
            return "free\n";
        case FixedPointReport::Kind::Unique:
            return "unique fixed point (" + num12(rep.point[0]) + ", " + num12(rep.point[1]) +
                   "); multipliers (" + num12(rep.multipliers[0]) + ", " +
                   num12(rep.multipliers[1]) + "); expanding " + rep.expanding + "\n";
        case FixedPointReport::Kind::CornerChain: {
            std::string out;
            for (const auto& fp : rep.circle_fixed_points)
                out += "t " + num12(fp.t) + " multiplier " + num12(fp.multiplier) + " " +
                       (fp.attracting ? "attracting" : "repelling") + "\n";
            return out;
        }
    }
    return "";
}

std::string run_action_fix(const ActionElement& e, const std::string& fmt) {
    FixedPointReport rep;
    switch (e.type) {
        case ActionElement::Type::Affine: rep = affine_fixed_point(e.affine); break;
        case ActionElement::Type::Suspension: rep = suspension_fixed_points(e.suspension); break;
        case ActionElement::Type::Skew: rep = skew_fixed_points(e.skew); break;
    }
    if (fmt == "json") return canonical_json(fixed_point_report_to_json(rep));
    if (fmt == "text") return fixed_point_text(rep);
    unsupported("action fix", fmt, "json, text");
}

std::string run_action_tau(const ActionElement& e, long long N, const std::string& fmt) {
    const double tau = translation_number(require_skew(e, "tau"), N);
    if (fmt == "json") return canonical_json(json{{"N", N}, {"tau", round12(tau)}});
    if (fmt == "text") return num12(tau) + "\n";
    unsupported("action tau", fmt, "json, text");
}

std::string run_action_lozenges(const ActionElement& e, const std::string& fmt) {
    const Chain c = lozenge_string_of(require_skew(e, "lozenges"));
    if (fmt == "json") return canonical_json(chain_to_json(c));
    if (fmt == "svg") return svg_chain(c);
    unsupported("action lozenges", fmt, "json, svg");
}

std::string run_action_check_a1(const ActionElement& e, const std::string& fmt) {
    A1Report rep;
    switch (e.type) {
        case ActionElement::Type::Affine: rep = check_axiom_A1(e.affine); break;
        case ActionElement::Type::Suspension: rep = check_axiom_A1(e.suspension); break;
        case ActionElement::Type::Skew: rep = check_axiom_A1(e.skew); break;
    }
    if (fmt == "json") return canonical_json(a1_to_json(rep));
    if (fmt == "text") return (rep.pass ? "pass: " : "fail: ") + rep.detail + "\n";
    unsupported("action check-a1", fmt, "json, text");
}

std::string run_action_count_orbits(const std::string& input, long long n, bool n_given,
                                    const std::string& fmt) {
    long long count = 0;
    if (!input.empty() && n_given)
        throw validation_error("InvalidParameter",
                               "count-orbits takes a suspension element or --n, not both");
    if (!input.empty()) {
        const ActionElement e = action_from_json(load_input(input));
        if (e.type != ActionElement::Type::Suspension)
            throw validation_error("InvalidParameter",
                                   "count-orbits applies to suspension elements only");
        count = suspension_orbit_count(e.suspension.n, e.suspension.A);
    } else if (n_given) {
        count = suspension_orbit_count(n);
    } else {
        throw validation_error("InvalidParameter",
                               "count-orbits needs a suspension element or --n");
    }
    if (fmt == "json") return canonical_json(json{{"count", count}});
    if (fmt == "text") return std::to_string(count) + "\n";
    unsupported("action count-orbits", fmt, "json, text");
}

std::string run_action_step_up(const CmdOpts& o, const std::string& fmt) {
    if (o.times < 1)
        throw validation_error("InvalidParameter", "--times must be at least 1");
    std::array<double, 2> p{o.x, o.y};
    for (long long i = 0; i < o.times; ++i) p = half_step_up(p);
    if (fmt == "json")
        return canonical_json(json{{"point", {round12(p[0]), round12(p[1])}}});
    if (fmt == "text") return num12(p[0]) + " " + num12(p[1]) + "\n";
    unsupported("action step-up", fmt, "json, text");
}

// ---------------------------------------------------------------------------
// smale

std::string run_smale_classes(const SmaleGraph& g, const std::string& fmt) {
    const SmaleClassification c = smale_classes(g);
    if (fmt == "json") return canonical_json(smale_classes_to_json(c));
    if (fmt == "dot") return dot_smale_classes(c);
    if (fmt == "text") {
        std::string out;
        for (std::size_t i = 0; i < c.classes.size(); ++i) {
            out += std::to_string(i) + ":";
            for (const auto& m : c.classes[i].members) out += " " + m;
            if (c.classes[i].singular) out += " (singular)";
            if (c.classes[i].isolated) out += " (isolated)";
            out += "\n";
        }
        return out;
    }
    unsupported("smale classes", fmt, "json, dot, text");
}

std::string run_smale_transitive(const SmaleGraph& g, const std::string& fmt) {
    const bool t = is_transitive(g);
    if (fmt == "json") return canonical_json(json{{"transitive", t}});
    if (fmt == "text") return bool_word(t) + "\n";
    unsupported("smale transitive", fmt, "json, text");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbit-space calculus for pseudo-Anosov flows: lozenge chains, "
                 "Birkhoff annuli, fatgraph Seifert pieces, model-block dynamics, "
                 "plane group actions, and Smale classes"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--format", g.format, "output format (json, dot, svg, csv, text)")
        ->capture_default_str();
    app.add_option("--out", g.out, "write the artifact to this path instead of stdout");
    app.add_option("--seed", g.seed, "seed for sampling commands (reserved)");
    app.add_option("--tol", g.tol, "event tolerance for the block integrator")
        ->capture_default_str();

    CmdOpts o;
    std::string artifact;

    // ----- chain ------------------------------------------------------------
    auto* chain = app.add_subcommand("chain", "lozenge chain combinatorics");
    chain->require_subcommand(1);
    chain->fallthrough();

    auto* c_validate = chain->add_subcommand("validate", "validate and canonicalize a chain");
    c_validate->add_option("input", o.input, "chain document (path or inline JSON)")->required();
    c_validate->callback(
        [&] { artifact = run_chain_validate(chain_from_json(load_input(o.input)), g.format); });

    auto* c_classify = chain->add_subcommand("classify", "line/string/mixed classification");
    c_classify->add_option("input", o.input, "chain document")->required();
    c_classify->callback(
        [&] { artifact = run_chain_classify(chain_from_json(load_input(o.input)), g.format); });

    auto* c_tree = chain->add_subcommand("tree", "corner incidence tree of a chain");
    c_tree->add_option("input", o.input, "chain document")->required();
    c_tree->callback(
        [&] { artifact = run_chain_tree(chain_from_json(load_input(o.input)), g.format); });

    auto* c_merge = chain->add_subcommand("merge", "splice a chain into another at a junction");
    c_merge->add_option("input", o.input, "host chain document")->required();
    c_merge->add_option("input2", o.input2, "chain document spliced in")->required();
    c_merge->add_option("--at", o.at, "junction index of the host chain")->required();
    c_merge->callback([&] {
        artifact = run_chain_merge(chain_from_json(load_input(o.input)),
                                   chain_from_json(load_input(o.input2)), o.at, g.format);
    });

    auto* c_minimal = chain->add_subcommand("minimal", "no two consecutive junctions share a corner");
    c_minimal->add_option("input", o.input, "chain document")->required();
    c_minimal->callback(
        [&] { artifact = run_chain_minimal(chain_from_json(load_input(o.input)), g.format); });

    auto* c_torus = chain->add_subcommand("torus-criterion",
                                          "all junctions share sides and the chain is minimal");
    c_torus->add_option("input", o.input, "chain document")->required();
    c_torus->callback([&] {
        artifact = run_chain_torus_criterion(chain_from_json(load_input(o.input)), g.format);
    });

    // ----- birkhoff ----------------------------------------------------------
    auto* birkhoff = app.add_subcommand("birkhoff", "Birkhoff annuli and quasi-transverse tori");
    birkhoff->require_subcommand(1);
    birkhoff->fallthrough();

    auto* b_to = birkhoff->add_subcommand("to-chain", "trace chain of an annulus");
    b_to->add_option("input", o.input, "annulus document")->required();
    b_to->callback([&] {
        artifact = run_birkhoff_to_chain(annulus_from_json(load_input(o.input)), g.format);
    });

    auto* b_from = birkhoff->add_subcommand("from-chain", "annulus combinatorics of a trace chain");
    b_from->add_option("input", o.input, "chain document")->required();
    b_from->callback([&] {
        artifact = run_birkhoff_from_chain(chain_from_json(load_input(o.input)), g.format);
    });

    auto* b_fol = birkhoff->add_subcommand("foliation", "induced foliation components");
    b_fol->add_option("input", o.input, "annulus document")->required();
    b_fol->callback([&] {
        artifact = run_birkhoff_foliation(annulus_from_json(load_input(o.input)), g.format);
    });

    auto* b_cls = birkhoff->add_subcommand("classify", "quasi-transverse torus classification");
    b_cls->add_option("input", o.input, "torus document")->required();
    b_cls->callback([&] {
        artifact = run_birkhoff_classify(torus_from_json(load_input(o.input)), g.format);
    });

    // ----- fatgraph ----------------------------------------------------------
    auto* fatgraph = app.add_subcommand("fatgraph", "ribbon graphs and Seifert pieces");
    fatgraph->require_subcommand(1);
    fatgraph->fallthrough();

    auto* f_validate = fatgraph->add_subcommand("validate", "admissibility report");
    f_validate->add_option("input", o.input, "fatgraph document")->required();
    f_validate->callback([&] {
        artifact = run_fatgraph_validate(fatgraph_from_json(load_input(o.input)), g.format);
    });

    auto* f_assemble = fatgraph->add_subcommand("assemble", "periodic Seifert piece descriptor");
    f_assemble->add_option("input", o.input, "fatgraph document")->required();
    f_assemble->add_option("--surgery", o.surgeries,
                           "vertex=coefficient Dehn surgery annotation (repeatable)");
    f_assemble->callback([&] {
        artifact = run_fatgraph_assemble(fatgraph_from_json(load_input(o.input)), o.surgeries,
                                         g.format);
    });

    auto* f_inv = fatgraph->add_subcommand("invariants", "thickened surface invariants");
    f_inv->add_option("input", o.input, "fatgraph document")->required();
    f_inv->callback([&] {
        artifact = run_fatgraph_invariants(fatgraph_from_json(load_input(o.input)), g.format);
    });

    // ----- block --------------------------------------------------------------
    auto* block = app.add_subcommand("block", "model block flow numerics");
    block->require_subcommand(1);
    block->fallthrough();
    IntegratorConfig cfg;

    auto* k_transit = block->add_subcommand("transit", "entry-to-exit map at one x");
    k_transit->add_option("--lambda", o.lambda, "shear strength (> 1)")->capture_default_str();
    k_transit->add_option("--x", o.x, "entry x coordinate")->capture_default_str();
    k_transit->add_option("--z", o.z, "entry z coordinate")->capture_default_str();
    k_transit->add_option("--step", o.step, "integrator step")->capture_default_str();
    k_transit->callback([&] {
        cfg.step = o.step;
        cfg.event_tol = g.tol;
        artifact = run_block_transit(o, cfg, g.format);
    });

    auto* k_profile = block->add_subcommand("profile", "transit table over entry x values");
    k_profile->add_option("--lambda", o.lambda, "shear strength (> 1)")->capture_default_str();
    k_profile->add_option("--x", o.xs, "entry x coordinate (repeatable)");
    k_profile->add_option("--step", o.step, "integrator step")->capture_default_str();
    k_profile->callback([&] {
        cfg.step = o.step;
        cfg.event_tol = g.tol;
        artifact = run_block_profile(o, cfg, g.format);
    });

    auto* k_orbit = block->add_subcommand("orbit", "sampled trajectory from a block state");
    k_orbit->add_option("--lambda", o.lambda, "shear strength (> 1)")->capture_default_str();
    k_orbit->add_option("--x", o.x, "x coordinate (invariant)")->capture_default_str();
    k_orbit->add_option("--y", o.y, "start y coordinate")->capture_default_str();
    k_orbit->add_option("--z", o.z, "start z coordinate")->capture_default_str();
    k_orbit->add_option("--time", o.time, "integration time")->required();
    k_orbit->add_option("--step", o.step, "integrator step")->capture_default_str();
    k_orbit->callback([&] {
        cfg.step = o.step;
        cfg.event_tol = g.tol;
        artifact = run_block_orbit(o, cfg, g.format);
    });

    auto* k_deriv = block->add_subcommand("derivative", "central-difference shear derivative");
    k_deriv->add_option("--lambda", o.lambda, "shear strength (> 1)")->capture_default_str();
    k_deriv->add_option("--x", o.x, "entry x coordinate")->capture_default_str();
    k_deriv->add_option("--width", o.h, "central-difference width")->capture_default_str();
    k_deriv->add_option("--step", o.step, "integrator step")->capture_default_str();
    k_deriv->callback([&] {
        cfg.step = o.step;
        cfg.event_tol = g.tol;
        artifact = run_block_derivative(o, cfg, g.format);
    });

    // ----- action ---------------------------------------------------------------
    auto* action = app.add_subcommand("action", "plane group actions");
    action->require_subcommand(1);
    action->fallthrough();

    auto* a_fix = action->add_subcommand("fix", "fixed point report of an element");
    a_fix->add_option("input", o.input, "action element document")->required();
    a_fix->callback(
        [&] { artifact = run_action_fix(action_from_json(load_input(o.input)), g.format); });

    auto* a_tau = action->add_subcommand("tau", "boundary translation number of a skew element");
    a_tau->add_option("input", o.input, "action element document")->required();
    a_tau->add_option("--N", o.big_n, "orbit length for the limit quotient")
        ->capture_default_str();
    a_tau->callback([&] {
        artifact = run_action_tau(action_from_json(load_input(o.input)), o.big_n, g.format);
    });

    auto* a_loz = action->add_subcommand("lozenges", "lozenge string fixed by a skew element");
    a_loz->add_option("input", o.input, "action element document")->required();
    a_loz->callback(
        [&] { artifact = run_action_lozenges(action_from_json(load_input(o.input)), g.format); });

    auto* a_a1 = action->add_subcommand("check-a1",
                                        "fixed leaves carry expansion/contraction pairs");
    a_a1->add_option("input", o.input, "action element document")->required();
    a_a1->callback(
        [&] { artifact = run_action_check_a1(action_from_json(load_input(o.input)), g.format); });

    auto* a_count = action->add_subcommand("count-orbits", "periodic orbit count of a suspension");
    a_count->add_option("input", o.input, "suspension element document");
    auto* a_count_n = a_count->add_option("--n", o.n, "power of the default hyperbolic matrix");
    a_count->callback([&] {
        artifact = run_action_count_orbits(o.input, o.n, a_count_n->count() > 0, g.format);
    });

    auto* a_step = action->add_subcommand("step-up", "half-step-up map on the skew strip");
    a_step->add_option("--x", o.x, "x coordinate")->required();
    a_step->add_option("--y", o.y, "y coordinate")->required();
    a_step->add_option("--times", o.times, "number of applications")->capture_default_str();
    a_step->callback([&] { artifact = run_action_step_up(o, g.format); });

    // ----- smale ---------------------------------------------------------------
    auto* smale = app.add_subcommand("smale", "finite Smale class analysis");
    smale->require_subcommand(1);
    smale->fallthrough();

    auto* s_classes = smale->add_subcommand("classes", "classes and quotient order");
    s_classes->add_option("input", o.input, "smale graph document")->required();
    s_classes->callback(
        [&] { artifact = run_smale_classes(smale_from_json(load_input(o.input)), g.format); });

    auto* s_trans = smale->add_subcommand("transitive", "single-class test");
    s_trans->add_option("input", o.input, "smale graph document")->required();
    s_trans->callback(
        [&] { artifact = run_smale_transitive(smale_from_json(load_input(o.input)), g.format); });

    auto diag = [](const std::string& code, std::string message) {
        const std::string prefix = code + ": "; // what() repeats the code
        if (message.rfind(prefix, 0) == 0) message = message.substr(prefix.size());
        std::cerr << json{{"code", code}, {"message", message}}.dump() << "\n";
    };

    try {
        app.parse(argc, argv);
        deliver(artifact, g);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        diag("UnknownCommand", e.what());
        return 2;
    } catch (const validation_error& e) {
        diag(e.code(), e.what());
        return 2;
    } catch (const numeric_error& e) {
        diag(e.code(), e.what());
        return 3;
    }
    return 0;
}
