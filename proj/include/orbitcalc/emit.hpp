#pragma once

// Text emitters (DOT, CSV, SVG). All output is a pure function of the input
// value; floats go through num12 so repeated runs are byte-identical.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <orbitcalc/birkhoff.hpp>
#include <orbitcalc/chain.hpp>
#include <orbitcalc/fatgraph.hpp>
#include <orbitcalc/format.hpp>
#include <orbitcalc/smale.hpp>

namespace orbitcalc {

namespace detail {

inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

} // namespace detail

// Chain tree as an undirected DOT graph: vertices are corners (shifted period
// copies drawn dashed), one edge per lozenge.
inline std::string dot_chain_tree(const ChainTree& t) {
    std::string out = "graph chain_tree {\n  node [shape=ellipse];\n";
    for (size_t i = 0; i < t.vertices.size(); ++i) {
        out += "  v" + std::to_string(i) + " [label=\"" + detail::dot_escape(t.vertices[i].label) + "\"";
        if (t.vertices[i].shifted) out += ", style=dashed";
        out += "];\n";
    }
    for (size_t k = 0; k < t.edges.size(); ++k)
        out += "  v" + std::to_string(t.edges[k][0]) + " -- v" + std::to_string(t.edges[k][1]) +
               " [label=\"L" + std::to_string(k) + "\"];\n";
    out += "}\n";
    return out;
}

// Rows of comma-separated num12 floats under a header line.
inline std::string csv_table(const std::vector<std::string>& header,
                             const std::vector<std::vector<double>>& rows) {
    std::string out;
    for (size_t i = 0; i < header.size(); ++i) {
        if (i) out += ",";
        out += header[i];
    }
    out += "\n";
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ",";
            out += num12(row[i]);
        }
        out += "\n";
    }
    return out;
}

// Fatgraph as undirected DOT: one node per vertex (labelled with its cyclic
// half-edge order), one edge per ribbon edge (flipped edges dashed).
inline std::string dot_fatgraph(const Fatgraph& fg) {
    std::map<std::string, std::string> vertex_of;
    for (const Fatgraph::Vertex& v : fg.vertices)
        for (const std::string& h : v.order) vertex_of[h] = v.id;
    std::map<std::string, size_t> node_index;
    std::string out = "graph fatgraph {\n  node [shape=circle];\n";
    for (size_t i = 0; i < fg.vertices.size(); ++i) {
        const Fatgraph::Vertex& v = fg.vertices[i];
        node_index[v.id] = i;
        std::string order;
        for (size_t s = 0; s < v.order.size(); ++s) {
            if (s) order += " ";
            order += v.order[s];
        }
        out += "  v" + std::to_string(i) + " [label=\"" + detail::dot_escape(v.id) + "\\n(" +
               detail::dot_escape(order) + ")\"];\n";
    }
    for (size_t e = 0; e < fg.edges.size(); ++e) {
        const auto& halves = fg.edges[e];
        out += "  v" + std::to_string(node_index.at(vertex_of.at(halves[0]))) + " -- v" +
               std::to_string(node_index.at(vertex_of.at(halves[1]))) + " [label=\"" +
               detail::dot_escape(halves[0]) + "|" + detail::dot_escape(halves[1]) + "\"";
        if (fg.flips.count(e)) out += ", style=dashed";
        out += "];\n";
    }
    out += "}\n";
    return out;
}

// Smale class DAG as DOT: one box per class, arrows along the covering
// relation (transitive reduction of the quotient order), prong singletons
// drawn dashed.
inline std::string dot_smale_classes(const SmaleClassification& c) {
    std::set<std::array<size_t, 2>> order(c.order.begin(), c.order.end());
    std::string out = "digraph smale_classes {\n  node [shape=box];\n  rankdir=BT;\n";
    for (size_t i = 0; i < c.classes.size(); ++i) {
        std::string label;
        for (size_t m = 0; m < c.classes[i].members.size(); ++m) {
            if (m) label += " ";
            label += c.classes[i].members[m];
        }
        out += "  c" + std::to_string(i) + " [label=\"" + detail::dot_escape(label) + "\"";
        if (c.classes[i].isolated) out += ", style=dashed";
        out += "];\n";
    }
    for (const auto& [lo, hi] : order) {
        bool covered = false; // drop edges implied by transitivity
        for (const auto& [mid_lo, mid_hi] : order)
            if (mid_lo == lo && mid_hi != hi && order.count({mid_hi, hi})) {
                covered = true;
                break;
            }
        if (!covered)
            out += "  c" + std::to_string(lo) + " -> c" + std::to_string(hi) + ";\n";
    }
    out += "}\n";
    return out;
}

namespace detail {

inline std::string svg_open(int width, int height) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
           " " + std::to_string(height) + "\">\n";
}

inline std::string xml_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

} // namespace detail

// Schematic (non-metric) chain picture: lozenges are diamonds strung along a
// diagonal; corner-only junctions touch at a dot, shared sides overlap on a
// thick tick labelled with the foliation sign.
inline std::string svg_chain(const Chain& c) {
    const int n = static_cast<int>(c.lozenges.size());
    const int step = 70, half = 32, margin = 40;
    const int width = margin * 2 + step * std::max(n - 1, 0) + 2 * half;
    const int height = 220;
    const int mid = 120;
    std::string out = detail::svg_open(width, height);
    out += "  <g fill=\"none\" stroke=\"black\">\n";
    for (int i = 0; i < n; ++i) {
        const int cx = margin + half + step * i;
        out += "    <polygon points=\"";
        out += std::to_string(cx - half) + "," + std::to_string(mid) + " ";
        out += std::to_string(cx) + "," + std::to_string(mid - half) + " ";
        out += std::to_string(cx + half) + "," + std::to_string(mid) + " ";
        out += std::to_string(cx) + "," + std::to_string(mid + half);
        out += "\" fill=\"#f2f2f2\"/>\n";
    }
    out += "  </g>\n";
    for (int i = 0; i < n; ++i) {
        const int cx = margin + half + step * i;
        const Lozenge& l = c.lozenges[static_cast<size_t>(i)];
        out += "  <circle cx=\"" + std::to_string(cx - half) + "\" cy=\"" + std::to_string(mid) +
               "\" r=\"3\"/>\n";
        out += "  <circle cx=\"" + std::to_string(cx + half) + "\" cy=\"" + std::to_string(mid) +
               "\" r=\"3\"/>\n";
        out += "  <text x=\"" + std::to_string(cx - half) + "\" y=\"" + std::to_string(mid + 20) +
               "\" font-size=\"11\" text-anchor=\"middle\">" + detail::xml_escape(l.corners[0]) +
               "</text>\n";
        out += "  <text x=\"" + std::to_string(cx + half) + "\" y=\"" + std::to_string(mid - 12) +
               "\" font-size=\"11\" text-anchor=\"middle\">" + detail::xml_escape(l.corners[1]) +
               "</text>\n";
    }
    for (size_t k = 0; k < c.junctions.size(); ++k) {
        const int cx = margin + half + step * static_cast<int>(k) + half + step / 2 - half;
        const Junction& j = c.junctions[k];
        const bool wraps = c.topology == ChainTopology::Cyclic && k + 1 == c.junctions.size();
        const int jx = wraps ? width - margin / 2 : cx;
        if (j.kind == Junction::Kind::SharedSide) {
            out += "  <line x1=\"" + std::to_string(jx - 8) + "\" y1=\"" + std::to_string(mid - 8) +
                   "\" x2=\"" + std::to_string(jx + 8) + "\" y2=\"" + std::to_string(mid + 8) +
                   "\" stroke=\"black\" stroke-width=\"3\"/>\n";
            out += "  <text x=\"" + std::to_string(jx) + "\" y=\"" + std::to_string(mid - 40) +
                   "\" font-size=\"11\" text-anchor=\"middle\">" +
                   (j.label == FoliationLabel::Plus ? "+" : "-") + std::string("</text>\n");
        } else {
            out += "  <text x=\"" + std::to_string(jx) + "\" y=\"" + std::to_string(mid - 40) +
                   "\" font-size=\"11\" text-anchor=\"middle\">gap " + std::to_string(j.gap) +
                   "</text>\n";
        }
    }
    if (c.topology == ChainTopology::Cyclic)
        out += "  <text x=\"" + std::to_string(width / 2) + "\" y=\"30\" font-size=\"12\" "
               "text-anchor=\"middle\">cyclic (period shown once)</text>\n";
    out += "</svg>\n";
    return out;
}

// Schematic annulus: two boundary orbits as thick verticals, interior closed
// leaves as signed verticals between them.
inline std::string svg_annulus(const AnnulusCombinatorics& a) {
    const int n = static_cast<int>(a.interior_leaves.size());
    const int gap = 50, margin = 60;
    const int width = margin * 2 + gap * (n + 1);
    const int height = 200;
    std::string out = detail::svg_open(width, height);
    auto vline = [&](int x, int w) {
        return "  <line x1=\"" + std::to_string(x) + "\" y1=\"40\" x2=\"" + std::to_string(x) +
               "\" y2=\"160\" stroke=\"black\" stroke-width=\"" + std::to_string(w) + "\"/>\n";
    };
    out += vline(margin, 4);
    out += vline(width - margin, 4);
    out += "  <text x=\"" + std::to_string(margin) + "\" y=\"30\" font-size=\"12\" "
           "text-anchor=\"middle\">" + detail::xml_escape(a.boundary[0]) + "</text>\n";
    out += "  <text x=\"" + std::to_string(width - margin) + "\" y=\"30\" font-size=\"12\" "
           "text-anchor=\"middle\">" + detail::xml_escape(a.boundary[1]) + "</text>\n";
    for (int i = 0; i < n; ++i) {
        const int x = margin + gap * (i + 1);
        out += vline(x, 1);
        out += "  <text x=\"" + std::to_string(x) + "\" y=\"180\" font-size=\"12\" "
               "text-anchor=\"middle\">" +
               (a.interior_leaves[static_cast<size_t>(i)] == FoliationLabel::Plus ? "+" : "-") +
               std::string("</text>\n");
    }
    out += "</svg>\n";
    return out;
}

} // namespace orbitcalc
