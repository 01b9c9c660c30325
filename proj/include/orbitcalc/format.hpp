#pragma once

// Canonical text formatting. Every emitter (JSON, CSV, DOT, SVG, plain text)
// routes floating-point values through num12() so that repeated runs produce
// byte-identical output: 12 significant digits, "%g" trimming, -0 normalized.

#include <cstdio>
#include <string>

#include <json.hpp>

namespace orbitcalc {

inline std::string num12(double v) {
    if (v == 0.0) v = 0.0; // collapse -0.0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace detail {

inline void write_canonical_rec(const nlohmann::json& j, std::string& out, int indent) {
    const std::string pad(static_cast<size_t>(indent) * 2, ' ');
    const std::string pad_in(static_cast<size_t>(indent + 1) * 2, ' ');
    switch (j.type()) {
    case nlohmann::json::value_t::object: {
        if (j.empty()) { out += "{}"; return; }
        out += "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out += ",\n";
            first = false;
            out += pad_in;
            out += nlohmann::json(it.key()).dump();
            out += ": ";
            write_canonical_rec(it.value(), out, indent + 1);
        }
        out += "\n" + pad + "}";
        return;
    }
    case nlohmann::json::value_t::array: {
        if (j.empty()) { out += "[]"; return; }
        out += "[\n";
        bool first = true;
        for (const auto& el : j) {
            if (!first) out += ",\n";
            first = false;
            out += pad_in;
            write_canonical_rec(el, out, indent + 1);
        }
        out += "\n" + pad + "]";
        return;
    }
    case nlohmann::json::value_t::number_float:
        out += num12(j.get<double>());
        return;
    default:
        out += j.dump(); // integers, bools, strings, null
        return;
    }
}

} // namespace detail

// Deterministic JSON rendering: keys sorted (nlohmann's default object map is
// ordered), 2-space indent, floats via num12, trailing newline.
inline std::string canonical_json(const nlohmann::json& j) {
    std::string out;
    detail::write_canonical_rec(j, out, 0);
    out += "\n";
    return out;
}

} // namespace orbitcalc
