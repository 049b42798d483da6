#pragma once

#include <limits>
#include <sstream>
#include <string>

#include "json.hpp"

#include "cfock/canonical.hpp"
#include "cfock/crystal.hpp"
#include "cfock/fock.hpp"
#include "cfock/laurent.hpp"
#include "cfock/partition.hpp"

namespace cfock {

using json = nlohmann::ordered_json;

// Coefficients are emitted as JSON numbers while they fit in 64 bits and as
// decimal strings beyond that; both forms are accepted when parsing.
inline json int_to_json(const Int& value) {
    if (value >= std::numeric_limits<std::int64_t>::min() &&
        value <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(value);
    return value.str();
}

inline Int int_from_json(const json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    return Int(j.get<std::int64_t>());
}

// Sorted [exponent, coefficient] pairs.
inline json to_json(const LaurentPoly& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms()) out.push_back(json::array({e, int_to_json(c)}));
    return out;
}

inline LaurentPoly laurent_from_json(const json& j) {
    LaurentPoly p;
    for (const auto& pair : j)
        p += LaurentPoly::monomial(pair.at(0).get<long>(), int_from_json(pair.at(1)));
    return p;
}

inline json to_json(const ResidueParams& params) {
    json out;
    out["r"] = params.is_finite() ? json(params.modulus()) : json("inf");
    out["gamma"] = params.gamma();
    return out;
}

inline ResidueParams params_from_json(const json& j) {
    auto gamma = j.at("gamma").get<std::vector<long>>();
    if (j.at("r").is_string()) return ResidueParams::infinite(std::move(gamma));
    return ResidueParams::finite(j.at("r").get<long>(), std::move(gamma));
}

// List of {"mp": text form, "coeff": pairs}, most dominant label first.
inline json to_json(const FockVector& x) {
    json out = json::array();
    for (const Multipartition& mp : x.support()) {
        json term;
        term["mp"] = to_text(mp);
        term["coeff"] = to_json(x.coeff(mp));
        out.push_back(std::move(term));
    }
    return out;
}

inline FockVector fock_from_json(const json& j, const ResidueParams& params) {
    FockVector x(params);
    for (const auto& term : j)
        x.add_term(multipartition_from_text(term.at("mp").get<std::string>()),
                   laurent_from_json(term.at("coeff")));
    return x;
}

inline json to_json(const CanonicalBasis& cb) {
    json out = to_json(cb.params);
    out["n"] = cb.size;
    out["entries"] = json::array();
    for (const auto& entry : cb.entries) {
        json e;
        e["label"] = to_text(entry.label);
        e["vector"] = to_json(entry.vector);
        out["entries"].push_back(std::move(e));
    }
    return out;
}

inline json to_json(const CrystalGraph& graph) {
    json out;
    out["vertices"] = json::array();
    for (const auto& v : graph.vertices) out["vertices"].push_back(to_text(v));
    out["edges"] = json::array();
    for (const auto& e : graph.edges) {
        json edge;
        edge["source"] = to_text(e.source);
        edge["i"] = e.residue;
        edge["target"] = to_text(e.target);
        out["edges"].push_back(std::move(edge));
    }
    return out;
}

inline std::string to_dot(const CrystalGraph& graph) {
    std::ostringstream out;
    out << "digraph crystal {\n";
    for (const auto& v : graph.vertices) out << "  \"" << to_text(v) << "\";\n";
    for (const auto& e : graph.edges)
        out << "  \"" << to_text(e.source) << "\" -> \"" << to_text(e.target)
            << "\" [label=\"" << e.residue << "\"];\n";
    out << "}\n";
    return out.str();
}

inline json to_json(const DecompositionMatrix& dm) {
    json out = to_json(dm.params);
    out["n"] = dm.size;
    out["rows"] = json::array();
    for (const auto& mp : dm.rows) out["rows"].push_back(to_text(mp));
    out["cols"] = json::array();
    for (const auto& mp : dm.cols) out["cols"].push_back(to_text(mp));
    out["graded"] = json::array();
    out["at_one"] = json::array();
    for (size_t r = 0; r < dm.rows.size(); ++r) {
        json graded_row = json::array();
        json plain_row = json::array();
        for (size_t c = 0; c < dm.cols.size(); ++c) {
            graded_row.push_back(to_json(dm.entry(r, c)));
            plain_row.push_back(int_to_json(dm.entry_at_one(r, c)));
        }
        out["graded"].push_back(std::move(graded_row));
        out["at_one"].push_back(std::move(plain_row));
    }
    return out;
}

// Multipartition cells are quoted (their text form contains commas); the
// polynomial strings never do.
inline std::string to_csv(const DecompositionMatrix& dm, bool at_one) {
    std::ostringstream out;
    out << "\"mp\"";
    for (const auto& col : dm.cols) out << ",\"" << to_text(col) << "\"";
    out << '\n';
    for (size_t r = 0; r < dm.rows.size(); ++r) {
        out << '"' << to_text(dm.rows[r]) << '"';
        for (size_t c = 0; c < dm.cols.size(); ++c) {
            out << ',';
            if (at_one)
                out << dm.entry_at_one(r, c).str();
            else
                out << dm.entry(r, c).str();
        }
        out << '\n';
    }
    return out.str();
}

// Term-by-term display of a Fock vector: (coeff)[mp] + ...
inline std::string to_display(const FockVector& x) {
    if (x.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const Multipartition& mp : x.support()) {
        if (!first) out << " + ";
        first = false;
        out << '(' << x.coeff(mp).str() << ")[" << to_text(mp) << ']';
    }
    return out.str();
}

} // namespace cfock
