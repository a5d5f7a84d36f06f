#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "gia/ideals.hpp"

namespace gia {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::size_t line_of_byte(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

inline Multiplicity parse_multiplicity(const nlohmann::json& value, std::size_t edge_index) {
    auto fail = [&](const char* why) -> Multiplicity {
        throw ParseError("edge " + std::to_string(edge_index) + ": " + why);
    };
    if (value.is_string())
        return value.get<std::string>() == "inf"
                   ? Multiplicity::infinity()
                   : fail("mult string must be \"inf\"");
    if (value.is_number_unsigned()) {
        auto n = value.get<std::uint64_t>();
        if (n == 0) return fail("mult must be positive");
        return Multiplicity(n);
    }
    if (value.is_number_integer()) return fail("mult must be positive");
    return fail("mult must be a positive integer or \"inf\"");
}

}  // namespace detail

/// Parses a graph document: {"vertices": [id, ...], "edges": [{"src", "dst",
/// "mult"}, ...]} with mult a positive integer or "inf". Duplicate (src,
/// dst) entries accumulate. Vertex ids may not use the reserved "beta("
/// prefix, which quotient graphs claim for their grafted sinks.
inline Graph parse_graph(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("line " + std::to_string(detail::line_of_byte(text, e.byte)) +
                         ": " + e.what());
    }
    if (!doc.is_object()) throw ParseError("document must be a JSON object");
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        throw ParseError("document needs a \"vertices\" array");
    if (doc["vertices"].empty()) throw ParseError("vertex list is empty");

    Graph g;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_string()) throw ParseError("vertex ids must be strings");
        auto id = v.get<std::string>();
        if (id.empty()) throw ParseError("vertex id is empty");
        if (is_beta_vertex_id(id))
            throw ParseError("vertex id '" + id + "' uses the reserved \"beta(\" prefix");
        try {
            g.add_vertex(id);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }

    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array");
        std::size_t index = 0;
        for (const auto& edge : doc["edges"]) {
            if (!edge.is_object() || !edge.contains("src") || !edge.contains("dst") ||
                !edge.contains("mult") || !edge["src"].is_string() ||
                !edge["dst"].is_string())
                throw ParseError("edge " + std::to_string(index) +
                                 ": needs string \"src\", string \"dst\" and \"mult\"");
            auto src = edge["src"].get<std::string>();
            auto dst = edge["dst"].get<std::string>();
            if (!g.has_vertex(src))
                throw ParseError("edge " + std::to_string(index) + ": unknown vertex '" +
                                 src + "'");
            if (!g.has_vertex(dst))
                throw ParseError("edge " + std::to_string(index) + ": unknown vertex '" +
                                 dst + "'");
            g.add_edge(src, dst, detail::parse_multiplicity(edge["mult"], index));
            ++index;
        }
    }
    return g;
}

/// Emits the canonical document for a graph: vertices in graph order, edges
/// in (src, dst) order. Parsing the dump reproduces g, except for quotient
/// graphs whose "beta(...)" sinks the parser reserves.
inline nlohmann::ordered_json graph_document(const Graph& g) {
    nlohmann::ordered_json doc;
    doc["vertices"] = nlohmann::ordered_json::array();
    for (const auto& id : g.vertex_ids()) doc["vertices"].push_back(id);
    doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& [key, m] : g.edges()) {
        nlohmann::ordered_json edge;
        edge["src"] = g.id_of(key.first);
        edge["dst"] = g.id_of(key.second);
        if (m.is_infinite())
            edge["mult"] = "inf";
        else
            edge["mult"] = m.finite_value();
        doc["edges"].push_back(std::move(edge));
    }
    return doc;
}

}  // namespace gia
