#pragma once

#include "orichrom/graph.hpp"
#include "orichrom/homomorphism.hpp"

#include <json.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>

namespace orichrom {

// graph6 / digraph6. Parsers accept an optional ">>graph6<<" / ">>digraph6<<" header and
// surrounding whitespace; malformed input throws FormatError, and a digraph6 string with an
// opposite pair of arcs throws AntisymmetryError. Loops are rejected.
UndirectedGraph parse_graph6(std::string_view text);
std::string write_graph6(const UndirectedGraph &g);
OrientedGraph parse_digraph6(std::string_view text);
std::string write_digraph6(const OrientedGraph &d);

/// DOT text; `labels` (one per vertex, or empty) become node labels.
std::string write_dot(const UndirectedGraph &g, std::span<const std::string> labels = {});
std::string write_dot(const OrientedGraph &d, std::span<const std::string> labels = {});

using AnyGraph = std::variant<UndirectedGraph, OrientedGraph>;

/// "path:K", "cycle:K", "complete:N", "bipartite:M,N", "dpath:K", "dcycle:K",
/// "circulant:N,a-b-c", or a literal graph6 / digraph6 string.
AnyGraph parse_graph_spec(std::string_view spec);

/// Machine-readable result of one CLI command (schema "orichrom-report", version 1).
struct Report {
    static constexpr int schema_version = 1;

    std::string command;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    nlohmann::ordered_json caps = nlohmann::ordered_json::object();
    std::optional<nlohmann::ordered_json> witness;
    std::optional<double> elapsed_ms;

    nlohmann::ordered_json to_json() const;
    std::string dump() const { return to_json().dump(2); }
};

nlohmann::ordered_json to_json(const UndirectedGraph &g);
nlohmann::ordered_json to_json(const OrientedGraph &d);

} // namespace orichrom
