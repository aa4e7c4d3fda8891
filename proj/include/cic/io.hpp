#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "cic/coloring.hpp"
#include "cic/graph.hpp"

namespace cic {

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One JSON object that may carry a graph ("n", "edges", optional "parts"), a
/// coloring ("t", "colors"), a method tag and a free-form "meta" object (as
/// serialized JSON text). This lets CLI stages pipe into each other.
struct Document {
    std::optional<Multigraph> graph;
    std::optional<EdgeColoring> coloring;
    std::optional<std::string> method;
    std::optional<std::string> meta;
};

/// {"n": 3, "edges": [[0,1], [1,2]]}
std::string graph_to_json(const Multigraph& g);
/// {"t": 4, "colors": [1, 2, 1, 2]}
std::string coloring_to_json(const EdgeColoring& alpha);
/// Keys in the order n, edges, t, colors, method, meta; absent parts are skipped.
std::string document_to_json(const Document& doc);

/// Throws FormatError on malformed JSON or out-of-range values, and
/// PreconditionError when a "parts" array is not a bipartition of the edges.
Document parse_document(const std::string& text);
Multigraph graph_from_json(const std::string& text);
EdgeColoring coloring_from_json(const std::string& text);

/// Undirected DOT, one line per vertex then per edge in EdgeId order; edges are
/// labeled with their colors when a coloring is given.
std::string export_dot(const Multigraph& g, const std::optional<EdgeColoring>& alpha = std::nullopt);

}  // namespace cic
