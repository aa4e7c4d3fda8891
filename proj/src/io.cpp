#include "cic/io.hpp"

#include <sstream>

#include <json.hpp>

#include "cic/errors.hpp"

namespace cic {

namespace {

void write_graph(std::ostringstream& os, const Multigraph& g) {
    os << "\"n\": " << g.vertex_count() << ", \"edges\": [";
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (e) os << ", ";
        os << '[' << g.edge(e).u << ',' << g.edge(e).v << ']';
    }
    os << ']';
}

void write_coloring(std::ostringstream& os, const EdgeColoring& alpha) {
    os << "\"t\": " << alpha.t() << ", \"colors\": [";
    for (std::size_t i = 0; i < alpha.colors().size(); ++i) {
        if (i) os << ", ";
        os << alpha.colors()[i];
    }
    os << ']';
}

int as_int(const nlohmann::json& j, const char* what) {
    if (!j.is_number_integer()) throw FormatError(std::string(what) + " must be an integer");
    return j.get<int>();
}

}  // namespace

std::string graph_to_json(const Multigraph& g) {
    std::ostringstream os;
    os << '{';
    write_graph(os, g);
    os << '}';
    return os.str();
}

std::string coloring_to_json(const EdgeColoring& alpha) {
    std::ostringstream os;
    os << '{';
    write_coloring(os, alpha);
    os << '}';
    return os.str();
}

std::string document_to_json(const Document& doc) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    auto sep = [&] {
        if (!first) os << ", ";
        first = false;
    };
    if (doc.graph) {
        sep();
        write_graph(os, *doc.graph);
    }
    if (doc.coloring) {
        sep();
        write_coloring(os, *doc.coloring);
    }
    if (doc.method) {
        sep();
        os << "\"method\": " << nlohmann::json(*doc.method).dump();
    }
    if (doc.meta) {
        sep();
        os << "\"meta\": " << *doc.meta;
    }
    os << '}';
    return os.str();
}

Document parse_document(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw FormatError("expected a JSON object");
    Document doc;
    if (j.contains("n") || j.contains("edges")) {
        if (!j.contains("n") || !j.contains("edges")) throw FormatError("a graph needs both \"n\" and \"edges\"");
        const int n = as_int(j["n"], "n");
        if (n < 0) throw FormatError("n must be non-negative");
        if (!j["edges"].is_array()) throw FormatError("edges must be an array");
        std::vector<Edge> edges;
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2) throw FormatError("each edge must be a pair [u,v]");
            const int u = as_int(e[0], "edge endpoint"), v = as_int(e[1], "edge endpoint");
            if (u < 0 || v < 0 || u >= n || v >= n) throw FormatError("edge endpoint out of range");
            edges.push_back({u, v});
        }
        Multigraph g(n, std::move(edges));
        if (j.contains("parts")) {
            const auto& parts = j["parts"];
            if (!parts.is_array() || static_cast<int>(parts.size()) != n) throw FormatError("parts must have n entries");
            std::vector<int> side;
            for (const auto& p : parts) {
                const int s = as_int(p, "part");
                if (s != 0 && s != 1) throw FormatError("parts entries must be 0 or 1");
                side.push_back(s);
            }
            for (const Edge& e : g.edges())
                if (side[static_cast<std::size_t>(e.u)] == side[static_cast<std::size_t>(e.v)])
                    throw PreconditionError("parts is not a bipartition: edge inside one part", e.u);
        }
        doc.graph = std::move(g);
    }
    if (j.contains("t") || j.contains("colors")) {
        if (!j.contains("t") || !j.contains("colors")) throw FormatError("a coloring needs both \"t\" and \"colors\"");
        if (!j["colors"].is_array()) throw FormatError("colors must be an array");
        const int t = as_int(j["t"], "t");
        std::vector<Color> colors;
        for (const auto& c : j["colors"]) colors.push_back(as_int(c, "color"));
        try {
            doc.coloring = EdgeColoring(t, std::move(colors));
        } catch (const std::invalid_argument& e) {
            throw FormatError(e.what());
        }
    }
    if (j.contains("method")) {
        if (!j["method"].is_string()) throw FormatError("method must be a string");
        doc.method = j["method"].get<std::string>();
    }
    if (j.contains("meta")) doc.meta = j["meta"].dump();
    return doc;
}

Multigraph graph_from_json(const std::string& text) {
    Document doc = parse_document(text);
    if (!doc.graph) throw FormatError("no graph in input");
    return std::move(*doc.graph);
}

EdgeColoring coloring_from_json(const std::string& text) {
    Document doc = parse_document(text);
    if (!doc.coloring) throw FormatError("no coloring in input");
    return std::move(*doc.coloring);
}

std::string export_dot(const Multigraph& g, const std::optional<EdgeColoring>& alpha) {
    if (alpha && static_cast<int>(alpha->colors().size()) != g.edge_count())
        throw PreconditionError("coloring has " + std::to_string(alpha->colors().size()) + " colors for " +
                                std::to_string(g.edge_count()) + " edges");
    std::ostringstream os;
    os << "graph G {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        os << "  " << g.edge(e).u << " -- " << g.edge(e).v;
        if (alpha) os << " [label=\"" << (*alpha)[e] << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace cic
