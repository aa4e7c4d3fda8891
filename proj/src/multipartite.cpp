#include "cic/multipartite.hpp"

#include <map>
#include <string>

#include "cic/errors.hpp"

namespace cic {

PartSizes::PartSizes(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.size() < 2) throw PreconditionError("a complete multipartite graph needs at least 2 parts");
    sigma_.push_back(0);
    for (int s : sizes_) {
        if (s < 1) throw PreconditionError("part sizes must be positive, got " + std::to_string(s));
        sigma_.push_back(sigma_.back() + s);
    }
}

MultipartiteGraph complete_multipartite(const PartSizes& sizes) {
    const int n = sizes.total();
    MultipartiteGraph out;
    for (int l = 0; l < sizes.parts(); ++l)
        for (int k = 0; k < sizes.sizes()[static_cast<std::size_t>(l)]; ++k) out.part.push_back(l);
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (out.part[static_cast<std::size_t>(i)] != out.part[static_cast<std::size_t>(j)]) edges.push_back({i, j});
    out.graph = Multigraph(n, std::move(edges));
    return out;
}

ColoredResult color_complete_multipartite(const PartSizes& sizes) {
    const auto mp = complete_multipartite(sizes);
    const int n = sizes.total();
    std::vector<Color> colors;
    colors.reserve(static_cast<std::size_t>(mp.graph.edge_count()));
    for (const Edge& e : mp.graph.edges()) {
        const int i = e.u + 1, j = e.v + 1;
        colors.push_back(i + j == n ? n : (i + j) % n);
    }
    EdgeColoring alpha(n, std::move(colors));
    if (!is_cyclic_interval(mp.graph, alpha).cyclic_ok)
        throw DefectError("multipartite formula produced a non-cyclic coloring");
    return {std::move(alpha), n, Method::Multipartite};
}

std::optional<PartSizes> recognize_complete_multipartite(const Multigraph& g) {
    const int n = g.vertex_count();
    if (n < 2 || !g.is_simple()) return std::nullopt;
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (const Edge& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = true;
        adj[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = true;
    }
    std::vector<int> sizes{1};
    for (Vertex v = 1; v < n; ++v) {
        if (adj[static_cast<std::size_t>(v - 1)][static_cast<std::size_t>(v)]) sizes.push_back(1);
        else ++sizes.back();
    }
    if (sizes.size() < 2) return std::nullopt;
    PartSizes parts(sizes);
    const auto expected = complete_multipartite(parts);
    if (expected.graph.edge_count() != g.edge_count()) return std::nullopt;
    for (const Edge& e : expected.graph.edges())
        if (!adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)]) return std::nullopt;
    return parts;
}

ColoredResult color_multipartite_graph(const Multigraph& g) {
    const auto parts = recognize_complete_multipartite(g);
    if (!parts) throw PreconditionError("graph is not a complete multipartite graph with consecutive parts");
    const ColoredResult canonical = color_complete_multipartite(*parts);
    const auto mp = complete_multipartite(*parts);
    std::map<std::pair<Vertex, Vertex>, Color> by_pair;
    for (EdgeId e = 0; e < mp.graph.edge_count(); ++e) by_pair[{mp.graph.edge(e).u, mp.graph.edge(e).v}] = canonical.coloring[e];
    std::vector<Color> colors;
    for (const Edge& e : g.edges()) colors.push_back(by_pair.at({std::min(e.u, e.v), std::max(e.u, e.v)}));
    EdgeColoring alpha(canonical.t, std::move(colors));
    if (!is_cyclic_interval(g, alpha).cyclic_ok) throw DefectError("transported multipartite coloring failed verification");
    return {std::move(alpha), canonical.t, Method::Multipartite};
}

std::optional<int> wc_star_multipartite(const PartSizes& sizes) {
    if (sizes.sizes().front() != 1 || sizes.parts() % 2 == 0) return std::nullopt;
    int sum = 0;
    for (int l = 1; l < sizes.parts(); ++l) {
        const int s = sizes.sizes()[static_cast<std::size_t>(l)];
        if (s % 2 == 0) return std::nullopt;
        sum += s;
    }
    // |E| = sum_{i<j} n_i n_j
    long long edges = 0;
    for (int i = 0; i < sizes.parts(); ++i)
        for (int j = i + 1; j < sizes.parts(); ++j)
            edges += static_cast<long long>(sizes.sizes()[static_cast<std::size_t>(i)]) * sizes.sizes()[static_cast<std::size_t>(j)];
    if (edges % 2 == 0) return std::nullopt;
    return 1 + sum;
}

}  // namespace cic
