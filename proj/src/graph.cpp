#include "cic/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

#include "cic/errors.hpp"

namespace cic {

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 0) throw std::invalid_argument("negative vertex count");
    degree_.assign(static_cast<std::size_t>(vertex_count_), 0);
    incident_.resize(static_cast<std::size_t>(vertex_count_));
    for (EdgeId e = 0; e < edge_count(); ++e) {
        const Edge& ed = edges_[static_cast<std::size_t>(e)];
        if (ed.u < 0 || ed.v < 0 || ed.u >= vertex_count_ || ed.v >= vertex_count_)
            throw std::out_of_range("edge " + std::to_string(e) + " has an endpoint outside [0," +
                                    std::to_string(vertex_count_) + ")");
        degree_[static_cast<std::size_t>(ed.u)]++;
        degree_[static_cast<std::size_t>(ed.v)]++;
        incident_[static_cast<std::size_t>(ed.u)].push_back(e);
        if (!ed.is_loop()) incident_[static_cast<std::size_t>(ed.v)].push_back(e);
    }
}

int Multigraph::max_degree() const {
    return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
}

bool Multigraph::has_loops() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

bool Multigraph::is_simple() const {
    std::set<std::pair<Vertex, Vertex>> seen;
    for (const Edge& e : edges_) {
        if (e.is_loop()) return false;
        if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) return false;
    }
    return true;
}

bool Multigraph::is_eulerian() const {
    return std::all_of(degree_.begin(), degree_.end(), [](int d) { return d % 2 == 0; });
}

std::optional<Bipartition> bipartition(const Multigraph& g) {
    if (g.has_loops()) return std::nullopt;
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (Vertex s = 0; s < n; ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::queue<Vertex> queue;
        queue.push(s);
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop();
            for (EdgeId e : g.incident(v)) {
                Vertex w = g.edge(e).other(v);
                auto& cw = color[static_cast<std::size_t>(w)];
                if (cw == -1) {
                    cw = 1 - color[static_cast<std::size_t>(v)];
                    queue.push(w);
                } else if (cw == color[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition b;
    b.side.reserve(static_cast<std::size_t>(n));
    for (int c : color) b.side.push_back(c == 0 ? Side::X : Side::Y);
    return b;
}

std::vector<int> components(const Multigraph& g, int* count) {
    const int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1) continue;
        std::vector<Vertex> stack{s};
        comp[static_cast<std::size_t>(s)] = next;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (EdgeId e : g.incident(v)) {
                Vertex w = g.edge(e).other(v);
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    if (count) *count = next;
    return comp;
}

bool is_connected(const Multigraph& g) {
    int count = 0;
    components(g, &count);
    return count <= 1;
}

DerivedGraph doubled_graph(const Multigraph& g, std::span<const Vertex> link_vertices) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(2 * m) + link_vertices.size());
    std::vector<std::optional<EdgeId>> origin;
    for (EdgeId e = 0; e < m; ++e) {
        edges.push_back(g.edge(e));
        origin.emplace_back(e);
    }
    for (EdgeId e = 0; e < m; ++e) {
        edges.push_back({g.edge(e).u + n, g.edge(e).v + n});
        origin.emplace_back(e);
    }
    for (Vertex v : link_vertices) {
        if (v < 0 || v >= n) throw std::out_of_range("link vertex " + std::to_string(v) + " out of range");
        edges.push_back({v, v + n});
        origin.emplace_back(std::nullopt);
    }
    return {Multigraph(2 * n, std::move(edges)), std::move(origin)};
}

Multigraph add_loops(const Multigraph& g, const std::map<Vertex, int>& counts) {
    std::vector<Edge> edges = g.edges();
    for (auto [v, k] : counts) {
        if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("loop vertex " + std::to_string(v) + " out of range");
        if (k < 0) throw std::invalid_argument("negative loop count");
        for (int i = 0; i < k; ++i) edges.push_back({v, v});
    }
    return Multigraph(g.vertex_count(), std::move(edges));
}

Multigraph full_subdivision(const Multigraph& g) {
    if (g.has_loops()) throw PreconditionError("full subdivision of a graph with loops");
    const int n = g.vertex_count();
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(2 * g.edge_count()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Vertex mid = n + e;
        edges.push_back({g.edge(e).u, mid});
        edges.push_back({mid, g.edge(e).v});
    }
    return Multigraph(n + g.edge_count(), std::move(edges));
}

BlockDecomposition blocks(const Multigraph& g) {
    const int n = g.vertex_count();
    BlockDecomposition out;
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<EdgeId> edge_stack;
    int timer = 0;

    struct Frame {
        Vertex v;
        EdgeId via;
        std::size_t next;
    };

    auto pop_block = [&](EdgeId until) {
        std::vector<EdgeId> block;
        while (true) {
            EdgeId e = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(e);
            if (e == until) break;
        }
        std::sort(block.begin(), block.end());
        out.blocks.push_back(std::move(block));
    };

    for (Vertex root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] != -1) continue;
        std::vector<Frame> stack;
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        stack.push_back({root, -1, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto inc = g.incident(f.v);
            if (f.next < inc.size()) {
                EdgeId e = inc[f.next++];
                if (e == f.via || g.edge(e).is_loop()) continue;
                Vertex w = g.edge(e).other(f.v);
                auto& dw = disc[static_cast<std::size_t>(w)];
                if (dw == -1) {
                    edge_stack.push_back(e);
                    dw = low[static_cast<std::size_t>(w)] = timer++;
                    stack.push_back({w, e, 0});
                } else if (dw < disc[static_cast<std::size_t>(f.v)]) {
                    edge_stack.push_back(e);
                    low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], dw);
                }
            } else {
                const Frame done = f;
                stack.pop_back();
                if (stack.empty()) break;
                Frame& parent = stack.back();
                auto& lp = low[static_cast<std::size_t>(parent.v)];
                lp = std::min(lp, low[static_cast<std::size_t>(done.v)]);
                if (low[static_cast<std::size_t>(done.v)] >= disc[static_cast<std::size_t>(parent.v)]) {
                    pop_block(done.via);
                }
            }
        }
    }

    // Vertex membership, then loops.
    std::vector<std::vector<int>> blocks_of(static_cast<std::size_t>(n));
    auto rebuild_vertices = [&] {
        out.block_vertices.assign(out.blocks.size(), {});
        for (auto& bo : blocks_of) bo.clear();
        for (std::size_t b = 0; b < out.blocks.size(); ++b) {
            std::set<Vertex> vs;
            for (EdgeId e : out.blocks[b]) {
                vs.insert(g.edge(e).u);
                vs.insert(g.edge(e).v);
            }
            out.block_vertices[b].assign(vs.begin(), vs.end());
            for (Vertex v : vs) blocks_of[static_cast<std::size_t>(v)].push_back(static_cast<int>(b));
        }
    };
    rebuild_vertices();
    std::map<Vertex, int> loop_block;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!g.edge(e).is_loop()) continue;
        Vertex v = g.edge(e).u;
        const auto& bo = blocks_of[static_cast<std::size_t>(v)];
        if (!bo.empty()) {
            out.blocks[static_cast<std::size_t>(bo.front())].push_back(e);
        } else if (auto it = loop_block.find(v); it != loop_block.end()) {
            out.blocks[static_cast<std::size_t>(it->second)].push_back(e);
        } else {
            loop_block[v] = static_cast<int>(out.blocks.size());
            out.blocks.push_back({e});
        }
    }
    for (auto& b : out.blocks) std::sort(b.begin(), b.end());
    rebuild_vertices();

    for (Vertex v = 0; v < n; ++v) {
        if (blocks_of[static_cast<std::size_t>(v)].size() > 1) {
            out.cut_vertices.push_back(v);
            out.blocks_at_cut[v] = blocks_of[static_cast<std::size_t>(v)];
        }
    }
    return out;
}

DerivedGraph edge_subgraph(const Multigraph& g, std::span<const EdgeId> edge_ids) {
    std::vector<Edge> edges;
    std::vector<std::optional<EdgeId>> origin;
    for (EdgeId e : edge_ids) {
        edges.push_back(g.edge(e));
        origin.emplace_back(e);
    }
    return {Multigraph(g.vertex_count(), std::move(edges)), std::move(origin)};
}

InducedBlock compact_subgraph(const Multigraph& g, std::span<const EdgeId> edge_ids) {
    std::map<Vertex, Vertex> index;
    for (EdgeId e : edge_ids) {
        index.emplace(g.edge(e).u, 0);
        index.emplace(g.edge(e).v, 0);
    }
    InducedBlock out;
    for (auto& [old, fresh] : index) {
        fresh = static_cast<Vertex>(out.vertex_map.size());
        out.vertex_map.push_back(old);
    }
    std::vector<Edge> edges;
    for (EdgeId e : edge_ids) {
        edges.push_back({index[g.edge(e).u], index[g.edge(e).v]});
        out.edge_map.push_back(e);
    }
    out.graph = Multigraph(static_cast<int>(out.vertex_map.size()), std::move(edges));
    return out;
}

}  // namespace cic
