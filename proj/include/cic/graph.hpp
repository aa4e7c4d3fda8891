#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace cic {

using Vertex = int;
using EdgeId = int;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    bool is_loop() const { return u == v; }
    Vertex other(Vertex w) const { return w == u ? v : u; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph on vertices 0..n-1. Parallel edges are distinct and
/// identified by their position in the edge list. Loops are allowed and add 2
/// to the degree of their vertex. Immutable once built.
class Multigraph {
public:
    Multigraph() = default;
    Multigraph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }

    int degree(Vertex v) const { return degree_[static_cast<std::size_t>(v)]; }
    int max_degree() const;
    /// Incident edge ids in ascending order; a loop is listed once.
    std::span<const EdgeId> incident(Vertex v) const { return incident_[static_cast<std::size_t>(v)]; }

    bool has_loops() const;
    /// No loops and no parallel edges.
    bool is_simple() const;
    bool is_eulerian() const;

    friend bool operator==(const Multigraph& a, const Multigraph& b) {
        return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
    }

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> degree_;
    std::vector<std::vector<EdgeId>> incident_;
};

/// A graph built from another one, with the provenance of each new edge.
/// origin[e] is the source edge in the original graph, or nullopt for edges
/// that were introduced by the construction.
struct DerivedGraph {
    Multigraph graph;
    std::vector<std::optional<EdgeId>> origin;
};

enum class Side { X, Y };

struct Bipartition {
    std::vector<Side> side;
};

struct BlockDecomposition {
    /// Edge sets of the blocks; together they partition E.
    std::vector<std::vector<EdgeId>> blocks;
    std::vector<Vertex> cut_vertices;
    /// block_vertices[b]: sorted vertices touched by block b.
    std::vector<std::vector<Vertex>> block_vertices;
    /// Block-cut tree adjacency: for each cut vertex, the blocks containing it.
    std::map<Vertex, std::vector<int>> blocks_at_cut;
};

/// BFS 2-coloring. Lowest-index vertex of each component goes to X.
std::optional<Bipartition> bipartition(const Multigraph& g);

/// Connected component index per vertex, numbered in order of lowest vertex.
std::vector<int> components(const Multigraph& g, int* count = nullptr);
bool is_connected(const Multigraph& g);

/// Two disjoint copies of g (copy 2 vertex i at i + n) plus one edge between each
/// link vertex and its copy. Copy-1 edges keep their ids.
DerivedGraph doubled_graph(const Multigraph& g, std::span<const Vertex> link_vertices);

/// Appends counts[v] loops at each v.
Multigraph add_loops(const Multigraph& g, const std::map<Vertex, int>& counts);

/// Every edge uv becomes u-w-v through a fresh vertex w = n + id(uv). Edge 2i is
/// the half at the lower-listed endpoint u of original edge i.
Multigraph full_subdivision(const Multigraph& g);

/// Biconnected components by lowpoint DFS. A loop joins the first block of its
/// vertex, or forms a block of its own when the vertex has no other edges.
BlockDecomposition blocks(const Multigraph& g);

/// The subgraph on the given edges, keeping all vertices and renumbering edges
/// in the order given; origin maps back.
DerivedGraph edge_subgraph(const Multigraph& g, std::span<const EdgeId> edge_ids);

/// Same edges on a compacted vertex set; vertex_map[new] = old.
struct InducedBlock {
    Multigraph graph;
    std::vector<Vertex> vertex_map;
    std::vector<EdgeId> edge_map;
};
InducedBlock compact_subgraph(const Multigraph& g, std::span<const EdgeId> edge_ids);

}  // namespace cic
