#pragma once

#include <map>
#include <vector>

#include "cic/coloring.hpp"
#include "cic/graph.hpp"

namespace cic {

/// A closed trail: vertices.size() == edges.size() + 1, vertices.front() == vertices.back(),
/// and edges[i] joins vertices[i] and vertices[i+1].
struct ClosedTrail {
    std::vector<EdgeId> edges;
    std::vector<Vertex> vertices;
};

/// One closed trail per connected component that has at least one edge,
/// ordered by the component's lowest vertex.
struct EulerCircuit {
    std::vector<ClosedTrail> component_circuits;
};

/// Hierholzer's algorithm. With loops_first, every loop at a vertex is traversed
/// consecutively at the first visit of that vertex. Throws PreconditionError on
/// an odd-degree vertex.
EulerCircuit euler_circuit(const Multigraph& g, bool loops_first);

struct FactorDecomposition {
    std::vector<std::vector<EdgeId>> factors;
};

/// Splits a 2r-regular multigraph (loops count 2) into r edge-disjoint 2-factors.
/// Realized through an Euler orientation, the out/in bipartite double, and its
/// decomposition into perfect matchings.
FactorDecomposition petersen_two_factorization(const Multigraph& g, int r);

/// r perfect matchings of an r-regular bipartite multigraph, extracted one at a
/// time by augmenting paths scanned in vertex-id order.
FactorDecomposition regular_bipartite_matching_decomposition(const Multigraph& g, int r);

/// Colors the edges of `factor` (a disjoint union of even cycles) alternately,
/// starting each cycle with c_odd on its lowest edge id. Returns edge -> color.
std::map<EdgeId, Color> alternate_color_cycles(const Multigraph& g, const std::vector<EdgeId>& factor, Color c_odd,
                                               Color c_even);

}  // namespace cic
