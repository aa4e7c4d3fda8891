#pragma once

#include <vector>

#include "cic/coloring.hpp"
#include "cic/graph.hpp"

namespace testkit {

using cic::Multigraph;

/// Straight from the definition, sharing no code with the library verifier:
/// proper, and at every vertex the color set or its complement in [1,t] is a
/// run of consecutive integers (empty sets count as runs).
bool oracle_cyclic_ok(const Multigraph& g, const std::vector<int>& colors, int t);
bool oracle_interval_ok(const Multigraph& g, const std::vector<int>& colors);

/// Connected loopless multigraphs with exactly m edges, one per isomorphism class.
std::vector<Multigraph> connected_multigraphs(int m);

Multigraph cycle(int n);
Multigraph path(int n);  // n vertices
Multigraph complete(int n);
Multigraph complete_bipartite(int a, int b);  // X = 0..a-1
Multigraph from_pairs(int n, std::vector<std::pair<int, int>> pairs);

/// Spectrum as a sorted vector, computed directly from the edge list.
std::vector<int> colors_at(const Multigraph& g, const std::vector<int>& colors, int v);

}  // namespace testkit
