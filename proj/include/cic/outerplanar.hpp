#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cic/bipartite.hpp"
#include "cic/coloring.hpp"
#include "cic/graph.hpp"

namespace cic {

class NotOuterplanar : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A 2-connected block together with its Hamiltonian cycle. Every edge that is not
/// on the cycle is a chord, and no two chords cross.
struct OuterBlock {
    Multigraph graph;
    std::vector<Vertex> cycle;  // cyclic vertex order; empty for a bridge
};

/// Finds the Hamiltonian cycle of a simple 2-connected graph and checks that the
/// chords do not cross. Throws NotOuterplanar.
OuterBlock outer_cycle(const Multigraph& block);

enum class BlockTag { Interval, Cyclic3WithBadVertex, Cyclic5 };
const char* to_string(BlockTag tag);

struct BlockColoring {
    EdgeColoring coloring;
    BlockTag tag = BlockTag::Interval;
    std::optional<Vertex> bad_vertex;  // set for Cyclic3WithBadVertex
    bool constructive = true;          // false when the solver fallback produced it
    std::string diagnostic;
};

/// Cyclic interval 5-coloring of a 2-connected outerplanar block with Δ = 4, by
/// chords in {1,2,3} and the Hamiltonian cycle in {4,5} with the odd-order repairs.
/// Falls back to the exact solver at t = 5 if a branch fails verification.
BlockColoring color_block_delta4(const OuterBlock& b);

/// Blocks with Δ <= 3: a bridge, an even cycle (interval 2-coloring), an odd cycle
/// (3-coloring with one non-interval vertex, placed at bad_vertex when given), or a
/// Δ = 3 block (interval coloring with at most 4 colors, found by search).
BlockColoring color_block_small(const OuterBlock& b, std::optional<Vertex> bad_vertex = std::nullopt);

struct OuterplanarStats {
    int blocks = 0;
    int constructive_blocks = 0;
    int fallback_blocks = 0;
    bool composition_fallback = false;
    std::vector<std::string> diagnostics;
};

/// Simple connected outerplanar graphs with Δ <= 4. Blocks are colored in BFS
/// order of the block tree from the block of vertex 0 and glued at cut vertices
/// by rotating each new block modulo 5. t = 5, except a lone triangle, which
/// has no cyclic 5-coloring and keeps t = 3.
ColoredResult color_outerplanar(const Multigraph& g, OuterplanarStats* stats = nullptr);

}  // namespace cic
