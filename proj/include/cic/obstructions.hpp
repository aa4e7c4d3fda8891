#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cic/graph.hpp"

namespace cic {

enum class ObstructionKind { Divisibility, EvenT, WindowSpan };

/// A certificate that rules out a set of moduli t.
struct ObstructionReport {
    ObstructionKind kind = ObstructionKind::Divisibility;
    int divisor = 0;  // Divisibility: d; EvenT: 2
    Vertex root = -1;  // WindowSpan
    int span = 0;      // WindowSpan: colors that can appear at all
    int max_degree = 0;

    /// Divisibility excludes every multiple of d; EvenT every even t; WindowSpan all t.
    bool excludes(int t) const;
    bool excludes_all() const { return kind == ObstructionKind::WindowSpan; }
};

std::string describe(const ObstructionReport& r);

/// Fires iff d divides every degree and does not divide |E|.
std::optional<ObstructionReport> divisibility_obstruction(const Multigraph& g, int d);

/// Fires iff every degree is even and |E| is odd.
std::optional<ObstructionReport> even_t_obstruction(const Multigraph& g);

/// Hub x = 0, y_i = 1..q joined to x by p parallel edges each, z = q + 1 joined to every y_i.
Multigraph hpq_graph(int p, int q);

/// Fires iff pq > 2p + q; reports the window certificate rooted at z with span q + 2p.
std::optional<ObstructionReport> hpq_obstruction(int p, int q);

/// Per-edge color windows propagated from a root whose spectrum is rotated to
/// [1, d(root)]. window_slack[e] bounds how far edge e's color can sit outside that range.
struct WindowProfile {
    Vertex root = -1;
    std::vector<int> vertex_slack;  // D(v); D(root) = 0
    std::vector<int> edge_slack;    // min over the endpoints
    int span = 0;                   // d(root) + 2 * max edge slack
};
WindowProfile window_profile(const Multigraph& g, Vertex root);

/// Best root (smallest span, then lowest index); fires when span < Δ.
/// Requires a connected loopless graph; returns nullopt otherwise.
std::optional<ObstructionReport> window_span_obstruction(const Multigraph& g);

/// Every obstruction that fires: divisibility for each d in [2, Δ], even-t, window span.
std::vector<ObstructionReport> all_obstructions(const Multigraph& g);

}  // namespace cic
