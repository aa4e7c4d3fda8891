#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "cic/graph.hpp"

namespace cic {

using Color = int;

/// Colors in [1, t], one per EdgeId.
class EdgeColoring {
public:
    EdgeColoring() = default;
    /// Throws std::invalid_argument when t < 1 or a color lies outside [1, t].
    EdgeColoring(int t, std::vector<Color> colors);

    int t() const { return t_; }
    const std::vector<Color>& colors() const { return colors_; }
    Color operator[](EdgeId e) const { return colors_[static_cast<std::size_t>(e)]; }
    std::size_t size() const { return colors_.size(); }

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

private:
    int t_ = 1;
    std::vector<Color> colors_;
};

struct Spectrum {
    Vertex vertex = 0;
    std::vector<Color> colors;  // sorted, distinct
};

enum class ViolationKind { AdjacentSameColor, NotInterval, NotCyclicInterval };
std::string_view to_string(ViolationKind k);

struct Violation {
    Vertex vertex;
    ViolationKind kind;
};

struct VerificationReport {
    bool proper = true;
    bool interval_ok = true;
    bool cyclic_ok = true;
    /// One entry per offending vertex, with its most severe failure.
    std::vector<Violation> violations;
};

/// Color set at v; a loop contributes its color once. Throws std::invalid_argument
/// when the coloring does not cover every edge of g.
Spectrum spectrum(const Multigraph& g, const EdgeColoring& alpha, Vertex v);

/// Properness plus the per-vertex interval / cyclic-interval classification.
VerificationReport is_cyclic_interval(const Multigraph& g, const EdgeColoring& alpha);
bool is_interval(const Multigraph& g, const EdgeColoring& alpha);

/// Set-level predicates on sorted distinct colors in [1, t].
bool is_interval_set(std::span<const Color> sorted);
/// The set, or its complement in [1, t], is an interval (an empty complement counts).
bool is_cyclic_interval_set(std::span<const Color> sorted, int t);

/// Colors shifted by s modulo t, kept in [1, t].
EdgeColoring rotate(const EdgeColoring& alpha, int shift);

/// Pulls a coloring of a derived graph back onto the source graph. Colors are
/// copied verbatim; the modulus is kept.
EdgeColoring restrict_coloring(const EdgeColoring& derived, const DerivedGraph& d, int source_edge_count);

/// Bitmask helpers over colors 1..t (bit c-1), t <= 64.
namespace colorset {

using Mask = std::uint64_t;

inline Mask bit(Color c) { return Mask{1} << (c - 1); }
Mask full(int t);
/// Cyclic window of `len` colors starting at color `start` (1-based) modulo t.
Mask window(int t, int start, int len);
/// True when some window of length len (cyclic when `cyclic`) contains all of `used`.
bool extendable(Mask used, int t, int len, bool cyclic);
/// Union of the windows of length len containing `used`, minus `used`: the colors
/// that can still be added at a vertex while keeping it extendable.
Mask admissible(Mask used, int t, int len, bool cyclic);

}  // namespace colorset

}  // namespace cic
