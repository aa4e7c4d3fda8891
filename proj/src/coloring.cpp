#include "cic/coloring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cic {

EdgeColoring::EdgeColoring(int t, std::vector<Color> colors) : t_(t), colors_(std::move(colors)) {
    if (t_ < 1) throw std::invalid_argument("palette size t must be positive");
    for (std::size_t i = 0; i < colors_.size(); ++i) {
        if (colors_[i] < 1 || colors_[i] > t_)
            throw std::invalid_argument("edge " + std::to_string(i) + " has color " + std::to_string(colors_[i]) +
                                        " outside [1," + std::to_string(t_) + "]");
    }
}

std::string_view to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::AdjacentSameColor: return "adjacent-same-color";
        case ViolationKind::NotInterval: return "not-interval";
        case ViolationKind::NotCyclicInterval: return "not-cyclic-interval";
    }
    return "?";
}

namespace {

void require_cover(const Multigraph& g, const EdgeColoring& alpha) {
    if (alpha.size() != static_cast<std::size_t>(g.edge_count()))
        throw std::invalid_argument("coloring has " + std::to_string(alpha.size()) + " colors for " +
                                    std::to_string(g.edge_count()) + " edges");
}

}  // namespace

Spectrum spectrum(const Multigraph& g, const EdgeColoring& alpha, Vertex v) {
    require_cover(g, alpha);
    Spectrum s{v, {}};
    for (EdgeId e : g.incident(v)) s.colors.push_back(alpha[e]);
    std::sort(s.colors.begin(), s.colors.end());
    s.colors.erase(std::unique(s.colors.begin(), s.colors.end()), s.colors.end());
    return s;
}

bool is_interval_set(std::span<const Color> sorted) {
    return sorted.empty() || sorted.back() - sorted.front() + 1 == static_cast<int>(sorted.size());
}

bool is_cyclic_interval_set(std::span<const Color> sorted, int t) {
    if (is_interval_set(sorted)) return true;
    // Complement is an interval iff the set is a prefix [1, a] plus a suffix [b, t].
    // Equivalently: exactly one internal gap, and the set touches both 1 and t.
    if (sorted.front() != 1 || sorted.back() != t) return false;
    int gaps = 0;
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] != sorted[i - 1] + 1) ++gaps;
    return gaps == 1;
}

VerificationReport is_cyclic_interval(const Multigraph& g, const EdgeColoring& alpha) {
    require_cover(g, alpha);
    VerificationReport r;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::vector<Color> cs;
        for (EdgeId e : g.incident(v)) cs.push_back(alpha[e]);
        std::sort(cs.begin(), cs.end());
        const bool proper_here = std::adjacent_find(cs.begin(), cs.end()) == cs.end();
        if (!proper_here) {
            r.proper = r.interval_ok = r.cyclic_ok = false;
            r.violations.push_back({v, ViolationKind::AdjacentSameColor});
            continue;
        }
        if (is_interval_set(cs)) continue;
        r.interval_ok = false;
        if (is_cyclic_interval_set(cs, alpha.t())) {
            r.violations.push_back({v, ViolationKind::NotInterval});
        } else {
            r.cyclic_ok = false;
            r.violations.push_back({v, ViolationKind::NotCyclicInterval});
        }
    }
    return r;
}

bool is_interval(const Multigraph& g, const EdgeColoring& alpha) { return is_cyclic_interval(g, alpha).interval_ok; }

EdgeColoring rotate(const EdgeColoring& alpha, int shift) {
    const int t = alpha.t();
    std::vector<Color> out;
    out.reserve(alpha.size());
    for (Color c : alpha.colors()) out.push_back(((c - 1 + shift) % t + t) % t + 1);
    return EdgeColoring(t, std::move(out));
}

EdgeColoring restrict_coloring(const EdgeColoring& derived, const DerivedGraph& d, int source_edge_count) {
    std::vector<Color> out(static_cast<std::size_t>(source_edge_count), 0);
    std::vector<bool> seen(static_cast<std::size_t>(source_edge_count), false);
    for (std::size_t e = 0; e < d.origin.size(); ++e) {
        if (!d.origin[e]) continue;
        auto src = static_cast<std::size_t>(*d.origin[e]);
        if (seen[src]) continue;  // first copy wins
        seen[src] = true;
        out[src] = derived.colors()[e];
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw std::invalid_argument("origin map does not cover every source edge");
    return EdgeColoring(derived.t(), std::move(out));
}

namespace colorset {

Mask full(int t) { return t >= 64 ? ~Mask{0} : (Mask{1} << t) - 1; }

Mask window(int t, int start, int len) {
    if (len >= t) return full(t);
    Mask m = 0;
    for (int i = 0; i < len; ++i) m |= bit((start - 1 + i) % t + 1);
    return m;
}

bool extendable(Mask used, int t, int len, bool cyclic) {
    if (len >= t) return (used & ~full(t)) == 0;
    const int starts = cyclic ? t : t - len + 1;
    for (int a = 1; a <= starts; ++a)
        if ((used & ~window(t, a, len)) == 0) return true;
    return false;
}

Mask admissible(Mask used, int t, int len, bool cyclic) {
    if (len >= t) return full(t) & ~used;
    Mask acc = 0;
    const int starts = cyclic ? t : t - len + 1;
    for (int a = 1; a <= starts; ++a) {
        const Mask w = window(t, a, len);
        if ((used & ~w) == 0) acc |= w;
    }
    return acc & ~used;
}

}  // namespace colorset

}  // namespace cic
