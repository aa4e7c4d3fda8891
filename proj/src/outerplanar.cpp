#include "cic/outerplanar.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>

#include "cic/errors.hpp"
#include "cic/solver.hpp"

namespace cic {

const char* to_string(BlockTag tag) {
    switch (tag) {
        case BlockTag::Interval: return "Interval";
        case BlockTag::Cyclic3WithBadVertex: return "Cyclic3WithBadVertex";
        case BlockTag::Cyclic5: return "Cyclic5";
    }
    return "?";
}

namespace {

constexpr std::uint64_t kHamiltonBudget = 2'000'000;

EdgeId edge_between(const Multigraph& g, Vertex a, Vertex b) {
    for (EdgeId e : g.incident(a))
        if (g.edge(e).other(a) == b) return e;
    return -1;
}

}  // namespace

OuterBlock outer_cycle(const Multigraph& block) {
    if (!block.is_simple()) throw NotOuterplanar("block is not simple");
    const int n = block.vertex_count();
    if (block.edge_count() == 1 && n == 2) return {block, {}};
    if (n < 3 || !is_connected(block)) throw NotOuterplanar("block is not 2-connected");
    if (block.edge_count() > 2 * n - 3) throw NotOuterplanar("too many edges for an outerplanar graph");

    std::vector<Vertex> path{0};
    std::vector<bool> on_path(static_cast<std::size_t>(n), false);
    on_path[0] = true;
    std::uint64_t steps = 0;
    std::function<bool()> extend = [&]() -> bool {
        if (++steps > kHamiltonBudget) throw NotOuterplanar("Hamiltonian cycle search exceeded its budget");
        const Vertex last = path.back();
        if (static_cast<int>(path.size()) == n) return edge_between(block, last, 0) != -1;
        for (EdgeId e : block.incident(last)) {
            const Vertex w = block.edge(e).other(last);
            if (on_path[static_cast<std::size_t>(w)]) continue;
            on_path[static_cast<std::size_t>(w)] = true;
            path.push_back(w);
            if (extend()) return true;
            path.pop_back();
            on_path[static_cast<std::size_t>(w)] = false;
        }
        return false;
    };
    if (!extend()) throw NotOuterplanar("block has no Hamiltonian cycle");

    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(path[static_cast<std::size_t>(i)])] = i;
    std::vector<std::pair<int, int>> chords;
    for (const Edge& e : block.edges()) {
        int a = pos[static_cast<std::size_t>(e.u)], b = pos[static_cast<std::size_t>(e.v)];
        if (a > b) std::swap(a, b);
        if (b - a == 1 || (a == 0 && b == n - 1)) continue;
        chords.emplace_back(a, b);
    }
    for (std::size_t i = 0; i < chords.size(); ++i)
        for (std::size_t j = i + 1; j < chords.size(); ++j) {
            auto [a, b] = chords[i];
            auto [c, d] = chords[j];
            const bool c_in = a < c && c < b, d_in = a < d && d < b;
            const bool shared = a == c || a == d || b == c || b == d;
            if (!shared && c_in != d_in) throw NotOuterplanar("chords cross");
        }
    return {block, path};
}

namespace {

/// Working state for one Δ = 4 block.
class Delta4Colorer {
public:
    explicit Delta4Colorer(const OuterBlock& b) : b_(b), g_(b.graph), n_(g_.vertex_count()) {
        pos_.assign(static_cast<std::size_t>(n_), 0);
        for (int i = 0; i < n_; ++i) pos_[static_cast<std::size_t>(b.cycle[static_cast<std::size_t>(i)])] = i;
        on_cycle_.assign(static_cast<std::size_t>(g_.edge_count()), false);
        for (int i = 0; i < n_; ++i) {
            const EdgeId e = edge_between(g_, at(i), at(i + 1));
            cycle_edge_.push_back(e);
            on_cycle_[static_cast<std::size_t>(e)] = true;
        }
        chord_degree_.assign(static_cast<std::size_t>(n_), 0);
        for (EdgeId e = 0; e < g_.edge_count(); ++e)
            if (!on_cycle_[static_cast<std::size_t>(e)]) {
                chord_degree_[static_cast<std::size_t>(g_.edge(e).u)]++;
                chord_degree_[static_cast<std::size_t>(g_.edge(e).v)]++;
            }
        build_components();
        colors_.assign(static_cast<std::size_t>(g_.edge_count()), 0);
    }

    BlockColoring run() {
        const std::string branch = color();
        EdgeColoring alpha(5, colors_);
        if (is_cyclic_interval(g_, alpha).cyclic_ok) return {std::move(alpha), BlockTag::Cyclic5, std::nullopt, true, branch};
        const SolveOutcome fallback = solve(g_, 5);
        if (fallback.status != SolveStatus::Found)
            throw DefectError("no cyclic interval 5-coloring for an outerplanar block with maximum degree 4");
        return {*fallback.coloring, BlockTag::Cyclic5, std::nullopt, false, "fallback after branch " + branch};
    }

private:
    struct Component {
        std::vector<Vertex> vertices;  // walk order; for a cycle the closing edge returns to vertices[0]
        std::vector<EdgeId> edges;     // edges[i] joins vertices[i] and vertices[i+1 (mod size for cycles)]
        bool cycle = false;
    };

    Vertex at(int i) const { return b_.cycle[static_cast<std::size_t>(((i % n_) + n_) % n_)]; }
    int deg(Vertex v) const { return g_.degree(v); }
    int chord_deg(Vertex v) const { return chord_degree_[static_cast<std::size_t>(v)]; }
    void paint(EdgeId e, Color c) { colors_[static_cast<std::size_t>(e)] = c; }

    std::vector<EdgeId> chords_at(Vertex v) const {
        std::vector<EdgeId> out;
        for (EdgeId e : g_.incident(v))
            if (!on_cycle_[static_cast<std::size_t>(e)]) out.push_back(e);
        return out;
    }

    void build_components() {
        std::vector<bool> seen(static_cast<std::size_t>(g_.edge_count()), false);
        auto walk = [&](Vertex start, Component& c) {
            Vertex cur = start;
            c.vertices.push_back(cur);
            while (true) {
                EdgeId next = -1;
                for (EdgeId e : chords_at(cur))
                    if (!seen[static_cast<std::size_t>(e)]) next = e;
                if (next == -1) break;
                seen[static_cast<std::size_t>(next)] = true;
                c.edges.push_back(next);
                cur = g_.edge(next).other(cur);
                if (cur == start) {
                    c.cycle = true;
                    break;
                }
                c.vertices.push_back(cur);
            }
        };
        // Paths from an endpoint, then whatever remains is a cycle.
        for (Vertex v = 0; v < n_; ++v) {
            if (chord_deg(v) != 1) continue;
            bool fresh = false;
            for (EdgeId e : chords_at(v)) fresh = fresh || !seen[static_cast<std::size_t>(e)];
            if (!fresh) continue;
            Component c;
            walk(v, c);
            components_.push_back(std::move(c));
        }
        for (Vertex v = 0; v < n_; ++v) {
            bool fresh = false;
            for (EdgeId e : chords_at(v)) fresh = fresh || !seen[static_cast<std::size_t>(e)];
            if (!fresh) continue;
            Component c;
            walk(v, c);
            components_.push_back(std::move(c));
        }
    }

    /// Paths and even cycles alternate lo/hi; an odd cycle gets one edge colored
    /// 2, chosen away from `avoid` when possible.
    void paint_default(const Component& c, const std::set<Vertex>& avoid, Color lo = 1, Color hi = 3) {
        const std::size_t k = c.edges.size();
        if (!c.cycle || k % 2 == 0) {
            for (std::size_t i = 0; i < k; ++i) paint(c.edges[i], i % 2 ? hi : lo);
            return;
        }
        std::size_t two = 0;
        for (std::size_t i = 0; i < k; ++i) {
            const Vertex a = c.vertices[i], b = c.vertices[(i + 1) % k];
            if (!avoid.count(a) && !avoid.count(b)) {
                two = i;
                break;
            }
        }
        paint(c.edges[two], 2);
        for (std::size_t j = 1; j < k; ++j) paint(c.edges[(two + j) % k], j % 2 ? lo : hi);
    }

    void paint_all_default(const std::set<Vertex>& avoid, const Component* skip = nullptr) {
        for (const auto& c : components_)
            if (&c != skip) paint_default(c, avoid);
    }

    /// Colors `count` consecutive cycle edges starting from cycle position `from`
    /// and moving in direction dir (+1 or -1), alternating first/second.
    void paint_cycle_run(int from, int dir, int count, Color first, Color second) {
        for (int k = 0; k < count; ++k) {
            const int i = dir > 0 ? from + k : from - 1 - k;
            paint(cycle_edge_[static_cast<std::size_t>(((i % n_) + n_) % n_)], k % 2 ? second : first);
        }
    }

    Color chord_color_at(Vertex v) const {
        for (EdgeId e : chords_at(v)) return colors_[static_cast<std::size_t>(e)];
        return 0;
    }

    std::string color() {
        if (n_ % 2 == 0) {
            paint_all_default({});
            paint_cycle_run(0, +1, n_, 4, 5);
            return "even order";
        }
        // Case 1: two consecutive degree-4 vertices.
        for (int i = 0; i < n_; ++i) {
            const Vertex u = at(i), v = at(i + 1);
            if (deg(u) == 4 && deg(v) == 4) {
                paint_all_default({u, v});
                paint(cycle_edge_[static_cast<std::size_t>(i)], 2);
                paint_cycle_run(i + 1, +1, n_ - 1, 4, 5);
                return "consecutive degree-4 pair";
            }
        }
        // Case 2, first part: a degree-3 vertex u next to a degree-4 vertex v.
        for (int i = 0; i < n_; ++i) {
            for (int dir : {+1, -1}) {
                const Vertex u = at(i), v = at(i + dir);
                if (deg(u) != 3 || deg(v) != 4) continue;
                paint_all_default({v});
                const int uv_index = dir > 0 ? i : i - 1;
                paint(cycle_edge_[static_cast<std::size_t>(((uv_index % n_) + n_) % n_)], 2);
                const Color start = chord_color_at(u) == 1 ? 5 : 4;
                // Walk from u away from v.
                paint_cycle_run(i, -dir, n_ - 1, start, start == 5 ? 4 : 5);
                return "degree-3/degree-4 pair";
            }
        }
        // Case 2, second part: a chord cycle or a chord path with at least 3 edges.
        for (const auto& c : components_) {
            if (!c.cycle && c.edges.size() < 3) continue;
            return recolor_through(c);
        }
        return reducible_path();
    }

    std::string recolor_through(const Component& c) {
        paint_all_default({}, &c);
        const std::size_t k = c.edges.size();
        Vertex x;
        if (c.cycle) {
            // x = vertices[0], z = vertices[1]; edges[0] = xz, edges[k-1] = wx.
            x = c.vertices[0];
            paint(c.edges[0], 2);
            paint(c.edges[k - 1], 1);
            for (std::size_t j = 0; j + 2 < k; ++j) paint(c.edges[k - 2 - j], j % 2 ? 1 : 3);
        } else {
            // x = vertices[1], z = vertices[2]; edges[0] = wx, edges[1] = xz.
            x = c.vertices[1];
            paint(c.edges[0], 1);
            paint(c.edges[1], 2);
            for (std::size_t j = 2; j < k; ++j) paint(c.edges[j], j % 2 ? 3 : 1);
        }
        // y = next vertex on C after x; xy gets 3, the rest of C runs 4,5,... from y.
        const int px = pos_[static_cast<std::size_t>(x)];
        paint(cycle_edge_[static_cast<std::size_t>(px)], 3);
        paint_cycle_run(px + 1, +1, n_ - 1, 4, 5);
        return "chord component recolored through a degree-2 neighbor";
    }

    std::string reducible_path() {
        const Component* p = nullptr;
        for (const auto& c : components_)
            if (!c.cycle && c.edges.size() == 2) {
                p = &c;
                break;
            }
        if (!p) {
            paint_all_default({});
            paint_cycle_run(0, +1, n_, 4, 5);
            return "no length-2 chord path (unexpected)";
        }
        const Vertex x = p->vertices[0], u = p->vertices[1], v = p->vertices[2];
        const EdgeId xu = p->edges[0], uv = p->edges[1];
        // Q: the arc of C from u to v through x.
        const int pu = pos_[static_cast<std::size_t>(u)];
        int dir = +1;
        for (int k = 1; k < n_; ++k) {
            const Vertex w = at(pu + k);
            if (w == x) break;
            if (w == v) {
                dir = -1;
                break;
            }
        }
        int q_len = 0;
        std::set<Vertex> q_inner;
        for (int k = 1;; ++k) {
            const Vertex w = at(pu + dir * k);
            ++q_len;
            if (w == v) break;
            q_inner.insert(w);
        }
        paint_cycle_run(pu, dir, q_len, 2, 3);
        paint_cycle_run(pu, -dir, n_ - q_len, 5, 4);
        for (const auto& c : components_) {
            if (&c == p) continue;
            const bool inside = q_inner.count(c.vertices.front()) && q_inner.count(c.vertices.back());
            paint_default(c, {}, 1, inside ? 4 : 3);
        }
        paint(xu, 1);
        paint(uv, q_len % 2 ? 3 : 4);
        return "length-2 chord path with arc recolored";
    }

    const OuterBlock& b_;
    const Multigraph& g_;
    int n_;
    std::vector<int> pos_;
    std::vector<EdgeId> cycle_edge_;
    std::vector<bool> on_cycle_;
    std::vector<int> chord_degree_;
    std::vector<Component> components_;
    std::vector<Color> colors_;
};

/// Odd cycle of length n >= 5 at t = 5: consecutive edges differ by +-1 modulo 5,
/// with k steps up and n - k down where 2k = n (mod 5), so the walk closes.
EdgeColoring odd_cycle_five(const OuterBlock& b, const InducedBlock& part) {
    const int n = static_cast<int>(b.cycle.size());
    int up = 0;
    while ((2 * up - n) % 5 != 0) ++up;
    std::vector<Color> colors(static_cast<std::size_t>(n), 0);
    int c = 0;
    for (int i = 0; i < n; ++i) {
        const EdgeId e = edge_between(b.graph, b.cycle[static_cast<std::size_t>(i)], b.cycle[static_cast<std::size_t>((i + 1) % n)]);
        colors[static_cast<std::size_t>(part.edge_map[static_cast<std::size_t>(e)])] = c + 1;
        c = (c + (i < up ? 1 : 4)) % 5;
    }
    return EdgeColoring(5, std::move(colors));
}

}  // namespace

BlockColoring color_block_delta4(const OuterBlock& b) {
    if (b.graph.max_degree() != 4) throw PreconditionError("block must have maximum degree 4");
    if (b.cycle.size() != static_cast<std::size_t>(b.graph.vertex_count()))
        throw PreconditionError("block needs its Hamiltonian cycle");
    return Delta4Colorer(b).run();
}

BlockColoring color_block_small(const OuterBlock& b, std::optional<Vertex> bad_vertex) {
    const Multigraph& g = b.graph;
    const int delta = g.max_degree();
    if (delta > 3) throw PreconditionError("block has maximum degree above 3");
    if (g.edge_count() == 1) return {EdgeColoring(1, {1}), BlockTag::Interval, std::nullopt, true, "bridge"};
    const int n = g.vertex_count();
    if (delta == 2) {
        if (b.cycle.size() != static_cast<std::size_t>(n)) throw PreconditionError("cycle block needs its vertex order");
        int start = 0;
        if (bad_vertex) {
            auto it = std::find(b.cycle.begin(), b.cycle.end(), *bad_vertex);
            if (it == b.cycle.end()) throw PreconditionError("requested bad vertex is not on the block", *bad_vertex);
            start = static_cast<int>(it - b.cycle.begin());
        }
        std::vector<Color> colors(static_cast<std::size_t>(g.edge_count()), 0);
        auto edge_at = [&](int i) {
            return edge_between(g, b.cycle[static_cast<std::size_t>((start + i) % n)],
                                b.cycle[static_cast<std::size_t>((start + i + 1) % n)]);
        };
        if (n % 2 == 0) {
            for (int i = 0; i < n; ++i) colors[static_cast<std::size_t>(edge_at(i))] = i % 2 ? 2 : 1;
            return {EdgeColoring(2, std::move(colors)), BlockTag::Interval, std::nullopt, true, "even cycle"};
        }
        // 1, then 2,1,2,...,2, then 3: only the start vertex sees {1,3}.
        colors[static_cast<std::size_t>(edge_at(0))] = 1;
        for (int i = 1; i < n - 1; ++i) colors[static_cast<std::size_t>(edge_at(i))] = i % 2 ? 2 : 1;
        colors[static_cast<std::size_t>(edge_at(n - 1))] = 3;
        return {EdgeColoring(3, std::move(colors)), BlockTag::Cyclic3WithBadVertex,
                b.cycle[static_cast<std::size_t>(start)], true, "odd cycle"};
    }
    const SolveOutcome found = solve_interval(g, 4);
    if (found.status != SolveStatus::Found)
        throw DefectError("outerplanar block with maximum degree 3 has no interval coloring with 4 colors");
    return {*found.coloring, BlockTag::Interval, std::nullopt, false, "interval search with 4 colors"};
}

ColoredResult color_outerplanar(const Multigraph& g, OuterplanarStats* stats) {
    if (!g.is_simple()) throw PreconditionError("graph must be simple");
    if (!is_connected(g)) throw PreconditionError("graph must be connected");
    if (g.max_degree() > 4) throw PreconditionError("maximum degree exceeds 4");
    OuterplanarStats local;
    OuterplanarStats& st = stats ? *stats : local;
    st = {};
    if (g.edge_count() == 0) return {EdgeColoring(5, {}), 5, Method::Outerplanar};

    const BlockDecomposition bd = blocks(g);
    const int nb = static_cast<int>(bd.blocks.size());
    std::vector<InducedBlock> parts;
    std::vector<OuterBlock> outer;
    for (const auto& edges : bd.blocks) {
        parts.push_back(compact_subgraph(g, edges));
        try {
            outer.push_back(outer_cycle(parts.back().graph));
        } catch (const NotOuterplanar& e) {
            throw PreconditionError(std::string("graph is not outerplanar: ") + e.what());
        }
    }
    st.blocks = nb;

    // BFS over the block tree from the first block containing vertex 0.
    std::vector<int> order;
    std::vector<Vertex> attach(static_cast<std::size_t>(nb), -1);
    std::vector<bool> queued(static_cast<std::size_t>(nb), false);
    int root = 0;
    for (int b = 0; b < nb; ++b) {
        const auto& vs = bd.block_vertices[static_cast<std::size_t>(b)];
        if (std::binary_search(vs.begin(), vs.end(), 0)) {
            root = b;
            break;
        }
    }
    std::queue<int> bfs;
    bfs.push(root);
    queued[static_cast<std::size_t>(root)] = true;
    while (!bfs.empty()) {
        const int b = bfs.front();
        bfs.pop();
        order.push_back(b);
        for (Vertex v : bd.block_vertices[static_cast<std::size_t>(b)]) {
            auto it = bd.blocks_at_cut.find(v);
            if (it == bd.blocks_at_cut.end()) continue;
            for (int nbk : it->second) {
                if (queued[static_cast<std::size_t>(nbk)]) continue;
                queued[static_cast<std::size_t>(nbk)] = true;
                attach[static_cast<std::size_t>(nbk)] = v;
                bfs.push(nbk);
            }
        }
    }

    auto local_of = [&](int b, Vertex v) -> std::optional<Vertex> {
        const auto& vm = parts[static_cast<std::size_t>(b)].vertex_map;
        auto it = std::find(vm.begin(), vm.end(), v);
        if (it == vm.end()) return std::nullopt;
        return static_cast<Vertex>(it - vm.begin());
    };
    auto color_block = [&](int b, std::optional<Vertex> bad) {
        const OuterBlock& ob = outer[static_cast<std::size_t>(b)];
        BlockColoring bc = ob.graph.max_degree() == 4 ? color_block_delta4(ob) : color_block_small(ob, bad);
        if (bc.constructive) ++st.constructive_blocks;
        else ++st.fallback_blocks;
        st.diagnostics.push_back("block " + std::to_string(b) + ": " + bc.diagnostic);
        return bc;
    };

    using colorset::Mask;
    std::vector<Color> colors(static_cast<std::size_t>(g.edge_count()), 0);
    std::vector<Mask> used(static_cast<std::size_t>(g.vertex_count()), 0);
    bool composed = true;
    for (int b : order) {
        const auto& part = parts[static_cast<std::size_t>(b)];
        std::optional<Vertex> bad;
        if (b == root) {
            for (Vertex v : part.vertex_map)
                if (bd.blocks_at_cut.count(v)) {
                    bad = local_of(b, v);
                    break;
                }
        } else {
            bad = local_of(b, attach[static_cast<std::size_t>(b)]);
        }
        const BlockColoring bc = color_block(b, bad);
        if (nb == 1 && bc.tag == BlockTag::Cyclic3WithBadVertex) {
            // A lone odd cycle. The triangle has no cyclic 5-coloring, so it keeps t = 3.
            if (g.vertex_count() == 3) return {bc.coloring, 3, Method::Outerplanar};
            return {odd_cycle_five(outer[static_cast<std::size_t>(b)], part), 5, Method::Outerplanar};
        }
        int shift = 0;
        if (b != root) {
            const Vertex v = attach[static_cast<std::size_t>(b)];
            const Vertex lv = *local_of(b, v);
            Mask spectrum_v = 0;
            for (EdgeId e : part.graph.incident(lv)) spectrum_v |= colorset::bit(bc.coloring[e]);
            shift = -1;
            for (int s = 0; s < 5 && shift < 0; ++s) {
                Mask rotated = 0;
                for (Color c = 1; c <= 5; ++c)
                    if (spectrum_v & colorset::bit(c)) rotated |= colorset::bit((c - 1 + s) % 5 + 1);
                const Mask a = used[static_cast<std::size_t>(v)];
                if ((a & rotated) == 0 && colorset::extendable(a | rotated, 5, g.degree(v), true)) shift = s;
            }
            if (shift < 0) {
                composed = false;
                st.diagnostics.push_back("no rotation of block " + std::to_string(b) + " fits at vertex " +
                                         std::to_string(v));
                break;
            }
        }
        for (EdgeId le = 0; le < part.graph.edge_count(); ++le) {
            const Color c = (bc.coloring[le] - 1 + shift) % 5 + 1;
            const EdgeId ge = part.edge_map[static_cast<std::size_t>(le)];
            colors[static_cast<std::size_t>(ge)] = c;
            used[static_cast<std::size_t>(g.edge(ge).u)] |= colorset::bit(c);
            used[static_cast<std::size_t>(g.edge(ge).v)] |= colorset::bit(c);
        }
    }
    if (composed) {
        EdgeColoring alpha(5, colors);
        if (is_cyclic_interval(g, alpha).cyclic_ok) return {std::move(alpha), 5, Method::Outerplanar};
        st.diagnostics.push_back("composed coloring failed verification");
    }
    st.composition_fallback = true;
    const SolveOutcome found = solve(g, 5);
    if (found.status != SolveStatus::Found)
        throw DefectError("no cyclic interval 5-coloring found for an outerplanar graph with maximum degree 4");
    return {*found.coloring, 5, Method::Outerplanar};
}

}  // namespace cic
