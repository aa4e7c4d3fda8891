#include "cic/obstructions.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <sstream>

namespace cic {

bool ObstructionReport::excludes(int t) const {
    switch (kind) {
        case ObstructionKind::Divisibility: return t % divisor == 0;
        case ObstructionKind::EvenT: return t % 2 == 0;
        case ObstructionKind::WindowSpan: return true;
    }
    return false;
}

std::string describe(const ObstructionReport& r) {
    std::ostringstream os;
    switch (r.kind) {
        case ObstructionKind::Divisibility:
            os << "Divisibility(d=" << r.divisor << "): excludes every multiple of " << r.divisor;
            break;
        case ObstructionKind::EvenT: os << "EvenT: Eulerian with an odd number of edges, excludes every even t"; break;
        case ObstructionKind::WindowSpan:
            os << "WindowSpan(root=" << r.root << ", span=" << r.span << " < max degree " << r.max_degree
               << "): excludes every t";
            break;
    }
    return os.str();
}

std::optional<ObstructionReport> divisibility_obstruction(const Multigraph& g, int d) {
    if (d < 1) return std::nullopt;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) % d != 0) return std::nullopt;
    if (g.edge_count() % d == 0) return std::nullopt;
    ObstructionReport r;
    r.kind = ObstructionKind::Divisibility;
    r.divisor = d;
    r.max_degree = g.max_degree();
    return r;
}

std::optional<ObstructionReport> even_t_obstruction(const Multigraph& g) {
    if (!g.is_eulerian() || g.edge_count() % 2 == 0) return std::nullopt;
    ObstructionReport r;
    r.kind = ObstructionKind::EvenT;
    r.divisor = 2;
    r.max_degree = g.max_degree();
    return r;
}

Multigraph hpq_graph(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("H_{p,q} needs p, q >= 1");
    std::vector<Edge> edges;
    const Vertex z = q + 1;
    for (int i = 1; i <= q; ++i) {
        for (int k = 0; k < p; ++k) edges.push_back({0, i});
        edges.push_back({i, z});
    }
    return Multigraph(q + 2, std::move(edges));
}

std::optional<ObstructionReport> hpq_obstruction(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("H_{p,q} needs p, q >= 1");
    if (p * q <= 2 * p + q) return std::nullopt;
    ObstructionReport r;
    r.kind = ObstructionKind::WindowSpan;
    r.root = q + 1;
    r.span = q + 2 * p;
    r.max_degree = p * q;
    return r;
}

WindowProfile window_profile(const Multigraph& g, Vertex root) {
    constexpr int inf = std::numeric_limits<int>::max() / 4;
    WindowProfile w;
    w.root = root;
    w.vertex_slack.assign(static_cast<std::size_t>(g.vertex_count()), inf);
    using Item = std::pair<int, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    w.vertex_slack[static_cast<std::size_t>(root)] = 0;
    heap.emplace(0, root);
    while (!heap.empty()) {
        auto [dist, v] = heap.top();
        heap.pop();
        if (dist != w.vertex_slack[static_cast<std::size_t>(v)]) continue;
        for (EdgeId e : g.incident(v)) {
            const Vertex x = g.edge(e).other(v);
            const int cand = dist + g.degree(x) - 1;
            if (cand < w.vertex_slack[static_cast<std::size_t>(x)]) {
                w.vertex_slack[static_cast<std::size_t>(x)] = cand;
                heap.emplace(cand, x);
            }
        }
    }
    int worst = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const int s = std::min(w.vertex_slack[static_cast<std::size_t>(g.edge(e).u)],
                               w.vertex_slack[static_cast<std::size_t>(g.edge(e).v)]);
        w.edge_slack.push_back(s);
        worst = std::max(worst, s);
    }
    w.span = g.degree(root) + 2 * worst;
    return w;
}

std::optional<ObstructionReport> window_span_obstruction(const Multigraph& g) {
    if (g.edge_count() == 0 || g.has_loops() || !is_connected(g)) return std::nullopt;
    std::optional<WindowProfile> best;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        WindowProfile w = window_profile(g, s);
        if (!best || w.span < best->span) best = std::move(w);
    }
    if (best->span >= g.max_degree()) return std::nullopt;
    ObstructionReport r;
    r.kind = ObstructionKind::WindowSpan;
    r.root = best->root;
    r.span = best->span;
    r.max_degree = g.max_degree();
    return r;
}

std::vector<ObstructionReport> all_obstructions(const Multigraph& g) {
    std::vector<ObstructionReport> out;
    if (auto r = even_t_obstruction(g)) out.push_back(*r);
    for (int d = 3; d <= g.max_degree(); ++d)
        if (auto r = divisibility_obstruction(g, d)) out.push_back(*r);
    if (auto r = window_span_obstruction(g)) out.push_back(*r);
    return out;
}

}  // namespace cic
