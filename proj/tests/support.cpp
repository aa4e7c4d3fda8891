#include "support.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <functional>
#include <set>

namespace testkit {

namespace {

bool is_run(const std::vector<int>& sorted) {
    return sorted.empty() || sorted.back() - sorted.front() + 1 == static_cast<int>(sorted.size());
}

}  // namespace

std::vector<int> colors_at(const Multigraph& g, const std::vector<int>& colors, int v) {
    std::set<int> s;
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.edge(e).u == v || g.edge(e).v == v) s.insert(colors[static_cast<std::size_t>(e)]);
    return {s.begin(), s.end()};
}

bool oracle_cyclic_ok(const Multigraph& g, const std::vector<int>& colors, int t) {
    if (static_cast<int>(colors.size()) != g.edge_count()) return false;
    for (int c : colors)
        if (c < 1 || c > t) return false;
    for (int a = 0; a < g.edge_count(); ++a)
        for (int b = a + 1; b < g.edge_count(); ++b) {
            const auto& x = g.edge(a);
            const auto& y = g.edge(b);
            const bool share = x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
            if (share && colors[static_cast<std::size_t>(a)] == colors[static_cast<std::size_t>(b)]) return false;
        }
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto s = colors_at(g, colors, v);
        if (is_run(s)) continue;
        std::vector<int> rest;
        for (int c = 1; c <= t; ++c)
            if (!std::binary_search(s.begin(), s.end(), c)) rest.push_back(c);
        if (!is_run(rest)) return false;
    }
    return true;
}

bool oracle_interval_ok(const Multigraph& g, const std::vector<int>& colors) {
    const int t = colors.empty() ? 1 : *std::max_element(colors.begin(), colors.end());
    if (!oracle_cyclic_ok(g, colors, t)) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!is_run(colors_at(g, colors, v))) return false;
    return true;
}

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

EdgeList normalized(const EdgeList& edges, const std::vector<int>& perm) {
    EdgeList out;
    for (auto [u, v] : edges) {
        int a = perm[static_cast<std::size_t>(u)], b = perm[static_cast<std::size_t>(v)];
        if (a > b) std::swap(a, b);
        out.emplace_back(a, b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Lexicographically least edge list over relabelings that list vertices by
/// non-increasing degree; vertices of equal degree are permuted among themselves.
EdgeList canonical(int n, const EdgeList& edges) {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
        deg[static_cast<std::size_t>(u)]++;
        deg[static_cast<std::size_t>(v)]++;
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)]; });
    // groups of equal degree in `order`
    std::vector<std::pair<int, int>> groups;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && deg[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])] == deg[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]) ++j;
        groups.emplace_back(i, j);
        i = j;
    }
    EdgeList best;
    bool have = false;
    std::vector<int> slots = order;
    std::function<void(std::size_t)> rec = [&](std::size_t gi) {
        if (gi == groups.size()) {
            std::vector<int> perm(static_cast<std::size_t>(n));
            for (int pos = 0; pos < n; ++pos) perm[static_cast<std::size_t>(slots[static_cast<std::size_t>(pos)])] = pos;
            EdgeList cand = normalized(edges, perm);
            if (!have || cand < best) {
                best = std::move(cand);
                have = true;
            }
            return;
        }
        auto [lo, hi] = groups[gi];
        std::sort(slots.begin() + lo, slots.begin() + hi);
        do {
            rec(gi + 1);
        } while (std::next_permutation(slots.begin() + lo, slots.begin() + hi));
    };
    rec(0);
    return best;
}

}  // namespace

std::vector<Multigraph> connected_multigraphs(int m) {
    // Grow from canonical graphs with one edge fewer: every connected graph has
    // a non-bridge edge or a pendant edge whose removal keeps it connected.
    std::set<std::pair<int, EdgeList>> level{{2, {{0, 1}}}};
    for (int k = 2; k <= m; ++k) {
        std::set<std::pair<int, EdgeList>> next;
        for (const auto& [n, edges] : level) {
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    EdgeList e = edges;
                    e.emplace_back(u, v);
                    next.insert({n, canonical(n, e)});
                }
                EdgeList e = edges;
                e.emplace_back(u, n);
                next.insert({n + 1, canonical(n + 1, e)});
            }
        }
        level = std::move(next);
    }
    std::vector<Multigraph> out;
    if (m < 1) return out;
    for (const auto& [n, edges] : level) {
        std::vector<cic::Edge> es;
        for (auto [u, v] : edges) es.push_back({u, v});
        out.emplace_back(n, std::move(es));
    }
    return out;
}

Multigraph from_pairs(int n, std::vector<std::pair<int, int>> pairs) {
    std::vector<cic::Edge> es;
    for (auto [u, v] : pairs) es.push_back({u, v});
    return Multigraph(n, std::move(es));
}

Multigraph cycle(int n) {
    std::vector<std::pair<int, int>> p;
    for (int i = 0; i < n; ++i) p.emplace_back(i, (i + 1) % n);
    return from_pairs(n, p);
}

Multigraph path(int n) {
    std::vector<std::pair<int, int>> p;
    for (int i = 0; i + 1 < n; ++i) p.emplace_back(i, i + 1);
    return from_pairs(n, p);
}

Multigraph complete(int n) {
    std::vector<std::pair<int, int>> p;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) p.emplace_back(i, j);
    return from_pairs(n, p);
}

Multigraph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> p;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) p.emplace_back(i, a + j);
    return from_pairs(a + b, p);
}

}  // namespace testkit
