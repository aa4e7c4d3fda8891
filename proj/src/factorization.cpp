#include "cic/factorization.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "cic/errors.hpp"

namespace cic {

namespace {

ClosedTrail hierholzer(const Multigraph& g, Vertex start, std::vector<bool>& used, bool skip_loops) {
    std::vector<std::size_t> ptr(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<std::pair<Vertex, EdgeId>> stack{{start, -1}};
    ClosedTrail trail;
    while (!stack.empty()) {
        const Vertex v = stack.back().first;
        auto inc = g.incident(v);
        auto& p = ptr[static_cast<std::size_t>(v)];
        while (p < inc.size() && (used[static_cast<std::size_t>(inc[p])] || (skip_loops && g.edge(inc[p]).is_loop())))
            ++p;
        if (p < inc.size()) {
            const EdgeId e = inc[p];
            used[static_cast<std::size_t>(e)] = true;
            stack.emplace_back(g.edge(e).other(v), e);
        } else {
            trail.vertices.push_back(v);
            if (stack.back().second != -1) trail.edges.push_back(stack.back().second);
            stack.pop_back();
        }
    }
    std::reverse(trail.vertices.begin(), trail.vertices.end());
    std::reverse(trail.edges.begin(), trail.edges.end());
    return trail;
}

/// Inserts every loop of each vertex right after that vertex's first appearance.
ClosedTrail splice_loops(const Multigraph& g, const ClosedTrail& base) {
    ClosedTrail out;
    std::vector<bool> visited(static_cast<std::size_t>(g.vertex_count()), false);
    auto visit = [&](Vertex v) {
        out.vertices.push_back(v);
        if (visited[static_cast<std::size_t>(v)]) return;
        visited[static_cast<std::size_t>(v)] = true;
        for (EdgeId e : g.incident(v)) {
            if (!g.edge(e).is_loop()) continue;
            out.edges.push_back(e);
            out.vertices.push_back(v);
        }
    };
    visit(base.vertices.front());
    for (std::size_t i = 0; i < base.edges.size(); ++i) {
        out.edges.push_back(base.edges[i]);
        visit(base.vertices[i + 1]);
    }
    return out;
}

}  // namespace

EulerCircuit euler_circuit(const Multigraph& g, bool loops_first) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) % 2 != 0)
            throw PreconditionError("vertex " + std::to_string(v) + " has odd degree " + std::to_string(g.degree(v)), v);

    int count = 0;
    const auto comp = components(g, &count);
    std::vector<bool> started(static_cast<std::size_t>(count), false);
    std::vector<bool> used(static_cast<std::size_t>(g.edge_count()), false);
    EulerCircuit out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const int c = comp[static_cast<std::size_t>(v)];
        if (g.degree(v) == 0 || started[static_cast<std::size_t>(c)]) continue;
        started[static_cast<std::size_t>(c)] = true;
        ClosedTrail trail = hierholzer(g, v, used, loops_first);
        if (loops_first) trail = splice_loops(g, trail);
        out.component_circuits.push_back(std::move(trail));
    }
    return out;
}

FactorDecomposition regular_bipartite_matching_decomposition(const Multigraph& g, int r) {
    const auto parts = bipartition(g);
    if (!parts) throw PreconditionError("matching decomposition needs a bipartite graph");
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != r)
            throw PreconditionError("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) +
                                        ", expected " + std::to_string(r),
                                    v);

    const int n = g.vertex_count();
    std::vector<bool> removed(static_cast<std::size_t>(g.edge_count()), false);
    FactorDecomposition out;
    for (int round = 0; round < r; ++round) {
        std::vector<EdgeId> match_of(static_cast<std::size_t>(n), -1);  // right vertex -> edge
        std::vector<int> seen(static_cast<std::size_t>(n), -1);
        std::function<bool(Vertex, int)> augment = [&](Vertex x, int stamp) -> bool {
            for (EdgeId e : g.incident(x)) {
                if (removed[static_cast<std::size_t>(e)]) continue;
                const Vertex y = g.edge(e).other(x);
                if (seen[static_cast<std::size_t>(y)] == stamp) continue;
                seen[static_cast<std::size_t>(y)] = stamp;
                const EdgeId cur = match_of[static_cast<std::size_t>(y)];
                if (cur == -1 || augment(g.edge(cur).other(y), stamp)) {
                    match_of[static_cast<std::size_t>(y)] = e;
                    return true;
                }
            }
            return false;
        };
        for (Vertex x = 0; x < n; ++x) {
            if (parts->side[static_cast<std::size_t>(x)] != Side::X) continue;
            if (!augment(x, x)) throw DefectError("regular bipartite graph without a perfect matching");
        }
        std::vector<EdgeId> matching;
        for (Vertex y = 0; y < n; ++y)
            if (parts->side[static_cast<std::size_t>(y)] == Side::Y) matching.push_back(match_of[static_cast<std::size_t>(y)]);
        std::sort(matching.begin(), matching.end());
        for (EdgeId e : matching) removed[static_cast<std::size_t>(e)] = true;
        out.factors.push_back(std::move(matching));
    }
    return out;
}

FactorDecomposition petersen_two_factorization(const Multigraph& g, int r) {
    if (r < 1) throw PreconditionError("2-factorization needs r >= 1");
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 2 * r)
            throw PreconditionError("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) +
                                        ", expected " + std::to_string(2 * r),
                                    v);

    // Orient every edge along an Euler circuit: in = out = r everywhere.
    const int n = g.vertex_count();
    std::vector<Edge> arcs(static_cast<std::size_t>(g.edge_count()));
    for (const auto& trail : euler_circuit(g, false).component_circuits)
        for (std::size_t i = 0; i < trail.edges.size(); ++i)
            arcs[static_cast<std::size_t>(trail.edges[i])] = {trail.vertices[i], trail.vertices[i + 1] + n};
    const Multigraph split(2 * n, std::move(arcs));

    FactorDecomposition out = regular_bipartite_matching_decomposition(split, r);
    for (const auto& f : out.factors) {
        std::vector<int> deg(static_cast<std::size_t>(n), 0);
        for (EdgeId e : f) {
            deg[static_cast<std::size_t>(g.edge(e).u)]++;
            deg[static_cast<std::size_t>(g.edge(e).v)]++;
        }
        if (std::any_of(deg.begin(), deg.end(), [](int d) { return d != 2; }))
            throw DefectError("folded matching is not a 2-factor");
    }
    return out;
}

std::map<EdgeId, Color> alternate_color_cycles(const Multigraph& g, const std::vector<EdgeId>& factor, Color c_odd,
                                               Color c_even) {
    std::map<Vertex, std::vector<EdgeId>> at;
    for (EdgeId e : factor) {
        const Edge& ed = g.edge(e);
        if (ed.is_loop()) throw PreconditionError("factor contains a loop at vertex " + std::to_string(ed.u), ed.u);
        at[ed.u].push_back(e);
        at[ed.v].push_back(e);
    }
    for (const auto& [v, es] : at)
        if (es.size() != 2)
            throw PreconditionError("vertex " + std::to_string(v) + " has degree " + std::to_string(es.size()) +
                                        " in the factor",
                                    v);

    std::vector<EdgeId> order(factor);
    std::sort(order.begin(), order.end());
    std::map<EdgeId, Color> out;
    for (EdgeId first : order) {
        if (out.count(first)) continue;
        // Walk the cycle from its lowest edge.
        EdgeId e = first;
        Vertex v = g.edge(first).v;
        bool odd = true;
        std::size_t length = 0;
        while (true) {
            out[e] = odd ? c_odd : c_even;
            odd = !odd;
            ++length;
            const auto& pair = at[v];
            const EdgeId next = pair[0] == e ? pair[1] : pair[0];
            if (next == first) break;
            v = g.edge(next).other(v);
            e = next;
        }
        if (length % 2 != 0)
            throw PreconditionError("factor contains an odd cycle through edge " + std::to_string(first));
    }
    return out;
}

}  // namespace cic
