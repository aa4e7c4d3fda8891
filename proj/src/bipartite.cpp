#include "cic/bipartite.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "cic/errors.hpp"
#include "cic/factorization.hpp"
#include "cic/obstructions.hpp"

namespace cic {

const char* to_string(Method m) {
    switch (m) {
        case Method::EvenDelta: return "even_delta";
        case Method::OddDelta: return "odd_delta";
        case Method::Interval4: return "interval4";
        case Method::Eulerian8: return "eulerian8";
        case Method::Degrees124678: return "degrees_124678";
        case Method::Biregular: return "biregular";
        case Method::LowDegree: return "low_degree";
        case Method::Multipartite: return "multipartite";
        case Method::Outerplanar: return "outerplanar";
        case Method::Exact: return "exact";
    }
    return "?";
}

std::optional<Method> method_from_string(const std::string& s) {
    for (Method m : {Method::EvenDelta, Method::OddDelta, Method::Interval4, Method::Eulerian8, Method::Degrees124678,
                     Method::Biregular, Method::LowDegree, Method::Multipartite, Method::Outerplanar, Method::Exact})
        if (s == to_string(m)) return m;
    return std::nullopt;
}

namespace {

std::string vertex_msg(Vertex v, int degree, const std::string& why) {
    std::ostringstream os;
    os << "vertex " << v << " (degree " << degree << ") " << why;
    return os.str();
}

void require_bipartite_loopless(const Multigraph& g) {
    for (const Edge& e : g.edges())
        if (e.is_loop()) throw PreconditionError("input has a loop at vertex " + std::to_string(e.u), e.u);
    if (!bipartition(g)) throw PreconditionError("input is not bipartite");
}

void require_degrees(const Multigraph& g, const std::set<int>& allowed) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const int d = g.degree(v);
        if (d != 0 && !allowed.count(d)) {
            std::ostringstream os;
            os << "not in the allowed degree set {";
            for (auto it = allowed.begin(); it != allowed.end(); ++it) os << (it == allowed.begin() ? "" : ",") << *it;
            os << "}";
            throw PreconditionError(vertex_msg(v, d, os.str()), v);
        }
    }
}

DerivedGraph identity(const Multigraph& g) {
    DerivedGraph d{g, {}};
    for (EdgeId e = 0; e < g.edge_count(); ++e) d.origin.emplace_back(e);
    return d;
}

std::vector<Vertex> odd_vertices(const Multigraph& g) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) % 2) out.push_back(v);
    return out;
}

/// Double over the odd vertices, pad every vertex to degree 2r with loops, split
/// into r 2-factors and color factor i with 2i-1, 2i along its cycles.
EdgeColoring two_factor_coloring(const Multigraph& g, int r) {
    const auto odd = odd_vertices(g);
    const DerivedGraph d = odd.empty() ? identity(g) : doubled_graph(g, odd);
    std::map<Vertex, int> loops;
    for (Vertex v = 0; v < d.graph.vertex_count(); ++v) {
        const int deg = d.graph.degree(v);
        if (deg > 2 * r || deg % 2) throw DefectError(vertex_msg(v, deg, "cannot be padded to 2r"));
        if (deg < 2 * r) loops[v] = (2 * r - deg) / 2;
    }
    const Multigraph star = add_loops(d.graph, loops);
    const auto factors = petersen_two_factorization(star, r);

    std::vector<Color> colors(static_cast<std::size_t>(d.graph.edge_count()), 0);
    for (std::size_t i = 0; i < factors.factors.size(); ++i) {
        std::vector<EdgeId> stripped;
        for (EdgeId e : factors.factors[i])
            if (!star.edge(e).is_loop()) stripped.push_back(e);
        const Color c = static_cast<Color>(2 * i + 1);
        for (auto [e, col] : alternate_color_cycles(star, stripped, c, c + 1)) colors[static_cast<std::size_t>(e)] = col;
    }
    return restrict_coloring(EdgeColoring(2 * r, std::move(colors)), d, g.edge_count());
}

ColoredResult finish(const Multigraph& g, EdgeColoring alpha, Method method) {
    const int t = alpha.t();
    if (!is_cyclic_interval(g, alpha).cyclic_ok)
        throw DefectError(std::string(to_string(method)) + " produced a coloring that is not cyclic interval");
    return {std::move(alpha), t, method};
}

ColoredResult retag(ColoredResult r, Method m) {
    r.method = m;
    return r;
}

ColoredResult low_degree(const Multigraph& g) {
    const int delta = g.max_degree();
    if (delta == 0) return {EdgeColoring(1, {}), 1, Method::LowDegree};
    if (delta == 1)
        return finish(g, EdgeColoring(1, std::vector<Color>(static_cast<std::size_t>(g.edge_count()), 1)),
                      Method::LowDegree);
    return finish(g, two_factor_coloring(g, 1), Method::LowDegree);
}

std::set<int> even_delta_degrees(int r) { return {1, 2, 2 * r - 2, 2 * r - 1, 2 * r}; }
std::set<int> odd_delta_degrees(int r) { return {1, 2, 2 * r - 2, 2 * r - 1}; }

bool degrees_within(const Multigraph& g, const std::set<int>& allowed) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 0 && !allowed.count(g.degree(v))) return false;
    return true;
}

}  // namespace

ColoredResult color_even_delta(const Multigraph& g) {
    require_bipartite_loopless(g);
    const int delta = g.max_degree();
    if (delta < 4 || delta % 2) throw PreconditionError("maximum degree must be even and at least 4");
    const int r = delta / 2;
    require_degrees(g, even_delta_degrees(r));
    return finish(g, two_factor_coloring(g, r), Method::EvenDelta);
}

ColoredResult color_odd_delta(const Multigraph& g) {
    require_bipartite_loopless(g);
    const int delta = g.max_degree();
    if (delta < 3 || delta % 2 == 0) throw PreconditionError("maximum degree must be odd and at least 3");
    const int r = (delta + 1) / 2;
    require_degrees(g, odd_delta_degrees(r));
    Vertex link = -1;
    for (Vertex v = 0; v < g.vertex_count() && link < 0; ++v)
        if (g.degree(v) == delta) link = v;
    if (link < 0) throw DefectError("no vertex of maximum degree");
    const Vertex links[] = {link};
    const DerivedGraph d = doubled_graph(g, links);
    const ColoredResult inner = color_even_delta(d.graph);
    return finish(g, restrict_coloring(inner.coloring, d, g.edge_count()), Method::OddDelta);
}

ColoredResult interval4_lemma(const Multigraph& g) {
    require_bipartite_loopless(g);
    if (g.max_degree() != 4) throw PreconditionError("maximum degree must be 4");
    require_degrees(g, {1, 2, 4});
    EdgeColoring alpha = two_factor_coloring(g, 2);
    if (!is_interval(g, alpha)) throw DefectError("interval4 produced a non-interval coloring");
    return {std::move(alpha), 4, Method::Interval4};
}

RedBlueSplit eulerian8_red_blue(const Multigraph& g) {
    const int n = g.vertex_count();
    RedBlueSplit out;

    // H: split each degree-6 vertex into v' (2 edges) and v'' (4 edges, keeps the index).
    std::vector<Edge> h_edges = g.edges();
    int next = n;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) != 6) continue;
        auto inc = g.incident(v);
        SplitVertex s{v, next++, {inc.begin(), inc.begin() + 2}, {inc.begin() + 2, inc.end()}};
        for (EdgeId e : s.prime_edges) {
            Edge& ed = h_edges[static_cast<std::size_t>(e)];
            (ed.u == v ? ed.u : ed.v) = s.v_prime;
        }
        out.splits.push_back(std::move(s));
    }
    const Multigraph h(next, std::move(h_edges));
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
        const int d = h.degree(v);
        if (d != 0 && d != 2 && d != 4 && d != 8) throw DefectError(vertex_msg(v, d, "in the split graph"));
    }

    // H' = components where every vertex has degree 2; they go Red wholesale.
    int comp_count = 0;
    const auto comp = components(h, &comp_count);
    std::vector<bool> cycle_only(static_cast<std::size_t>(comp_count), true);
    for (Vertex v = 0; v < h.vertex_count(); ++v)
        if (h.degree(v) != 2 && h.degree(v) != 0) cycle_only[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])] = false;

    out.blue.assign(static_cast<std::size_t>(g.edge_count()), false);
    std::vector<bool> done(static_cast<std::size_t>(h.edge_count()), false);
    for (EdgeId e = 0; e < h.edge_count(); ++e)
        if (cycle_only[static_cast<std::size_t>(comp[static_cast<std::size_t>(h.edge(e).u)])]) done[static_cast<std::size_t>(e)] = true;

    // K: contract each reducible path of the rest into one edge (a loop if it closes up).
    std::vector<Edge> k_edges;
    std::vector<std::vector<EdgeId>> paths;
    for (Vertex b = 0; b < h.vertex_count(); ++b) {
        if (h.degree(b) != 4 && h.degree(b) != 8) continue;
        for (EdgeId first : h.incident(b)) {
            if (done[static_cast<std::size_t>(first)]) continue;
            std::vector<EdgeId> path{first};
            done[static_cast<std::size_t>(first)] = true;
            EdgeId prev = first;
            Vertex cur = h.edge(first).other(b);
            while (h.degree(cur) == 2) {
                auto inc = h.incident(cur);
                const EdgeId step = inc[0] == prev ? inc[1] : inc[0];
                done[static_cast<std::size_t>(step)] = true;
                path.push_back(step);
                prev = step;
                cur = h.edge(step).other(cur);
            }
            k_edges.push_back({b, cur});
            paths.push_back(std::move(path));
        }
    }
    const Multigraph k(h.vertex_count(), std::move(k_edges));

    for (const auto& trail : euler_circuit(k, true).component_circuits) {
        if (trail.edges.size() % 2) throw DefectError("Euler circuit of the contracted graph has odd length");
        for (std::size_t i = 0; i < trail.edges.size(); ++i)
            for (EdgeId e : paths[static_cast<std::size_t>(trail.edges[i])]) out.blue[static_cast<std::size_t>(e)] = (i % 2 == 0);
    }

    // Balance in H and in G.
    auto blue_count = [&](const Multigraph& graph, Vertex v) {
        int c = 0;
        for (EdgeId e : graph.incident(v)) c += out.blue[static_cast<std::size_t>(e)] ? 1 : 0;
        return c;
    };
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
        const int d = h.degree(v), bl = blue_count(h, v);
        const bool ok = d == 0 || (d == 2 && (bl == 0 || bl == 2)) || (d == 4 && bl == 2) || (d == 8 && bl == 4);
        if (!ok) throw DefectError(vertex_msg(v, d, "of the split graph is unbalanced: " + std::to_string(bl) + " Blue"));
    }
    for (Vertex v = 0; v < n; ++v) {
        const int d = g.degree(v), bl = blue_count(g, v);
        const bool ok = d == 0 || (d == 2 && (bl == 0 || bl == 2)) || (d == 4 && bl == 2) ||
                        (d == 6 && (bl == 2 || bl == 4)) || (d == 8 && bl == 4);
        if (!ok) throw DefectError(vertex_msg(v, d, "is unbalanced: " + std::to_string(bl) + " Blue"));
    }
    return out;
}

ColoredResult color_eulerian8(const Multigraph& g) {
    require_bipartite_loopless(g);
    if (!g.is_eulerian()) throw PreconditionError("graph is not Eulerian");
    const int delta = g.max_degree();
    if (delta > 8) throw PreconditionError("maximum degree exceeds 8");
    if (delta <= 2) return retag(low_degree(g), Method::Eulerian8);
    if (delta <= 6) return retag(color_even_delta(g), Method::Eulerian8);

    const RedBlueSplit split = eulerian8_red_blue(g);
    std::vector<EdgeId> blue_ids, red_ids;
    for (EdgeId e = 0; e < g.edge_count(); ++e) (split.blue[static_cast<std::size_t>(e)] ? blue_ids : red_ids).push_back(e);

    std::vector<Color> colors(static_cast<std::size_t>(g.edge_count()), 0);
    const DerivedGraph g1 = edge_subgraph(g, blue_ids);
    const DerivedGraph g2 = edge_subgraph(g, red_ids);
    const EdgeColoring f1 = interval4_lemma(g1.graph).coloring;
    const EdgeColoring f2 = interval4_lemma(g2.graph).coloring;
    // Blue keeps 1,2 and moves 3,4 to 5,6; Red moves 1,2 to 7,8 and keeps 3,4.
    for (EdgeId e = 0; e < g1.graph.edge_count(); ++e) {
        const Color c = f1[e];
        colors[static_cast<std::size_t>(*g1.origin[static_cast<std::size_t>(e)])] = c <= 2 ? c : c + 2;
    }
    for (EdgeId e = 0; e < g2.graph.edge_count(); ++e) {
        const Color c = f2[e];
        colors[static_cast<std::size_t>(*g2.origin[static_cast<std::size_t>(e)])] = c <= 2 ? c + 6 : c;
    }
    return finish(g, EdgeColoring(8, std::move(colors)), Method::Eulerian8);
}

ColoredResult color_degrees_124678(const Multigraph& g) {
    require_bipartite_loopless(g);
    require_degrees(g, {1, 2, 4, 6, 7, 8});
    if (g.is_eulerian()) return retag(color_eulerian8(g), Method::Degrees124678);
    const auto odd = odd_vertices(g);
    const DerivedGraph d = doubled_graph(g, odd);
    const ColoredResult inner = color_eulerian8(d.graph);
    return finish(g, restrict_coloring(inner.coloring, d, g.edge_count()), Method::Degrees124678);
}

std::optional<BiregularSides> biregular_sides(const Multigraph& g) {
    if (g.has_loops() || g.vertex_count() == 0) return std::nullopt;
    std::set<int> degrees;
    for (Vertex v = 0; v < g.vertex_count(); ++v) degrees.insert(g.degree(v));
    if (degrees.size() != 2 || *degrees.begin() == 0) return std::nullopt;
    BiregularSides s;
    s.a = *degrees.begin();
    s.b = *degrees.rbegin();
    for (Vertex v = 0; v < g.vertex_count(); ++v) (g.degree(v) == s.a ? s.x : s.y).push_back(v);
    for (const Edge& e : g.edges())
        if (g.degree(e.u) == g.degree(e.v)) return std::nullopt;
    return s;
}

DerivedGraph extend_biregular(const Multigraph& g, int a, int b) {
    if (a < 1 || a >= b) throw PreconditionError("need 1 <= a < b");
    if (std::gcd(a, b - 1) != 1) throw PreconditionError("gcd(a, b-1) must be 1");
    if (g.has_loops()) throw PreconditionError("input has a loop");

    std::vector<Vertex> y;
    if (a == b - 1) {
        const auto parts = bipartition(g);
        if (!parts) throw PreconditionError("input is not bipartite");
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (g.degree(v) != a) throw PreconditionError(vertex_msg(v, g.degree(v), "breaks regularity"), v);
            if (parts->side[static_cast<std::size_t>(v)] == Side::Y) y.push_back(v);
        }
    } else {
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            const int d = g.degree(v);
            if (d == b - 1) y.push_back(v);
            else if (d != a) throw PreconditionError(vertex_msg(v, d, "is not on either side of the biregular pair"), v);
        }
        for (const Edge& e : g.edges())
            if (g.degree(e.u) == g.degree(e.v)) throw PreconditionError("edge inside one side of the biregular pair");
    }
    if (y.size() % static_cast<std::size_t>(a) != 0)
        throw DefectError("|Y| = " + std::to_string(y.size()) + " is not divisible by a = " + std::to_string(a));

    DerivedGraph out = identity(g);
    std::vector<Edge> edges = g.edges();
    const int k = static_cast<int>(y.size()) / a;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < a; ++j) {
            edges.push_back({g.vertex_count() + i, y[static_cast<std::size_t>(a * i + j)]});
            out.origin.emplace_back(std::nullopt);
        }
    out.graph = Multigraph(g.vertex_count() + k, std::move(edges));
    return out;
}

ColoredResult color_biregular(const Multigraph& g) {
    require_bipartite_loopless(g);
    const auto sides = biregular_sides(g);
    if (!sides) throw PreconditionError("graph is not (a,b)-biregular with a < b");
    const int a = sides->a, b = sides->b;
    if (b % 2 == 0 && b >= 4 && (a == b - 2 || a == 2)) return retag(color_even_delta(g), Method::Biregular);
    if (a == 2 && b % 2 == 1) return retag(color_odd_delta(g), Method::Biregular);
    if (a == 4 && b == 8) return retag(color_eulerian8(g), Method::Biregular);
    if (a == 4 && b == 7) {
        const DerivedGraph ext = extend_biregular(g, 4, 8);
        const ColoredResult inner = color_eulerian8(ext.graph);
        return finish(g, restrict_coloring(inner.coloring, ext, g.edge_count()), Method::Biregular);
    }
    throw UnsupportedError("no colorer for (" + std::to_string(a) + "," + std::to_string(b) + ")-biregular graphs");
}

ColoredResult auto_color(const Multigraph& g, const AutoOptions& options) {
    require_bipartite_loopless(g);
    const int delta = g.max_degree();
    if (delta <= 2) return low_degree(g);
    if (delta % 2 == 0 && degrees_within(g, even_delta_degrees(delta / 2))) return color_even_delta(g);
    if (delta % 2 == 1 && degrees_within(g, odd_delta_degrees((delta + 1) / 2))) return color_odd_delta(g);
    if (degrees_within(g, {1, 2, 4, 6, 7, 8})) return color_degrees_124678(g);
    if (auto s = biregular_sides(g); s && s->a == 4 && s->b == 7) return color_biregular(g);

    const auto obstructions = all_obstructions(g);
    std::optional<std::string> hint;
    for (const auto& o : obstructions) {
        if (!hint) hint = describe(o);
        if (o.excludes_all()) throw NoMethodApplies("graph has no cyclic interval coloring", SolveStatus::NotExists, describe(o));
    }
    const int t_max = options.t_max.value_or(default_wc_bound(g).value_or(delta + 4));
    SolveStatus last = SolveStatus::NotExists;
    for (int t = delta; t <= t_max && t <= 64; ++t) {
        if (std::any_of(obstructions.begin(), obstructions.end(), [t](const auto& o) { return o.excludes(t); })) continue;
        SolveOutcome out = solve(g, t, options.budget);
        if (out.status == SolveStatus::Found) return {std::move(*out.coloring), t, Method::Exact};
        if (out.status == SolveStatus::Unknown) last = SolveStatus::Unknown;
    }
    throw NoMethodApplies("no construction applies and the search found no coloring up to t = " + std::to_string(t_max),
                          last, hint);
}

}  // namespace cic
