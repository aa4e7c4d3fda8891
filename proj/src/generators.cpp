#include "cic/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "cic/errors.hpp"
#include "cic/multipartite.hpp"
#include "cic/obstructions.hpp"

namespace cic {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below(0)");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - (max % n + 1) % n;  // values above limit are rejected
    while (true) {
        const std::uint64_t x = next();
        if (x <= limit) return x % n;
    }
}

namespace {

bool has_parallel(const std::vector<Edge>& edges) {
    std::set<std::pair<Vertex, Vertex>> seen;
    for (const Edge& e : edges)
        if (!seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second) return true;
    return false;
}

/// Pairs X stubs in vertex order with a shuffled list of Y stubs.
Multigraph configuration_model(const std::vector<int>& dx, const std::vector<int>& dy, Rng& rng, bool simple) {
    const int nx = static_cast<int>(dx.size());
    std::vector<Vertex> x_stubs, y_stubs;
    for (int i = 0; i < nx; ++i) x_stubs.insert(x_stubs.end(), static_cast<std::size_t>(dx[static_cast<std::size_t>(i)]), i);
    for (int j = 0; j < static_cast<int>(dy.size()); ++j)
        y_stubs.insert(y_stubs.end(), static_cast<std::size_t>(dy[static_cast<std::size_t>(j)]), nx + j);
    if (x_stubs.size() != y_stubs.size()) throw PreconditionError("degree sums of the two sides differ");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        rng.shuffle(y_stubs);
        std::vector<Edge> edges;
        for (std::size_t k = 0; k < x_stubs.size(); ++k) edges.push_back({x_stubs[k], y_stubs[k]});
        if (!simple || !has_parallel(edges)) return Multigraph(nx + static_cast<int>(dy.size()), std::move(edges));
    }
    throw PreconditionError("no simple pairing found; try a larger scale");
}

}  // namespace

Multigraph biregular_graph(int a, int b, int scale, std::uint64_t seed, bool simple) {
    if (a < 1 || b < 1 || scale < 1) throw PreconditionError("biregular needs a, b, scale >= 1");
    const int g = std::gcd(a, b);
    const int nx = scale * b / g, ny = scale * a / g;
    if (simple && (a > ny || b > nx)) throw PreconditionError("a simple biregular graph needs a <= |Y| and b <= |X|");
    Rng rng(seed);
    Multigraph out = configuration_model(std::vector<int>(static_cast<std::size_t>(nx), a),
                                         std::vector<int>(static_cast<std::size_t>(ny), b), rng, simple);
    for (Vertex v = 0; v < out.vertex_count(); ++v)
        if (out.degree(v) != (v < nx ? a : b)) throw DefectError("biregular generator produced a wrong degree");
    return out;
}

Multigraph shannon_triangle(int p) {
    if (p < 1) throw PreconditionError("shannon_triangle needs p >= 1");
    std::vector<Edge> edges;
    for (int k = 0; k < 3; ++k)
        for (int j = 0; j < p; ++j) edges.push_back({k, (k + 1) % 3});
    return Multigraph(3, std::move(edges));
}

EdgeColoring shannon_coloring(int p) {
    std::vector<Color> colors;
    for (int k = 1; k <= 3; ++k)
        for (int j = 1; j <= p; ++j) colors.push_back((k - 1) * p + j);
    return EdgeColoring(3 * p, std::move(colors));
}

Multigraph three_triangles() {
    std::vector<Edge> edges;
    for (int k = 0; k < 3; ++k) {
        const Vertex a = 2 * k + 1, b = 2 * k + 2;
        edges.push_back({0, a});
        edges.push_back({a, b});
        edges.push_back({0, b});
    }
    return Multigraph(7, std::move(edges));
}

Multigraph eulerian_bipartite(int delta, int n, std::uint64_t seed) {
    if (delta < 2 || delta % 2) throw PreconditionError("eulerian_bipartite needs an even delta >= 2");
    if (n < 2) throw PreconditionError("eulerian_bipartite needs n >= 2");
    const int nx = (n + 1) / 2, ny = n / 2;
    Rng rng(seed);
    std::vector<int> room(static_cast<std::size_t>(n), delta);
    std::vector<Edge> edges;
    auto pick = [&](int lo, int count) -> Vertex {
        std::vector<Vertex> options;
        for (Vertex v = lo; v < lo + count; ++v)
            if (room[static_cast<std::size_t>(v)] >= 2) options.push_back(v);
        if (options.empty()) return -1;
        return options[rng.below(options.size())];
    };
    auto walk = [&](Vertex x0) {
        const int length = rng.uniform(1, std::max(1, std::min(nx, ny)));
        std::vector<Vertex> seq{x0};
        room[static_cast<std::size_t>(x0)] -= 2;
        for (int i = 0; i < length; ++i) {
            const Vertex y = pick(nx, ny);
            if (y < 0) break;
            room[static_cast<std::size_t>(y)] -= 2;
            seq.push_back(y);
            if (i + 1 == length) break;
            const Vertex x = pick(0, nx);
            if (x < 0) break;
            room[static_cast<std::size_t>(x)] -= 2;
            seq.push_back(x);
        }
        if (seq.size() % 2 == 1) {  // ended on an X vertex: give its room back
            room[static_cast<std::size_t>(seq.back())] += 2;
            seq.pop_back();
        }
        if (seq.size() < 2) {
            room[static_cast<std::size_t>(x0)] += 2;
            return false;
        }
        for (std::size_t i = 0; i < seq.size(); ++i) edges.push_back({seq[i], seq[(i + 1) % seq.size()]});
        return true;
    };
    while (room[0] >= 2)
        if (!walk(0)) break;
    const int attempts = rng.uniform(n / 2, 3 * n);
    for (int k = 0; k < attempts; ++k) {
        const Vertex x = pick(0, nx);
        if (x < 0) break;
        walk(x);
    }
    Multigraph out(n, std::move(edges));
    for (Vertex v = 0; v < n; ++v)
        if (out.degree(v) % 2 || out.degree(v) > delta) throw DefectError("eulerian_bipartite degree out of range");
    if (out.max_degree() != delta) throw DefectError("eulerian_bipartite missed the target degree");
    return out;
}

Multigraph random_outerplanar(int n, int max_degree, std::uint64_t seed) {
    if (n < 1) throw PreconditionError("outerplanar needs n >= 1");
    if (max_degree < 1 || max_degree > 4) throw PreconditionError("outerplanar needs 1 <= max degree <= 4");
    if (max_degree == 1 && n > 2) throw PreconditionError("max degree 1 allows at most 2 vertices");
    Rng rng(seed);
    std::vector<Edge> edges;
    std::vector<int> room{max_degree};
    auto add_vertex = [&]() {
        room.push_back(max_degree);
        return static_cast<Vertex>(room.size() - 1);
    };
    auto add_edge = [&](Vertex a, Vertex b) {
        edges.push_back({a, b});
        room[static_cast<std::size_t>(a)]--;
        room[static_cast<std::size_t>(b)]--;
    };
    while (static_cast<int>(room.size()) < n) {
        const int remaining = n - static_cast<int>(room.size());
        std::vector<Vertex> open1, open2;
        for (Vertex v = 0; v < static_cast<Vertex>(room.size()); ++v) {
            if (room[static_cast<std::size_t>(v)] >= 1) open1.push_back(v);
            if (room[static_cast<std::size_t>(v)] >= 2) open2.push_back(v);
        }
        if (open1.empty()) throw DefectError("outerplanar generator ran out of capacity");
        const bool cycle = remaining >= 2 && !open2.empty() && rng.below(10) < 7;
        if (!cycle) {
            const Vertex anchor = open1[rng.below(open1.size())];
            add_edge(anchor, add_vertex());
            continue;
        }
        const Vertex anchor = open2[rng.below(open2.size())];
        const int len = rng.uniform(3, std::min(remaining + 1, 10));
        std::vector<Vertex> c{anchor};
        for (int i = 1; i < len; ++i) c.push_back(add_vertex());
        for (int i = 0; i < len; ++i) add_edge(c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>((i + 1) % len)]);
        std::vector<std::pair<int, int>> chords;
        const int tries = rng.uniform(0, len);
        for (int k = 0; k < tries; ++k) {
            int i = rng.uniform(0, len - 1), j = rng.uniform(0, len - 1);
            if (i > j) std::swap(i, j);
            if (j - i < 2 || (i == 0 && j == len - 1)) continue;
            const Vertex a = c[static_cast<std::size_t>(i)], b = c[static_cast<std::size_t>(j)];
            if (room[static_cast<std::size_t>(a)] < 1 || room[static_cast<std::size_t>(b)] < 1) continue;
            bool ok = true;
            for (auto [p, q] : chords) {
                if (p == i && q == j) ok = false;
                const bool shared = p == i || p == j || q == i || q == j;
                if (!shared && ((i < p && p < j) != (i < q && q < j))) ok = false;
            }
            if (!ok) continue;
            chords.emplace_back(i, j);
            add_edge(a, b);
        }
    }
    Multigraph out(n, std::move(edges));
    if (!out.is_simple() || !is_connected(out) || out.max_degree() > max_degree)
        throw DefectError("outerplanar generator broke its invariants");
    return out;
}

Multigraph layered_fan(const std::vector<int>& fans) {
    if (fans.empty()) throw PreconditionError("layered_fan needs at least one fan");
    const int k = static_cast<int>(fans.size());
    int leaves = 0;
    for (int f : fans) {
        if (f < 1) throw PreconditionError("fan sizes must be positive");
        leaves += f;
    }
    const Vertex u = 0, z = k + leaves + 1;
    std::vector<Edge> edges;
    Vertex next_leaf = k + 1;
    for (int j = 0; j < k; ++j) {
        const Vertex w = j + 1;
        edges.push_back({u, w});
        for (int i = 0; i < fans[static_cast<std::size_t>(j)]; ++i) edges.push_back({w, next_leaf++});
    }
    for (Vertex v = k + 1; v < z; ++v) edges.push_back({v, z});
    return Multigraph(z + 1, std::move(edges));
}

Multigraph random_bipartite_degrees(const std::vector<int>& allowed, int side_size, std::uint64_t seed) {
    if (allowed.empty() || std::find(allowed.begin(), allowed.end(), 1) == allowed.end())
        throw PreconditionError("the allowed degrees must include 1");
    if (side_size < 1) throw PreconditionError("side size must be positive");
    Rng rng(seed);
    std::vector<int> sorted = allowed;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> dx, dy;
    for (int i = 0; i < side_size; ++i) dx.push_back(i == 0 ? sorted.back() : sorted[rng.below(sorted.size())]);
    for (int i = 0; i < side_size; ++i) dy.push_back(sorted[rng.below(sorted.size())]);
    auto sum = [](const std::vector<int>& d) { return std::accumulate(d.begin(), d.end(), 0); };
    while (sum(dx) != sum(dy)) {
        auto& light = sum(dx) < sum(dy) ? dx : dy;
        const int gap = std::abs(sum(dx) - sum(dy));
        int d = 1;
        for (int c : sorted)
            if (c <= gap) d = c;
        light.push_back(d);
    }
    Multigraph out = configuration_model(dx, dy, rng, false);
    for (Vertex v = 0; v < out.vertex_count(); ++v)
        if (!std::binary_search(sorted.begin(), sorted.end(), out.degree(v)))
            throw DefectError("degree outside the allowed set");
    return out;
}

bool uses_seed(const GeneratorSpec& spec) {
    if (spec.family == "subdivision") return spec.inner && uses_seed(*spec.inner);
    return spec.family == "biregular" || spec.family == "eulerian_bipartite" || spec.family == "outerplanar" ||
           spec.family == "bipartite_degrees";
}

Multigraph generate(const GeneratorSpec& spec) {
    const auto& p = spec.params;
    auto need = [&](std::size_t lo, std::size_t hi) {
        if (p.size() < lo || p.size() > hi)
            throw PreconditionError(spec.family + ": wrong number of parameters");
    };
    const std::string& f = spec.family;
    if (f == "multipartite") return complete_multipartite(PartSizes(p)).graph;
    if (f == "biregular") {
        need(2, 3);
        return biregular_graph(p[0], p[1], p.size() > 2 ? p[2] : 1, spec.seed, spec.simple);
    }
    if (f == "hpq") {
        need(2, 2);
        if (p[0] < 1 || p[1] < 1) throw PreconditionError("hpq needs p, q >= 1");
        return hpq_graph(p[0], p[1]);
    }
    if (f == "shannon_triangle") {
        need(1, 1);
        return shannon_triangle(p[0]);
    }
    if (f == "three_triangles") {
        need(0, 0);
        return three_triangles();
    }
    if (f == "eulerian_bipartite") {
        need(2, 2);
        return eulerian_bipartite(p[0], p[1], spec.seed);
    }
    if (f == "outerplanar") {
        need(1, 2);
        return random_outerplanar(p[0], p.size() > 1 ? p[1] : 4, spec.seed);
    }
    if (f == "layered_fan") return layered_fan(p);
    if (f == "bipartite_degrees") {
        need(2, 64);
        return random_bipartite_degrees(std::vector<int>(p.begin() + 1, p.end()), p[0], spec.seed);
    }
    if (f == "subdivision") {
        if (!spec.inner) throw PreconditionError("subdivision needs an inner family");
        return full_subdivision(generate(*spec.inner));
    }
    throw PreconditionError("unknown family: " + f);
}

}  // namespace cic
