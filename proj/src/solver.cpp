#include "cic/solver.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cic {

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Found: return "Found";
        case SolveStatus::NotExists: return "NotExists";
        case SolveStatus::Unknown: return "Unknown";
    }
    return "?";
}

namespace {

using colorset::Mask;

class Search {
public:
    Search(const Multigraph& g, int t, bool cyclic, std::uint64_t budget)
        : g_(g), t_(t), cyclic_(cyclic), budget_(budget) {
        const int m = g.edge_count();
        order_.resize(static_cast<std::size_t>(m));
        std::iota(order_.begin(), order_.end(), 0);
        auto weight = [&](EdgeId e) { return g.degree(g.edge(e).u) + g.degree(g.edge(e).v); };
        std::stable_sort(order_.begin(), order_.end(), [&](EdgeId a, EdgeId b) { return weight(a) > weight(b); });
        position_.assign(static_cast<std::size_t>(m), 0);
        for (int i = 0; i < m; ++i) position_[static_cast<std::size_t>(order_[static_cast<std::size_t>(i)])] = i;

        // Parallel edges are interchangeable: force ascending colors along the order.
        previous_parallel_.assign(static_cast<std::size_t>(m), -1);
        for (int i = 0; i < m; ++i) {
            const Edge& a = g.edge(order_[static_cast<std::size_t>(i)]);
            for (int j = i - 1; j >= 0; --j) {
                const Edge& b = g.edge(order_[static_cast<std::size_t>(j)]);
                if ((a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u)) {
                    previous_parallel_[static_cast<std::size_t>(i)] = order_[static_cast<std::size_t>(j)];
                    break;
                }
            }
        }

        windows_.assign(static_cast<std::size_t>(t + 1), {});
        for (int len = 1; len <= t; ++len)
            for (int a = 1; a <= t; ++a) windows_[static_cast<std::size_t>(len)].push_back(colorset::window(t, a, len));

        used_.assign(static_cast<std::size_t>(g.vertex_count()), 0);
        color_.assign(static_cast<std::size_t>(m), 0);
    }

    SolveStatus run() {
        const bool ok = descend(0);
        if (ok) return SolveStatus::Found;
        return exhausted_ ? SolveStatus::Unknown : SolveStatus::NotExists;
    }

    std::uint64_t nodes() const { return nodes_; }
    const std::vector<Color>& colors() const { return color_; }

private:
    Mask admissible(Vertex v) const {
        const Mask used = used_[static_cast<std::size_t>(v)];
        const int len = g_.degree(v);
        if (len >= t_) return colorset::full(t_) & ~used;
        const int starts = cyclic_ ? t_ : t_ - len + 1;
        Mask acc = 0;
        const auto& ws = windows_[static_cast<std::size_t>(len)];
        for (int a = 0; a < starts; ++a)
            if ((used & ~ws[static_cast<std::size_t>(a)]) == 0) acc |= ws[static_cast<std::size_t>(a)];
        return acc & ~used;
    }

    bool forward_ok(Vertex v, int idx) const {
        const Mask av = admissible(v);
        for (EdgeId f : g_.incident(v)) {
            if (position_[static_cast<std::size_t>(f)] <= idx) continue;
            if ((av & admissible(g_.edge(f).other(v))) == 0) return false;
        }
        return true;
    }

    bool descend(int idx) {
        if (idx == static_cast<int>(order_.size())) return true;
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return false;
        }
        const EdgeId e = order_[static_cast<std::size_t>(idx)];
        const Vertex u = g_.edge(e).u, v = g_.edge(e).v;
        Mask domain = admissible(u) & admissible(v);
        if (const EdgeId prev = previous_parallel_[static_cast<std::size_t>(idx)]; prev != -1)
            domain &= ~colorset::full(color_[static_cast<std::size_t>(prev)]);
        if (idx == 0 && cyclic_) domain &= colorset::bit(1);  // rotation symmetry

        for (Color c = 1; c <= t_ && domain; ++c) {
            const Mask b = colorset::bit(c);
            if (!(domain & b)) continue;
            domain &= ~b;
            used_[static_cast<std::size_t>(u)] |= b;
            used_[static_cast<std::size_t>(v)] |= b;
            color_[static_cast<std::size_t>(e)] = c;
            if (forward_ok(u, idx) && forward_ok(v, idx) && descend(idx + 1)) return true;
            used_[static_cast<std::size_t>(u)] &= ~b;
            used_[static_cast<std::size_t>(v)] &= ~b;
            color_[static_cast<std::size_t>(e)] = 0;
            if (exhausted_) return false;
        }
        return false;
    }

    const Multigraph& g_;
    int t_;
    bool cyclic_;
    std::uint64_t budget_;
    std::vector<EdgeId> order_;
    std::vector<int> position_;
    std::vector<EdgeId> previous_parallel_;
    std::vector<std::vector<Mask>> windows_;
    std::vector<Mask> used_;
    std::vector<Color> color_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

void require_solvable_input(const Multigraph& g, int t) {
    if (g.has_loops()) throw std::invalid_argument("solver input must be loopless");
    if (t < 1) throw std::invalid_argument("t must be positive");
    if (t > 64) throw std::invalid_argument("solver supports t <= 64");
}

SolveOutcome run_search(const Multigraph& g, int t, std::uint64_t budget, bool cyclic) {
    require_solvable_input(g, t);
    const auto start = std::chrono::steady_clock::now();
    SolveOutcome out;
    if (t < g.max_degree()) {
        out.status = SolveStatus::NotExists;
        return out;
    }
    Search search(g, t, cyclic, budget);
    out.status = search.run();
    out.stats.nodes = search.nodes();
    if (out.status == SolveStatus::Found) {
        out.coloring = EdgeColoring(t, search.colors());
        const auto report = is_cyclic_interval(g, *out.coloring);
        if (!(cyclic ? report.cyclic_ok : report.interval_ok))
            throw std::logic_error("solver produced a coloring that fails verification");
    }
    out.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return out;
}

bool has_triangle(const Multigraph& g) {
    for (const Edge& e : g.edges()) {
        for (EdgeId f : g.incident(e.u)) {
            const Vertex w = g.edge(f).other(e.u);
            if (w == e.v || w == e.u) continue;
            for (EdgeId h : g.incident(w))
                if (g.edge(h).other(w) == e.v) return true;
        }
    }
    return false;
}

}  // namespace

SolveOutcome solve(const Multigraph& g, int t, std::uint64_t budget) { return run_search(g, t, budget, true); }

SolveOutcome solve_interval(const Multigraph& g, int t, std::uint64_t budget) {
    return run_search(g, t, budget, false);
}

SolveOutcome naive_enumerate(const Multigraph& g, int t) {
    require_solvable_input(g, t);
    const int m = g.edge_count();
    if (m > 10) throw std::invalid_argument("naive enumeration is limited to 10 edges");
    const auto start = std::chrono::steady_clock::now();
    SolveOutcome out;
    std::vector<Color> colors(static_cast<std::size_t>(m), 0);

    // Every proper coloring in lexicographic order, edges in id order.
    auto clashes = [&](EdgeId e, Color c) {
        for (Vertex w : {g.edge(e).u, g.edge(e).v})
            for (EdgeId f : g.incident(w))
                if (f < e && colors[static_cast<std::size_t>(f)] == c) return true;
        return false;
    };
    int idx = 0;
    while (idx >= 0) {
        if (idx == m) {
            EdgeColoring alpha(t, colors);
            if (is_cyclic_interval(g, alpha).cyclic_ok) {
                out.status = SolveStatus::Found;
                out.coloring = std::move(alpha);
                break;
            }
            --idx;
            continue;
        }
        auto& c = colors[static_cast<std::size_t>(idx)];
        ++out.stats.nodes;
        do {
            ++c;
        } while (c <= t && clashes(idx, c));
        if (c > t) {
            c = 0;
            --idx;
        } else {
            ++idx;
        }
    }
    if (!out.coloring) out.status = SolveStatus::NotExists;
    out.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return out;
}

std::optional<int> default_wc_bound(const Multigraph& g) {
    if (!g.is_simple() || g.vertex_count() < 2 || has_triangle(g)) return std::nullopt;
    return g.vertex_count() + g.max_degree() - 2;
}

WcResult wc_search(const Multigraph& g, std::optional<int> t_max, std::uint64_t budget) {
    if (!t_max) t_max = default_wc_bound(g);
    if (!t_max) throw std::invalid_argument("t_max is required unless the graph is simple and triangle-free");
    WcResult r;
    r.first_t = std::max(1, g.max_degree());
    for (int t = r.first_t; t <= *t_max; ++t) {
        r.outcomes.push_back(solve(g, t, budget));
        const auto status = r.outcomes.back().status;
        if (status == SolveStatus::Unknown) r.inconclusive = true;
        if (status == SolveStatus::Found) {
            r.value = t;
            break;
        }
    }
    return r;
}

}  // namespace cic
