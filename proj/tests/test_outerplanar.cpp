#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "cic/errors.hpp"
#include "cic/generators.hpp"
#include "cic/outerplanar.hpp"
#include "cic/solver.hpp"
#include "support.hpp"

using namespace cic;
using testkit::colors_at;
using testkit::from_pairs;

namespace {

bool is_run(const std::vector<int>& s) {
    return s.empty() || s.back() - s.front() + 1 == static_cast<int>(s.size());
}

/// Every edge is a cycle edge or a chord, the cycle visits every vertex once,
/// and no two chords cross.
void check_witness(const Multigraph& g, const OuterBlock& b) {
    const int n = g.vertex_count();
    REQUIRE(static_cast<int>(b.cycle.size()) == n);
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(b.cycle[static_cast<std::size_t>(i)])] = i;
    for (int p : pos) CHECK(p >= 0);
    std::set<std::pair<int, int>> edges;
    for (const Edge& e : g.edges()) edges.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
    for (int i = 0; i < n; ++i) {
        const int a = b.cycle[static_cast<std::size_t>(i)], c = b.cycle[static_cast<std::size_t>((i + 1) % n)];
        CHECK(edges.count({std::min(a, c), std::max(a, c)}) == 1);
    }
    std::vector<std::pair<int, int>> chords;
    for (const Edge& e : g.edges()) {
        int x = pos[static_cast<std::size_t>(e.u)], y = pos[static_cast<std::size_t>(e.v)];
        if (x > y) std::swap(x, y);
        if (y - x == 1 || (x == 0 && y == n - 1)) continue;
        chords.emplace_back(x, y);
    }
    for (auto [a, c] : chords)
        for (auto [x, y] : chords) {
            const bool crossing = (a < x && x < c && c < y) || (x < a && a < y && y < c);
            CHECK_FALSE(crossing);
        }
}

/// Random 2-connected outerplanar graph: a cycle plus non-crossing chords, degree <= 4.
Multigraph random_block(int n, std::mt19937& gen) {
    std::vector<std::pair<int, int>> p;
    std::vector<int> deg(static_cast<std::size_t>(n), 2);
    for (int i = 0; i < n; ++i) p.emplace_back(i, (i + 1) % n);
    std::vector<std::pair<int, int>> chords;
    for (int k = 0; k < 3 * n; ++k) {
        int i = static_cast<int>(gen() % n), j = static_cast<int>(gen() % n);
        if (i > j) std::swap(i, j);
        if (j - i < 2 || (i == 0 && j == n - 1)) continue;
        if (deg[static_cast<std::size_t>(i)] >= 4 || deg[static_cast<std::size_t>(j)] >= 4) continue;
        bool ok = true;
        for (auto [a, c] : chords) {
            if (a == i && c == j) ok = false;
            if ((a < i && i < c && c < j) || (i < a && a < j && j < c)) ok = false;
        }
        if (!ok) continue;
        chords.emplace_back(i, j);
        deg[static_cast<std::size_t>(i)]++;
        deg[static_cast<std::size_t>(j)]++;
        p.emplace_back(i, j);
    }
    // relabel so the cycle is not simply 0..n-1
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), gen);
    for (auto& [a, c] : p) {
        a = perm[static_cast<std::size_t>(a)];
        c = perm[static_cast<std::size_t>(c)];
    }
    return from_pairs(n, p);
}

}  // namespace

TEST_CASE("outer cycles") {
    const Multigraph c6 = testkit::cycle(6);
    const OuterBlock b = outer_cycle(c6);
    CHECK(b.cycle == std::vector<Vertex>{0, 1, 2, 3, 4, 5});

    // K4 minus the edge cd (a=0, b=1, c=2, d=3): cycle a,c,b,d with chord ab
    const Multigraph k4e = from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    const OuterBlock kb = outer_cycle(k4e);
    check_witness(k4e, kb);
    CHECK(kb.cycle == std::vector<Vertex>{0, 2, 1, 3});

    CHECK_THROWS_AS(outer_cycle(testkit::complete(4)), NotOuterplanar);
    CHECK_THROWS_AS(outer_cycle(testkit::complete_bipartite(2, 3)), NotOuterplanar);
    CHECK(outer_cycle(testkit::path(2)).cycle.empty());
}

TEST_CASE("outer cycles of random blocks") {
    std::mt19937 gen(21);
    for (int round = 0; round < 200; ++round) {
        const Multigraph g = random_block(3 + static_cast<int>(gen() % 14), gen);
        check_witness(g, outer_cycle(g));
    }
}

TEST_CASE("delta-4 blocks") {
    SUBCASE("C5 fan") {
        const Multigraph g = from_pairs(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}, {0, 3}});
        const auto bc = color_block_delta4(outer_cycle(g));
        CHECK(bc.tag == BlockTag::Cyclic5);
        CHECK(testkit::oracle_cyclic_ok(g, bc.coloring.colors(), 5));
    }
    SUBCASE("C7 with two degree-4 vertices") {
        const Multigraph g = from_pairs(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}, {0, 2}, {0, 3}, {3, 5}});
        const auto bc = color_block_delta4(outer_cycle(g));
        CHECK(bc.constructive);
        CHECK(testkit::oracle_cyclic_ok(g, bc.coloring.colors(), 5));
    }
    SUBCASE("even order splits into chord and cycle colors") {
        // hexagon with chords 0-2 and 0-4: vertex 0 reaches degree 4
        const Multigraph g = from_pairs(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 2}, {0, 4}});
        const OuterBlock b = outer_cycle(g);
        const auto bc = color_block_delta4(b);
        CHECK(bc.constructive);
        CHECK(testkit::oracle_cyclic_ok(g, bc.coloring.colors(), 5));
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const bool chord = e >= 6;
            if (chord) CHECK((bc.coloring[e] == 1 || bc.coloring[e] == 3));
            else CHECK((bc.coloring[e] == 4 || bc.coloring[e] == 5));
        }
    }
    CHECK_THROWS_AS(color_block_delta4(outer_cycle(testkit::cycle(5))), PreconditionError);
}

TEST_CASE("random delta-4 blocks") {
    std::mt19937 gen(8);
    int constructive = 0, total = 0;
    std::map<std::string, int> branches;
    for (int round = 0; round < 400; ++round) {
        const Multigraph g = random_block(4 + static_cast<int>(gen() % 11), gen);
        if (g.max_degree() != 4) continue;
        const auto bc = color_block_delta4(outer_cycle(g));
        ++total;
        constructive += bc.constructive ? 1 : 0;
        branches[bc.diagnostic]++;
        CHECK(testkit::oracle_cyclic_ok(g, bc.coloring.colors(), 5));
    }
    for (const auto& [name, count] : branches) MESSAGE(name << ": " << count);
    CHECK(total > 100);
    CHECK(constructive > 0);
}

TEST_CASE("small blocks") {
    SUBCASE("odd cycle with a requested bad vertex") {
        const Multigraph c5 = testkit::cycle(5);
        const auto bc = color_block_small(outer_cycle(c5), 2);
        CHECK(bc.tag == BlockTag::Cyclic3WithBadVertex);
        CHECK(bc.bad_vertex == 2);
        CHECK(testkit::oracle_cyclic_ok(c5, bc.coloring.colors(), 3));
        CHECK(colors_at(c5, bc.coloring.colors(), 2) == std::vector<int>{1, 3});
        for (Vertex v = 0; v < 5; ++v)
            if (v != 2) CHECK(is_run(colors_at(c5, bc.coloring.colors(), v)));
    }
    SUBCASE("even cycle") {
        const auto bc = color_block_small(outer_cycle(testkit::cycle(4)));
        CHECK(bc.tag == BlockTag::Interval);
        CHECK(bc.coloring.colors() == std::vector<Color>{1, 2, 1, 2});
    }
    SUBCASE("degree 3 block") {
        const Multigraph k4e = from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
        const auto bc = color_block_small(outer_cycle(k4e));
        CHECK(bc.tag == BlockTag::Interval);
        CHECK(bc.coloring.t() <= 4);
        CHECK(testkit::oracle_interval_ok(k4e, bc.coloring.colors()));
    }
    SUBCASE("bridge") {
        const auto bc = color_block_small(outer_cycle(testkit::path(2)));
        CHECK(bc.coloring.colors() == std::vector<Color>{1});
    }
    CHECK_THROWS_AS(color_block_small(outer_cycle(testkit::cycle(5)), 9), PreconditionError);
}

TEST_CASE("odd cycles put the bad vertex where asked") {
    for (int n = 3; n <= 11; n += 2) {
        const Multigraph c = testkit::cycle(n);
        const OuterBlock b = outer_cycle(c);
        for (Vertex bad = 0; bad < n; ++bad) {
            const auto bc = color_block_small(b, bad);
            for (Vertex v = 0; v < n; ++v) CHECK(is_run(colors_at(c, bc.coloring.colors(), v)) == (v != bad));
        }
    }
}

TEST_CASE("composition") {
    SUBCASE("bowtie") {
        const Multigraph g = from_pairs(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
        const auto r = color_outerplanar(g);
        CHECK(r.t == 5);
        CHECK(testkit::oracle_cyclic_ok(g, r.coloring.colors(), 5));
        CHECK(colors_at(g, r.coloring.colors(), 0) == std::vector<int>{1, 2, 3, 4});
    }
    SUBCASE("tree") {
        const Multigraph g = from_pairs(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {5, 6}, {5, 7}});
        const auto r = color_outerplanar(g);
        CHECK(testkit::oracle_cyclic_ok(g, r.coloring.colors(), 5));
    }
    SUBCASE("lone odd cycle keeps its 3-coloring") {
        const auto r = color_outerplanar(testkit::cycle(3));
        CHECK(r.t == 3);
        CHECK(testkit::oracle_cyclic_ok(testkit::cycle(3), r.coloring.colors(), 3));
    }
    SUBCASE("longer lone odd cycles reach t = 5") {
        for (int n = 5; n <= 13; n += 2) {
            const auto r = color_outerplanar(testkit::cycle(n));
            CHECK(r.t == 5);
            CHECK(testkit::oracle_cyclic_ok(testkit::cycle(n), r.coloring.colors(), 5));
        }
    }
    CHECK(solve(testkit::cycle(3), 5).status == SolveStatus::NotExists);
    CHECK_THROWS_AS(color_outerplanar(three_triangles()), PreconditionError);
    CHECK_THROWS_AS(color_outerplanar(testkit::complete(4)), PreconditionError);
    CHECK_THROWS_AS(color_outerplanar(from_pairs(2, {{0, 1}, {0, 1}})), PreconditionError);
    CHECK_THROWS_AS(color_outerplanar(from_pairs(4, {{0, 1}, {2, 3}})), PreconditionError);
}

TEST_CASE("generated outerplanar graphs") {
    int fallback_blocks = 0, blocks = 0, composed_by_search = 0;
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const int n = 2 + static_cast<int>(seed % 19);
        const Multigraph g = random_outerplanar(n, 4, seed);
        OuterplanarStats stats;
        const auto r = color_outerplanar(g, &stats);
        CHECK(testkit::oracle_cyclic_ok(g, r.coloring.colors(), r.t));
        if (r.t != 5) CHECK(r.t == 3);
        blocks += stats.blocks;
        fallback_blocks += stats.fallback_blocks;
        composed_by_search += stats.composition_fallback ? 1 : 0;
        // rotations of a cyclic 5-coloring stay cyclic
        for (int s = 1; s < r.t; ++s) CHECK(is_cyclic_interval(g, rotate(r.coloring, s)).cyclic_ok);
    }
    MESSAGE("blocks " << blocks << ", by search " << fallback_blocks << ", whole-graph search " << composed_by_search);
    CHECK(fallback_blocks < blocks);
}
