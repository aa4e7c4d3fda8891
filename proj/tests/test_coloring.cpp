#include <doctest.h>

#include <random>

#include "cic/coloring.hpp"
#include "cic/multipartite.hpp"
#include "support.hpp"

using namespace cic;
using testkit::from_pairs;

TEST_CASE("spectrum") {
    const Multigraph k3 = from_pairs(3, {{0, 1}, {1, 2}, {2, 0}});
    const EdgeColoring alpha(3, {1, 2, 3});
    CHECK(spectrum(k3, alpha, 0).colors == std::vector<Color>{1, 3});
    CHECK_THROWS_AS(spectrum(k3, EdgeColoring(3, {1, 2}), 0), std::invalid_argument);
    CHECK(spectrum(Multigraph(1, {}), EdgeColoring(1, {}), 0).colors.empty());
    CHECK(spectrum(from_pairs(1, {{0, 0}}), EdgeColoring(2, {2}), 0).colors == std::vector<Color>{2});
}

TEST_CASE("K3 wraps modulo 3 but not modulo 4") {
    const Multigraph k3 = from_pairs(3, {{0, 1}, {1, 2}, {2, 0}});
    auto at3 = is_cyclic_interval(k3, EdgeColoring(3, {1, 2, 3}));
    CHECK(at3.proper);
    CHECK(at3.cyclic_ok);
    CHECK_FALSE(at3.interval_ok);
    auto at4 = is_cyclic_interval(k3, EdgeColoring(4, {1, 2, 3}));
    CHECK_FALSE(at4.cyclic_ok);
    REQUIRE(at4.violations.size() == 1);
    CHECK(at4.violations[0].vertex == 0);
    CHECK(at4.violations[0].kind == ViolationKind::NotCyclicInterval);
}

TEST_CASE("interval cases") {
    CHECK(is_cyclic_interval(testkit::cycle(4), EdgeColoring(2, {1, 2, 1, 2})).interval_ok);
    CHECK(is_interval(testkit::path(3), EdgeColoring(2, {1, 2})));
    CHECK_FALSE(is_interval(testkit::path(3), EdgeColoring(3, {1, 3})));
    // K_{2,2} through the multipartite formula
    const auto mp = complete_multipartite(PartSizes({2, 2}));
    const EdgeColoring formula(4, {4, 1, 1, 2});
    CHECK_FALSE(is_interval(mp.graph, formula));
    CHECK(is_cyclic_interval(mp.graph, formula).cyclic_ok);
}

TEST_CASE("improper colorings are reported") {
    auto rep = is_cyclic_interval(testkit::path(3), EdgeColoring(2, {1, 1}));
    CHECK_FALSE(rep.proper);
    CHECK_FALSE(rep.cyclic_ok);
    CHECK(rep.violations[0].kind == ViolationKind::AdjacentSameColor);
    CHECK(to_string(ViolationKind::AdjacentSameColor) == "adjacent-same-color");
    CHECK_THROWS_AS(EdgeColoring(2, {3}), std::invalid_argument);
}

TEST_CASE("full spectrum counts as cyclic") {
    const Multigraph star = testkit::complete_bipartite(1, 4);
    CHECK(is_cyclic_interval(star, EdgeColoring(4, {3, 1, 4, 2})).interval_ok);
}

TEST_CASE("verifier agrees with the definition on random colorings") {
    std::mt19937 gen(11);
    for (int round = 0; round < 3000; ++round) {
        const int n = 2 + static_cast<int>(gen() % 5);
        const int m = 1 + static_cast<int>(gen() % 7);
        std::vector<std::pair<int, int>> pairs;
        for (int k = 0; k < m; ++k) {
            int u = static_cast<int>(gen() % n), v = static_cast<int>(gen() % n);
            if (u == v) v = (u + 1) % n;
            pairs.emplace_back(u, v);
        }
        const Multigraph g = from_pairs(n, pairs);
        const int t = 1 + static_cast<int>(gen() % 7);
        std::vector<Color> colors;
        for (int k = 0; k < m; ++k) colors.push_back(1 + static_cast<int>(gen() % t));
        const auto rep = is_cyclic_interval(g, EdgeColoring(t, colors));
        CHECK(rep.cyclic_ok == testkit::oracle_cyclic_ok(g, colors, t));
        if (rep.interval_ok) CHECK(rep.cyclic_ok);
        if (rep.cyclic_ok) CHECK(rep.proper);
        CHECK(rep.interval_ok == (rep.proper && is_interval(g, EdgeColoring(t, colors))));
    }
}

TEST_CASE("rotation keeps cyclic colorings cyclic") {
    const Multigraph k3 = from_pairs(3, {{0, 1}, {1, 2}, {2, 0}});
    const EdgeColoring alpha(3, {1, 2, 3});
    for (int s = 0; s < 6; ++s) CHECK(is_cyclic_interval(k3, rotate(alpha, s)).cyclic_ok);
    CHECK(rotate(alpha, 1).colors() == std::vector<Color>{2, 3, 1});
}

TEST_CASE("color windows") {
    using namespace colorset;
    CHECK(window(5, 4, 3) == (bit(4) | bit(5) | bit(1)));
    CHECK(extendable(bit(1) | bit(3), 5, 4, true));
    CHECK_FALSE(extendable(bit(1) | bit(3), 5, 2, true));
    CHECK(extendable(bit(1) | bit(5), 5, 2, true));
    CHECK_FALSE(extendable(bit(1) | bit(5), 5, 2, false));
}
