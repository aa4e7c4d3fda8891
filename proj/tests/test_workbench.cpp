#include <doctest.h>

#include <array>
#include <cstdio>
#include <memory>
#include <random>
#include <sys/wait.h>

#include <json.hpp>

#include "cic/errors.hpp"
#include "cic/generators.hpp"
#include "cic/io.hpp"
#include "cic/obstructions.hpp"
#include "support.hpp"

#ifndef CICWB_PATH
#error "CICWB_PATH must point at the CLI binary"
#endif

using namespace cic;
using testkit::from_pairs;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& command) {
    const std::string full = "(" + command + ") 2>/dev/null";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(full.c_str(), "r"), pclose);
    REQUIRE(pipe);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe.release());
    return {WEXITSTATUS(status), out};
}

const std::string cli = CICWB_PATH;

}  // namespace

TEST_CASE("rng bounded draws are uniform enough and reproducible") {
    Rng a(42), b(42);
    std::array<int, 6> counts{};
    for (int i = 0; i < 60000; ++i) {
        const auto x = a.below(6);
        CHECK(x == b.below(6));
        counts[x]++;
    }
    for (int c : counts) CHECK((c > 9500 && c < 10500));
    // first raw output of mt19937_64 with the default seed
    Rng d(5489);
    CHECK(d.next() == 14514284786278117030ull);
}

TEST_CASE("named families") {
    const Multigraph s2 = shannon_triangle(2);
    CHECK(s2.vertex_count() == 3);
    CHECK(s2.edge_count() == 6);
    for (Vertex v = 0; v < 3; ++v) CHECK(s2.degree(v) == 4);
    for (int p = 1; p <= 5; ++p)
        CHECK(testkit::oracle_cyclic_ok(shannon_triangle(p), shannon_coloring(p).colors(), 3 * p));

    const Multigraph tt = three_triangles();
    CHECK(tt.edge_count() == 9);
    CHECK(tt.degree(0) == 6);
    for (Vertex v = 1; v < 7; ++v) CHECK(tt.degree(v) == 2);

    const Multigraph b47 = biregular_graph(4, 7, 1, 99);
    CHECK(b47.vertex_count() == 11);
    CHECK(b47.edge_count() == 28);
    for (Vertex v = 0; v < 11; ++v) CHECK(b47.degree(v) == (v < 7 ? 4 : 7));

    const Multigraph simple = biregular_graph(2, 3, 3, 5, true);
    CHECK(simple.is_simple());
    CHECK_THROWS_AS(biregular_graph(4, 7, 1, 0, true), PreconditionError);
}

TEST_CASE("random families keep their invariants") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Multigraph e = eulerian_bipartite(6, 10 + static_cast<int>(seed % 7), seed);
        CHECK(e.max_degree() == 6);
        CHECK(e.is_eulerian());
        CHECK(bipartition(e));

        const Multigraph o = random_outerplanar(5 + static_cast<int>(seed % 15), 4, seed);
        CHECK(o.is_simple());
        CHECK(is_connected(o));
        CHECK(o.max_degree() <= 4);

        const Multigraph d = random_bipartite_degrees({1, 2, 4, 6, 7, 8}, 5, seed);
        CHECK(d.max_degree() == 8);
        for (Vertex v = 0; v < d.vertex_count(); ++v) CHECK(d.degree(v) != 3);
    }
    CHECK_THROWS_AS(eulerian_bipartite(5, 10, 0), PreconditionError);
    CHECK_THROWS_AS(random_outerplanar(5, 5, 0), PreconditionError);
}

TEST_CASE("generators are deterministic") {
    for (std::uint64_t seed : {0ull, 1ull, 123456789ull}) {
        CHECK(graph_to_json(biregular_graph(4, 7, 2, seed)) == graph_to_json(biregular_graph(4, 7, 2, seed)));
        CHECK(graph_to_json(eulerian_bipartite(8, 16, seed)) == graph_to_json(eulerian_bipartite(8, 16, seed)));
        CHECK(graph_to_json(random_outerplanar(15, 4, seed)) == graph_to_json(random_outerplanar(15, 4, seed)));
    }
    CHECK(graph_to_json(biregular_graph(4, 7, 2, 1)) != graph_to_json(biregular_graph(4, 7, 2, 2)));
    GeneratorSpec inner{"hpq", {2, 2}};
    GeneratorSpec sub{"subdivision", {}, 0, false, std::make_shared<GeneratorSpec>(inner)};
    CHECK(generate(sub) == full_subdivision(hpq_graph(2, 2)));
    CHECK_THROWS_AS(generate(GeneratorSpec{"nope", {}}), PreconditionError);
}

TEST_CASE("json formats") {
    const Multigraph g = from_pairs(3, {{0, 1}, {1, 2}, {1, 2}, {2, 2}});
    CHECK(graph_to_json(g) == R"({"n": 3, "edges": [[0,1], [1,2], [1,2], [2,2]]})");
    CHECK(graph_from_json(graph_to_json(g)) == g);
    CHECK(coloring_to_json(EdgeColoring(4, {1, 2, 1, 2})) == R"({"t": 4, "colors": [1, 2, 1, 2]})");
    CHECK(coloring_from_json(R"({"t": 4, "colors": [1, 2, 1, 2]})") == EdgeColoring(4, {1, 2, 1, 2}));

    std::mt19937 gen(2);
    for (int round = 0; round < 100; ++round) {
        const int n = 1 + static_cast<int>(gen() % 8);
        std::vector<std::pair<int, int>> p;
        for (int k = static_cast<int>(gen() % 12); k > 0; --k) p.emplace_back(static_cast<int>(gen() % n), static_cast<int>(gen() % n));
        const Multigraph r = from_pairs(n, p);
        CHECK(graph_from_json(graph_to_json(r)) == r);
    }

    CHECK(graph_from_json(R"({"n": 2, "edges": [[0,1]], "parts": [0, 1]})").edge_count() == 1);
    CHECK_THROWS_AS(graph_from_json(R"({"n": 2, "edges": [[0,1]], "parts": [1, 1]})"), PreconditionError);
    CHECK_THROWS_AS(graph_from_json(R"({"n": 2, "edges": [[0,2]]})"), FormatError);
    CHECK_THROWS_AS(graph_from_json("not json"), FormatError);
    CHECK_THROWS_AS(coloring_from_json(R"({"t": 2, "colors": [3]})"), FormatError);

    Document doc;
    doc.graph = testkit::path(2);
    doc.coloring = EdgeColoring(1, {1});
    doc.method = "exact";
    CHECK(document_to_json(doc) == R"({"n": 2, "edges": [[0,1]], "t": 1, "colors": [1], "method": "exact"})");
}

TEST_CASE("dot export") {
    const Multigraph c4 = testkit::cycle(4);
    const std::string labeled = export_dot(c4, EdgeColoring(2, {1, 2, 1, 2}));
    CHECK(labeled.find("0 -- 1 [label=\"1\"];") != std::string::npos);
    CHECK(labeled.find("3 -- 0 [label=\"2\"];") != std::string::npos);
    const std::string plain = export_dot(c4);
    CHECK(plain.find("label") == std::string::npos);
    CHECK(plain.find("2 -- 3;") != std::string::npos);
    CHECK_THROWS_AS(export_dot(c4, EdgeColoring(2, {1, 2})), PreconditionError);
}

TEST_CASE("cli pipelines") {
    Run r = run(cli + " gen multipartite 1 1 3 | " + cli + " color --method multipartite | " + cli + " verify");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["cyclic_ok"] == true);
    CHECK(j["t"] == 5);

    r = run(cli + " gen hpq 3 4 | " + cli + " obstruct");
    CHECK(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["obstructions"][0]["kind"] == "WindowSpan");

    r = run(cli + " gen biregular 2 3 --seed 1 | " + cli + " color --method outerplanar");
    CHECK(r.code == 1);

    r = run(cli + " gen biregular 4 7 --seed 3");
    j = nlohmann::json::parse(r.out);
    CHECK(j["meta"]["rng"] == "mt19937_64");
    CHECK(j["meta"]["seed"] == 3);
    CHECK(r.out == run(cli + " gen biregular 4 7 --seed 3").out);

    r = run("echo '{\"n\": 3, \"edges\": [[0,1], [1,2], [2,0]]}' | " + cli + " solve --t 4");
    CHECK(r.code == 1);
    CHECK(nlohmann::json::parse(r.out)["status"] == "NotExists");

    r = run("echo '{\"n\": 3, \"edges\": [[0,1], [1,2], [2,0]]}' | " + cli + " wc --tmax 6");
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["wc"] == 3);

    r = run(cli + " gen shannon_triangle 3 | " + cli + " verify");
    CHECK(r.code == 0);

    r = run(cli + " gen outerplanar 12 --seed 4 | " + cli + " color --method outerplanar | " + cli + " export-dot");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("graph G {", 0) == 0);

    CHECK(run(cli + " color --method nonsense < /dev/null").code == 2);
    CHECK(run(cli).code == 2);
    CHECK(run("echo 'garbage' | " + cli + " verify").code == 2);
    CHECK(run("CIC_SOLVER_BUDGET=10 " + cli + " gen hpq 3 4 | CIC_SOLVER_BUDGET=10 " + cli + " solve --t 13").code == 1);
}

TEST_CASE("auto routes graphs that are not bipartite") {
    auto method_and_t = [](const std::string& gen) {
        const Run r = run(cli + " gen " + gen + " | " + cli + " color");
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        return std::make_pair(j.at("method").get<std::string>(), j.at("t").get<int>());
    };
    CHECK(method_and_t("multipartite 1 1 3") == std::make_pair(std::string("multipartite"), 5));
    CHECK(method_and_t("three_triangles") == std::make_pair(std::string("exact"), 7));
    CHECK(method_and_t("shannon_triangle 2") == std::make_pair(std::string("exact"), 6));
    const Run fan = run("printf '%s' '{\"n\": 5, \"edges\": [[0,1],[1,2],[2,3],[3,4],[4,0],[0,2],[0,3]]}' | " + cli + " color");
    REQUIRE(fan.code == 0);
    CHECK(nlohmann::json::parse(fan.out).at("method") == "outerplanar");
}
