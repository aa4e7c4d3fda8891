#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "cic/coloring.hpp"
#include "cic/graph.hpp"

namespace cic {

/// Seeded 64-bit generator. Only the raw mt19937_64 output stream is used, with
/// our own bounded sampling, so sequences do not depend on the standard library.
class Rng {
public:
    static constexpr const char* kAlgorithm = "mt19937_64";

    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, n) by rejection; n > 0.
    std::uint64_t below(std::uint64_t n);
    int uniform(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

    template <class T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

/// Configuration model. |X| = scale * b / gcd(a, b) vertices of degree a come
/// first, then |Y| = scale * a / gcd(a, b) vertices of degree b. With simple set,
/// pairings with parallel edges are rejected and redrawn.
Multigraph biregular_graph(int a, int b, int scale, std::uint64_t seed, bool simple = false);

/// Triangle v0 v1 v2 with p parallel edges per side, sides listed v0v1, v1v2, v2v0.
Multigraph shannon_triangle(int p);
/// Colors (k-1)p+1, ..., kp on side k; t = 3p.
EdgeColoring shannon_coloring(int p);

/// Triangles {0,1,2}, {0,3,4}, {0,5,6}.
Multigraph three_triangles();

/// Eulerian bipartite multigraph on n vertices (first ceil(n/2) on side X) with
/// maximum degree exactly delta (even), built from random closed walks that
/// alternate sides under the degree cap.
Multigraph eulerian_bipartite(int delta, int n, std::uint64_t seed);

/// Simple connected outerplanar graph on n vertices with maximum degree at most
/// max_degree (<= 4): blocks (bridges, or cycles with random non-crossing chords)
/// glued one at a time at existing vertices with spare capacity.
Multigraph random_outerplanar(int n, int max_degree, std::uint64_t seed);

/// Hub u -> w_1..w_k -> v's -> z, where w_j is joined to fans[j] consecutive v's.
Multigraph layered_fan(const std::vector<int>& fans);

/// Bipartite multigraph from the configuration model on random degree sequences:
/// side_size X vertices and side_size Y vertices with degrees drawn from allowed
/// (which must contain 1), the first X vertex forced to the largest allowed
/// degree, then the lighter side topped up with extra vertices until the degree
/// sums agree.
Multigraph random_bipartite_degrees(const std::vector<int>& allowed, int side_size, std::uint64_t seed);

/// Everything needed to regenerate a graph from the command line.
struct GeneratorSpec {
    std::string family;  // multipartite, biregular, hpq, shannon_triangle, three_triangles,
                         // eulerian_bipartite, outerplanar, layered_fan, subdivision
    std::vector<int> params;
    std::uint64_t seed = 0;
    bool simple = false;
    std::shared_ptr<GeneratorSpec> inner;  // for subdivision
};

Multigraph generate(const GeneratorSpec& spec);
bool uses_seed(const GeneratorSpec& spec);

}  // namespace cic
