#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cic/coloring.hpp"
#include "cic/graph.hpp"
#include "cic/solver.hpp"

namespace cic {

enum class Method {
    EvenDelta,
    OddDelta,
    Interval4,
    Eulerian8,
    Degrees124678,
    Biregular,
    LowDegree,
    Multipartite,
    Outerplanar,
    Exact,
};
const char* to_string(Method m);
std::optional<Method> method_from_string(const std::string& s);

struct ColoredResult {
    EdgeColoring coloring;
    int t = 1;
    Method method = Method::Exact;
};

/// Bipartite, loopless, Δ = 2r with r >= 2, every degree in {1, 2, 2r-2, 2r-1, 2r}.
/// Degree-2 vertices end with [2i-1, 2i], degree-(2r-2) vertices with its complement.
ColoredResult color_even_delta(const Multigraph& g);

/// Bipartite, loopless, Δ = 2r-1 >= 3, degrees in {1, 2, 2r-2, 2r-1}; t = 2r.
ColoredResult color_odd_delta(const Multigraph& g);

/// Interval 4-coloring of a bipartite graph with Δ = 4 and no degree-3 vertex in
/// which every degree-2 vertex sees [1,2] or [3,4].
ColoredResult interval4_lemma(const Multigraph& g);

/// Degree-6 split used by color_eulerian8: v' takes the two lowest incident edge
/// ids, v'' keeps the other four.
struct SplitVertex {
    Vertex original;
    Vertex v_prime;
    std::vector<EdgeId> prime_edges;
    std::vector<EdgeId> double_prime_edges;
};
using SplitMap = std::vector<SplitVertex>;

/// Red/Blue stage of the Δ = 8 construction, exposed for inspection.
struct RedBlueSplit {
    SplitMap splits;
    std::vector<bool> blue;  // per EdgeId of the input graph
};
RedBlueSplit eulerian8_red_blue(const Multigraph& g);

/// Eulerian bipartite with Δ <= 8; t = Δ (t = 2 for Δ = 2).
ColoredResult color_eulerian8(const Multigraph& g);

/// Bipartite, degrees in {1, 2, 4, 6, 7, 8}.
ColoredResult color_degrees_124678(const Multigraph& g);

struct BiregularSides {
    int a = 0;  // degree on side X
    int b = 0;  // degree on side Y, a < b
    std::vector<Vertex> x;
    std::vector<Vertex> y;
};
/// Detects an (a, b)-biregular graph with a < b. Regular graphs are not reported.
std::optional<BiregularSides> biregular_sides(const Multigraph& g);

/// Given an (a, b-1)-biregular g with gcd(a, b-1) = 1, adds |Y|/a new vertices,
/// each joined to a consecutive block of a vertices of Y (ascending index), giving
/// an (a, b)-biregular graph. Original edges keep their ids.
DerivedGraph extend_biregular(const Multigraph& g, int a, int b);

/// Dispatches (2r-2, 2r), (2, b), (4, 7) and (4, 8). Other pairs throw UnsupportedError.
ColoredResult color_biregular(const Multigraph& g);

struct AutoOptions {
    std::optional<int> t_max;
    std::uint64_t budget = kDefaultBudget;
};

/// Raised by auto_color when no construction applies and the search gives no coloring.
class NoMethodApplies : public std::runtime_error {
public:
    NoMethodApplies(const std::string& what, SolveStatus last_status, std::optional<std::string> obstruction)
        : std::runtime_error(what), status(last_status), obstruction_hint(std::move(obstruction)) {}
    SolveStatus status;
    std::optional<std::string> obstruction_hint;
};

/// Most specific construction first, then the exact solver from Δ upward.
ColoredResult auto_color(const Multigraph& g, const AutoOptions& options = {});

}  // namespace cic
