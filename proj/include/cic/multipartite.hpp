#pragma once

#include <optional>
#include <vector>

#include "cic/bipartite.hpp"
#include "cic/graph.hpp"

namespace cic {

/// Part sizes n_1..n_r of a complete multipartite graph, with prefix sums
/// sigma(0) = 0, sigma(i) = n_1 + ... + n_i.
class PartSizes {
public:
    /// Throws PreconditionError for r < 2 or a non-positive part.
    explicit PartSizes(std::vector<int> sizes);

    const std::vector<int>& sizes() const { return sizes_; }
    int parts() const { return static_cast<int>(sizes_.size()); }
    int total() const { return sigma_.back(); }
    int sigma(int i) const { return sigma_[static_cast<std::size_t>(i)]; }

private:
    std::vector<int> sizes_;
    std::vector<int> sigma_;
};

struct MultipartiteGraph {
    Multigraph graph;
    std::vector<int> part;  // 0-based part index per vertex
};

/// Vertices ordered by parts; edge list in lexicographic (i, j), i < j.
MultipartiteGraph complete_multipartite(const PartSizes& sizes);

/// alpha(v_i v_j) = (i + j) mod n, or n when i + j = n, with 1-based i, j; t = n.
ColoredResult color_complete_multipartite(const PartSizes& sizes);

/// Recognizes a complete multipartite graph whose parts are consecutive runs of
/// vertex indices (the layout complete_multipartite produces), in any edge order.
std::optional<PartSizes> recognize_complete_multipartite(const Multigraph& g);

/// color_complete_multipartite transported onto g's edge order. Throws
/// PreconditionError when g is not recognized.
ColoredResult color_multipartite_graph(const Multigraph& g);

/// The exact value 1 + n_2 + ... + n_r for K_{1,n_2,...,n_r} when r, every n_i
/// (i >= 2) and |E| are odd; nullopt outside that hypothesis.
std::optional<int> wc_star_multipartite(const PartSizes& sizes);

}  // namespace cic
