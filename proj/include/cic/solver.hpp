#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cic/coloring.hpp"
#include "cic/graph.hpp"

namespace cic {

enum class SolveStatus { Found, NotExists, Unknown };
const char* to_string(SolveStatus s);

struct SolveStats {
    std::uint64_t nodes = 0;
    double elapsed_ms = 0.0;
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::Unknown;
    std::optional<EdgeColoring> coloring;  // set iff Found
    SolveStats stats;
};

inline constexpr std::uint64_t kDefaultBudget = 50'000'000;

/// Complete backtracking search for a cyclic interval t-coloring of a loopless
/// multigraph. Budget counts search nodes; exhausting it yields Unknown.
/// Supports t <= 64.
SolveOutcome solve(const Multigraph& g, int t, std::uint64_t budget = kDefaultBudget);

/// As solve, for plain (non-wrapping) interval t-colorings.
SolveOutcome solve_interval(const Multigraph& g, int t, std::uint64_t budget = kDefaultBudget);

/// Reference enumeration of proper colorings, each checked by the verifier.
/// Only for graphs with at most 10 edges.
SolveOutcome naive_enumerate(const Multigraph& g, int t);

struct WcResult {
    std::optional<int> value;
    /// outcomes[i] is the result at t = first_t + i.
    int first_t = 0;
    std::vector<SolveOutcome> outcomes;
    /// Some t below the reported value (or in the whole range, if none found) was Unknown.
    bool inconclusive = false;
};

/// Bound on t for simple triangle-free graphs with at least two vertices: |V| + Δ - 2.
std::optional<int> default_wc_bound(const Multigraph& g);

/// Scans t upward from Δ and stops at the first Found. When t_max is not given
/// the simple triangle-free bound is used; otherwise throws std::invalid_argument.
WcResult wc_search(const Multigraph& g, std::optional<int> t_max, std::uint64_t budget = kDefaultBudget);

}  // namespace cic
