#pragma once

#include "sqchoose/graph.hpp"
#include "sqchoose/listcolor.hpp"
#include "sqchoose/structure.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sqchoose {

struct ChoosabilityResult {
    bool choosable = true;
    /// Lists of size k (colors below the universe) admitting no coloring.
    std::optional<ListAssignment> counterexample;
};

/// Whether g itself (callers pass squares) is colorable from every
/// assignment of k-subsets of {0, ..., universe-1}. Assignments are
/// enumerated up to renaming colors, sharing work between assignments that
/// agree on a prefix. Guards: at most 12 vertices after removing vertices of
/// degree below k, and k <= universe <= 2k + 4.
ChoosabilityResult is_k_choosable(const Graph& g, int k, int universe);

/// Same game with per-vertex list sizes; nullopt when the search exceeds
/// `state_budget` memoized states or the work of 64 average-sized states.
std::optional<ChoosabilityResult> is_size_choosable(const Graph& g, const std::vector<int>& sizes, int universe,
                                                    std::size_t state_budget = 2'000'000);

struct ReductionReport {
    bool certified = false;
    /// How the extension was checked: "counting", "even-cycle", "exhaustive"
    /// or "sampled".
    std::string mode;
    /// Vertices of deleted + uncolored in extension order, with the number
    /// of colors guaranteed to survive the outside coloring.
    std::vector<VertexId> vertices;
    std::vector<int> floors;
    /// Whether G^2 on those vertices is colorable from every list of the
    /// floor sizes; nullopt when the check was out of budget.
    std::optional<bool> floor_choosable;
    std::uint64_t assignments_checked = 0;
    /// On failure: residual lists (indexed like `vertices`) and the reason.
    std::optional<ListAssignment> counterexample;
    std::string failure;
};

struct ReductionOptions {
    std::uint64_t exhaustive_limit = 200'000;
    std::uint64_t samples = 20'000;
    std::uint64_t seed = 1;
};

/// Checks that the match's extension procedure succeeds whenever every
/// vertex x of deleted + uncolored keeps at least k - |N^2(x) outside| colors.
ReductionReport verify_reduction(const Graph& g, const ConfigMatch& match, int k,
                                 const ReductionOptions& options = {});

}  // namespace sqchoose
