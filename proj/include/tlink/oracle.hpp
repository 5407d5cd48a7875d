#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tlink/tournament.hpp"

namespace tlink {

// Caps for the exhaustive ground-truth checkers below. The checkers are
// deliberately dumb searches; the caps keep them honest about what they can
// certify. Exceeding a cap raises BudgetExceeded, which is a third verdict,
// never conflated with a negative answer.
struct OracleBudget {
    int max_n = 12;
    long long max_nodes_expanded = 200'000'000;
};

// Exact strong connectivity by testing every removal set in increasing size
// order with reachability checks. Uses the same boundary conventions as
// strong_connectivity in flows.
int bf_strong_connectivity(const Tournament& t, const OracleBudget& budget = {});

// Vertex-disjoint paths, one per (source, sink) pair, found by exhaustive
// backtracking: pairs are processed in the given order and per-pair paths are
// enumerated shortest-first with ascending-id tie-breaks. Returns nullopt
// when no such path system exists. All 2k endpoints must be distinct.
std::optional<std::vector<Path>> bf_disjoint_paths(
    const Tournament& t, const std::vector<std::pair<int, int>>& pairs,
    const OracleBudget& budget = {});

struct LinkedVerdict {
    bool linked = false;
    // A terminal assignment with no disjoint path system; empty when linked.
    std::vector<std::pair<int, int>> counterexample;
};

// Quantifies bf_disjoint_paths over every ordered choice of 2k distinct
// terminals.
LinkedVerdict bf_is_k_linked(const Tournament& t, int k,
                             const OracleBudget& budget = {});

// Maximum number of pairwise fully vertex-disjoint source->sink paths inside
// `allowed`; ground truth for disjoint_paths on small instances. A vertex in
// both sources and sinks counts as a single-vertex path.
int bf_max_disjoint_paths(const Tournament& t, const VertexSet& sources,
                          const VertexSet& sinks, const VertexSet& allowed,
                          const OracleBudget& budget = {});

} // namespace tlink
