#pragma once

#include "tlink/tournament.hpp"

namespace tlink {

// A maximum family of pairwise fully vertex-disjoint source->sink paths,
// together with a vertex cut of equal size certifying maximality: removing
// `cut` from the allowed subgraph leaves no source->sink path.
struct DisjointPathSet {
    std::vector<Path> paths;
    VertexSet cut;
};

// Set-to-set Menger routing: a maximum-cardinality set of pairwise vertex
// disjoint paths (disjoint including endpoints), each from a vertex of
// `sources` to a vertex of `sinks`, confined to `allowed`. Which source ends
// up paired with which sink is unconstrained. A vertex lying in both sources
// and sinks yields a single-vertex path and consumes that vertex.
DisjointPathSet disjoint_paths(const Tournament& t, const VertexSet& sources,
                               const VertexSet& sinks, const VertexSet& allowed);

// Verdict of is_strongly_k_connected. When `connected` is false the witness
// explains why: either the instance is too small for the convention (a single
// vertex cannot be strongly k-connected for k >= 1), or removing `separator`
// (at most k-1 vertices) leaves no path from `from` to `to`.
struct ConnectivityCheck {
    bool connected = false;
    bool too_small = false;
    VertexSet separator;
    int from = -1;
    int to = -1;
};

ConnectivityCheck is_strongly_k_connected(const Tournament& t, int k);

// Exact strong connectivity, via vertex-capacitated max-flow over a covering
// family of vertex pairs. Boundary conventions (fixed here as a testable
// decision): a 1-vertex tournament is strongly connected with kappa 0; kappa
// is 0 whenever T is not strongly connected; kappa <= n-2 for n >= 2.
int strong_connectivity(const Tournament& t);

} // namespace tlink
