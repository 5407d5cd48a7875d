#pragma once

#include <functional>
#include <vector>

#include "tlink/tournament.hpp"

namespace tlink {

enum class LinkageMode { DirectEdges, ShortPaths };

struct MatchArc {
    int from = -1;
    int to = -1;
};

// Two disjoint ordered sets X, Y of size m such that ANY pairing
// X[i] -> Y[sigma(i)] is realizable by vertex-disjoint paths of length <= 3.
//
// DirectEdges mode: every cross edge X[i] -> Y[j] exists, so routes are
// single edges and no tables are needed.
//
// ShortPaths mode: routes detour through per-(i,j) tables, indexed i*m+j.
// common[i*m+j] holds the midpoints v with X[i] -> v -> Y[j]; matchings
// holds a maximum matching of two-edge detours a -> b where X[i] -> a and
// b -> Y[j] (a may equal X[i] and b may equal Y[j], shortening the route).
// Every (i,j) stores at least 4m+1 candidates in total, which is what makes
// any permutation routable greedily.
struct LinkagePair {
    LinkageMode mode = LinkageMode::DirectEdges;
    std::vector<int> X, Y;
    std::vector<VertexSet> common;
    std::vector<std::vector<MatchArc>> matchings;

    int m() const { return static_cast<int>(X.size()); }
    const VertexSet& common_at(int i, int j) const { return common[i * m() + j]; }
    const std::vector<MatchArc>& matching_at(int i, int j) const {
        return matchings[i * m() + j];
    }
};

// Requires m >= 1 and 11*m <= n. Picks X* as the m largest out-degree
// vertices (ties by id) and Y* as the m largest in-degree vertices of the
// complement, then either finds a witness pair (i,j) whose unmatched sides
// give a DirectEdges pair, or returns X*, Y* with the full routing tables.
LinkagePair find_linkage_pair(const Tournament& t, int m);

// Vertex-disjoint paths P_i from X[i] to Y[sigma(i)], each of length <= 3.
// Pairs are served in index order; candidates are tried midpoints-first in
// ascending id, then matching detours in ascending source id, and a
// candidate is taken when its internal vertices avoid everything used so far
// plus every X/Y vertex other than its own endpoints. Output is verified
// (endpoints, lengths, disjointness) before returning.
std::vector<Path> route(const Tournament& t, const LinkagePair& pair,
                        const std::vector<int>& sigma);

// Maximum bipartite matching by augmenting paths, scanning vertices in
// ascending id; returns the matched arcs sorted by source. By maximality, no
// arc joins an unmatched left vertex to an unmatched right vertex.
std::vector<MatchArc> max_bipartite_matching(
    const VertexSet& left, const VertexSet& right,
    const std::function<bool(int, int)>& has_arc);

} // namespace tlink
