#include "tlink/linkage.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tlink/errors.hpp"

namespace tlink {

namespace {

std::string pair_tag(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// m vertices maximizing `degree`, ties to the smaller id, restricted to
// `eligible`.
std::vector<int> top_by_degree(const VertexSet& eligible, int m,
                               const std::function<int(int)>& degree) {
    std::vector<int> order = eligible.to_vector();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return degree(a) > degree(b); // stable keeps ascending ids on ties
    });
    order.resize(m);
    return order;
}

void verify_routes(const Tournament& t, const LinkagePair& pair,
                   const std::vector<int>& sigma, const std::vector<Path>& paths) {
    int m = pair.m();
    VertexSet seen(t.size());
    for (int i = 0; i < m; ++i) {
        const Path& p = paths[i];
        std::string err = check_path(t, p);
        if (!err.empty())
            throw InvariantViolation("route " + std::to_string(i) + " invalid: " + err);
        if (p.start() != pair.X[i] || p.end() != pair.Y[sigma[i]])
            throw InvariantViolation("route " + std::to_string(i) +
                                     " has wrong endpoints");
        if (p.length() > 3)
            throw InvariantViolation("route " + std::to_string(i) +
                                     " longer than 3 edges");
        for (int v : p.vertices) {
            if (seen.contains(v))
                throw InvariantViolation("routes collide at vertex " + std::to_string(v));
            seen.insert(v);
        }
    }
}

} // namespace

std::vector<MatchArc> max_bipartite_matching(
    const VertexSet& left, const VertexSet& right,
    const std::function<bool(int, int)>& has_arc) {
    if (left.universe() != right.universe())
        throw InvalidInput("max_bipartite_matching: universe mismatch");
    if (left.intersects(right))
        throw InvalidInput("max_bipartite_matching: sides must be disjoint");

    int universe = left.universe();
    std::vector<int> lefts = left.to_vector();
    std::vector<int> rights = right.to_vector();
    std::vector<int> match_of_right(universe, -1);
    std::vector<char> visited(universe, 0);

    // Augment from l: take the first free right neighbour, or recursively
    // displace an existing match.
    auto augment = [&](auto&& self, int l) -> bool {
        for (int r : rights) {
            if (visited[r] || !has_arc(l, r)) continue;
            visited[r] = 1;
            if (match_of_right[r] < 0 || self(self, match_of_right[r])) {
                match_of_right[r] = l;
                return true;
            }
        }
        return false;
    };

    for (int l : lefts) {
        std::fill(visited.begin(), visited.end(), 0);
        augment(augment, l);
    }

    std::vector<MatchArc> arcs;
    for (int r : rights)
        if (match_of_right[r] >= 0) arcs.push_back({match_of_right[r], r});
    std::sort(arcs.begin(), arcs.end(),
              [](const MatchArc& a, const MatchArc& b) { return a.from < b.from; });
    return arcs;
}

LinkagePair find_linkage_pair(const Tournament& t, int m) {
    int n = t.size();
    if (m < 1) throw InvalidInput("find_linkage_pair: m must be >= 1");
    if (11LL * m > n)
        throw InvalidInput("find_linkage_pair: need 11*m <= n, got m=" +
                           std::to_string(m) + ", n=" + std::to_string(n));

    std::vector<int> xs = top_by_degree(t.all_vertices(), m,
                                        [&](int v) { return t.out_degree(v); });
    VertexSet complement = t.all_vertices();
    for (int x : xs) complement.erase(x);
    std::vector<int> ys = top_by_degree(complement, m,
                                        [&](int v) { return t.in_degree(v); });

    // Degree floors this selection guarantees. The first m out-degrees are
    // each at least (n-m)/2: below that, some unpicked vertex would beat a
    // pick inside the subtournament avoiding the others. The in-degree side
    // is selected from the complement, so it concedes up to m more.
    for (int x : xs)
        if (2 * t.out_degree(x) < n - m)
            throw InvariantViolation("selected x=" + std::to_string(x) +
                                     " has out-degree below (n-m)/2");
    for (int y : ys)
        if (2 * t.in_degree(y) < n - 3 * m)
            throw InvariantViolation("selected y=" + std::to_string(y) +
                                     " has in-degree below (n-m)/2 - m");

    LinkagePair pair;
    pair.common.assign(static_cast<std::size_t>(m) * m, VertexSet(n));
    pair.matchings.assign(static_cast<std::size_t>(m) * m, {});

    int witness_i = -1, witness_j = -1;
    VertexSet witness_x_free(n), witness_y_free(n);

    for (int i = 0; i < m; ++i) {
        int x = xs[i];
        VertexSet x_side = t.out_neighbours(x); // N+(x) + x
        x_side.insert(x);
        for (int j = 0; j < m; ++j) {
            int y = ys[j];
            VertexSet y_side = t.in_neighbours(y); // N-(y) + y
            y_side.insert(y);

            VertexSet xij = x_side - y_side;
            VertexSet yij = y_side - x_side;
            pair.common[i * m + j] = t.out_neighbours(x) & t.in_neighbours(y);
            pair.matchings[i * m + j] = max_bipartite_matching(
                xij, yij, [&](int a, int b) { return t.edge(a, b); });

            if (witness_i < 0) {
                VertexSet x_free = xij, y_free = yij;
                for (const MatchArc& arc : pair.matchings[i * m + j]) {
                    x_free.erase(arc.from);
                    y_free.erase(arc.to);
                }
                if (x_free.count() >= m && y_free.count() >= m) {
                    witness_i = i;
                    witness_j = j;
                    witness_x_free = x_free;
                    witness_y_free = y_free;
                }
            }
        }
    }

    if (witness_i >= 0) {
        // Matching maximality leaves no arc from the unmatched X side to the
        // unmatched Y side, so in a tournament every cross edge runs the
        // other way: unmatched-Y beats unmatched-X wholesale.
        pair.mode = LinkageMode::DirectEdges;
        std::vector<int> from_y = witness_y_free.to_vector();
        std::vector<int> from_x = witness_x_free.to_vector();
        pair.X.assign(from_y.begin(), from_y.begin() + m);
        pair.Y.assign(from_x.begin(), from_x.begin() + m);
        pair.common.clear();
        pair.matchings.clear();
        for (int a : pair.X)
            for (int b : pair.Y)
                if (!t.edge(a, b))
                    throw InvariantViolation(
                        "direct-edges pair misses edge " + std::to_string(a) + "->" +
                        std::to_string(b) + " despite matching maximality");
        return pair;
    }

    pair.mode = LinkageMode::ShortPaths;
    pair.X = xs;
    pair.Y = ys;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int candidates = pair.common[i * m + j].count() +
                             static_cast<int>(pair.matchings[i * m + j].size());
            if (candidates < 4 * m + 1)
                throw InvariantViolation(
                    "linkage pair construction failed: pair " + pair_tag(i, j) +
                    " admits only " + std::to_string(candidates) +
                    " short routes, need " + std::to_string(4 * m + 1));
            // The matching must stay a matching from the X side to the Y side
            // for the disjointness count to hold; cheap to re-check.
            VertexSet touched(n);
            for (const MatchArc& arc : pair.matchings[i * m + j]) {
                if (touched.contains(arc.from) || touched.contains(arc.to))
                    throw InvariantViolation("matching for pair " + pair_tag(i, j) +
                                             " repeats a vertex");
                touched.insert(arc.from);
                touched.insert(arc.to);
            }
        }
    return pair;
}

std::vector<Path> route(const Tournament& t, const LinkagePair& pair,
                        const std::vector<int>& sigma) {
    int m = pair.m();
    int n = t.size();
    if (m == 0) throw InvalidInput("route: empty linkage pair");
    if (static_cast<int>(sigma.size()) != m)
        throw InvalidInput("route: sigma size != m");
    std::vector<char> hit(m, 0);
    for (int s : sigma) {
        if (s < 0 || s >= m || hit[s])
            throw InvalidInput("route: sigma is not a permutation of 0..m-1");
        hit[s] = 1;
    }

    std::vector<Path> paths;
    paths.reserve(m);

    if (pair.mode == LinkageMode::DirectEdges) {
        for (int i = 0; i < m; ++i)
            paths.push_back(Path{{pair.X[i], pair.Y[sigma[i]]}});
        verify_routes(t, pair, sigma, paths);
        return paths;
    }

    VertexSet used(n);
    VertexSet endpoints(n);
    for (int v : pair.X) endpoints.insert(v);
    for (int v : pair.Y) endpoints.insert(v);

    for (int i = 0; i < m; ++i) {
        int j = sigma[i];
        int x = pair.X[i], y = pair.Y[j];
        Path chosen;

        for (int v : pair.common_at(i, j)) {
            if (used.contains(v) || endpoints.contains(v)) continue;
            chosen.vertices = {x, v, y};
            break;
        }
        if (chosen.vertices.empty()) {
            for (const MatchArc& arc : pair.matching_at(i, j)) {
                std::vector<int> verts{x};
                if (arc.from != x) verts.push_back(arc.from);
                if (arc.to != y) verts.push_back(arc.to);
                verts.push_back(y);
                bool free = true;
                for (std::size_t idx = 1; idx + 1 < verts.size(); ++idx)
                    if (used.contains(verts[idx]) || endpoints.contains(verts[idx])) {
                        free = false;
                        break;
                    }
                if (free) {
                    chosen.vertices = std::move(verts);
                    break;
                }
            }
        }
        if (chosen.vertices.empty())
            throw InvariantViolation(
                "route: no disjoint candidate left for pair " + pair_tag(i, j) +
                "; at most 4m-2 vertices can be blocked out of 4m+1 candidates");
        for (int v : chosen.vertices) used.insert(v);
        paths.push_back(std::move(chosen));
    }

    verify_routes(t, pair, sigma, paths);
    return paths;
}

} // namespace tlink
