#include "tlink/oracle.hpp"

#include <bit>
#include <string>

#include "tlink/errors.hpp"

namespace tlink {

namespace {

// All oracles run on n <= max_n <= 32, so plain unsigned bitmasks cover a
// vertex set and the adjacency rows.
struct Masks {
    int n;
    std::vector<unsigned> out, in;

    explicit Masks(const Tournament& t) : n(t.size()), out(n, 0), in(n, 0) {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && t.edge(u, v)) {
                    out[u] |= 1u << v;
                    in[v] |= 1u << u;
                }
    }

    unsigned full() const { return n == 32 ? ~0u : (1u << n) - 1; }
};

struct Counter {
    long long used = 0;
    long long cap;

    explicit Counter(const OracleBudget& b) : cap(b.max_nodes_expanded) {}

    void tick() {
        if (++used > cap)
            throw BudgetExceeded("oracle search exceeded " + std::to_string(cap) +
                                 " expanded nodes");
    }
};

void require_small(const Tournament& t, const OracleBudget& b, const char* op) {
    if (b.max_n < 1 || b.max_nodes_expanded < 1)
        throw InvalidInput(std::string(op) + ": budget fields must be positive");
    if (b.max_n > 32)
        throw InvalidInput(std::string(op) + ": oracle bitmasks support at most 32 vertices");
    if (t.size() > b.max_n)
        throw BudgetExceeded(std::string(op) + ": n=" + std::to_string(t.size()) +
                             " exceeds budget max_n=" + std::to_string(b.max_n));
}

unsigned spread(const std::vector<unsigned>& adj, unsigned from, unsigned within) {
    unsigned seen = from & within;
    unsigned frontier = seen;
    while (frontier) {
        unsigned next = 0;
        for (unsigned f = frontier; f;) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= adj[v];
        }
        next &= within & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

bool strongly_connected_on(const Masks& m, unsigned remaining) {
    if (std::popcount(remaining) <= 1) return true;
    unsigned start = remaining & (~remaining + 1); // lowest member
    return spread(m.out, start, remaining) == remaining &&
           spread(m.in, start, remaining) == remaining;
}

// --- disjoint path backtracking -------------------------------------------

struct PairSearch {
    const Masks& m;
    const std::vector<std::pair<int, int>>& pairs;
    Counter& counter;
    std::vector<std::vector<int>> chosen;
    unsigned all_endpoints = 0;

    PairSearch(const Masks& masks, const std::vector<std::pair<int, int>>& ps,
               Counter& c)
        : m(masks), pairs(ps), counter(c), chosen(ps.size()) {
        for (auto [x, y] : ps) all_endpoints |= (1u << x) | (1u << y);
    }

    bool solve(std::size_t idx, unsigned used) {
        if (idx == pairs.size()) return true;
        auto [x, y] = pairs[idx];
        unsigned forbidden =
            used | (all_endpoints & ~(1u << x) & ~(1u << y));
        int free_count = std::popcount(m.full() & ~forbidden & ~(1u << x) & ~(1u << y));
        std::vector<int>& path = chosen[idx];
        path.assign(1, x);
        // Shortest paths first; within a length, lexicographic by the
        // ascending-id neighbour scan below.
        for (int len = 1; len <= free_count + 1; ++len)
            if (extend(idx, x, y, len, forbidden, 1u << x, used)) return true;
        path.clear();
        return false;
    }

    bool extend(std::size_t idx, int cur, int y, int edges_left,
                unsigned forbidden, unsigned visited, unsigned used) {
        counter.tick();
        if (edges_left == 1) {
            if (!(m.out[cur] & (1u << y))) return false;
            chosen[idx].push_back(y);
            unsigned path_mask = visited | (1u << y);
            if (solve(idx + 1, used | path_mask)) return true;
            chosen[idx].pop_back();
            return false;
        }
        unsigned options = m.out[cur] & ~forbidden & ~visited & ~(1u << y);
        while (options) {
            int v = std::countr_zero(options);
            options &= options - 1;
            chosen[idx].push_back(v);
            if (extend(idx, v, y, edges_left - 1, forbidden, visited | (1u << v), used))
                return true;
            chosen[idx].pop_back();
        }
        return false;
    }
};

std::optional<std::vector<Path>> disjoint_paths_impl(
    const Masks& m, const std::vector<std::pair<int, int>>& pairs, Counter& counter) {
    PairSearch search(m, pairs, counter);
    if (!search.solve(0, 0)) return std::nullopt;
    std::vector<Path> out;
    out.reserve(pairs.size());
    for (auto& verts : search.chosen) out.push_back(Path{std::move(verts)});
    return out;
}

void validate_pairs(const Tournament& t, const std::vector<std::pair<int, int>>& pairs) {
    unsigned seen = 0;
    for (auto [x, y] : pairs) {
        if (x < 0 || x >= t.size() || y < 0 || y >= t.size())
            throw InvalidInput("terminal out of range");
        if ((seen & (1u << x)) || x == y)
            throw InvalidInput("terminals must be pairwise distinct");
        seen |= 1u << x;
        if (seen & (1u << y))
            throw InvalidInput("terminals must be pairwise distinct");
        seen |= 1u << y;
    }
}

// --- maximum disjoint path systems ----------------------------------------

struct MaxSearch {
    const Masks& m;
    std::vector<int> sources;
    unsigned source_mask = 0, sink_mask = 0, allowed_mask = 0;
    Counter& counter;

    MaxSearch(const Masks& masks, const VertexSet& src, const VertexSet& snk,
              const VertexSet& allowed, Counter& c)
        : m(masks), counter(c) {
        sources = src.to_vector();
        for (int v : src) source_mask |= 1u << v;
        for (int v : snk) sink_mask |= 1u << v;
        for (int v : allowed) allowed_mask |= 1u << v;
    }

    // Can `need` disjoint paths be packed using sources[si..]? Paths are
    // canonical: they meet the source set only at their first vertex and stop
    // at the first sink they touch, which loses no generality for counting.
    bool feasible(std::size_t si, int need, unsigned used) {
        counter.tick();
        if (need == 0) return true;
        if (sources.size() - si < static_cast<std::size_t>(need)) return false;
        int s = sources[si];
        if (sources.size() - si > static_cast<std::size_t>(need) &&
            feasible(si + 1, need, used))
            return true;
        if (used & (1u << s)) return false;
        return walk(si, need, used, s, 1u << s);
    }

    bool walk(std::size_t si, int need, unsigned used, int cur, unsigned path) {
        counter.tick();
        if (sink_mask & (1u << cur))
            return feasible(si + 1, need - 1, used | path);
        unsigned options =
            m.out[cur] & allowed_mask & ~used & ~path & ~source_mask;
        while (options) {
            int v = std::countr_zero(options);
            options &= options - 1;
            if (walk(si, need, used, v, path | (1u << v))) return true;
        }
        return false;
    }
};

} // namespace

int bf_strong_connectivity(const Tournament& t, const OracleBudget& budget) {
    require_small(t, budget, "bf_strong_connectivity");
    int n = t.size();
    if (n == 1) return 0;
    Masks m(t);
    Counter counter(budget);
    unsigned full = m.full();
    for (int s = 0; s <= n - 2; ++s) {
        // Gosper's hack: all removal sets of size s, ascending as integers.
        unsigned subset = s == 0 ? 0 : (1u << s) - 1;
        while (true) {
            counter.tick();
            if (!strongly_connected_on(m, full & ~subset)) return s;
            if (s == 0) break;
            unsigned lo = subset & (~subset + 1);
            unsigned lifted = subset + lo;
            unsigned next = lifted | (((subset ^ lifted) / lo) >> 2);
            if (next > full) break;
            subset = next;
        }
    }
    throw InvariantViolation(
        "removing n-2 vertices must disconnect a tournament on n >= 2 vertices");
}

std::optional<std::vector<Path>> bf_disjoint_paths(
    const Tournament& t, const std::vector<std::pair<int, int>>& pairs,
    const OracleBudget& budget) {
    require_small(t, budget, "bf_disjoint_paths");
    validate_pairs(t, pairs);
    Masks m(t);
    Counter counter(budget);
    return disjoint_paths_impl(m, pairs, counter);
}

LinkedVerdict bf_is_k_linked(const Tournament& t, int k, const OracleBudget& budget) {
    require_small(t, budget, "bf_is_k_linked");
    if (k < 1) throw InvalidInput("bf_is_k_linked: k must be >= 1");
    if (2 * k > t.size())
        throw InvalidInput("bf_is_k_linked: need 2k <= n");
    Masks m(t);
    Counter counter(budget);
    int n = t.size();

    std::vector<std::pair<int, int>> pairs(k);
    // Fill terminal slots x_1, y_1, x_2, y_2, ... in lexicographic order.
    auto assign = [&](auto&& self, int slot, unsigned taken) -> LinkedVerdict {
        if (slot == 2 * k) {
            if (!disjoint_paths_impl(m, pairs, counter))
                return {false, pairs};
            return {true, {}};
        }
        for (int v = 0; v < n; ++v) {
            if (taken & (1u << v)) continue;
            if (slot % 2 == 0)
                pairs[slot / 2].first = v;
            else
                pairs[slot / 2].second = v;
            LinkedVerdict verdict = self(self, slot + 1, taken | (1u << v));
            if (!verdict.linked) return verdict;
        }
        return {true, {}};
    };
    return assign(assign, 0, 0);
}

int bf_max_disjoint_paths(const Tournament& t, const VertexSet& sources,
                          const VertexSet& sinks, const VertexSet& allowed,
                          const OracleBudget& budget) {
    require_small(t, budget, "bf_max_disjoint_paths");
    int n = t.size();
    if (sources.universe() != n || sinks.universe() != n || allowed.universe() != n)
        throw InvalidInput("bf_max_disjoint_paths: vertex set universe mismatch");
    if (allowed.empty())
        throw InvalidInput("bf_max_disjoint_paths: allowed set is empty");
    if (!sources.is_subset_of(allowed) || !sinks.is_subset_of(allowed))
        throw InvalidInput("bf_max_disjoint_paths: sources/sinks not inside allowed");

    Masks m(t);
    Counter counter(budget);
    MaxSearch search(m, sources, sinks, allowed, counter);
    int most = std::min(sources.count(), sinks.count());
    for (int target = most; target >= 1; --target)
        if (search.feasible(0, target, 0)) return target;
    return 0;
}

} // namespace tlink
