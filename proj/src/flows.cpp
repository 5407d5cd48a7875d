#include "tlink/flows.hpp"

#include <algorithm>
#include <queue>

#include "tlink/errors.hpp"

namespace tlink {

namespace {

constexpr int kInf = 1 << 29;

// Unit-style max-flow network (Dinic). Arcs are stored in pairs, arc i and
// its reverse i^1, so pushing over one credits residual capacity to the
// other. Adjacency lists are built in ascending vertex order and scanned in
// insertion order, which makes every output of this module reproducible.
struct FlowNet {
    int nodes;
    std::vector<std::vector<int>> adj;
    std::vector<int> to, cap, init_cap;
    std::vector<int> level, iter;

    explicit FlowNet(int n) : nodes(n), adj(n) {}

    void add_arc(int a, int b, int c) {
        adj[a].push_back(static_cast<int>(to.size()));
        to.push_back(b); cap.push_back(c); init_cap.push_back(c);
        adj[b].push_back(static_cast<int>(to.size()));
        to.push_back(a); cap.push_back(0); init_cap.push_back(0);
    }

    int flow_on(int arc) const { return init_cap[arc] - cap[arc]; }

    bool bfs(int s, int t) {
        level.assign(nodes, -1);
        level[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front(); q.pop();
            for (int a : adj[v])
                if (cap[a] > 0 && level[to[a]] < 0) {
                    level[to[a]] = level[v] + 1;
                    q.push(to[a]);
                }
        }
        return level[t] >= 0;
    }

    bool dfs(int v, int t) {
        if (v == t) return true;
        for (int& i = iter[v]; i < static_cast<int>(adj[v].size()); ++i) {
            int a = adj[v][i];
            if (cap[a] > 0 && level[to[a]] == level[v] + 1 && dfs(to[a], t)) {
                --cap[a];
                ++cap[a ^ 1];
                return true;
            }
        }
        return false;
    }

    // Every source-to-sink route crosses a unit split arc, so augmenting
    // paths carry exactly one unit each; `limit` caps the total.
    int max_flow(int s, int t, int limit) {
        int total = 0;
        while (total < limit && bfs(s, t)) {
            iter.assign(nodes, 0);
            while (total < limit && dfs(s, t)) ++total;
        }
        return total;
    }

    std::vector<char> residual_reachable(int s) const {
        std::vector<char> seen(nodes, 0);
        seen[s] = 1;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back(); stack.pop_back();
            for (int a : adj[v])
                if (cap[a] > 0 && !seen[to[a]]) {
                    seen[to[a]] = 1;
                    stack.push_back(to[a]);
                }
        }
        return seen;
    }
};

// Vertex-splitting reduction: vertex v becomes v_in=2v -> v_out=2v+1 joined
// by a unit arc; tournament edges and source/sink attachments get effectively
// infinite capacity, so a min cut consists of split arcs only, i.e. it IS a
// vertex set.
int node_in(int v) { return 2 * v; }
int node_out(int v) { return 2 * v + 1; }

struct SplitFlow {
    FlowNet net;
    int src, snk;
    int value = 0;

    SplitFlow(const Tournament& t, const VertexSet& sources,
              const VertexSet& sinks, const VertexSet& allowed, int limit)
        : net(2 * t.size() + 2), src(2 * t.size()), snk(2 * t.size() + 1) {
        for (int v : allowed) net.add_arc(node_in(v), node_out(v), 1);
        for (int s : sources) net.add_arc(src, node_in(s), kInf);
        for (int s : sinks) net.add_arc(node_out(s), snk, kInf);
        for (int u : allowed) {
            VertexSet targets = t.out_neighbours(u);
            targets &= allowed;
            for (int v : targets) net.add_arc(node_out(u), node_in(v), kInf);
        }
        value = net.max_flow(src, snk, limit);
    }

    VertexSet cut(const VertexSet& allowed) const {
        std::vector<char> reach = net.residual_reachable(src);
        VertexSet c(allowed.universe());
        for (int v : allowed)
            if (reach[node_in(v)] && !reach[node_out(v)]) c.insert(v);
        return c;
    }

    // Greedy decomposition: walk each unit of flow from the super-source,
    // taking the first flow-carrying arc at each step. Units stuck on cycles
    // (circulations) never touch a traced path -- each vertex carries at most
    // one unit -- so skipping them is equivalent to canceling them first.
    std::vector<Path> paths() {
        std::vector<int> remaining(net.to.size());
        for (std::size_t a = 0; a < net.to.size(); ++a)
            remaining[a] = (a % 2 == 0) ? net.flow_on(static_cast<int>(a)) : 0;
        std::vector<Path> out;
        for (int a : net.adj[src]) {
            if (a % 2 != 0 || remaining[a] == 0) continue;
            --remaining[a];
            Path p;
            int v = net.to[a] / 2;
            p.vertices.push_back(v);
            while (true) {
                int next_arc = -1;
                for (int b : net.adj[node_out(v)])
                    if (b % 2 == 0 && remaining[b] > 0) { next_arc = b; break; }
                if (next_arc < 0)
                    throw InvariantViolation("flow decomposition stalled at vertex " +
                                             std::to_string(v));
                --remaining[next_arc];
                if (net.to[next_arc] == snk) break;
                v = net.to[next_arc] / 2;
                p.vertices.push_back(v);
            }
            out.push_back(std::move(p));
        }
        return out;
    }
};

// True when some vertex of `targets` is reachable from `from_set` by edges
// inside `within` (both endpoint sets already inside `within`).
bool reaches(const Tournament& t, const VertexSet& from_set,
             const VertexSet& targets, const VertexSet& within) {
    if (from_set.intersects(targets)) return true;
    VertexSet seen = from_set;
    VertexSet frontier = from_set;
    while (!frontier.empty()) {
        VertexSet next(t.size());
        for (int v : frontier) next |= t.out_neighbours(v);
        next &= within;
        next -= seen;
        if (next.intersects(targets)) return true;
        seen |= next;
        frontier = std::move(next);
    }
    return false;
}

// Max internally-disjoint a->b paths plus a separating set, both confined to
// V minus {a,b}. Callers only use pairs where the edge runs b->a, so there is
// no direct a->b edge to spoil the cut.
struct PairCut {
    int value;
    VertexSet cut;
};

PairCut pair_connectivity(const Tournament& t, int a, int b, int limit) {
    VertexSet allowed = t.all_vertices();
    allowed.erase(a);
    allowed.erase(b);
    VertexSet sources = t.out_neighbours(a);
    sources.erase(b);
    VertexSet sinks = t.in_neighbours(b);
    sinks.erase(a);
    if (allowed.empty() || sources.empty() || sinks.empty())
        return {0, VertexSet(t.size())};
    SplitFlow flow(t, sources, sinks, allowed, limit);
    return {flow.value, flow.value < limit ? flow.cut(allowed) : VertexSet(t.size())};
}

struct SweepResult {
    int kappa = 0;          // min(true kappa, cap)
    VertexSet separator;    // valid whenever kappa < cap
    int from = -1, to = -1; // pair disconnected by `separator`
};

// Exact strong connectivity (capped at `cap`): kappa equals the minimum over
// ordered pairs (a,b) with a reverse edge b->a of the a->b vertex cut. It is
// enough to scan pairs around fixed pivots x = 0, 1, ...: once x exceeds the
// best cut found, not every pivot so far can sit inside a minimum separator,
// so the minimum has been observed.
SweepResult sweep_connectivity(const Tournament& t, int cap) {
    int n = t.size();
    SweepResult r;
    r.separator = VertexSet(n);
    if (n == 1) return r; // strongly connected by convention, kappa 0

    VertexSet all = t.all_vertices();
    VertexSet origin = VertexSet::of(n, {0});
    for (int w = 1; w < n; ++w) {
        VertexSet target = VertexSet::of(n, {w});
        if (!reaches(t, origin, target, all)) {
            r.from = 0; r.to = w;
            return r;
        }
        if (!reaches(t, target, origin, all)) {
            r.from = w; r.to = 0;
            return r;
        }
    }

    int best = cap;
    for (int x = 0; x <= best && x < n; ++x) {
        for (int u = 0; u < n; ++u) {
            if (u == x) continue;
            int a = t.edge(u, x) ? x : u;
            int b = t.edge(u, x) ? u : x;
            PairCut pc = pair_connectivity(t, a, b, best);
            if (pc.value < best) {
                best = pc.value;
                r.separator = pc.cut;
                r.from = a;
                r.to = b;
                // T is strongly connected here, so kappa >= 1 and a value of
                // 1 cannot be improved.
                if (best <= 1) {
                    r.kappa = best;
                    return r;
                }
            }
        }
    }
    r.kappa = best;
    return r;
}

} // namespace

DisjointPathSet disjoint_paths(const Tournament& t, const VertexSet& sources,
                               const VertexSet& sinks, const VertexSet& allowed) {
    int n = t.size();
    if (sources.universe() != n || sinks.universe() != n || allowed.universe() != n)
        throw InvalidInput("disjoint_paths: vertex set universe mismatch");
    if (allowed.empty())
        throw InvalidInput("disjoint_paths: allowed set is empty");
    if (!sources.is_subset_of(allowed))
        throw InvalidInput("disjoint_paths: sources not contained in allowed");
    if (!sinks.is_subset_of(allowed))
        throw InvalidInput("disjoint_paths: sinks not contained in allowed");

    SplitFlow flow(t, sources, sinks, allowed, kInf);
    DisjointPathSet result;
    result.cut = flow.cut(allowed);
    result.paths = flow.paths();

    if (static_cast<int>(result.paths.size()) != flow.value)
        throw InvariantViolation("flow decomposition lost units: " +
                                 std::to_string(result.paths.size()) + " paths for flow " +
                                 std::to_string(flow.value));
    if (result.cut.count() != flow.value)
        throw InvariantViolation("min cut size " + std::to_string(result.cut.count()) +
                                 " != flow value " + std::to_string(flow.value));

    // The certificate must actually separate: no source reaches a sink once
    // the cut is removed from the allowed subgraph.
    VertexSet within = allowed - result.cut;
    VertexSet s2 = sources - result.cut;
    VertexSet t2 = sinks - result.cut;
    if (!s2.empty() && !t2.empty() && reaches(t, s2, t2, within))
        throw InvariantViolation("returned cut does not separate sources from sinks");

    VertexSet used(n);
    for (const Path& p : result.paths) {
        std::string err = check_path(t, p);
        if (!err.empty()) throw InvariantViolation("decomposed path invalid: " + err);
        if (!sources.contains(p.start()) || !sinks.contains(p.end()))
            throw InvariantViolation("decomposed path has endpoints outside sources/sinks");
        for (int v : p.vertices) {
            if (used.contains(v))
                throw InvariantViolation("decomposed paths share vertex " + std::to_string(v));
            used.insert(v);
        }
    }
    return result;
}

ConnectivityCheck is_strongly_k_connected(const Tournament& t, int k) {
    if (k < 0) throw InvalidInput("is_strongly_k_connected: k must be >= 0");
    ConnectivityCheck out;
    out.separator = VertexSet(t.size());
    if (k == 0) {
        out.connected = true;
        return out;
    }
    if (t.size() == 1) {
        out.too_small = true;
        return out;
    }
    SweepResult r = sweep_connectivity(t, k);
    if (r.kappa >= k) {
        out.connected = true;
        return out;
    }
    out.separator = r.separator;
    out.from = r.from;
    out.to = r.to;
    return out;
}

int strong_connectivity(const Tournament& t) {
    // cap = n never binds: kappa <= n-2 for n >= 2.
    return sweep_connectivity(t, t.size()).kappa;
}

} // namespace tlink
