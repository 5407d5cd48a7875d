#include "tlink/domination.hpp"

namespace tlink {

namespace {

DominatingSequence greedy(const Tournament& t, const VertexSet& ground,
                          int size, Flavor flavor) {
    if (ground.universe() != t.size())
        throw InvalidInput("dominating sequence: ground universe mismatch");
    if (ground.empty())
        throw InvalidInput("dominating sequence: ground set is empty");
    if (size < 1)
        throw InvalidInput("dominating sequence: size must be >= 1");

    DominatingSequence seq;
    seq.flavor = flavor;
    seq.ground = ground;
    VertexSet current = ground;
    seq.residual_history.push_back(current.count());

    for (int step = 0; step < size; ++step) {
        if (current.empty()) throw DominationExhausted(step, size);
        int pick = -1, pick_degree = -1;
        for (int u : current) {
            int d = flavor == Flavor::In ? t.in_degree_within(u, current)
                                         : t.out_degree_within(u, current);
            // Strict improvement only: ties resolve to the smallest id, which
            // the ascending iteration visits first.
            if (d > pick_degree) {
                pick_degree = d;
                pick = u;
            }
        }
        seq.verts.push_back(pick);
        current &= flavor == Flavor::In ? t.out_neighbours(pick)
                                        : t.in_neighbours(pick);
        seq.residual_history.push_back(current.count());
    }
    seq.residual = std::move(current);
    return seq;
}

} // namespace

DominatingSequence greedy_in_dominating(const Tournament& t,
                                        const VertexSet& ground, int size) {
    return greedy(t, ground, size, Flavor::In);
}

DominatingSequence greedy_out_dominating(const Tournament& t,
                                         const VertexSet& ground, int size) {
    return greedy(t, ground, size, Flavor::Out);
}

bool check_degree_bound(const Tournament& t, const DominatingSequence& seq) {
    if (seq.verts.empty())
        throw InvalidInput("check_degree_bound: sequence has no picks");
    if (seq.residual.empty()) return true;
    int k = static_cast<int>(seq.verts.size());
    // Degrees cannot exceed n, so any floor beyond that fails outright; this
    // also keeps the shift below well-defined.
    if (k - 1 >= 31) return false;
    long long need = (1LL << (k - 1)) * seq.residual.count();
    for (int u : seq.residual) {
        int d = seq.flavor == Flavor::In ? t.out_degree_within(u, seq.ground)
                                         : t.in_degree_within(u, seq.ground);
        if (d < need) return false;
    }
    return true;
}

} // namespace tlink
