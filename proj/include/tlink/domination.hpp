#pragma once

#include <vector>

#include "tlink/errors.hpp"
#include "tlink/tournament.hpp"

namespace tlink {

enum class Flavor { In, Out };

// Thrown when the residual empties before the requested number of greedy
// picks; carries how many were selected. Callers that can live with shorter
// sequences retry with `achieved`.
class DominationExhausted : public Error {
public:
    DominationExhausted(int achieved_count, int requested)
        : Error("dominating sequence exhausted after " +
                std::to_string(achieved_count) + " of " +
                std::to_string(requested) + " picks"),
          achieved(achieved_count) {}

    int achieved;
};

// A partial greedy dominating sequence over `ground`. For flavor In, each
// pick v_i is a maximum in-degree vertex of the subtournament on the current
// residual (ties broken by smallest id), and `residual` ends up as the
// members of ground beaten by every pick, i.e. the common out-neighbourhood.
// Flavor Out mirrors everything under edge reversal.
//
// The picks always form a transitive tournament: for In the edges run
// v_i -> v_j for i < j, so the tail is the first pick and the head the last;
// for Out the roles swap.
struct DominatingSequence {
    Flavor flavor = Flavor::In;
    std::vector<int> verts;
    VertexSet ground;
    VertexSet residual;
    // |ground|, then the residual size after each pick; used for the
    // halving property |E_i| <= |E_{i-1}| / 2.
    std::vector<int> residual_history;

    int tail() const { return flavor == Flavor::In ? verts.front() : verts.back(); }
    int head() const { return flavor == Flavor::In ? verts.back() : verts.front(); }
};

DominatingSequence greedy_in_dominating(const Tournament& t,
                                        const VertexSet& ground, int size);
DominatingSequence greedy_out_dominating(const Tournament& t,
                                         const VertexSet& ground, int size);

// Degree floor on undominated vertices: with k picks, every u in residual
// must have (for In) out-degree within the ground set of at least
// 2^(k-1) * |residual|; mirrored for Out. Sequences produced by the greedy
// operations always satisfy this.
bool check_degree_bound(const Tournament& t, const DominatingSequence& seq);

} // namespace tlink
