#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tlink/domination.hpp"
#include "tlink/errors.hpp"
#include "tlink/linkage.hpp"
#include "tlink/tournament.hpp"

namespace tlink {

// Named configuration of the construction, per unit of k. The dominating-pair
// count must stay at 11x the linkage size so the subtournaments of heads and
// tails meet find_linkage_pair's 11m <= n precondition; the connectivity
// requirement is where the double-primed selection arithmetic becomes exactly
// tight (452k = 2*(222k + 2k) + 4k).
inline constexpr int kDominatingPairsPerK = 55;
inline constexpr int kLinkageSizePerK = 5;
inline constexpr int kConnectivityPerK = 452;

// Connectivity under which link() is guaranteed to succeed: 452k.
int required_connectivity(int k);

// k terminal pairs: the i-th requested path runs sources[i] -> sinks[i].
// All 2k terminals must be distinct.
struct LinkRequest {
    std::vector<int> sources;
    std::vector<int> sinks;

    int k() const { return static_cast<int>(sources.size()); }
};

enum class LinkStage {
    DegreeFloor,
    RemoveTerminals,
    InDominating,
    OutDominating,
    CollectX,
    LinkagePairs,
    ReorderDominating,
    MengerPaths,
    PrimedVertices,
    DoublePrimed,
    EntryExitPaths,
    SelectSurvivors,
    RouteLinkage,
    StitchVerify,
};

const char* to_string(LinkStage stage);

// Everything the pipeline has built so far. Stage errors snapshot this so
// failed runs can be inspected (which cut blocked the flow, how far the
// dominating sequences got, and so on).
struct LinkerState {
    std::vector<DominatingSequence> d_minus, d_plus; // reordered in place
    VertexSet X;                                     // dominating verts + terminals
    std::vector<VertexSet> e_minus, e_plus;          // undominated pools, aligned
    VertexSet t_minus, t_plus;                       // heads of d_minus / tails of d_plus
    std::optional<Tournament::Induced> minus_sub, plus_sub;
    LinkagePair pair_minus, pair_plus;               // local ids of the induced subs
    std::vector<int> x_minus, y_minus, x_plus, y_plus; // lifted to parent ids
    std::vector<Path> q;                             // Menger paths, parent ids
    VertexSet menger_cut;                            // set on a Menger shortfall
    std::vector<int> x_prime, y_prime;               // neighbours of terminals, off X
    std::vector<int> x_dprime, y_dprime;             // steered outside the pools
    VertexSet x_extended;                            // X plus all primed vertices
    std::vector<Path> q_minus, q_plus;               // entry/exit through the D pairs
    std::vector<int> selected_q;                     // surviving Menger path indices
    std::vector<Path> p_minus, p_plus;               // routed inside t_minus/t_plus
};

class LinkStageError : public Error {
public:
    LinkStageError(LinkStage stage, const std::string& what,
                   std::shared_ptr<const LinkerState> state)
        : Error(std::string(to_string(stage)) + ": " + what),
          stage_(stage),
          state_(std::move(state)) {}

    LinkStage stage() const { return stage_; }
    const LinkerState& state() const { return *state_; }

private:
    LinkStage stage_;
    std::shared_ptr<const LinkerState> state_;
};

struct LinkDiagnostics {
    int n = 0;
    int k = 0;
    int x_size = 0;                            // |X|, at most 222k
    std::vector<int> reorder_minus, reorder_plus; // new slot -> old index
    std::vector<int> selected_q;               // which Menger paths survived
    std::vector<int> sigma_minus, sigma_plus;  // permutations fed to route()
    std::vector<std::string> stage_lines;      // one summary line per stage
};

struct LinkResult {
    std::vector<Path> paths;
    LinkDiagnostics diagnostics;
};

// Runs the full construction. Throws InvalidInput for malformed requests and
// for a violated degree floor (unless `force`), and LinkStageError when a
// pipeline stage cannot complete. A returned LinkResult is always verified.
LinkResult link(const Tournament& t, const LinkRequest& req, bool force = false);

struct VerifyReport {
    bool ok = false;
    std::string violation; // first violation found; empty when ok
};

// True iff `paths` are valid paths of t, the i-th runs sources[i] ->
// sinks[i], and they are pairwise vertex-disjoint.
VerifyReport verify_linkage(const Tournament& t, const LinkRequest& req,
                            const std::vector<Path>& paths);

} // namespace tlink
