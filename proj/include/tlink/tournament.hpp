#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tlink/vertex_set.hpp"

namespace tlink {

// A tournament: a complete directed graph with exactly one directed edge
// between any two vertices. Vertices are dense ints 0..n-1; the orientation
// is stored as an n x n adjacency bitset, one row per vertex.
//
// Values are immutable after construction, so concurrent readers are safe.
class Tournament {
public:
    // rows[i][j] == '1' iff edge i->j. Rejects anything that is not a
    // tournament, naming the offending entry.
    static Tournament from_matrix(int n, const std::vector<std::string>& rows);

    // Acyclic order 0,1,...,n-1: edge(i,j) iff i<j. Vertex 0 is the tail
    // (beats everyone), vertex n-1 the head (beaten by everyone).
    static Tournament transitive(int n);

    // n = 2t+1 odd: edge(i,j) iff (j-i) mod n in {1..t}. Regular with all
    // out-degrees t; a high-connectivity test family.
    static Tournament rotational(int n);

    // Each unordered pair {i,j}, i<j, taken in lexicographic order, consumes
    // one raw draw of std::mt19937_64 seeded with `seed`; the top bit of the
    // draw orients the pair (set bit means i->j). Bit-identical across
    // platforms for a given (n, seed).
    static Tournament random_tournament(int n, std::uint64_t seed);

    // Parses the "TOURN 1" text format (see serialize); validation as in
    // from_matrix.
    static Tournament parse(const std::string& text);

    // Canonical "TOURN 1" format: line 1 is "TOURN 1 <n>", then n rows of n
    // characters over {0,1}; char j of row i is 1 iff edge(i,j). LF endings,
    // no trailing whitespace.
    std::string serialize() const;

    int size() const { return n_; }

    bool edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (rows_[static_cast<std::size_t>(u) * row_words_ + (v >> 6)]
                >> (v & 63)) & 1;
    }

    int out_degree(int v) const { check_vertex(v); return out_degree_[v]; }
    int in_degree(int v) const { check_vertex(v); return n_ - 1 - out_degree_[v]; }

    VertexSet out_neighbours(int v) const;
    // In a tournament N-(v) is exactly V minus {v} minus N+(v), so no
    // reverse adjacency is stored.
    VertexSet in_neighbours(int v) const;

    // |N+(v) ∩ s| and |N-(v) ∩ s| without materializing the neighbourhood.
    int out_degree_within(int v, const VertexSet& s) const;
    int in_degree_within(int v, const VertexSet& s) const;

    VertexSet all_vertices() const { return VertexSet::full(n_); }

    // Same vertices, every edge flipped.
    Tournament reversed() const;

    struct Induced;
    // Subtournament on a nonempty vertex set, plus the relabeling map back to
    // this tournament's ids (to_parent[new_id] == old_id, ascending).
    Induced induced(const VertexSet& s) const;

private:
    explicit Tournament(int n);
    void set_edge(int u, int v);   // construction only
    void finish();                 // degree cache + sanity
    void check_vertex(int v) const;

    int n_ = 0;
    int row_words_ = 0;
    std::vector<std::uint64_t> rows_;
    std::vector<int> out_degree_;
};

struct Tournament::Induced {
    Tournament tournament;
    std::vector<int> to_parent;
};

// A directed path: distinct vertices, every consecutive pair an edge of the
// ambient tournament. A single vertex is a path of length 0.
struct Path {
    std::vector<int> vertices;

    int start() const { return vertices.front(); }
    int end() const { return vertices.back(); }
    int length() const { return static_cast<int>(vertices.size()) - 1; }

    bool operator==(const Path&) const = default;
};

// Empty string when `p` is a valid path in `t`, otherwise a description of
// the first violation.
std::string check_path(const Tournament& t, const Path& p);

inline bool is_path(const Tournament& t, const Path& p) {
    return check_path(t, p).empty();
}

} // namespace tlink
