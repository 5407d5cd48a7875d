#include "tlink/tournament.hpp"

#include <random>
#include <sstream>

#include "tlink/errors.hpp"

namespace tlink {

Tournament::Tournament(int n)
    : n_(n), row_words_((n + 63) / 64),
      rows_(static_cast<std::size_t>(n) * ((n + 63) / 64), 0) {}

void Tournament::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw InvalidInput("vertex " + std::to_string(v) + " out of range 0.." +
                           std::to_string(n_ - 1));
}

void Tournament::set_edge(int u, int v) {
    rows_[static_cast<std::size_t>(u) * row_words_ + (v >> 6)] |=
        std::uint64_t{1} << (v & 63);
}

void Tournament::finish() {
    out_degree_.resize(n_);
    long long total = 0;
    for (int v = 0; v < n_; ++v) {
        int d = 0;
        for (int w = 0; w < row_words_; ++w)
            d += std::popcount(rows_[static_cast<std::size_t>(v) * row_words_ + w]);
        out_degree_[v] = d;
        total += d;
    }
    if (total != static_cast<long long>(n_) * (n_ - 1) / 2)
        throw InvariantViolation("tournament degree sum " + std::to_string(total) +
                                 " != n(n-1)/2");
}

Tournament Tournament::from_matrix(int n, const std::vector<std::string>& rows) {
    if (n < 1) throw InvalidInput("from_matrix: n must be >= 1");
    if (static_cast<int>(rows.size()) != n)
        throw InvalidInput("from_matrix: expected " + std::to_string(n) +
                           " rows, got " + std::to_string(rows.size()));
    Tournament t(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw InvalidInput("from_matrix: row " + std::to_string(i) +
                               " has length " + std::to_string(rows[i].size()) +
                               ", expected " + std::to_string(n));
        for (int j = 0; j < n; ++j) {
            char c = rows[i][j];
            if (c != '0' && c != '1')
                throw InvalidInput("from_matrix: bad character '" +
                                   std::string(1, c) + "' at (" +
                                   std::to_string(i) + "," + std::to_string(j) + ")");
            if (c == '1') {
                if (i == j)
                    throw InvalidInput("from_matrix: self-loop at vertex " +
                                       std::to_string(i));
                t.set_edge(i, j);
            }
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool ij = rows[i][j] == '1', ji = rows[j][i] == '1';
            if (ij && ji)
                throw InvalidInput("from_matrix: both orientations present for pair (" +
                                   std::to_string(i) + "," + std::to_string(j) + ")");
            if (!ij && !ji)
                throw InvalidInput("from_matrix: pair (" + std::to_string(i) + "," +
                                   std::to_string(j) + ") has no edge");
        }
    t.finish();
    return t;
}

Tournament Tournament::transitive(int n) {
    if (n < 1) throw InvalidInput("transitive: n must be >= 1");
    Tournament t(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) t.set_edge(i, j);
    t.finish();
    return t;
}

Tournament Tournament::rotational(int n) {
    if (n < 3 || n % 2 == 0)
        throw InvalidInput("rotational: n must be odd and >= 3, got " +
                           std::to_string(n));
    int half = n / 2;
    Tournament t(n);
    for (int i = 0; i < n; ++i)
        for (int d = 1; d <= half; ++d) t.set_edge(i, (i + d) % n);
    t.finish();
    return t;
}

Tournament Tournament::random_tournament(int n, std::uint64_t seed) {
    if (n < 1) throw InvalidInput("random_tournament: n must be >= 1");
    Tournament t(n);
    std::mt19937_64 gen(seed);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (gen() >> 63)
                t.set_edge(i, j);
            else
                t.set_edge(j, i);
        }
    t.finish();
    return t;
}

VertexSet Tournament::out_neighbours(int v) const {
    check_vertex(v);
    VertexSet s(n_);
    auto words = s.words();
    for (int w = 0; w < row_words_; ++w)
        words[w] = rows_[static_cast<std::size_t>(v) * row_words_ + w];
    return s;
}

VertexSet Tournament::in_neighbours(int v) const {
    check_vertex(v);
    VertexSet s = VertexSet::full(n_);
    auto words = s.words();
    for (int w = 0; w < row_words_; ++w)
        words[w] &= ~rows_[static_cast<std::size_t>(v) * row_words_ + w];
    s.erase(v);
    return s;
}

int Tournament::out_degree_within(int v, const VertexSet& s) const {
    check_vertex(v);
    if (s.universe() != n_)
        throw InvalidInput("vertex set universe mismatch");
    auto words = s.words();
    int c = 0;
    for (int w = 0; w < row_words_; ++w)
        c += std::popcount(rows_[static_cast<std::size_t>(v) * row_words_ + w] &
                           words[w]);
    return c;
}

int Tournament::in_degree_within(int v, const VertexSet& s) const {
    // |N-(v) ∩ s| = |s| - [v in s] - |N+(v) ∩ s|
    int c = s.count() - out_degree_within(v, s);
    if (s.contains(v)) --c;
    return c;
}

Tournament Tournament::reversed() const {
    Tournament t(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j && !edge(i, j)) t.set_edge(i, j);
    t.finish();
    return t;
}

Tournament::Induced Tournament::induced(const VertexSet& s) const {
    if (s.universe() != n_)
        throw InvalidInput("induced: vertex set universe " +
                           std::to_string(s.universe()) + " != tournament size " +
                           std::to_string(n_));
    std::vector<int> to_parent = s.to_vector();
    if (to_parent.empty()) throw InvalidInput("induced: empty vertex set");
    int m = static_cast<int>(to_parent.size());
    Tournament t(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (a != b && edge(to_parent[a], to_parent[b])) t.set_edge(a, b);
    t.finish();
    return Induced{std::move(t), std::move(to_parent)};
}

std::string Tournament::serialize() const {
    std::string out = "TOURN 1 " + std::to_string(n_) + "\n";
    out.reserve(out.size() + static_cast<std::size_t>(n_) * (n_ + 1));
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j)
            out.push_back(i != j && edge(i, j) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

Tournament Tournament::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw InvalidInput("parse: empty input");
    std::istringstream header(line);
    std::string magic;
    int version = 0, n = 0;
    if (!(header >> magic >> version >> n) || magic != "TOURN" || version != 1)
        throw InvalidInput("parse: malformed header '" + line +
                           "', expected 'TOURN 1 <n>'");
    std::string rest;
    if (header >> rest)
        throw InvalidInput("parse: trailing content in header: '" + rest + "'");
    if (n < 1) throw InvalidInput("parse: vertex count must be >= 1");
    std::vector<std::string> rows;
    rows.reserve(n);
    for (int i = 0; i < n; ++i) {
        if (!std::getline(in, line))
            throw InvalidInput("parse: expected " + std::to_string(n) +
                               " matrix rows, got " + std::to_string(i));
        rows.push_back(line);
    }
    while (std::getline(in, line))
        if (!line.empty())
            throw InvalidInput("parse: trailing content after matrix: '" + line + "'");
    return from_matrix(n, rows);
}

std::string check_path(const Tournament& t, const Path& p) {
    if (p.vertices.empty()) return "path is empty";
    VertexSet seen(t.size());
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        int v = p.vertices[i];
        if (v < 0 || v >= t.size())
            return "vertex " + std::to_string(v) + " out of range";
        if (seen.contains(v))
            return "vertex " + std::to_string(v) + " repeats";
        seen.insert(v);
        if (i > 0 && !t.edge(p.vertices[i - 1], v))
            return "missing edge " + std::to_string(p.vertices[i - 1]) + "->" +
                   std::to_string(v);
    }
    return {};
}

} // namespace tlink
