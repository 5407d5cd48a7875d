#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

namespace tlink {

// A set of vertex ids over a fixed universe {0, ..., universe-1}, stored as a
// bitset. Set operations run a word (64 vertices) at a time, which the greedy
// domination and linkage-pair code lean on heavily.
class VertexSet {
public:
    VertexSet() : universe_(0) {}

    explicit VertexSet(int universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {
        assert(universe >= 0);
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int w = 0; w < static_cast<int>(s.words_.size()); ++w)
            s.words_[w] = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.insert(v);
        return s;
    }

    int universe() const { return universe_; }

    bool contains(int v) const {
        assert(v >= 0 && v < universe_);
        return (words_[v >> 6] >> (v & 63)) & 1;
    }

    void insert(int v) {
        assert(v >= 0 && v < universe_);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void erase(int v) {
        assert(v >= 0 && v < universe_);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_) if (w) return false;
        return true;
    }

    // Smallest member, or -1 when empty.
    int first() const { return next(0); }

    // Smallest member >= from, or -1.
    int next(int from) const {
        if (from >= universe_) return -1;
        int w = from >> 6;
        std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (word) return (w << 6) + std::countr_zero(word);
            if (++w >= static_cast<int>(words_.size())) return -1;
            word = words_[w];
        }
    }

    VertexSet& operator&=(const VertexSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    VertexSet& operator|=(const VertexSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    // Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet& o) const {
        return universe_ == o.universe_ && words_ == o.words_;
    }

    bool intersects(const VertexSet& o) const {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    // |this ∩ o| without building the intersection.
    int count_and(const VertexSet& o) const {
        assert(universe_ == o.universe_);
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    bool is_subset_of(const VertexSet& o) const {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v = first(); v >= 0; v = next(v + 1)) out.push_back(v);
        return out;
    }

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    // Zeroes bits beyond the universe; callers that write raw words use this.
    void trim() {
        int spare = static_cast<int>(words_.size()) * 64 - universe_;
        if (spare > 0 && !words_.empty())
            words_.back() &= ~std::uint64_t{0} >> spare;
    }

    class iterator {
    public:
        iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
        int operator*() const { return v_; }
        iterator& operator++() { v_ = set_->next(v_ + 1); return *this; }
        bool operator!=(const iterator& o) const { return v_ != o.v_; }
    private:
        const VertexSet* set_;
        int v_;
    };

    iterator begin() const { return iterator(this, first()); }
    iterator end() const { return iterator(this, -1); }

private:
    int universe_;
    std::vector<std::uint64_t> words_;
};

} // namespace tlink
