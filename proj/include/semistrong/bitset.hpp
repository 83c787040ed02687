#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace semistrong {

// Subset of a vertex universe [1..n], packed 64 vertices per word.
// Pairwise intersection counting is the hot path of t-intersection
// verification, so it runs word-parallel: O(n/64) per edge pair.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe)
        : universe_(universe), words_(static_cast<std::size_t>(universe + 63) / 64, 0) {}

    int universe() const { return universe_; }

    void insert(int v) {
        assert(v >= 1 && v <= universe_);
        words_[word_index(v)] |= word_bit(v);
    }

    bool contains(int v) const {
        if (v < 1 || v > universe_) return false;
        return (words_[word_index(v)] & word_bit(v)) != 0;
    }

    int count() const {
        int total = 0;
        for (std::uint64_t w : words_) total += std::popcount(w);
        return total;
    }

    int intersection_count(const VertexSet& other) const {
        assert(universe_ == other.universe_);
        int total = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            total += std::popcount(words_[i] & other.words_[i]);
        return total;
    }

    // True when every element of `other` is also in *this.
    bool contains_all(const VertexSet& other) const {
        assert(universe_ == other.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((other.words_[i] & ~words_[i]) != 0) return false;
        return true;
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w != 0) {
                const int bit = std::countr_zero(w);
                out.push_back(static_cast<int>(i * 64) + bit + 1);
                w &= w - 1;
            }
        }
        return out;
    }

    bool operator==(const VertexSet&) const = default;

private:
    static std::size_t word_index(int v) { return static_cast<std::size_t>(v - 1) >> 6; }
    static std::uint64_t word_bit(int v) { return std::uint64_t{1} << ((v - 1) & 63); }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace semistrong
