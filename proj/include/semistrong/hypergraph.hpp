#pragma once

#include "semistrong/bitset.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace semistrong {

// Thrown when an operation would exceed its configured enumeration or
// edge-materialization budget. Callers distinguish this from bad input.
class BudgetExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Explicit hypergraph on vertices [1..n]. Immutable after construction;
// all operations on it are pure, so values are safe to share across threads.
//
// Construction normalizes: edges are sorted ascending, duplicate edges are
// dropped (first occurrence keeps its position), a duplicate vertex inside
// one edge is an error, and every vertex id must lie in [1..n].
class Hypergraph {
public:
    Hypergraph(int n, std::vector<std::vector<int>> edges);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }

    // Vertex ids of edge i, sorted ascending. Edge indices are 0-based.
    const std::vector<int>& edge(std::size_t i) const { return edges_.at(i); }
    const VertexSet& edge_set(std::size_t i) const { return edge_sets_.at(i); }
    const std::vector<std::vector<int>>& edges() const { return edges_; }

    std::size_t max_edge_size() const;

private:
    int n_ = 0;
    std::vector<std::vector<int>> edges_;
    std::vector<VertexSet> edge_sets_;
};

// Assignment of positive color ids to vertices 1..n; colors()[i] is the
// color of vertex i+1.
class Coloring {
public:
    explicit Coloring(std::vector<int> colors);

    int size() const { return static_cast<int>(colors_.size()); }
    int color_of(int v) const { return colors_.at(static_cast<std::size_t>(v) - 1); }
    const std::vector<int>& colors() const { return colors_; }

    // Number of distinct color ids present.
    int palette_size() const { return palette_size_; }

private:
    std::vector<int> colors_;
    int palette_size_ = 0;
};

// Multiset of color-class sizes, sorted descending; total() is the number
// of colored vertices.
class ColorHistogram {
public:
    explicit ColorHistogram(std::vector<std::int64_t> class_sizes);

    const std::vector<std::int64_t>& class_sizes() const { return sizes_; }
    std::size_t class_count() const { return sizes_.size(); }
    std::int64_t total() const { return total_; }

    // Sum of the `count` largest class sizes (all of them if fewer exist).
    std::int64_t top_sum(std::int64_t count) const;

private:
    std::vector<std::int64_t> sizes_;
    std::int64_t total_ = 0;
};

// Minimum |e ∩ f| over all unordered edge pairs. nullopt is the Unbounded
// sentinel for hypergraphs with fewer than two edges, where every t holds
// vacuously; it must not be collapsed to a large integer.
std::optional<int> intersection_level(const Hypergraph& g);

// True iff every two edges share at least t vertices (Unbounded counts as
// larger than any t).
bool is_t_intersecting(const Hypergraph& g, int t);

struct CStrongVerdict {
    // First violating edge in edge order; nullopt means the coloring is valid.
    std::optional<std::size_t> violating_edge;

    bool valid() const { return !violating_edge.has_value(); }
    explicit operator bool() const { return valid(); }
};

// c-strong validity: every edge e must cover at least min(c, |e|) distinct
// colors. Requires col.size() == g.vertex_count() and c >= 2.
CStrongVerdict is_c_strong(const Hypergraph& g, const Coloring& col, int c);

// Same check against a raw color buffer (colors[i] colors vertex i+1);
// avoids constructing a Coloring in enumeration-heavy callers.
CStrongVerdict is_c_strong_raw(const Hypergraph& g, const std::vector<int>& colors, int c);

int distinct_colors_on_edge(const Hypergraph& g, const Coloring& col, std::size_t edge_index);

ColorHistogram histogram(const Coloring& col);

}  // namespace semistrong
