#include "semistrong/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace semistrong {

namespace {

std::vector<int> normalize_edge(const std::vector<int>& raw, int n) {
    if (raw.empty()) throw std::invalid_argument("edge must be nonempty");
    std::vector<int> e = raw;
    std::sort(e.begin(), e.end());
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 1 || e[i] > n)
            throw std::invalid_argument("vertex id " + std::to_string(e[i]) +
                                        " outside [1.." + std::to_string(n) + "]");
        if (i > 0 && e[i] == e[i - 1])
            throw std::invalid_argument("duplicate vertex " + std::to_string(e[i]) +
                                        " within an edge");
    }
    return e;
}

}  // namespace

Hypergraph::Hypergraph(int n, std::vector<std::vector<int>> edges) : n_(n) {
    if (n < 1) throw std::invalid_argument("vertex count must be positive");
    std::set<std::vector<int>> seen;
    edges_.reserve(edges.size());
    for (const auto& raw : edges) {
        std::vector<int> e = normalize_edge(raw, n);
        if (!seen.insert(e).second) continue;  // duplicate edge set, first wins
        VertexSet bits(n);
        for (int v : e) bits.insert(v);
        edges_.push_back(std::move(e));
        edge_sets_.push_back(std::move(bits));
    }
}

std::size_t Hypergraph::max_edge_size() const {
    std::size_t m = 0;
    for (const auto& e : edges_) m = std::max(m, e.size());
    return m;
}

Coloring::Coloring(std::vector<int> colors) : colors_(std::move(colors)) {
    for (int c : colors_)
        if (c < 1) throw std::invalid_argument("color ids must be positive");
    std::vector<int> sorted = colors_;
    std::sort(sorted.begin(), sorted.end());
    palette_size_ = static_cast<int>(
        std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

ColorHistogram::ColorHistogram(std::vector<std::int64_t> class_sizes)
    : sizes_(std::move(class_sizes)) {
    for (std::int64_t s : sizes_)
        if (s < 1) throw std::invalid_argument("class sizes must be positive");
    std::sort(sizes_.begin(), sizes_.end(), std::greater<>());
    total_ = 0;
    for (std::int64_t s : sizes_) total_ += s;
}

std::int64_t ColorHistogram::top_sum(std::int64_t count) const {
    std::int64_t sum = 0;
    const std::int64_t limit = std::min<std::int64_t>(count, static_cast<std::int64_t>(sizes_.size()));
    for (std::int64_t i = 0; i < limit; ++i) sum += sizes_[static_cast<std::size_t>(i)];
    return sum;
}

std::optional<int> intersection_level(const Hypergraph& g) {
    const std::size_t m = g.edge_count();
    if (m < 2) return std::nullopt;
    int level = g.vertex_count();
    for (std::size_t i = 0; i + 1 < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            level = std::min(level, g.edge_set(i).intersection_count(g.edge_set(j)));
            if (level == 0) return 0;
        }
    }
    return level;
}

bool is_t_intersecting(const Hypergraph& g, int t) {
    if (t < 0) throw std::invalid_argument("t must be non-negative");
    if (t == 0) return true;
    const std::size_t m = g.edge_count();
    if (m < 2) return true;  // vacuous
    for (std::size_t i = 0; i + 1 < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (g.edge_set(i).intersection_count(g.edge_set(j)) < t) return false;
    return true;
}

namespace {

// Counts distinct colors on an edge, stopping at `target`. Edges are small
// and target <= c, so the linear membership scan beats sorting.
int distinct_at_least(const std::vector<int>& edge, const std::vector<int>& colors,
                      int target) {
    int seen[64];
    std::vector<int> spill;
    int found = 0;
    for (int v : edge) {
        const int col = colors[static_cast<std::size_t>(v) - 1];
        bool known = false;
        for (int i = 0; i < std::min(found, 64); ++i)
            if (seen[i] == col) { known = true; break; }
        if (!known && found >= 64)
            for (int s : spill)
                if (s == col) { known = true; break; }
        if (known) continue;
        if (found < 64) seen[found] = col; else spill.push_back(col);
        if (++found >= target) return found;
    }
    return found;
}

}  // namespace

CStrongVerdict is_c_strong_raw(const Hypergraph& g, const std::vector<int>& colors, int c) {
    if (c < 2) throw std::invalid_argument("c must be at least 2");
    if (static_cast<int>(colors.size()) != g.vertex_count())
        throw std::invalid_argument("coloring length does not match vertex count");
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edge(i);
        const int need = std::min<int>(c, static_cast<int>(e.size()));
        if (distinct_at_least(e, colors, need) < need) return CStrongVerdict{i};
    }
    return CStrongVerdict{std::nullopt};
}

CStrongVerdict is_c_strong(const Hypergraph& g, const Coloring& col, int c) {
    return is_c_strong_raw(g, col.colors(), c);
}

int distinct_colors_on_edge(const Hypergraph& g, const Coloring& col, std::size_t edge_index) {
    if (edge_index >= g.edge_count()) throw std::out_of_range("edge index out of range");
    if (col.size() != g.vertex_count())
        throw std::invalid_argument("coloring length does not match vertex count");
    std::vector<int> cols;
    cols.reserve(g.edge(edge_index).size());
    for (int v : g.edge(edge_index)) cols.push_back(col.color_of(v));
    std::sort(cols.begin(), cols.end());
    return static_cast<int>(std::unique(cols.begin(), cols.end()) - cols.begin());
}

ColorHistogram histogram(const Coloring& col) {
    std::vector<int> sorted = col.colors();
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::int64_t> sizes;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        sizes.push_back(static_cast<std::int64_t>(j - i));
        i = j;
    }
    return ColorHistogram(std::move(sizes));
}

}  // namespace semistrong
