#include "semistrong/constructions.hpp"

#include "semistrong/rng.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <string>

namespace semistrong {

ImplicitCompleteUniform::ImplicitCompleteUniform(std::int64_t n_, std::int64_t k_)
    : n(n_), k(k_) {
    if (k < 1 || k > n)
        throw std::invalid_argument("complete uniform hypergraph requires 1 <= k <= n");
}

Hypergraph triangle() {
    return Hypergraph(3, {{1, 2}, {1, 3}, {2, 3}});
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // partial products are C(n-k+i, i), so the division is exact and
        // the sequence is non-decreasing
        result = result * (n - k + i) / i;
        if (result > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(result);
}

Hypergraph complete_uniform_explicit(int n, int k, std::uint64_t edge_budget) {
    if (k < 1 || k > n) throw std::invalid_argument("requires 1 <= k <= n");
    const std::uint64_t count =
        binomial_saturating(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
    if (count > edge_budget)
        throw BudgetExceededError("C(" + std::to_string(n) + "," + std::to_string(k) +
                                  ") = " + std::to_string(count) + " exceeds edge budget " +
                                  std::to_string(edge_budget));
    std::vector<std::vector<int>> edges;
    edges.reserve(static_cast<std::size_t>(count));
    std::vector<int> combo(static_cast<std::size_t>(k));
    std::iota(combo.begin(), combo.end(), 1);
    for (;;) {
        edges.push_back(combo);
        // next combination in lexicographic order
        int i = k - 1;
        while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
        if (i < 0) break;
        ++combo[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
    }
    return Hypergraph(n, std::move(edges));
}

Hypergraph cone(const Hypergraph& g) {
    const int apex = g.vertex_count() + 1;
    std::vector<std::vector<int>> edges;
    edges.reserve(g.edge_count());
    for (const auto& e : g.edges()) {
        std::vector<int> coned = e;
        coned.push_back(apex);
        edges.push_back(std::move(coned));
    }
    return Hypergraph(apex, std::move(edges));
}

ImplicitCompleteUniform gadget_c_minus_1(std::int64_t c) {
    if (c < 2) throw std::invalid_argument("requires c >= 2");
    return ImplicitCompleteUniform(3 * c - 3, 2 * c - 2);
}

ImplicitCompleteUniform gadget_t_ge_c(std::int64_t t, std::int64_t c) {
    if (c < 2 || t < c) throw std::invalid_argument("requires t >= c >= 2");
    return ImplicitCompleteUniform((6 * c - 1) * t, 3 * c * t);
}

namespace {

// First k entries of a Fisher-Yates pass over `pool`, sorted.
std::vector<int> sample_subset(std::vector<int> pool, int k, Rng& rng) {
    for (int i = 0; i < k; ++i) {
        const int j = i + static_cast<int>(rng.below(pool.size() - static_cast<std::size_t>(i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    pool.resize(static_cast<std::size_t>(k));
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace

Hypergraph random_sunflower(int t, int m, ExtraRange extras, int n, std::uint64_t seed) {
    if (t < 0) throw std::invalid_argument("core size t must be non-negative");
    if (m < 1) throw std::invalid_argument("edge count m must be positive");
    if (extras.lo < 0 || extras.hi < extras.lo)
        throw std::invalid_argument("petal size range must satisfy 0 <= lo <= hi");
    if (t + extras.lo < 1) throw std::invalid_argument("edges would be empty (t + lo < 1)");
    if (n < t + extras.hi)
        throw std::invalid_argument("not enough vertices: need n >= t + max petal size");

    Rng rng(seed);
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    const std::vector<int> core = sample_subset(all, t, rng);

    std::vector<int> outside;
    outside.reserve(static_cast<std::size_t>(n - t));
    {
        std::size_t ci = 0;
        for (int v = 1; v <= n; ++v) {
            if (ci < core.size() && core[ci] == v) { ++ci; continue; }
            outside.push_back(v);
        }
    }

    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    int rejected = 0;
    const int kMaxRejections = 100000;
    while (static_cast<int>(edges.size()) < m) {
        const int petal_size = rng.range(extras.lo, extras.hi);
        std::vector<int> edge = core;
        if (petal_size > 0) {
            const std::vector<int> petal = sample_subset(outside, petal_size, rng);
            edge.insert(edge.end(), petal.begin(), petal.end());
            std::sort(edge.begin(), edge.end());
        }
        if (!seen.insert(edge).second) {
            if (++rejected > kMaxRejections)
                throw std::invalid_argument(
                    "cannot realize " + std::to_string(m) +
                    " distinct sunflower edges with the given parameters");
            continue;
        }
        edges.push_back(std::move(edge));
    }
    return Hypergraph(n, std::move(edges));
}

}  // namespace semistrong
