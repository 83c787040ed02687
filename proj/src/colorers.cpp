#include "semistrong/colorers.hpp"

#include "semistrong/rng.hpp"

#include <algorithm>
#include <numeric>

namespace semistrong {

namespace {

void require_order_is_permutation(const std::vector<int>& order, int n) {
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("vertex order must have length n");
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : order) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("vertex order must be a permutation of [1..n]");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

std::vector<std::vector<std::size_t>> incidence_lists(const Hypergraph& g) {
    std::vector<std::vector<std::size_t>> inc(static_cast<std::size_t>(g.vertex_count()) + 1);
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        for (int v : g.edge(i)) inc[static_cast<std::size_t>(v)].push_back(i);
    return inc;
}

}  // namespace

Coloring greedy_weak(const Hypergraph& g, const std::vector<int>& order, Precheck precheck) {
    const int n = g.vertex_count();
    std::vector<int> perm = order;
    if (perm.empty()) {
        perm.resize(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
    } else {
        require_order_is_permutation(perm, n);
    }
    if (precheck == Precheck::verify && !is_t_intersecting(g, 2))
        throw std::invalid_argument("greedy_weak requires a 2-intersecting hypergraph");

    const auto inc = incidence_lists(g);
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    std::vector<std::size_t> uncolored(g.edge_count());
    std::vector<std::size_t> blue(g.edge_count(), 0);
    for (std::size_t i = 0; i < g.edge_count(); ++i) uncolored[i] = g.edge(i).size();

    for (int v : perm) {
        bool force_red = false;
        for (std::size_t e : inc[static_cast<std::size_t>(v)]) {
            if (g.edge(e).size() >= 2 && uncolored[e] == 1 &&
                blue[e] == g.edge(e).size() - 1) {
                force_red = true;
                break;
            }
        }
        const int col = force_red ? 2 : 1;
        colors[static_cast<std::size_t>(v) - 1] = col;
        for (std::size_t e : inc[static_cast<std::size_t>(v)]) {
            --uncolored[e];
            if (col == 1) ++blue[e];
        }
    }
    return Coloring(std::move(colors));
}

Coloring star_three_color(const Hypergraph& g, Precheck precheck) {
    if (precheck == Precheck::verify && !is_t_intersecting(g, 1))
        throw std::invalid_argument("star_three_color requires a 1-intersecting hypergraph");

    const int n = g.vertex_count();
    if (g.edge_count() == 0)
        return Coloring(std::vector<int>(static_cast<std::size_t>(n), 1));

    // Singleton edge {v}: 1-intersection makes v a member of every edge.
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        if (g.edge(i).size() == 1) {
            std::vector<int> colors(static_cast<std::size_t>(n), 2);
            colors[static_cast<std::size_t>(g.edge(i)[0]) - 1] = 1;
            return Coloring(std::move(colors));
        }
    }

    // Inclusion-minimal edge: scan ascending by size, ties by input order.
    // A strict superset is strictly larger, so the check can only reject an
    // edge in favor of an earlier-scanned one.
    std::vector<std::size_t> by_size(g.edge_count());
    std::iota(by_size.begin(), by_size.end(), 0);
    std::stable_sort(by_size.begin(), by_size.end(), [&](std::size_t a, std::size_t b) {
        return g.edge(a).size() < g.edge(b).size();
    });
    std::size_t chosen = by_size.front();
    for (std::size_t cand : by_size) {
        bool contains_other = false;
        for (std::size_t other = 0; other < g.edge_count(); ++other) {
            if (other == cand) continue;
            if (g.edge(other).size() < g.edge(cand).size() &&
                g.edge_set(cand).contains_all(g.edge_set(other))) {
                contains_other = true;
                break;
            }
        }
        if (!contains_other) { chosen = cand; break; }
    }

    std::vector<int> colors(static_cast<std::size_t>(n), 3);
    const auto& e = g.edge(chosen);
    for (int v : e) colors[static_cast<std::size_t>(v) - 1] = 2;
    colors[static_cast<std::size_t>(e.front()) - 1] = 1;
    return Coloring(std::move(colors));
}

Coloring random_coloring(int n, int ell, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    if (ell < 1) throw std::invalid_argument("ell must be positive");
    Rng rng(seed);
    std::vector<int> colors(static_cast<std::size_t>(n));
    for (int& c : colors) c = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(ell)));
    return Coloring(std::move(colors));
}

LasVegasResult las_vegas_c_strong(const Hypergraph& g, int c, int ell,
                                  std::uint64_t max_attempts, std::uint64_t seed) {
    if (c < 2) throw std::invalid_argument("c must be at least 2");
    if (ell < c) throw std::invalid_argument("las_vegas_c_strong requires ell >= c");
    if (max_attempts < 1) throw std::invalid_argument("max_attempts must be positive");
    for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
        Coloring col = random_coloring(g.vertex_count(), ell, derive_stream_seed(seed, attempt));
        if (is_c_strong(g, col, c).valid())
            return LasVegasResult{std::move(col), attempt + 1};
    }
    return LasVegasResult{std::nullopt, max_attempts};
}

}  // namespace semistrong
