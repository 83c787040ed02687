#include "semistrong/exact.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace semistrong {

namespace {

// min(base^exp, cap+1): anything above cap reads as "over budget".
std::uint64_t pow_capped(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
    const std::uint64_t over = cap == ~std::uint64_t{0} ? cap : cap + 1;
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (r > cap / base) return over;
        r *= base;
    }
    return r;
}

}  // namespace

std::optional<int> brute_force_chromatic(const Hypergraph& g, int c, int ell_max,
                                         std::uint64_t enum_budget) {
    if (c < 2) throw std::invalid_argument("c must be at least 2");
    if (ell_max < 1) throw std::invalid_argument("ell_max must be positive");
    const int n = g.vertex_count();

    std::uint64_t planned = 0;
    for (int ell = 1; ell <= ell_max; ++ell) {
        const std::uint64_t block = pow_capped(static_cast<std::uint64_t>(ell),
                                               static_cast<std::uint64_t>(n), enum_budget);
        if (block > enum_budget - planned)
            throw BudgetExceededError("brute-force enumeration of " + std::to_string(ell_max) +
                                      "^" + std::to_string(n) + " colorings exceeds budget " +
                                      std::to_string(enum_budget));
        planned += block;
    }

    std::vector<int> colors(static_cast<std::size_t>(n), 1);
    for (int ell = 1; ell <= ell_max; ++ell) {
        std::fill(colors.begin(), colors.end(), 1);
        for (;;) {
            if (is_c_strong_raw(g, colors, c).valid()) return ell;
            // odometer over [1..ell]^n
            int pos = 0;
            while (pos < n && colors[static_cast<std::size_t>(pos)] == ell) {
                colors[static_cast<std::size_t>(pos)] = 1;
                ++pos;
            }
            if (pos == n) break;
            ++colors[static_cast<std::size_t>(pos)];
        }
    }
    return std::nullopt;
}

namespace {

// Feasibility search for a c-strong coloring of g with at most ell colors.
// Canonical color introduction: the next vertex may reuse any color already
// present or open exactly one fresh color, so each set partition is visited
// once instead of once per color permutation.
class BacktrackSolver {
public:
    BacktrackSolver(const Hypergraph& g, int c, int ell) : g_(g), ell_(ell) {
        incidence_.resize(static_cast<std::size_t>(g.vertex_count()) + 1);
        for (std::size_t e = 0; e < g.edge_count(); ++e)
            for (int v : g.edge(e)) incidence_[static_cast<std::size_t>(v)].push_back(e);
        need_.resize(g.edge_count());
        uncolored_.resize(g.edge_count());
        distinct_.resize(g.edge_count(), 0);
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            need_[e] = std::min<int>(c, static_cast<int>(g.edge(e).size()));
            uncolored_[e] = static_cast<int>(g.edge(e).size());
        }
        color_count_.assign(g.edge_count(),
                            std::vector<int>(static_cast<std::size_t>(ell) + 1, 0));
    }

    bool feasible() { return extend(1, 0); }

private:
    bool extend(int v, int max_used) {
        if (v > g_.vertex_count()) return true;
        const int limit = std::min(ell_, max_used + 1);
        for (int col = 1; col <= limit; ++col) {
            if (assign(v, col)) {
                if (extend(v + 1, std::max(max_used, col))) return true;
            }
            unassign(v, col);
        }
        return false;
    }

    // Applies the assignment and reports whether every incident edge can
    // still reach its required distinct-color count.
    bool assign(int v, int col) {
        bool ok = true;
        for (std::size_t e : incidence_[static_cast<std::size_t>(v)]) {
            --uncolored_[e];
            if (++color_count_[e][static_cast<std::size_t>(col)] == 1) ++distinct_[e];
            if (distinct_[e] + uncolored_[e] < need_[e]) ok = false;
        }
        return ok;
    }

    void unassign(int v, int col) {
        for (std::size_t e : incidence_[static_cast<std::size_t>(v)]) {
            ++uncolored_[e];
            if (--color_count_[e][static_cast<std::size_t>(col)] == 0) --distinct_[e];
        }
    }

    const Hypergraph& g_;
    int ell_;
    std::vector<std::vector<std::size_t>> incidence_;
    std::vector<int> need_;
    std::vector<int> uncolored_;
    std::vector<int> distinct_;
    std::vector<std::vector<int>> color_count_;
};

}  // namespace

std::optional<int> exact_chromatic(const Hypergraph& g, int c, int ell_max) {
    if (c < 2) throw std::invalid_argument("c must be at least 2");
    if (ell_max < 1) throw std::invalid_argument("ell_max must be positive");

    // Every edge e needs min(c,|e|) distinct colors, so no smaller palette
    // can work; start the scan there.
    int lower = 1;
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        lower = std::max(lower, std::min<int>(c, static_cast<int>(g.edge(e).size())));

    for (int ell = lower; ell <= ell_max; ++ell) {
        BacktrackSolver solver(g, c, ell);
        if (solver.feasible()) return ell;
    }
    return std::nullopt;
}

bool complete_uniform_valid(const ColorHistogram& h, std::int64_t k, int c) {
    if (c < 2) throw std::invalid_argument("c must be at least 2");
    if (k < 1) throw std::invalid_argument("edge size k must be positive");
    if (h.total() < k)
        throw std::invalid_argument("histogram covers fewer than k vertices");
    if (k >= c) return h.top_sum(c - 1) < k;
    if (k == 1) return true;
    return h.class_sizes().front() <= 1;  // rainbow regime: all singletons
}

namespace {

// Minimum possible sum of the j largest classes over all histograms with
// exactly ell classes covering n vertices. The balanced split attains it:
// any histogram with its j-th largest class > floor(n/ell) has top-j sum
// >= j*(floor(n/ell)+1), and otherwise the ell-j smallest classes carry at
// most (ell-j)*floor(n/ell), leaving the top j at least n minus that.
std::int64_t balanced_top_sum(std::int64_t n, std::int64_t ell, std::int64_t j) {
    const std::int64_t q = n / ell;
    const std::int64_t r = n % ell;
    const std::int64_t jj = std::min(j, ell);
    return jj * q + std::min(jj, r);
}

}  // namespace

std::int64_t chromatic_complete_uniform(std::int64_t n, std::int64_t k, int c) {
    if (c < 2) throw std::invalid_argument("c must be at least 2");
    if (k < 1 || k > n) throw std::invalid_argument("requires 1 <= k <= n");
    if (k == 1) return 1;
    if (k < c) return n;  // rainbow regime
    for (std::int64_t ell = 1; ell <= n; ++ell)
        if (balanced_top_sum(n, ell, c - 1) < k) return ell;
    return n;  // unreachable: ell = n gives top sum c-1 < c <= k
}

namespace {

// Enumerates integer partitions of n into exactly ell parts (descending),
// reporting whether any satisfies complete_uniform_valid.
bool any_partition_valid(std::int64_t n, std::int64_t ell, std::int64_t k, int c,
                         std::vector<std::int64_t>& parts) {
    if (ell == 1) {
        parts.push_back(n);
        const bool ok = complete_uniform_valid(ColorHistogram(parts), k, c);
        parts.pop_back();
        return ok;
    }
    const std::int64_t max_part = parts.empty() ? n : parts.back();
    for (std::int64_t first = std::min(n - ell + 1, max_part); first >= 1; --first) {
        if (first * ell < n) break;  // descending parts can no longer reach n
        parts.push_back(first);
        const bool ok = any_partition_valid(n - first, ell - 1, k, c, parts);
        parts.pop_back();
        if (ok) return true;
    }
    return false;
}

}  // namespace

std::int64_t chromatic_complete_uniform_bruteforce(std::int64_t n, std::int64_t k, int c) {
    if (c < 2) throw std::invalid_argument("c must be at least 2");
    if (k < 1 || k > n) throw std::invalid_argument("requires 1 <= k <= n");
    if (n > 40)
        throw BudgetExceededError("exhaustive histogram search is limited to n <= 40");
    std::vector<std::int64_t> parts;
    for (std::int64_t ell = 1; ell <= n; ++ell)
        if (any_partition_valid(n, ell, k, c, parts)) return ell;
    return n;
}

}  // namespace semistrong
