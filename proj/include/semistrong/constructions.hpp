#pragma once

#include "semistrong/hypergraph.hpp"

#include <cstdint>

namespace semistrong {

inline constexpr std::uint64_t kDefaultEdgeBudget = 1'000'000;

// K(n,k): vertex set [1..n] with every k-subset as an edge, carried as the
// pair (n,k) and never enumerated. Any two k-subsets of [n] share at least
// 2k-n elements, so the family is (2k-n)-intersecting when 2k > n and
// 0-intersecting otherwise.
struct ImplicitCompleteUniform {
    std::int64_t n = 0;
    std::int64_t k = 0;

    ImplicitCompleteUniform(std::int64_t n_, std::int64_t k_);

    std::int64_t intersection_level() const { return 2 * k > n ? 2 * k - n : 0; }
};

// The 3-vertex, 3-edge hypergraph {1,2},{1,3},{2,3}: 1-intersecting, and the
// smallest witness that weak coloring of 1-intersecting hypergraphs needs
// three colors.
Hypergraph triangle();

// All k-subsets of [1..n] in lexicographic order. Refuses to materialize
// more than edge_budget edges (use ImplicitCompleteUniform instead).
Hypergraph complete_uniform_explicit(int n, int k,
                                     std::uint64_t edge_budget = kDefaultEdgeBudget);

// Number of k-subsets of [n], saturating at uint64 max on overflow.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k);

// Adds apex vertex n+1 to every edge. Edge count is unchanged and, when
// finite, the intersection level rises by exactly one.
Hypergraph cone(const Hypergraph& g);

// K(3c-3, 2c-2): a (c-1)-intersecting family that cannot be c-strong
// colored with fewer than 2c-1 colors. Requires c >= 2.
ImplicitCompleteUniform gadget_c_minus_1(std::int64_t c);

// K((6c-1)t, 3ct): a t-intersecting family forcing 2(c-1) colors.
// Requires t >= c >= 2.
ImplicitCompleteUniform gadget_t_ge_c(std::int64_t t, std::int64_t c);

// Inclusive range for the per-edge petal size of random_sunflower.
struct ExtraRange {
    int lo = 1;
    int hi = 1;
};

// m distinct edges sharing a random t-element core, each padded with a
// disjoint random petal whose size is drawn from `extras`. t-intersecting
// by construction, and deterministic in `seed`.
Hypergraph random_sunflower(int t, int m, ExtraRange extras, int n, std::uint64_t seed);

}  // namespace semistrong
