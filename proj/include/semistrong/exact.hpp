#pragma once

#include "semistrong/hypergraph.hpp"

#include <cstdint>
#include <optional>

namespace semistrong {

inline constexpr std::uint64_t kDefaultEnumBudget = 100'000'000;

// Smallest ell <= ell_max for which some coloring with colors in [1..ell]
// is c-strong, found by enumerating every such coloring and checking it.
// nullopt when every ell <= ell_max fails. Deliberately unoptimized: this
// is the independent oracle the backtracking solver is validated against.
// Throws BudgetExceededError when the planned enumeration exceeds
// enum_budget colorings.
std::optional<int> brute_force_chromatic(const Hypergraph& g, int c, int ell_max,
                                         std::uint64_t enum_budget = kDefaultEnumBudget);

// Same value as brute_force_chromatic, via backtracking. Vertices are
// colored in id order; a vertex may only take colors 1..(max used so far
// + 1), collapsing the color-permutation orbit. A partial assignment is
// pruned when some edge can no longer reach min(c,|e|) distinct colors
// even if all its uncolored vertices get fresh colors. Intended for
// n up to roughly 30.
std::optional<int> exact_chromatic(const Hypergraph& g, int c, int ell_max);

// Decides c-strong validity of any coloring of K(n,k) with class-size
// histogram h, without touching edges. For k >= c a violating edge exists
// iff the c-1 largest classes jointly cover >= k vertices; for 2 <= k < c
// every k-subset must be rainbow, forcing all classes to be singletons;
// k = 1 is always valid. Requires h.total() >= k >= 1 and c >= 2.
bool complete_uniform_valid(const ColorHistogram& h, std::int64_t k, int c);

// chi(K(n,k), c): scans ell upward and tests the balanced histogram
// (sizes floor(n/ell) with n mod ell classes one larger), which minimizes
// the top-(c-1) sum among all histograms with ell classes. The k < c
// regimes short-circuit: 1 for k = 1, n for 2 <= k < c (rainbow forced).
std::int64_t chromatic_complete_uniform(std::int64_t n, std::int64_t k, int c);

// Same value via exhaustive search over all histograms (integer partitions
// of n) instead of the balanced-optimality lemma. Self-check route for
// small n; throws BudgetExceededError for n > 40.
std::int64_t chromatic_complete_uniform_bruteforce(std::int64_t n, std::int64_t k, int c);

}  // namespace semistrong
