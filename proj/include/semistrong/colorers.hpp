#pragma once

#include "semistrong/hypergraph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace semistrong {

// Whether a coloring algorithm verifies its intersection precondition
// before running. Verification costs O(m^2) pairwise intersections; callers
// that constructed the input with a known level may skip it, in which case
// the validity guarantee is theirs to keep.
enum class Precheck { verify, skip };

// Two-coloring of a 2-intersecting hypergraph. Vertices are processed in
// `order` (a permutation of [1..n]; empty means identity): a vertex takes
// color 1 unless it is the last uncolored vertex of an edge of size >= 2
// whose other vertices all have color 1, in which case it takes color 2.
// Size-1 edges never force color 2 (min(2,1) = 1 color always suffices).
// The result is 2-strong whenever the input really is 2-intersecting.
Coloring greedy_weak(const Hypergraph& g, const std::vector<int>& order = {},
                     Precheck precheck = Precheck::verify);

// Three-coloring of a 1-intersecting hypergraph: an inclusion-minimal edge
// gets colors 1 and 2 (smallest vertex id color 1, rest color 2), everything
// outside it gets color 3. Every other edge meets the chosen edge and owns a
// vertex outside it, so the result is 2-strong.
//
// Inputs with a singleton edge {v} fall back to a two-coloring (v color 1,
// all else color 2): 1-intersection forces every edge to contain v.
Coloring star_three_color(const Hypergraph& g, Precheck precheck = Precheck::verify);

// Each vertex colored independently and uniformly from [1..ell];
// deterministic in seed.
Coloring random_coloring(int n, int ell, std::uint64_t seed);

struct LasVegasResult {
    std::optional<Coloring> coloring;  // nullopt: exhausted max_attempts
    std::uint64_t attempts = 0;        // colorings drawn
};

// Draws random ell-colorings until one verifies c-strong, up to
// max_attempts. Attempt i uses derive_stream_seed(seed, i), so results do
// not depend on batching or scheduling of attempts. A returned coloring has
// passed is_c_strong; it is never assumed valid. Requires ell >= c.
LasVegasResult las_vegas_c_strong(const Hypergraph& g, int c, int ell,
                                  std::uint64_t max_attempts, std::uint64_t seed);

}  // namespace semistrong
