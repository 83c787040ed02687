#pragma once

#include "semistrong/constructions.hpp"
#include "semistrong/hypergraph.hpp"

#include <cstdint>

namespace semistrong {

// Random subset of [1..n] including each element independently with
// probability p, deterministic in seed. Element i is included iff its
// uniform draw u_i < p, with one draw per element in vertex order; runs
// sharing a seed across different p are therefore coupled monotonely
// (raising p only adds elements).
VertexSet p_biased_sample(int n, double p, std::uint64_t seed);

struct ContainmentEstimate {
    double estimate = 0.0;   // fraction of samples containing some edge
    double std_error = 0.0;  // sqrt(q(1-q)/samples)
    std::uint64_t samples = 0;
    std::uint64_t hits = 0;
};

// Monte Carlo estimate of the probability that a p-biased subset of [1..n]
// contains at least one edge of g. Sample i draws from
// derive_stream_seed(seed, i): deterministic under any batching.
ContainmentEstimate estimate_containment(const Hypergraph& g, double p,
                                         std::uint64_t samples, std::uint64_t seed);

// Complete-uniform variant: a sample contains some k-subset of [1..n]
// exactly when its size reaches k, so the check is a popcount.
ContainmentEstimate estimate_containment(const ImplicitCompleteUniform& g, double p,
                                         std::uint64_t samples, std::uint64_t seed);

struct ContainmentBoundCheck {
    bool holds_within_3sigma = false;
    double estimate = 0.0;
    double std_error = 0.0;
    double bound = 0.0;  // p^t
};

// Checks the containment bound for t-intersecting families: for
// p < 1/(t+1) the containment probability is at most p^t. The comparison
// allows a 3-sigma statistical margin and never hard-fails on fluctuation.
// Violating the preconditions (g not t-intersecting, or p >= 1/(t+1),
// where the bound simply does not apply) is a hard error.
ContainmentBoundCheck check_containment_bound(const Hypergraph& g, int t, double p,
                               std::uint64_t samples, std::uint64_t seed);

}  // namespace semistrong
