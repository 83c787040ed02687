#include "semistrong/biased_measure.hpp"

#include "semistrong/rng.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace semistrong {

namespace {

void require_probability(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("requires 0 < p < 1");
}

ContainmentEstimate finish(std::uint64_t hits, std::uint64_t samples) {
    ContainmentEstimate r;
    r.samples = samples;
    r.hits = hits;
    r.estimate = static_cast<double>(hits) / static_cast<double>(samples);
    r.std_error = std::sqrt(r.estimate * (1.0 - r.estimate) / static_cast<double>(samples));
    return r;
}

}  // namespace

VertexSet p_biased_sample(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    require_probability(p);
    Rng rng(seed);
    VertexSet s(n);
    for (int v = 1; v <= n; ++v)
        if (rng.unit() < p) s.insert(v);
    return s;
}

ContainmentEstimate estimate_containment(const Hypergraph& g, double p,
                                         std::uint64_t samples, std::uint64_t seed) {
    require_probability(p);
    if (samples < 1) throw std::invalid_argument("samples must be positive");
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const VertexSet s = p_biased_sample(g.vertex_count(), p, derive_stream_seed(seed, i));
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            if (s.contains_all(g.edge_set(e))) {
                ++hits;
                break;
            }
        }
    }
    return finish(hits, samples);
}

ContainmentEstimate estimate_containment(const ImplicitCompleteUniform& g, double p,
                                         std::uint64_t samples, std::uint64_t seed) {
    require_probability(p);
    if (samples < 1) throw std::invalid_argument("samples must be positive");
    if (g.n > std::numeric_limits<int>::max())
        throw std::invalid_argument("ground set too large to sample");
    const int n = static_cast<int>(g.n);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const VertexSet s = p_biased_sample(n, p, derive_stream_seed(seed, i));
        if (s.count() >= g.k) ++hits;
    }
    return finish(hits, samples);
}

ContainmentBoundCheck check_containment_bound(const Hypergraph& g, int t, double p,
                               std::uint64_t samples, std::uint64_t seed) {
    if (t < 0) throw std::invalid_argument("t must be non-negative");
    require_probability(p);
    if (!is_t_intersecting(g, t))
        throw std::invalid_argument("hypergraph is not t-intersecting; the bound does not apply");
    if (!(p < 1.0 / (t + 1)))
        throw std::invalid_argument("requires p < 1/(t+1); the bound does not apply");

    const ContainmentEstimate est = estimate_containment(g, p, samples, seed);
    ContainmentBoundCheck r;
    r.estimate = est.estimate;
    r.std_error = est.std_error;
    r.bound = std::pow(p, t);
    r.holds_within_3sigma = est.estimate <= r.bound + 3.0 * est.std_error;
    return r;
}

}  // namespace semistrong
