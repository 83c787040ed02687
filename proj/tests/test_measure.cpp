#include "semistrong/biased_measure.hpp"

#include "semistrong/constructions.hpp"
#include "semistrong/repro.hpp"
#include "semistrong/rng.hpp"

#include "doctest.h"

#include <cmath>

using namespace semistrong;

TEST_CASE("p_biased_sample determinism and bounds") {
    const VertexSet a = p_biased_sample(30, 0.4, 11);
    const VertexSet b = p_biased_sample(30, 0.4, 11);
    CHECK(a == b);
    CHECK(p_biased_sample(30, 0.4, 12) != a);
    CHECK_THROWS_AS(p_biased_sample(5, 0.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(p_biased_sample(5, 1.0, 1), std::invalid_argument);
}

TEST_CASE("p_biased_sample mean size within 3 sigma of n*p") {
    const int n = 50;
    const double p = 0.3;
    const int reps = 20000;
    std::int64_t total = 0;
    for (int i = 0; i < reps; ++i)
        total += p_biased_sample(n, p, derive_stream_seed(404, i)).count();
    const double mean = static_cast<double>(total) / reps;
    const double sigma_mean = std::sqrt(n * p * (1.0 - p) / reps);
    CHECK(std::abs(mean - n * p) <= 3.0 * sigma_mean);
}

TEST_CASE("p_biased_sample single element present about half the time at p = 0.5") {
    const int reps = 20000;
    int present = 0;
    for (int i = 0; i < reps; ++i)
        if (p_biased_sample(1, 0.5, derive_stream_seed(505, i)).contains(1)) ++present;
    const double freq = static_cast<double>(present) / reps;
    CHECK(std::abs(freq - 0.5) <= 3.0 * std::sqrt(0.25 / reps));
}

TEST_CASE("p-sweeps with a shared seed are coupled monotonely") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        double prev = -1.0;
        for (double p : {0.1, 0.2, 0.35, 0.5, 0.8}) {
            const auto est = estimate_containment(triangle(), p, 2000, seed);
            CHECK(est.estimate >= prev);
            prev = est.estimate;
        }
    }
}

TEST_CASE("estimate_containment matches closed forms for one-edge families") {
    const std::uint64_t samples = 100000;
    const double p = 0.3;

    // single edge {1}: containment iff element 1 sampled, probability p
    const auto single = estimate_containment(Hypergraph(1, {{1}}), p, samples, 21);
    CHECK(std::abs(single.estimate - p) <= 3.0 * std::sqrt(p * (1 - p) / samples));

    // single edge {1,2}: probability p^2 by independence
    const double p2 = p * p;
    const auto pair = estimate_containment(Hypergraph(2, {{1, 2}}), p, samples, 22);
    CHECK(std::abs(pair.estimate - p2) <= 3.0 * std::sqrt(p2 * (1 - p2) / samples));
}

TEST_CASE("triangle containment stays within the 1-intersecting bound at p = 0.2") {
    const auto est = estimate_containment(triangle(), 0.2, 100000, 23);
    CHECK(est.estimate <= 0.2 + 3.0 * est.std_error);
}

TEST_CASE("Monte Carlo matches the exact 2^n summation") {
    Rng rng(626);
    for (int i = 0; i < 10; ++i) {
        const int t = rng.range(1, 2);
        const Hypergraph g =
            random_sunflower(t, rng.range(2, 6), ExtraRange{1, 3}, rng.range(8, 13),
                             rng.next_u64());
        const double p = 0.08 * rng.range(1, 4);
        const std::uint64_t samples = 40000;
        const double exact = repro::exact_containment_probability(g, p);
        const auto est = estimate_containment(g, p, samples, rng.next_u64());
        const double sigma = std::sqrt(exact * (1.0 - exact) / samples);
        CHECK(std::abs(est.estimate - exact) <= 3.0 * sigma);
    }
}

TEST_CASE("implicit complete-uniform containment equals the explicit subset check") {
    const ImplicitCompleteUniform impl(6, 4);
    const Hypergraph expl = complete_uniform_explicit(6, 4);
    // identical seeds draw identical subsets; |S| >= k iff S contains a k-subset
    const auto a = estimate_containment(impl, 0.45, 20000, 303);
    const auto b = estimate_containment(expl, 0.45, 20000, 303);
    CHECK(a.hits == b.hits);
    CHECK(a.estimate == b.estimate);
}

TEST_CASE("check_containment_bound on the triangle") {
    const ContainmentBoundCheck r = check_containment_bound(triangle(), 1, 0.3, 100000, 31);
    CHECK(r.bound == doctest::Approx(0.3));
    CHECK(r.holds_within_3sigma);
}

TEST_CASE("check_containment_bound on a 2-core sunflower") {
    const Hypergraph g = random_sunflower(2, 6, ExtraRange{1, 3}, 14, 99);
    const ContainmentBoundCheck r = check_containment_bound(g, 2, 0.25, 100000, 32);
    CHECK(r.bound == doctest::Approx(0.0625));
    CHECK(r.holds_within_3sigma);
}

TEST_CASE("check_containment_bound preconditions are hard errors") {
    CHECK_THROWS_AS(check_containment_bound(triangle(), 1, 0.6, 1000, 1), std::invalid_argument);
    CHECK_THROWS_AS(check_containment_bound(triangle(), 2, 0.2, 1000, 1), std::invalid_argument);
    CHECK_THROWS_AS(check_containment_bound(triangle(), 1, 0.5, 1000, 1),
                    std::invalid_argument);  // p = 1/(t+1) exactly is out of range
}
