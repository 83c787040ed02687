#include "semistrong/colorers.hpp"

#include "semistrong/constructions.hpp"
#include "semistrong/rng.hpp"

#include "doctest.h"

#include <cmath>
#include <numeric>

using namespace semistrong;

TEST_CASE("greedy_weak hand trace") {
    // vertex 3 closes {1,2,3} all-blue, vertex 4 closes {1,2,4} all-blue
    const Hypergraph g(4, {{1, 2, 3}, {1, 2, 4}});
    const Coloring col = greedy_weak(g, {1, 2, 3, 4});
    CHECK(col.colors() == std::vector<int>{1, 1, 2, 2});
    CHECK(is_c_strong(g, col, 2).valid());

    const Hypergraph pair(2, {{1, 2}});
    CHECK(greedy_weak(pair, {1, 2}).colors() == std::vector<int>{1, 2});
}

TEST_CASE("greedy_weak default order is identity and runs are deterministic") {
    const Hypergraph g(4, {{1, 2, 3}, {1, 2, 4}});
    CHECK(greedy_weak(g).colors() == greedy_weak(g, {1, 2, 3, 4}).colors());
    CHECK(greedy_weak(g, {4, 3, 2, 1}).colors() == greedy_weak(g, {4, 3, 2, 1}).colors());
}

TEST_CASE("greedy_weak singleton edges never force red") {
    // not 2-intersecting, so skip the precheck; the singleton rule is what matters
    const Hypergraph g(3, {{1}, {1, 2}, {1, 2, 3}});
    const Coloring col = greedy_weak(g, {}, Precheck::skip);
    CHECK(col.color_of(1) == 1);  // {1} alone cannot trigger red
}

TEST_CASE("greedy_weak rejects non-2-intersecting input unless asked not to check") {
    const Hypergraph tri = triangle();  // only 1-intersecting
    CHECK_THROWS_AS(greedy_weak(tri), std::invalid_argument);
    CHECK_NOTHROW(greedy_weak(tri, {}, Precheck::skip));
}

TEST_CASE("greedy_weak order must be a permutation") {
    const Hypergraph g(3, {{1, 2, 3}});
    CHECK_THROWS_AS(greedy_weak(g, {1, 2}, Precheck::skip), std::invalid_argument);
    CHECK_THROWS_AS(greedy_weak(g, {1, 1, 2}, Precheck::skip), std::invalid_argument);
    CHECK_THROWS_AS(greedy_weak(g, {0, 1, 2}, Precheck::skip), std::invalid_argument);
}

TEST_CASE("greedy_weak is 2-strong with at most 2 colors on 2-intersecting inputs") {
    Rng rng(0xBEEF);
    for (int i = 0; i < 200; ++i) {
        const int n = rng.range(8, 30);
        const Hypergraph g =
            random_sunflower(2, rng.range(2, 25), ExtraRange{1, 3}, n, rng.next_u64());
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 1);
        for (std::size_t a = order.size(); a > 1; --a)
            std::swap(order[a - 1], order[rng.below(a)]);
        const Coloring col = greedy_weak(g, order);
        CHECK(is_c_strong(g, col, 2).valid());
        CHECK(col.palette_size() <= 2);
    }
}

TEST_CASE("star_three_color on the triangle") {
    const Hypergraph tri = triangle();
    const Coloring col = star_three_color(tri);
    CHECK(col.palette_size() <= 3);
    CHECK(is_c_strong(tri, col, 2).valid());
    CHECK(col.colors() == std::vector<int>{1, 2, 3});
}

TEST_CASE("star_three_color on a star picks the first minimal edge") {
    const Hypergraph star(4, {{1, 2}, {1, 3}, {1, 4}});
    const Coloring col = star_three_color(star);
    CHECK(col.colors() == std::vector<int>{1, 2, 3, 3});
    CHECK(is_c_strong(star, col, 2).valid());
}

TEST_CASE("star_three_color minimal edge selection scans ascending by size") {
    const Hypergraph g(4, {{1, 2, 3}, {3, 4}});
    const Coloring col = star_three_color(g);
    CHECK(col.colors() == std::vector<int>{3, 3, 1, 2});
    CHECK(is_c_strong(g, col, 2).valid());
}

TEST_CASE("star_three_color singleton fallback uses two colors") {
    const Hypergraph g(3, {{2}, {1, 2}, {2, 3}});
    const Coloring col = star_three_color(g);
    CHECK(col.colors() == std::vector<int>{2, 1, 2});
    CHECK(is_c_strong(g, col, 2).valid());
    CHECK(col.palette_size() <= 2);
}

TEST_CASE("star_three_color handles an edgeless hypergraph") {
    const Coloring col = star_three_color(Hypergraph(3, {}));
    CHECK(col.palette_size() == 1);
}

TEST_CASE("star_three_color rejects non-1-intersecting input") {
    const Hypergraph disjoint(4, {{1, 2}, {3, 4}});
    CHECK_THROWS_AS(star_three_color(disjoint), std::invalid_argument);
}

TEST_CASE("star_three_color is 2-strong with at most 3 colors on 1-intersecting inputs") {
    Rng rng(0xCAFE);
    for (int i = 0; i < 100; ++i) {
        const Hypergraph g =
            random_sunflower(1, rng.range(1, 15), ExtraRange{1, 4}, 18, rng.next_u64());
        const Coloring col = star_three_color(g);
        CHECK(is_c_strong(g, col, 2).valid());
        CHECK(col.palette_size() <= 3);
    }
}

TEST_CASE("random_coloring basics") {
    CHECK(random_coloring(5, 1, 42).colors() == std::vector<int>{1, 1, 1, 1, 1});
    CHECK(random_coloring(9, 4, 7).colors() == random_coloring(9, 4, 7).colors());
    CHECK(random_coloring(9, 4, 7).colors() != random_coloring(9, 4, 8).colors());
    CHECK_THROWS_AS(random_coloring(3, 0, 1), std::invalid_argument);
}

TEST_CASE("random_coloring per-color frequency within 3 sigma of 1/ell") {
    const int ell = 4;
    const int n = 100;
    const int reps = 1000;  // 1e5 colored vertices
    std::vector<std::int64_t> counts(static_cast<std::size_t>(ell) + 1, 0);
    for (int r = 0; r < reps; ++r) {
        const Coloring col = random_coloring(n, ell, derive_stream_seed(0xF00D, r));
        for (int c : col.colors()) ++counts[static_cast<std::size_t>(c)];
    }
    const double total = static_cast<double>(n) * reps;
    const double p = 1.0 / ell;
    const double sigma = std::sqrt(p * (1.0 - p) / total);
    for (int c = 1; c <= ell; ++c) {
        const double freq = static_cast<double>(counts[static_cast<std::size_t>(c)]) / total;
        CHECK(std::abs(freq - p) <= 3.0 * sigma);
    }
}

TEST_CASE("las_vegas_c_strong on the triangle") {
    const Hypergraph tri = triangle();

    // oracle: of the 27 possible 3-colorings exactly 6 are 2-strong
    int valid_count = 0;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c)
                if (is_c_strong(tri, Coloring({a, b, c}), 2).valid()) ++valid_count;
    CHECK(valid_count == 6);

    // success probability 6/27 per attempt: 1000 attempts cannot miss
    const LasVegasResult res = las_vegas_c_strong(tri, 2, 3, 1000, 99);
    REQUIRE(res.coloring.has_value());
    CHECK(is_c_strong(tri, *res.coloring, 2).valid());
    CHECK(res.attempts >= 1);
    CHECK(res.attempts <= 1000);
}

TEST_CASE("las_vegas_c_strong exhausts when ell is below chi") {
    // chi(triangle, 2) = 3, so ell = 2 can never succeed
    const LasVegasResult res = las_vegas_c_strong(triangle(), 2, 2, 200, 5);
    CHECK_FALSE(res.coloring.has_value());
    CHECK(res.attempts == 200);
}

TEST_CASE("las_vegas_c_strong never returns an invalid coloring") {
    Rng rng(2024);
    for (int i = 0; i < 30; ++i) {
        const Hypergraph g =
            random_sunflower(2, rng.range(2, 10), ExtraRange{1, 2}, 12, rng.next_u64());
        const LasVegasResult res = las_vegas_c_strong(g, 2, 4, 50, rng.next_u64());
        if (res.coloring) CHECK(is_c_strong(g, *res.coloring, 2).valid());
    }
}

TEST_CASE("las_vegas_c_strong requires ell >= c") {
    CHECK_THROWS_AS(las_vegas_c_strong(triangle(), 3, 2, 10, 1), std::invalid_argument);
}
