#include "semistrong/exact.hpp"

#include "semistrong/constructions.hpp"
#include "semistrong/rng.hpp"

#include "doctest.h"

#include <array>
#include <numeric>

using namespace semistrong;

namespace {

Hypergraph random_instance(int n, int edge_count, Rng& rng) {
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < edge_count; ++i) {
        std::vector<int> pool(static_cast<std::size_t>(n));
        std::iota(pool.begin(), pool.end(), 1);
        for (std::size_t a = pool.size(); a > 1; --a)
            std::swap(pool[a - 1], pool[rng.below(a)]);
        pool.resize(static_cast<std::size_t>(rng.range(1, n)));
        edges.push_back(pool);
    }
    return Hypergraph(n, std::move(edges));
}

}  // namespace

TEST_CASE("brute_force_chromatic reference values") {
    CHECK(brute_force_chromatic(triangle(), 2, 4) == 3);
    CHECK(brute_force_chromatic(Hypergraph(3, {{1, 2, 3}}), 2, 4) == 2);
    CHECK(brute_force_chromatic(cone(triangle()), 3, 5) == 4);
    CHECK_THROWS_AS(brute_force_chromatic(triangle(), 2, 4, 10), BudgetExceededError);
}

TEST_CASE("exact_chromatic reference values") {
    CHECK(exact_chromatic(triangle(), 2, 4) == 3);
    CHECK(exact_chromatic(cone(triangle()), 3, 5) == 4);
    CHECK(exact_chromatic(Hypergraph(5, {}), 2, 5) == 1);  // edgeless

    // chi of K(6,4) at c=3 is 5; the histogram (2,1,1,1,1) coloring shows <= 5
    const Hypergraph k64 = complete_uniform_explicit(6, 4);
    CHECK(is_c_strong(k64, Coloring({1, 1, 2, 3, 4, 5}), 3).valid());
    CHECK(exact_chromatic(k64, 3, 6) == 5);
}

TEST_CASE("exact_chromatic needs at least min(c,|e|) colors when an edge exists") {
    Rng rng(808);
    for (int i = 0; i < 30; ++i) {
        const int n = rng.range(3, 7);
        const Hypergraph g = random_instance(n, rng.range(1, 4), rng);
        const int c = rng.range(2, 4);
        int floor_colors = 1;
        for (std::size_t e = 0; e < g.edge_count(); ++e)
            floor_colors =
                std::max(floor_colors, std::min<int>(c, static_cast<int>(g.edge(e).size())));
        const auto chi = exact_chromatic(g, c, n);
        REQUIRE(chi.has_value());
        CHECK(*chi >= floor_colors);
    }
}

TEST_CASE("exact_chromatic equals the brute-force oracle") {
    Rng rng(606);
    for (int i = 0; i < 80; ++i) {
        const int n = rng.range(1, 6);
        const Hypergraph g = random_instance(n, rng.range(0, 5), rng);
        const int c = rng.range(2, 4);
        CHECK(exact_chromatic(g, c, 4) == brute_force_chromatic(g, c, 4));
    }
}

TEST_CASE("both searches report AboveMax identically") {
    // every 4-subset of [5] must be rainbow at c=4, forcing 5 colors
    const Hypergraph k54 = complete_uniform_explicit(5, 4);
    CHECK(exact_chromatic(k54, 4, 4) == std::nullopt);
    CHECK(brute_force_chromatic(k54, 4, 4) == std::nullopt);
    CHECK(exact_chromatic(k54, 4, 5) == 5);
}

TEST_CASE("adding edges never decreases exact_chromatic") {
    Rng rng(909);
    for (int i = 0; i < 40; ++i) {
        const int n = rng.range(2, 6);
        const Hypergraph g = random_instance(n, rng.range(1, 4), rng);
        auto edges = g.edges();
        std::vector<int> pool(static_cast<std::size_t>(n));
        std::iota(pool.begin(), pool.end(), 1);
        for (std::size_t a = pool.size(); a > 1; --a)
            std::swap(pool[a - 1], pool[rng.below(a)]);
        pool.resize(static_cast<std::size_t>(rng.range(1, n)));
        edges.push_back(pool);
        const Hypergraph bigger(n, edges);
        const int c = rng.range(2, 3);
        const auto before = exact_chromatic(g, c, n);
        const auto after = exact_chromatic(bigger, c, n);
        REQUIRE(before.has_value());
        REQUIRE(after.has_value());
        CHECK(*after >= *before);
    }
}

TEST_CASE("cone law: chi(cone(G), c+1) >= chi(G, c) + 1") {
    Rng rng(0xC0FE);
    for (int i = 0; i < 30; ++i) {
        const int n = rng.range(2, 6);
        const Hypergraph g = random_instance(n, rng.range(1, 4), rng);
        const int c = rng.range(2, 3);
        const auto chi = exact_chromatic(g, c, n);
        const auto chi_cone = exact_chromatic(cone(g), c + 1, n + 1);
        REQUIRE(chi.has_value());
        REQUIRE(chi_cone.has_value());
        CHECK(*chi_cone >= *chi + 1);
    }
}

TEST_CASE("complete_uniform_valid reference values") {
    CHECK(complete_uniform_valid(ColorHistogram({1, 1, 1}), 2, 2));
    CHECK_FALSE(complete_uniform_valid(ColorHistogram({2, 1}), 2, 2));
    CHECK(complete_uniform_valid(ColorHistogram({2, 1, 1, 1, 1}), 4, 3));

    // cross-check (2,1,1,1,1) against explicit K(6,4) edge enumeration
    const Hypergraph k64 = complete_uniform_explicit(6, 4);
    const Coloring witness({1, 1, 2, 3, 4, 5});
    CHECK(is_c_strong(k64, witness, 3).valid() ==
          complete_uniform_valid(histogram(witness), 4, 3));

    CHECK_THROWS_AS(complete_uniform_valid(ColorHistogram({1, 1}), 3, 2),
                    std::invalid_argument);  // covers fewer than k vertices
    CHECK_THROWS_AS(complete_uniform_valid(ColorHistogram({3}), 2, 1), std::invalid_argument);
}

TEST_CASE("complete_uniform_valid rainbow regime (k < c)") {
    CHECK(complete_uniform_valid(ColorHistogram({1, 1, 1, 1}), 2, 3));
    CHECK_FALSE(complete_uniform_valid(ColorHistogram({2, 1, 1}), 2, 3));
    CHECK(complete_uniform_valid(ColorHistogram({4}), 1, 3));  // k = 1 always valid
}

TEST_CASE("complete_uniform_valid agrees with edge enumeration on random histograms") {
    Rng rng(515);
    for (int iter = 0; iter < 120; ++iter) {
        const int n = rng.range(2, 9);
        const int k = rng.range(1, n);
        const int c = rng.range(2, 5);
        std::vector<int> colors(static_cast<std::size_t>(n));
        for (int& col : colors) col = rng.range(1, rng.range(1, n));
        const Coloring coloring(colors);
        const Hypergraph expl = complete_uniform_explicit(n, k, 1000);
        CHECK(complete_uniform_valid(histogram(coloring), k, c) ==
              is_c_strong(expl, coloring, c).valid());
    }
}

TEST_CASE("complete_uniform_valid is monotone under splitting classes (k >= c)") {
    Rng rng(313);
    for (int iter = 0; iter < 80; ++iter) {
        const int classes = rng.range(1, 6);
        std::vector<std::int64_t> sizes;
        for (int i = 0; i < classes; ++i) sizes.push_back(rng.range(1, 6));
        const ColorHistogram h(sizes);
        const int c = rng.range(2, 4);
        const std::int64_t k =
            std::min<std::int64_t>(h.total(), std::max<std::int64_t>(c, rng.range(1, 8)));
        if (!complete_uniform_valid(h, k, c)) continue;

        // split one class of size >= 2 into two; validity must survive
        auto split = sizes;
        for (std::size_t i = 0; i < split.size(); ++i) {
            if (split[i] >= 2) {
                const std::int64_t a = 1 + static_cast<std::int64_t>(rng.below(
                                               static_cast<std::uint64_t>(split[i] - 1)));
                const std::int64_t b = split[i] - a;
                split[i] = a;
                split.push_back(b);
                break;
            }
        }
        CHECK(complete_uniform_valid(ColorHistogram(split), k, c));
    }
}

TEST_CASE("chromatic_complete_uniform reference values") {
    CHECK(chromatic_complete_uniform(3, 2, 2) == 3);
    CHECK(chromatic_complete_uniform(51, 27, 3) == 4);
    for (std::int64_t c = 2; c <= 50; ++c)
        CHECK(chromatic_complete_uniform(3 * c - 3, 2 * c - 2, static_cast<int>(c)) ==
              2 * c - 1);
    // achievability histogram behind the 2c-1 value: c-2 doubletons + c+1 singletons
    for (int c = 2; c <= 12; ++c) {
        std::vector<std::int64_t> sizes(static_cast<std::size_t>(c - 2), 2);
        sizes.insert(sizes.end(), static_cast<std::size_t>(c + 1), 1);
        CHECK(complete_uniform_valid(ColorHistogram(sizes), 2 * c - 2, c));
    }
}

TEST_CASE("chromatic_complete_uniform degenerate regimes") {
    CHECK(chromatic_complete_uniform(7, 1, 3) == 1);   // singleton edges
    CHECK(chromatic_complete_uniform(5, 2, 3) == 5);   // k < c forces rainbow
    CHECK(chromatic_complete_uniform(9, 3, 5) == 9);
    CHECK_THROWS_AS(chromatic_complete_uniform(3, 4, 2), std::invalid_argument);
}

TEST_CASE("closed form equals the exact solver on enumerable instances") {
    for (int n = 2; n <= 9; ++n) {
        for (int k = 1; k <= n; ++k) {
            for (int c : {2, 3}) {
                const Hypergraph expl = complete_uniform_explicit(n, k, 10000);
                const auto chi = exact_chromatic(expl, c, n);
                REQUIRE(chi.has_value());
                CHECK(chromatic_complete_uniform(n, k, c) == *chi);
            }
        }
    }
    // spot checks above n = 9 where the solver still finishes quickly
    for (const auto& [n, k, c] : std::vector<std::array<int, 3>>{
             {10, 9, 2}, {11, 7, 3}, {12, 11, 3}}) {
        const auto chi = exact_chromatic(complete_uniform_explicit(n, k, 10000), c, n);
        REQUIRE(chi.has_value());
        CHECK(chromatic_complete_uniform(n, k, c) == *chi);
    }
}

TEST_CASE("closed form equals the exhaustive histogram route") {
    for (int n = 1; n <= 12; ++n)
        for (int k = 1; k <= n; ++k)
            for (int c : {2, 3, 4})
                CHECK(chromatic_complete_uniform(n, k, c) ==
                      chromatic_complete_uniform_bruteforce(n, k, c));
    CHECK_THROWS_AS(chromatic_complete_uniform_bruteforce(60, 10, 3), BudgetExceededError);
}
