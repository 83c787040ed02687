#include "semistrong/repro.hpp"

#include "semistrong/biased_measure.hpp"
#include "semistrong/bounds.hpp"
#include "semistrong/colorers.hpp"
#include "semistrong/constructions.hpp"
#include "semistrong/exact.hpp"
#include "semistrong/rng.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <sstream>

namespace semistrong::repro {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(6);
    out << v;
    return out.str();
}

constexpr std::uint64_t kSeedSunflowers = 0x5EED0002;
constexpr std::uint64_t kSeedOracle = 0x5EED0003;
constexpr std::uint64_t kSeedCone = 0x5EED0006;
constexpr std::uint64_t kSeedLasVegas = 0x5EED0008;
constexpr std::uint64_t kSeedContainment = 0x5EED0009;

std::vector<int> random_subset(int n, int size, Rng& rng) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    for (int i = 0; i < size; ++i) {
        const int j = i + static_cast<int>(rng.below(pool.size() - static_cast<std::size_t>(i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    pool.resize(static_cast<std::size_t>(size));
    return pool;
}

Hypergraph random_instance(int n, int edge_count, Rng& rng) {
    std::vector<std::vector<int>> edges;
    edges.reserve(static_cast<std::size_t>(edge_count));
    for (int i = 0; i < edge_count; ++i)
        edges.push_back(random_subset(n, rng.range(1, n), rng));
    return Hypergraph(n, std::move(edges));
}

CriterionResult criterion_triangle() {
    const auto start = Clock::now();
    const Hypergraph tri = triangle();
    const auto chi = exact_chromatic(tri, 2, 4);
    const Coloring star = star_three_color(tri);
    const bool star_ok = is_c_strong(tri, star, 2).valid() && star.palette_size() <= 3;
    const double elapsed = seconds_since(start);
    const bool pass = chi == std::optional<int>(3) && star_ok && elapsed < 1.0;
    return {"C1", "triangle exactness",
            pass,
            "chi=" + (chi ? std::to_string(*chi) : std::string("none")) +
                " star_valid=" + (star_ok ? "yes" : "no") + " time=" + fmt(elapsed) + "s"};
}

CriterionResult criterion_greedy_weak() {
    int failures = 0;
    const int instances = 1000;
    for (int i = 0; i < instances; ++i) {
        Rng rng(derive_stream_seed(kSeedSunflowers, static_cast<std::uint64_t>(i)));
        // n >= 14 with petal sizes up to >= 2 keeps >= C(12,1)+C(12,2) = 78
        // distinct petals available, so m <= 60 is always realizable
        const int n = rng.range(14, 40);
        const int m = rng.range(3, 60);
        const ExtraRange extras{1, rng.range(2, 4)};
        const Hypergraph g = random_sunflower(2, m, extras, n, rng.next_u64());

        std::vector<std::vector<int>> orders;
        std::vector<int> identity(static_cast<std::size_t>(n));
        std::iota(identity.begin(), identity.end(), 1);
        orders.push_back(identity);
        std::vector<int> reversed = identity;
        std::reverse(reversed.begin(), reversed.end());
        orders.push_back(reversed);
        for (int s = 0; s < 3; ++s) {
            std::vector<int> shuffled = identity;
            for (std::size_t a = shuffled.size(); a > 1; --a)
                std::swap(shuffled[a - 1], shuffled[rng.below(a)]);
            orders.push_back(shuffled);
        }

        for (const auto& order : orders) {
            const Coloring col = greedy_weak(g, order);
            if (!is_c_strong(g, col, 2).valid() || col.palette_size() > 2) ++failures;
        }
    }
    return {"C2", "greedy weak coloring on sunflowers",
            failures == 0,
            std::to_string(instances) + " sunflowers x 5 orders, failures=" +
                std::to_string(failures)};
}

CriterionResult criterion_oracle_equivalence() {
    int mismatches = 0;
    const int instances = 200;
    for (int i = 0; i < instances; ++i) {
        Rng rng(derive_stream_seed(kSeedOracle, static_cast<std::uint64_t>(i)));
        const int n = rng.range(1, 8);
        const Hypergraph g = random_instance(n, rng.range(0, 6), rng);
        const int c = rng.range(2, 4);
        if (exact_chromatic(g, c, 4) != brute_force_chromatic(g, c, 4)) ++mismatches;
    }
    return {"C3", "exact solver equals brute-force oracle",
            mismatches == 0,
            std::to_string(instances) + " instances (n<=8, ell_max=4), mismatches=" +
                std::to_string(mismatches)};
}

CriterionResult criterion_first_gadget() {
    const auto start = Clock::now();
    int closed_form_bad = 0;
    for (std::int64_t c = 2; c <= 200; ++c)
        if (chromatic_complete_uniform(3 * c - 3, 2 * c - 2, static_cast<int>(c)) != 2 * c - 1)
            ++closed_form_bad;
    const double elapsed = seconds_since(start);

    int explicit_bad = 0;
    for (int c : {2, 3}) {
        const ImplicitCompleteUniform gadget = gadget_c_minus_1(c);
        const Hypergraph g = complete_uniform_explicit(static_cast<int>(gadget.n),
                                                       static_cast<int>(gadget.k));
        if (exact_chromatic(g, c, static_cast<int>(gadget.n)) !=
            std::optional<int>(2 * c - 1))
            ++explicit_bad;
    }
    const bool pass = closed_form_bad == 0 && explicit_bad == 0 && elapsed < 1.0;
    return {"C4", "chi(K(3c-3,2c-2),c) = 2c-1",
            pass,
            "c=2..200 closed-form errors=" + std::to_string(closed_form_bad) +
                " explicit{c=2,3} errors=" + std::to_string(explicit_bad) +
                " closed-form time=" + fmt(elapsed) + "s"};
}

CriterionResult criterion_second_gadget() {
    int bad = 0;
    for (std::int64_t c = 2; c <= 10; ++c)
        for (std::int64_t t = c; t <= 2 * c; ++t)
            if (chromatic_complete_uniform((6 * c - 1) * t, 3 * c * t, static_cast<int>(c)) <
                2 * (c - 1))
                ++bad;
    const std::int64_t spot = chromatic_complete_uniform(51, 27, 3);
    const bool pass = bad == 0 && spot == 4;
    return {"C5", "chi(K((6c-1)t,3ct),c) >= 2(c-1)",
            pass,
            "grid 2<=c<=10, c<=t<=2c violations=" + std::to_string(bad) +
                "; chi(51,27,3)=" + std::to_string(spot)};
}

CriterionResult criterion_cone_monotonicity() {
    const Hypergraph tri = triangle();
    const auto cone_chi = exact_chromatic(cone(tri), 3, 5);
    bool pass = cone_chi == std::optional<int>(4);

    int violations = 0;
    const int instances = 100;
    for (int i = 0; i < instances; ++i) {
        Rng rng(derive_stream_seed(kSeedCone, static_cast<std::uint64_t>(i)));
        const int n = rng.range(2, 6);
        const Hypergraph g = random_instance(n, rng.range(1, 5), rng);
        const int c = rng.range(2, 3);
        const auto chi = exact_chromatic(g, c, n);
        const auto chi_cone = exact_chromatic(cone(g), c + 1, n + 1);
        if (!chi || !chi_cone || *chi_cone < *chi + 1) ++violations;
    }
    pass = pass && violations == 0;
    return {"C6", "cone raises chi(.,c+1) by at least 1",
            pass,
            "cone(triangle) chi=" + (cone_chi ? std::to_string(*cone_chi) : std::string("none")) +
                "; " + std::to_string(instances) + " random instances, violations=" +
                std::to_string(violations)};
}

CriterionResult criterion_ell_calculator() {
    const auto start = Clock::now();
    bool pass = smallest_ell(2, 2) == 4 && smallest_ell(3, 3) == 9 && smallest_ell(6, 3) == 15;

    for (std::int64_t t = 2; t <= 6 && pass; ++t) {
        std::int64_t tt = 1;
        for (std::int64_t i = 0; i < t; ++i) tt *= t;
        for (int c = 2; c <= t && pass; ++c)
            if (!ell_admissible(tt, t, c)) pass = false;
    }
    for (int c = 2; c <= 30 && pass; ++c) {
        const long double cap = std::sqrt(static_cast<long double>(c)) *
                                std::exp(static_cast<long double>(c));
        if (!(static_cast<long double>(smallest_ell(c, c)) < cap)) pass = false;
    }
    for (std::int64_t c = 2; c <= 50 && pass; ++c)
        if (smallest_ell(2 * c, static_cast<int>(c)) >= 2 * c * c) pass = false;

    const double elapsed = seconds_since(start);
    pass = pass && elapsed < 10.0;
    return {"C7", "smallest admissible ell calculator",
            pass,
            "ell(2,2)=4 ell(3,3)=9 ell(6,3)=15; t^t grid t<=6; sqrt(c)e^c grid c<=30; "
            "2c^2 grid c<=50; time=" + fmt(elapsed) + "s"};
}

CriterionResult criterion_las_vegas_bound() {
    bool pass = true;
    std::ostringstream detail;
    const std::uint64_t attempts = 10'000;
    int config_index = 0;
    for (const auto& [t, c] : std::vector<std::pair<int, int>>{{2, 2}, {4, 2}}) {
        const std::int64_t ell = smallest_ell(t, c);
        const double bound =
            static_cast<double>(binomial_saturating(static_cast<std::uint64_t>(ell),
                                                    static_cast<std::uint64_t>(c - 1))) *
            std::pow(static_cast<double>(c - 1) / static_cast<double>(ell), t);
        for (int rep = 0; rep < 3; ++rep) {
            const std::uint64_t inst_seed = derive_stream_seed(
                kSeedLasVegas, static_cast<std::uint64_t>(config_index * 8 + rep));
            Rng rng(inst_seed);
            const Hypergraph g = random_sunflower(t, 40, ExtraRange{1, 3}, 30, rng.next_u64());
            const std::uint64_t attempt_seed = rng.next_u64();
            std::uint64_t fails = 0;
            for (std::uint64_t a = 0; a < attempts; ++a) {
                const Coloring col = random_coloring(g.vertex_count(), static_cast<int>(ell),
                                                     derive_stream_seed(attempt_seed, a));
                if (!is_c_strong(g, col, c).valid()) ++fails;
            }
            const double rate = static_cast<double>(fails) / static_cast<double>(attempts);
            const double sigma =
                std::sqrt(rate * (1.0 - rate) / static_cast<double>(attempts));
            if (rate > bound + 3.0 * sigma) pass = false;
            if (rep == 0)
                detail << "(t=" << t << ",c=" << c << ",ell=" << ell << ") rate=" << fmt(rate)
                       << " bound=" << fmt(bound) << "; ";
        }
        ++config_index;
    }
    return {"C8", "las vegas per-attempt failure rate within union bound", pass,
            detail.str() + std::to_string(attempts) + " attempts per instance"};
}

struct ContainmentInstance {
    Hypergraph g;
    int t;
    double p;
};

std::vector<ContainmentInstance> containment_corpus() {
    std::vector<ContainmentInstance> corpus;
    Rng rng(kSeedContainment);
    const double factors[3] = {0.5, 0.7, 0.9};

    // stars: every edge contains vertex 1, hence 1-intersecting
    for (int i = 0; i < 17; ++i) {
        const int n = rng.range(6, 15);
        const int m = rng.range(2, 8);
        std::vector<std::vector<int>> edges;
        for (int e = 0; e < m; ++e) {
            std::vector<int> edge{1};
            const int extra = rng.range(1, 4);
            std::vector<int> pool = random_subset(n - 1, extra, rng);
            for (int v : pool) edge.push_back(v + 1);
            edges.push_back(std::move(edge));
        }
        const double p = factors[rng.below(3)] / 2.0;
        corpus.push_back({Hypergraph(n, std::move(edges)), 1, p});
    }

    // small complete uniform with 2k > n, hence (2k-n)-intersecting
    for (int i = 0; i < 17; ++i) {
        const int n = rng.range(4, 12);
        const int k = rng.range(n / 2 + 1, std::min(n, n / 2 + 3));
        const int t = 2 * k - n;
        const double p = factors[rng.below(3)] / (t + 1);
        corpus.push_back({complete_uniform_explicit(n, k), t, p});
    }

    // sunflowers
    for (int i = 0; i < 16; ++i) {
        const int t = rng.range(1, 3);
        const int n = rng.range(10, 15);
        const int m = rng.range(3, 10);
        const double p = factors[rng.below(3)] / (t + 1);
        corpus.push_back({random_sunflower(t, m, ExtraRange{1, 3}, n, rng.next_u64()), t, p});
    }
    return corpus;
}

CriterionResult criterion_containment_statistics() {
    const auto corpus = containment_corpus();
    const std::uint64_t samples = 100'000;
    int bound_violations = 0;
    int oracle_mismatches = 0;
    int oracle_checked = 0;
    std::size_t idx = 0;
    for (const auto& inst : corpus) {
        const std::uint64_t seed = derive_stream_seed(kSeedContainment ^ 0xABCD, idx++);
        const ContainmentBoundCheck check = check_containment_bound(inst.g, inst.t, inst.p, samples, seed);
        if (!check.holds_within_3sigma) ++bound_violations;
        if (inst.g.vertex_count() <= 15) {
            ++oracle_checked;
            const double exact = exact_containment_probability(inst.g, inst.p);
            const double sigma =
                std::sqrt(exact * (1.0 - exact) / static_cast<double>(samples));
            if (std::abs(check.estimate - exact) > 3.0 * sigma) ++oracle_mismatches;
        }
    }
    const bool pass = bound_violations == 0 && oracle_mismatches == 0;
    return {"C9", "containment bound holds and matches exact summation",
            pass,
            std::to_string(corpus.size()) + " instances x " + std::to_string(samples) +
                " samples: bound violations=" + std::to_string(bound_violations) +
                ", oracle mismatches=" + std::to_string(oracle_mismatches) + "/" +
                std::to_string(oracle_checked)};
}

bool classification_spot_checks(std::string& why) {
    const auto check = [&](bool ok, const std::string& msg) {
        if (!ok && why.empty()) why = msg;
        return ok;
    };
    bool pass = true;
    {
        const BoundsReport r = bounds_report(0, 2);
        pass &= check(r.status == BoundStatus::infinite, "(0,2) must be infinite");
    }
    {
        const BoundsReport r = bounds_report(1, 2);
        pass &= check(r.status == BoundStatus::exact && r.lower == Bound::finite(3) &&
                          r.upper == Bound::finite(3),
                      "(1,2) must be exactly 3");
    }
    for (std::int64_t t = 2; t <= 6; ++t) {
        const BoundsReport r = bounds_report(t, 2);
        pass &= check(r.status == BoundStatus::exact && r.lower == Bound::finite(2) &&
                          r.upper == Bound::finite(2),
                      "(t>=2,2) must be exactly 2");
    }
    for (int c = 3; c <= 6; ++c) {
        for (std::int64_t t = 0; t <= c - 2; ++t) {
            const BoundsReport r = bounds_report(t, c);
            pass &= check(r.status == BoundStatus::infinite, "(t<=c-2) must be infinite");
        }
        const BoundsReport r = bounds_report(c - 1, c);
        pass &= check(r.status == BoundStatus::open && r.lower == Bound::finite(2 * c - 1) &&
                          r.upper.is_unknown(),
                      "(c-1,c>2) must be open with lower 2c-1");
    }
    return pass;
}

CriterionResult criterion_case_table(const Options& opt) {
    std::string why;
    const bool spot_ok = classification_spot_checks(why);

    std::ifstream golden(opt.golden_path, std::ios::binary);
    if (!golden) {
        return {"C10", "case table matches golden file", false,
                "cannot open golden table '" + opt.golden_path + "'"};
    }
    std::ostringstream golden_content;
    golden_content << golden.rdbuf();
    const std::string rendered = bounds_table_csv(6, 6);
    const bool bytes_ok = rendered == golden_content.str();

    const bool pass = spot_ok && bytes_ok;
    std::string detail = "grid t=0..6, c=2..6 ";
    detail += bytes_ok ? "matches golden byte-for-byte" : "DIFFERS from golden";
    if (!spot_ok) detail += "; classification check failed: " + why;
    return {"C10", "case table matches golden file", pass, detail};
}

}  // namespace

double exact_containment_probability(const Hypergraph& g, double p) {
    const int n = g.vertex_count();
    if (n > 20) throw std::invalid_argument("exact summation limited to n <= 20");
    std::vector<std::uint32_t> edge_masks;
    edge_masks.reserve(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        std::uint32_t mask = 0;
        for (int v : g.edge(e)) mask |= std::uint32_t{1} << (v - 1);
        edge_masks.push_back(mask);
    }
    // weight of a subset of size s is p^s (1-p)^(n-s)
    std::vector<double> weight(static_cast<std::size_t>(n) + 1);
    for (int s = 0; s <= n; ++s)
        weight[static_cast<std::size_t>(s)] = std::pow(p, s) * std::pow(1.0 - p, n - s);
    double total = 0.0;
    const std::uint32_t limit = std::uint32_t{1} << n;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        for (std::uint32_t em : edge_masks) {
            if ((mask & em) == em) {
                total += weight[static_cast<std::size_t>(std::popcount(mask))];
                break;
            }
        }
    }
    return total;
}

CriterionResult run_criterion(int index, const Options& opt) {
    switch (index) {
        case 1: return criterion_triangle();
        case 2: return criterion_greedy_weak();
        case 3: return criterion_oracle_equivalence();
        case 4: return criterion_first_gadget();
        case 5: return criterion_second_gadget();
        case 6: return criterion_cone_monotonicity();
        case 7: return criterion_ell_calculator();
        case 8: return criterion_las_vegas_bound();
        case 9: return criterion_containment_statistics();
        case 10: return criterion_case_table(opt);
        default: throw std::invalid_argument("criterion index must be in 1..10");
    }
}

std::vector<CriterionResult> run_all(const Options& opt) {
    std::vector<CriterionResult> results;
    results.reserve(10);
    for (int i = 1; i <= 10; ++i) results.push_back(run_criterion(i, opt));
    return results;
}

}  // namespace semistrong::repro
