// Command-line front end: generate instances, check colorings, run the
// coloring algorithms, compute chromatic numbers and the chi(t,c) case
// table, estimate biased-measure containment, and run the verification
// experiment suite.
//
// Exit codes: 0 success/valid, 1 a requested check came back false,
// 2 usage or format error, 3 resource budget exceeded.

#include "semistrong/biased_measure.hpp"
#include "semistrong/bounds.hpp"
#include "semistrong/colorers.hpp"
#include "semistrong/constructions.hpp"
#include "semistrong/exact.hpp"
#include "semistrong/hypergraph.hpp"
#include "semistrong/io.hpp"
#include "semistrong/repro.hpp"
#include "semistrong/rng.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

namespace {

using json = nlohmann::json;
using namespace semistrong;

constexpr int kExitOk = 0;
constexpr int kExitCheckedFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return fallback;
    std::uint64_t value = 0;
    const std::string s(raw);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument(std::string(name) + " must be a non-negative integer");
    return value;
}

Instance read_instance(const std::string& path) {
    if (path == "-") return parse_instance(std::cin);
    std::ifstream f(path);
    if (!f) throw FormatError("cannot open '" + path + "'");
    return parse_instance(f);
}

Hypergraph read_hypergraph(const std::string& path) {
    Instance inst = read_instance(path);
    if (auto* g = std::get_if<Hypergraph>(&inst)) return std::move(*g);
    throw FormatError("this operation needs an explicit hypergraph, not an implicit "
                      "complete-uniform header (materialize it with `gen complete-uniform`)");
}

Coloring read_coloring(const std::string& path) {
    if (path == "-") return parse_coloring(std::cin);
    std::ifstream f(path);
    if (!f) throw FormatError("cannot open '" + path + "'");
    return parse_coloring(f);
}

// Turns an implicit instance into an explicit one when a subcommand needs
// edges; bounded by the edge budget.
Hypergraph materialize(const Instance& inst, std::uint64_t edge_budget) {
    if (const auto* g = std::get_if<Hypergraph>(&inst)) return *g;
    const auto& impl = std::get<ImplicitCompleteUniform>(inst);
    if (impl.n > 1'000'000) throw BudgetExceededError("ground set too large to materialize");
    return complete_uniform_explicit(static_cast<int>(impl.n), static_cast<int>(impl.k),
                                     edge_budget);
}

// ---- gen ----------------------------------------------------------------

struct GenOptions {
    std::string input = "-";
    int n = 0, k = 0, t = 0, c = 0, m = 0;
    int extra_lo = 1, extra_hi = 1;
    std::uint64_t seed = 0;
    std::uint64_t edge_budget = 0;
    bool implicit = false;
    bool make_explicit = false;
};

int run_gen(const std::string& which, const GenOptions& o) {
    if (which == "triangle") {
        write_hypergraph(std::cout, triangle());
    } else if (which == "complete-uniform") {
        if (o.implicit) write_implicit(std::cout, ImplicitCompleteUniform(o.n, o.k));
        else write_hypergraph(std::cout, complete_uniform_explicit(o.n, o.k, o.edge_budget));
    } else if (which == "cone") {
        write_hypergraph(std::cout, cone(read_hypergraph(o.input)));
    } else if (which == "sunflower") {
        write_hypergraph(std::cout, random_sunflower(o.t, o.m, ExtraRange{o.extra_lo, o.extra_hi},
                                                     o.n, o.seed));
    } else if (which == "gadget-c1" || which == "gadget-tc") {
        const ImplicitCompleteUniform g =
            which == "gadget-c1" ? gadget_c_minus_1(o.c) : gadget_t_ge_c(o.t, o.c);
        if (o.make_explicit)
            write_hypergraph(std::cout,
                             complete_uniform_explicit(static_cast<int>(g.n),
                                                       static_cast<int>(g.k), o.edge_budget));
        else
            write_implicit(std::cout, g);
    }
    return kExitOk;
}

// ---- check --------------------------------------------------------------

struct CheckOptions {
    std::string input = "-";
    std::string coloring;
    std::optional<int> t;
    int c = 2;
    bool json_out = false;
};

int run_check(const CheckOptions& o) {
    const Instance inst = read_instance(o.input);
    json report;
    std::ostringstream text;
    bool all_good = true;

    // intersection level: pairwise minimum for explicit inputs, 2k-n closed
    // form for implicit ones (single-edge families are unbounded)
    std::optional<std::int64_t> level;
    bool unbounded = false;
    if (const auto* g = std::get_if<Hypergraph>(&inst)) {
        const auto lv = intersection_level(*g);
        if (lv) level = *lv; else unbounded = true;
    } else {
        const auto& impl = std::get<ImplicitCompleteUniform>(inst);
        if (impl.n == impl.k) unbounded = true;
        else level = impl.intersection_level();
    }
    if (unbounded) {
        text << "intersection-level=unbounded\n";
        report["intersection_level"] = "unbounded";
    } else {
        text << "intersection-level=" << *level << '\n';
        report["intersection_level"] = *level;
    }

    if (o.t) {
        const bool holds = unbounded || *level >= *o.t;
        text << "t-intersecting(" << *o.t << ")=" << (holds ? "true" : "false") << '\n';
        report["t"] = *o.t;
        report["t_intersecting"] = holds;
        all_good = all_good && holds;
    }

    if (!o.coloring.empty()) {
        const Coloring col = read_coloring(o.coloring);
        json verdict_json;
        if (const auto* g = std::get_if<Hypergraph>(&inst)) {
            const CStrongVerdict v = is_c_strong(*g, col, o.c);
            if (v.valid()) {
                text << "c-strong(" << o.c << ")=valid\n";
                verdict_json = {{"valid", true}};
            } else {
                text << "c-strong(" << o.c << ")=invalid witness-edge=" << *v.violating_edge
                     << '\n';
                verdict_json = {{"valid", false}, {"witness_edge", *v.violating_edge}};
                all_good = false;
            }
        } else {
            const auto& impl = std::get<ImplicitCompleteUniform>(inst);
            if (col.size() != impl.n)
                throw std::invalid_argument("coloring length does not match ground-set size");
            const bool valid = complete_uniform_valid(histogram(col), impl.k, o.c);
            text << "c-strong(" << o.c << ")=" << (valid ? "valid" : "invalid") << '\n';
            verdict_json = {{"valid", valid}};
            all_good = all_good && valid;
        }
        report["c"] = o.c;
        report["c_strong"] = verdict_json;
    }

    if (o.json_out) std::cout << report.dump(2) << '\n';
    else std::cout << text.str();
    return all_good ? kExitOk : kExitCheckedFalse;
}

// ---- color --------------------------------------------------------------

struct ColorOptions {
    std::string input = "-";
    std::string algo = "greedy";
    std::string order = "identity";
    int c = 2;
    int ell = 0;
    std::uint64_t seed = 0;
    std::uint64_t max_attempts = 1000;
    bool skip_precheck = false;
    bool json_out = false;
};

std::vector<int> resolve_order(const std::string& spec, int n, std::uint64_t seed) {
    if (spec == "identity") return {};
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    if (spec == "reverse") {
        std::reverse(order.begin(), order.end());
        return order;
    }
    if (spec == "random") {
        Rng rng(derive_stream_seed(seed, 0x0BDE));
        for (std::size_t a = order.size(); a > 1; --a)
            std::swap(order[a - 1], order[rng.below(a)]);
        return order;
    }
    // explicit comma-separated permutation
    order.clear();
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        int v = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc{} || ptr != item.data() + item.size())
            throw std::invalid_argument("--order must be identity|reverse|random or a "
                                        "comma-separated permutation");
        order.push_back(v);
    }
    return order;
}

int run_color(const ColorOptions& o) {
    const Hypergraph g = read_hypergraph(o.input);
    const Precheck pre = o.skip_precheck ? Precheck::skip : Precheck::verify;

    std::optional<Coloring> col;
    std::uint64_t attempts = 0;
    if (o.algo == "greedy") {
        col = greedy_weak(g, resolve_order(o.order, g.vertex_count(), o.seed), pre);
    } else if (o.algo == "star") {
        col = star_three_color(g, pre);
    } else if (o.algo == "random") {
        if (o.ell < o.c)
            throw std::invalid_argument("--ell must be given and at least --c for --algo random");
        LasVegasResult res = las_vegas_c_strong(g, o.c, o.ell, o.max_attempts, o.seed);
        attempts = res.attempts;
        if (res.coloring) col = std::move(*res.coloring);
    } else {
        throw std::invalid_argument("--algo must be greedy, star, or random");
    }

    // every emitted coloring is re-validated here, whatever produced it
    const bool valid = col.has_value() && is_c_strong(g, *col, o.c).valid();

    if (o.json_out) {
        json out = {{"algo", o.algo}, {"c", o.c}, {"valid", valid}};
        if (o.algo == "random") {
            out["attempts"] = attempts;
            out["ell"] = o.ell;
            out["exhausted"] = !col.has_value();
        }
        if (valid) {
            out["colors"] = col->colors();
            out["palette_size"] = col->palette_size();
        }
        std::cout << out.dump(2) << '\n';
        return valid ? kExitOk : kExitCheckedFalse;
    }

    std::cout << "# algo=" << o.algo << " c=" << o.c << " valid=" << (valid ? "true" : "false");
    if (valid) std::cout << " palette=" << col->palette_size();
    if (o.algo == "random") {
        std::cout << " ell=" << o.ell << " attempts=" << attempts;
        if (!col) std::cout << " exhausted=true";
    }
    std::cout << '\n';
    if (valid) write_coloring(std::cout, *col);
    return valid ? kExitOk : kExitCheckedFalse;
}

// ---- chromatic ----------------------------------------------------------

struct ChromaticOptions {
    std::string input = "-";
    std::string mode = "exact";
    int c = 2;
    int ell_max = 0;  // 0: use the vertex count, which always suffices
    std::uint64_t enum_budget = 0;
    std::uint64_t edge_budget = 0;
    bool json_out = false;
};

int run_chromatic(const ChromaticOptions& o) {
    const Instance inst = read_instance(o.input);
    json out;
    std::ostringstream text;

    if (o.mode == "closed-form") {
        const auto* impl = std::get_if<ImplicitCompleteUniform>(&inst);
        if (impl == nullptr)
            throw std::invalid_argument(
                "--mode closed-form needs a complete-uniform header as input");
        const std::int64_t chi = chromatic_complete_uniform(impl->n, impl->k, o.c);
        text << "chi=" << chi << '\n';
        out["chi"] = chi;
        if (impl->k >= 2 && impl->k < o.c) {
            text << "note=rainbow-regime (k < c forces all-distinct colors)\n";
            out["note"] = "rainbow-regime";
        }
    } else if (o.mode == "exact" || o.mode == "brute") {
        const Hypergraph g = materialize(inst, o.edge_budget);
        const int ell_max = o.ell_max > 0 ? o.ell_max : g.vertex_count();
        const auto chi = o.mode == "exact"
                             ? exact_chromatic(g, o.c, ell_max)
                             : brute_force_chromatic(g, o.c, ell_max, o.enum_budget);
        if (chi) {
            text << "chi=" << *chi << '\n';
            out["chi"] = *chi;
        } else {
            text << "chi>" << ell_max << '\n';
            out["chi_exceeds"] = ell_max;
        }
    } else {
        throw std::invalid_argument("--mode must be exact, brute, or closed-form");
    }

    if (o.json_out) std::cout << out.dump(2) << '\n';
    else std::cout << text.str();
    return kExitOk;
}

// ---- bounds -------------------------------------------------------------

struct BoundsOptions {
    std::int64_t t = -1;
    int c = 0;
    std::vector<std::int64_t> table;
    bool json_out = false;
};

json bound_to_json(const Bound& b, bool is_upper) {
    if (b.is_finite()) return b.value();
    return render_bound(b, is_upper);
}

int run_bounds(const BoundsOptions& o) {
    if (!o.table.empty()) {
        if (o.table.size() != 2 || o.table[1] < 2)
            throw std::invalid_argument("--table needs TMAX CMAX with CMAX >= 2");
        std::cout << bounds_table_csv(o.table[0], static_cast<int>(o.table[1]));
        return kExitOk;
    }
    if (o.t < 0 || o.c < 2)
        throw std::invalid_argument("give --t and --c (or --table TMAX CMAX)");
    const BoundsReport r = bounds_report(o.t, o.c);
    if (o.json_out) {
        json out = {{"t", r.t},
                    {"c", r.c},
                    {"lower", bound_to_json(r.lower, false)},
                    {"upper", bound_to_json(r.upper, true)},
                    {"status", to_string(r.status)},
                    {"provenance", r.provenance}};
        std::cout << out.dump(2) << '\n';
        return kExitOk;
    }
    std::cout << "t=" << r.t << " c=" << r.c << '\n'
              << "lower=" << render_bound(r.lower, false) << '\n'
              << "upper=" << render_bound(r.upper, true) << '\n'
              << "status=" << to_string(r.status) << '\n';
    for (const auto& p : r.provenance) std::cout << "provenance: " << p << '\n';
    return kExitOk;
}

// ---- measure ------------------------------------------------------------

struct MeasureOptions {
    std::string input = "-";
    double p = 0.0;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0;
    std::optional<int> t;
    bool json_out = false;
};

int run_measure(const MeasureOptions& o) {
    const Instance inst = read_instance(o.input);
    json out = {{"p", o.p}, {"samples", o.samples}};
    std::ostringstream text;
    bool verdict_ok = true;

    if (const auto* g = std::get_if<Hypergraph>(&inst)) {
        if (o.t) {
            const ContainmentBoundCheck r = check_containment_bound(*g, *o.t, o.p, o.samples, o.seed);
            text << "estimate=" << r.estimate << " std-error=" << r.std_error << " bound="
                 << r.bound << " verdict=" << (r.holds_within_3sigma ? "holds" : "violated")
                 << '\n';
            out["estimate"] = r.estimate;
            out["std_error"] = r.std_error;
            out["t"] = *o.t;
            out["bound"] = r.bound;
            out["holds_within_3sigma"] = r.holds_within_3sigma;
            verdict_ok = r.holds_within_3sigma;
        } else {
            const ContainmentEstimate est = estimate_containment(*g, o.p, o.samples, o.seed);
            text << "estimate=" << est.estimate << " std-error=" << est.std_error << '\n';
            out["estimate"] = est.estimate;
            out["std_error"] = est.std_error;
        }
    } else {
        const auto& impl = std::get<ImplicitCompleteUniform>(inst);
        if (o.t) {
            const bool t_ok = impl.n == impl.k || impl.intersection_level() >= *o.t;
            if (!t_ok)
                throw std::invalid_argument(
                    "family is not t-intersecting; the bound does not apply");
            if (!(o.p < 1.0 / (*o.t + 1)))
                throw std::invalid_argument("requires p < 1/(t+1); the bound does not apply");
        }
        const ContainmentEstimate est = estimate_containment(impl, o.p, o.samples, o.seed);
        text << "estimate=" << est.estimate << " std-error=" << est.std_error;
        out["estimate"] = est.estimate;
        out["std_error"] = est.std_error;
        if (o.t) {
            const double bound = std::pow(o.p, *o.t);
            const bool holds = est.estimate <= bound + 3.0 * est.std_error;
            text << " bound=" << bound << " verdict=" << (holds ? "holds" : "violated");
            out["t"] = *o.t;
            out["bound"] = bound;
            out["holds_within_3sigma"] = holds;
            verdict_ok = holds;
        }
        text << '\n';
    }

    if (o.json_out) std::cout << out.dump(2) << '\n';
    else std::cout << text.str();
    return verdict_ok ? kExitOk : kExitCheckedFalse;
}

// ---- repro --------------------------------------------------------------

int run_repro(const std::string& golden, bool json_out) {
    repro::Options opt;
    opt.golden_path = golden;
    bool all_passed = true;
    json rows = json::array();
    for (int i = 1; i <= 10; ++i) {
        const auto r = repro::run_criterion(i, opt);
        all_passed = all_passed && r.passed;
        if (json_out) {
            rows.push_back({{"id", r.id},
                            {"name", r.name},
                            {"passed", r.passed},
                            {"detail", r.detail}});
        } else {
            std::printf("[%s] %-4s %s  (%s)\n", r.passed ? "PASS" : "FAIL", r.id.c_str(),
                        r.name.c_str(), r.detail.c_str());
            std::fflush(stdout);
        }
    }
    if (json_out)
        std::cout << json{{"criteria", rows}, {"all_passed", all_passed}}.dump(2) << '\n';
    else
        std::printf("%s\n", all_passed ? "repro: all criteria passed"
                                       : "repro: FAILURES present");
    return all_passed ? kExitOk : kExitCheckedFalse;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semi-strong (c-strong) coloring of t-intersecting hypergraphs"};
    app.require_subcommand(1);

    const std::uint64_t default_edge_budget = env_or("SEMISTRONG_EDGE_BUDGET", kDefaultEdgeBudget);
    const std::uint64_t default_enum_budget = env_or("SEMISTRONG_ENUM_BUDGET", kDefaultEnumBudget);

    int exit_code = kExitOk;

    // gen
    auto* gen = app.add_subcommand("gen", "emit a hypergraph in the text format");
    gen->require_subcommand(1);
    GenOptions g;
    g.edge_budget = default_edge_budget;
    {
        auto* tri = gen->add_subcommand("triangle", "the 3-cycle K(3,2)");
        tri->callback([&] { exit_code = run_gen("triangle", g); });

        auto* cu = gen->add_subcommand("complete-uniform", "all k-subsets of [n]");
        cu->add_option("--n", g.n, "ground-set size")->required();
        cu->add_option("--k", g.k, "edge size")->required();
        cu->add_option("--edge-budget", g.edge_budget, "max edges to materialize");
        cu->add_flag("--implicit", g.implicit, "emit the one-line header instead of edges");
        cu->callback([&] { exit_code = run_gen("complete-uniform", g); });

        auto* cn = gen->add_subcommand("cone", "add an apex vertex to every edge");
        cn->add_option("--input", g.input, "hypergraph file ('-' for stdin)");
        cn->callback([&] { exit_code = run_gen("cone", g); });

        auto* sf = gen->add_subcommand("sunflower", "random family with a common t-core");
        sf->add_option("--t", g.t, "core size")->required();
        sf->add_option("--m", g.m, "edge count")->required();
        sf->add_option("--extra-lo", g.extra_lo, "min petal size");
        sf->add_option("--extra-hi", g.extra_hi, "max petal size");
        sf->add_option("--n", g.n, "vertex count")->required();
        sf->add_option("--seed", g.seed, "rng seed");
        sf->callback([&] { exit_code = run_gen("sunflower", g); });

        auto* g1 = gen->add_subcommand("gadget-c1", "K(3c-3,2c-2), the (c-1)-intersecting gadget");
        g1->add_option("--c", g.c, "target c")->required();
        g1->add_flag("--explicit", g.make_explicit, "materialize edges (budgeted)");
        g1->add_option("--edge-budget", g.edge_budget, "max edges to materialize");
        g1->callback([&] { exit_code = run_gen("gadget-c1", g); });

        auto* g2 = gen->add_subcommand("gadget-tc", "K((6c-1)t,3ct), the t-intersecting gadget");
        g2->add_option("--t", g.t, "intersection level, t >= c")->required();
        g2->add_option("--c", g.c, "target c")->required();
        g2->add_flag("--explicit", g.make_explicit, "materialize edges (budgeted)");
        g2->add_option("--edge-budget", g.edge_budget, "max edges to materialize");
        g2->callback([&] { exit_code = run_gen("gadget-tc", g); });
    }

    // check
    CheckOptions chk;
    {
        auto* sub = app.add_subcommand("check", "intersection level and coloring validity");
        sub->add_option("--input", chk.input, "hypergraph file ('-' for stdin)");
        sub->add_option("--t", chk.t, "assert the family is t-intersecting");
        sub->add_option("--coloring", chk.coloring, "coloring file to validate");
        sub->add_option("--c", chk.c, "strength for the coloring check (default 2)");
        sub->add_flag("--json", chk.json_out, "machine-readable report");
        sub->callback([&] { exit_code = run_check(chk); });
    }

    // color
    ColorOptions col;
    {
        auto* sub = app.add_subcommand("color", "run a coloring algorithm");
        sub->add_option("--input", col.input, "hypergraph file ('-' for stdin)");
        sub->add_option("--algo", col.algo, "greedy | star | random")->required();
        sub->add_option("--c", col.c, "validation strength (default 2)");
        sub->add_option("--ell", col.ell, "palette size for --algo random");
        sub->add_option("--seed", col.seed, "rng seed");
        sub->add_option("--max-attempts", col.max_attempts, "retry cap for --algo random");
        sub->add_option("--order", col.order,
                        "identity | reverse | random | comma-separated permutation");
        sub->add_flag("--skip-precheck", col.skip_precheck,
                      "skip the O(m^2) intersection precondition check");
        sub->add_flag("--json", col.json_out, "machine-readable report");
        sub->callback([&] { exit_code = run_color(col); });
    }

    // chromatic
    ChromaticOptions chr;
    chr.enum_budget = default_enum_budget;
    chr.edge_budget = default_edge_budget;
    {
        auto* sub = app.add_subcommand("chromatic", "chromatic number of the input");
        sub->add_option("--input", chr.input, "instance file ('-' for stdin)");
        sub->add_option("--c", chr.c, "strength c (default 2)");
        sub->add_option("--mode", chr.mode, "exact | brute | closed-form");
        sub->add_option("--ell-max", chr.ell_max, "search ceiling (default: vertex count)");
        sub->add_option("--enum-budget", chr.enum_budget, "brute-force enumeration budget");
        sub->add_option("--edge-budget", chr.edge_budget, "materialization budget");
        sub->add_flag("--json", chr.json_out, "machine-readable report");
        sub->callback([&] { exit_code = run_chromatic(chr); });
    }

    // bounds
    BoundsOptions bnd;
    {
        auto* sub = app.add_subcommand("bounds", "chi(t,c) case table");
        sub->add_option("--t", bnd.t, "intersection level");
        sub->add_option("--c", bnd.c, "strength");
        sub->add_option("--table", bnd.table, "emit CSV grid: TMAX CMAX")->expected(2);
        sub->add_flag("--json", bnd.json_out, "machine-readable report");
        sub->callback([&] { exit_code = run_bounds(bnd); });
    }

    // measure
    MeasureOptions msr;
    {
        auto* sub = app.add_subcommand("measure", "Monte Carlo containment estimate");
        sub->add_option("--input", msr.input, "instance file ('-' for stdin)");
        sub->add_option("--p", msr.p, "bias, 0 < p < 1")->required();
        sub->add_option("--samples", msr.samples, "sample count (default 1e5)");
        sub->add_option("--seed", msr.seed, "rng seed");
        sub->add_option("--t", msr.t, "check the p^t containment bound at this t");
        sub->add_flag("--json", msr.json_out, "machine-readable report");
        sub->callback([&] { exit_code = run_measure(msr); });
    }

    // repro
    std::string golden = "data/bounds_golden.csv";
    bool repro_json = false;
    {
        auto* sub = app.add_subcommand("repro", "run the full verification experiment suite");
        sub->add_option("--golden", golden, "golden bounds table path");
        sub->add_flag("--json", repro_json, "machine-readable report");
        sub->callback([&] { exit_code = run_repro(golden, repro_json); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return exit_code;
}
