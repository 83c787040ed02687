#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace semistrong {

// A lower or upper bound on chi(t,c): a finite value, provably infinite,
// or unknown (open problem).
class Bound {
public:
    static Bound finite(std::int64_t v) { return Bound(Kind::finite, v); }
    static Bound infinite() { return Bound(Kind::infinite, 0); }
    static Bound unknown() { return Bound(Kind::unknown, 0); }

    bool is_finite() const { return kind_ == Kind::finite; }
    bool is_infinite() const { return kind_ == Kind::infinite; }
    bool is_unknown() const { return kind_ == Kind::unknown; }

    std::int64_t value() const;  // requires is_finite()

    bool operator==(const Bound&) const = default;

private:
    enum class Kind { finite, infinite, unknown };
    Bound(Kind k, std::int64_t v) : kind_(k), value_(v) {}
    Kind kind_;
    std::int64_t value_;
};

enum class BoundStatus { exact, gap, infinite, open };

std::string to_string(BoundStatus s);

// Best known bounds on chi(t,c), the number of colors sufficient to
// c-strong color every t-intersecting hypergraph.
struct BoundsReport {
    std::int64_t t = 0;
    int c = 2;
    Bound lower = Bound::unknown();
    Bound upper = Bound::unknown();
    BoundStatus status = BoundStatus::open;
    std::vector<std::string> provenance;  // one tag per bound / classification
};

// The palette-size admissibility test behind the probabilistic upper bound:
// true iff ell > (c-1)(t+1) and C(ell,c-1) * (c-1)^t < ell^t. Whenever both
// hold, a uniformly random ell-coloring of any t-intersecting hypergraph is
// c-strong with positive probability, so chi(t,c) <= ell. The product
// comparison is done in exact integer arithmetic; no floating point touches
// the decision. Requires t >= c >= 2.
bool ell_admissible(std::int64_t ell, std::int64_t t, int c);

// Minimal admissible ell for (t,c). Requires t >= c >= 2.
std::int64_t smallest_ell(std::int64_t t, int c);

// Best known lower bound on chi(t,c): infinite for t <= c-2; 3 when
// (t,c) = (1,2); 2c-1 when t = c-1; 2(c-1) for t >= c. Requires t >= 0,
// c >= 2.
Bound lower_bound(std::int64_t t, int c);

// Full classification of (t,c): exact value, finite gap, infinite, or open.
BoundsReport bounds_report(std::int64_t t, int c);

// Rendering helpers shared by the CLI and the golden-table check. An
// unknown upper bound renders as "open (Problem 1)"; see README for the
// open-problem index.
std::string render_bound(const Bound& b, bool is_upper);
std::string bounds_row_csv(const BoundsReport& r);
std::string bounds_table_csv(std::int64_t t_max, int c_max);

}  // namespace semistrong
