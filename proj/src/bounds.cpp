#include "semistrong/bounds.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>

namespace semistrong {

using BigInt = boost::multiprecision::cpp_int;

std::int64_t Bound::value() const {
    if (!is_finite()) throw std::logic_error("bound has no finite value");
    return value_;
}

std::string to_string(BoundStatus s) {
    switch (s) {
        case BoundStatus::exact: return "exact";
        case BoundStatus::gap: return "gap";
        case BoundStatus::infinite: return "infinite";
        case BoundStatus::open: return "open";
    }
    return "?";
}

namespace {

// Exact evaluation keeps the minimal-ell boundary honest: the float form
// C(ell,c-1)*((c-1)/ell)^t underflows for large t.
bool palette_inequality(std::int64_t ell, std::int64_t t, int c) {
    BigInt binom = 1;
    for (int i = 1; i <= c - 1; ++i) {
        binom *= ell - (i - 1);
        binom /= i;  // exact: partial products are C(ell, i)
    }
    const BigInt lhs = binom * boost::multiprecision::pow(BigInt(c - 1),
                                                          static_cast<unsigned>(t));
    const BigInt rhs = boost::multiprecision::pow(BigInt(ell), static_cast<unsigned>(t));
    return lhs < rhs;
}

void require_t_ge_c(std::int64_t t, int c) {
    if (c < 2 || t < c) throw std::invalid_argument("requires t >= c >= 2");
    // ell^t limbs grow linearly in t; refuse sizes where exact arithmetic
    // stops being a desk-scale computation.
    if (t > 1'000'000) throw std::invalid_argument("t too large for exact evaluation");
}

}  // namespace

bool ell_admissible(std::int64_t ell, std::int64_t t, int c) {
    require_t_ge_c(t, c);
    if (ell <= static_cast<std::int64_t>(c - 1) * (t + 1)) return false;
    return palette_inequality(ell, t, c);
}

std::int64_t smallest_ell(std::int64_t t, int c) {
    require_t_ge_c(t, c);
    const std::int64_t start = static_cast<std::int64_t>(c - 1) * (t + 1) + 1;

    // Plain scan near the condition-1 boundary, where almost every queried
    // pair lands.
    constexpr std::int64_t kScanWindow = 4096;
    for (std::int64_t ell = start; ell < start + kScanWindow; ++ell)
        if (palette_inequality(ell, t, c)) return ell;

    // Beyond the window the satisfying set is an up-set, so exponential
    // plus binary search still returns the literal minimum.
    //
    // Lemma: for t >= c >= 2 and ell > (c-2)(t-1), r(ell) = ell^t / C(ell,c-1)
    // is strictly increasing. Ratio test: r(ell+1) > r(ell) iff
    // (ell+1)^(t-1) * (ell-c+2) > ell^t, and expanding
    // (ell+1)^(t-1) >= ell^(t-1) + (t-1)*ell^(t-2) gives a left side of at
    // least ell^t + ell^(t-2) * ((t-c+1)*ell - (t-1)(c-2)), positive in the
    // stated range. The whole search region ell > (c-1)(t+1) lies inside it,
    // so once C(ell,c-1)*(c-1)^t < ell^t holds it holds for every larger ell.
    std::int64_t lo = start + kScanWindow - 1;  // fails
    std::int64_t hi = start + kScanWindow;
    while (!palette_inequality(hi, t, c)) {
        lo = hi;
        if (hi > (std::int64_t{1} << 60)) throw std::overflow_error("smallest_ell diverged");
        hi = start + (hi - start) * 2;
    }
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (palette_inequality(mid, t, c)) hi = mid;
        else lo = mid;
    }
    return hi;
}

Bound lower_bound(std::int64_t t, int c) {
    if (t < 0 || c < 2) throw std::invalid_argument("requires t >= 0 and c >= 2");
    if (t <= c - 2) return Bound::infinite();
    if (t == c - 1) return Bound::finite(c == 2 ? 3 : 2 * c - 1);
    return Bound::finite(2 * (c - 1));  // t >= c; equals the exact value 2 at c = 2
}

namespace {

const char* kProvInfinite =
    "repeated cone reduction lands on 0-intersecting hypergraphs; no finite palette colors them all";
const char* kProvTriangleLower = "lower: the triangle K(3,2) admits no weak 2-coloring";
const char* kProvStarUpper =
    "upper: two colors on an inclusion-minimal edge plus a third color outside";
const char* kProvGadget1 =
    "lower: K(3c-3,2c-2) pigeonhole, the c-1 most common classes cover an edge";
const char* kProvOpenFinite = "upper: open, finiteness of chi(c-1,c) unresolved (Problem 1)";
const char* kProvWeakExact =
    "exact: blue/red greedy succeeds on 2-intersecting hypergraphs and one color never can";
const char* kProvGadget2 =
    "lower: K((6c-1)t,3ct) pigeonhole, the c-1 most common classes cover an edge";
const char* kProvRandomUpper =
    "upper: a random coloring with the smallest admissible ell succeeds with positive probability";

}  // namespace

BoundsReport bounds_report(std::int64_t t, int c) {
    if (t < 0 || c < 2) throw std::invalid_argument("requires t >= 0 and c >= 2");
    BoundsReport r;
    r.t = t;
    r.c = c;
    if (t <= c - 2) {
        r.lower = Bound::infinite();
        r.upper = Bound::infinite();
        r.status = BoundStatus::infinite;
        r.provenance = {kProvInfinite};
        return r;
    }
    if (t == c - 1) {
        if (c == 2) {
            r.lower = Bound::finite(3);
            r.upper = Bound::finite(3);
            r.status = BoundStatus::exact;
            r.provenance = {kProvTriangleLower, kProvStarUpper};
        } else {
            r.lower = Bound::finite(2 * c - 1);
            r.upper = Bound::unknown();
            r.status = BoundStatus::open;
            r.provenance = {kProvGadget1, kProvOpenFinite};
        }
        return r;
    }
    // t >= c
    if (c == 2) {
        r.lower = Bound::finite(2);
        r.upper = Bound::finite(2);
        r.status = BoundStatus::exact;
        r.provenance = {kProvWeakExact};
        return r;
    }
    r.lower = Bound::finite(2 * (c - 1));
    r.upper = Bound::finite(smallest_ell(t, c));
    r.status = BoundStatus::gap;
    r.provenance = {kProvGadget2, kProvRandomUpper};
    return r;
}

std::string render_bound(const Bound& b, bool is_upper) {
    if (b.is_infinite()) return "inf";
    if (b.is_unknown()) return is_upper ? "open (Problem 1)" : "unknown";
    return std::to_string(b.value());
}

std::string bounds_row_csv(const BoundsReport& r) {
    std::ostringstream out;
    out << r.t << ',' << r.c << ',' << render_bound(r.lower, false) << ','
        << render_bound(r.upper, true) << ',' << to_string(r.status) << ",\"";
    for (std::size_t i = 0; i < r.provenance.size(); ++i) {
        if (i > 0) out << "; ";
        out << r.provenance[i];  // tags carry commas, hence the quoted field
    }
    out << '"';
    return out.str();
}

std::string bounds_table_csv(std::int64_t t_max, int c_max) {
    if (t_max < 0 || c_max < 2) throw std::invalid_argument("requires t_max >= 0 and c_max >= 2");
    std::ostringstream out;
    out << "t,c,lower,upper,status,provenance\n";
    for (std::int64_t t = 0; t <= t_max; ++t)
        for (int c = 2; c <= c_max; ++c) out << bounds_row_csv(bounds_report(t, c)) << '\n';
    return out.str();
}

}  // namespace semistrong
