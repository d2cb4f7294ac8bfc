#pragma once

#include "semiflow/rational.hpp"

#include <span>
#include <vector>

namespace semiflow {

/// Closed interval [lo, hi] with exact rational endpoints. lo == hi is a
/// valid degenerate interval.
struct ClosedInterval {
    Rational lo;
    Rational hi;

    ClosedInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
    }

    Rational diameter() const { return hi - lo; }
    bool degenerate() const { return lo == hi; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const ClosedInterval& o) const { return lo <= o.lo && o.hi <= hi; }

    friend bool operator==(const ClosedInterval& a, const ClosedInterval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }

    /// Text form "[p/q, r/s]".
    std::string str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }

    /// Parses the "[p/q, r/s]" text form.
    static ClosedInterval parse(const std::string& text);
};

/// x -> slope*x + offset with slope != 0.
struct AffineMap {
    Rational slope;
    Rational offset;

    AffineMap(Rational s, Rational o) : slope(std::move(s)), offset(std::move(o)) {
        if (slope == Rational(0)) throw std::invalid_argument("affine map with zero slope");
    }

    /// The unique increasing affine bijection from one non-degenerate
    /// interval onto another.
    static AffineMap bijection(const ClosedInterval& from, const ClosedInterval& to);

    Rational operator()(const Rational& x) const { return slope * x + offset; }
};

/// Exact image {m(x) : x in j}; endpoints swap when the slope is negative.
ClosedInterval affine_image(const AffineMap& m, const ClosedInterval& j);

/// Finite union of closed intervals, kept normalized: parts sorted by lo,
/// pairwise disjoint, and never touching (touching parts are merged).
class IntervalUnion {
public:
    IntervalUnion() = default;
    explicit IntervalUnion(std::vector<ClosedInterval> parts);

    std::span<const ClosedInterval> parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    bool contains(const Rational& x) const;

    friend bool operator==(const IntervalUnion& a, const IntervalUnion& b) {
        return a.parts_ == b.parts_;
    }

    std::string str() const;

private:
    std::vector<ClosedInterval> parts_;
};

/// Sorted, merged, pairwise-disjoint representation. Idempotent and
/// insensitive to input order.
IntervalUnion union_normalize(std::vector<ClosedInterval> parts);

/// max(hi) - min(lo) over all parts; error on the empty union.
Rational interval_diameter(const IntervalUnion& u);

/// True iff the open interiors overlap on a set of positive length.
/// Both inputs must be non-degenerate.
bool interiors_intersect(const ClosedInterval& a, const ClosedInterval& b);

}  // namespace semiflow
