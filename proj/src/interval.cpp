#include "semiflow/interval.hpp"

#include <algorithm>

namespace semiflow {

ClosedInterval ClosedInterval::parse(const std::string& text) {
    auto open = text.find('[');
    auto comma = text.find(',');
    auto close = text.rfind(']');
    if (open == std::string::npos || comma == std::string::npos || close == std::string::npos ||
        !(open < comma && comma < close))
        throw std::invalid_argument("malformed interval literal: '" + text + "'");
    return ClosedInterval(Rational::parse(text.substr(open + 1, comma - open - 1)),
                          Rational::parse(text.substr(comma + 1, close - comma - 1)));
}

AffineMap AffineMap::bijection(const ClosedInterval& from, const ClosedInterval& to) {
    if (from.degenerate()) throw std::invalid_argument("bijection from a degenerate interval");
    Rational slope = to.diameter() / from.diameter();
    return AffineMap(slope, to.lo - slope * from.lo);
}

ClosedInterval affine_image(const AffineMap& m, const ClosedInterval& j) {
    Rational a = m(j.lo), b = m(j.hi);
    if (m.slope.sign() > 0) return ClosedInterval(std::move(a), std::move(b));
    return ClosedInterval(std::move(b), std::move(a));
}

IntervalUnion::IntervalUnion(std::vector<ClosedInterval> parts) {
    std::sort(parts.begin(), parts.end(), [](const ClosedInterval& a, const ClosedInterval& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    for (auto& p : parts) {
        if (!parts_.empty() && p.lo <= parts_.back().hi) {
            if (p.hi > parts_.back().hi) parts_.back().hi = p.hi;
        } else {
            parts_.push_back(std::move(p));
        }
    }
}

bool IntervalUnion::contains(const Rational& x) const {
    for (const auto& p : parts_)
        if (p.contains(x)) return true;
    return false;
}

std::string IntervalUnion::str() const {
    if (parts_.empty()) return "{}";
    std::string out;
    for (const auto& p : parts_) {
        if (!out.empty()) out += " u ";
        out += p.str();
    }
    return out;
}

IntervalUnion union_normalize(std::vector<ClosedInterval> parts) {
    return IntervalUnion(std::move(parts));
}

Rational interval_diameter(const IntervalUnion& u) {
    if (u.empty()) throw std::domain_error("empty set has no diameter");
    return u.parts().back().hi - u.parts().front().lo;
}

bool interiors_intersect(const ClosedInterval& a, const ClosedInterval& b) {
    if (a.degenerate() || b.degenerate()) throw std::domain_error("interior is empty");
    Rational lo = std::max(a.lo, b.lo);
    Rational hi = std::min(a.hi, b.hi);
    return lo < hi;
}

}  // namespace semiflow
