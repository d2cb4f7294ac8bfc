#include "semiflow/plmaps.hpp"

#include <algorithm>

namespace semiflow {

PLMap::PLMap(std::vector<Rational> breakpoints, std::vector<AffineMap> pieces)
    : breakpoints_(std::move(breakpoints)),
      pieces_(std::move(pieces)),
      domain_(breakpoints_.front(), breakpoints_.back()) {
    if (breakpoints_.size() < 2 || pieces_.size() + 1 != breakpoints_.size())
        throw std::invalid_argument("piecewise map needs one piece per subinterval");
    for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
        if (!(breakpoints_[i] < breakpoints_[i + 1]))
            throw std::invalid_argument("breakpoints not strictly increasing");
    for (std::size_t i = 0; i + 1 < pieces_.size(); ++i)
        if (pieces_[i](breakpoints_[i + 1]) != pieces_[i + 1](breakpoints_[i + 1]))
            throw std::invalid_argument("pieces disagree at a shared breakpoint");
}

Rational PLMap::operator()(const Rational& x) const {
    if (!domain_.contains(x)) throw std::domain_error("point outside the map domain");
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    std::size_t seg = static_cast<std::size_t>(it - breakpoints_.begin());
    seg = seg == 0 ? 0 : std::min(seg - 1, pieces_.size() - 1);
    return pieces_[seg](x);
}

ClosedInterval PLMap::image(const ClosedInterval& j) const {
    if (!domain_.contains(j)) throw std::domain_error("interval outside the map domain");
    // affine between breakpoints, so extrema sit at endpoints or at
    // interior breakpoints
    Rational lo = (*this)(j.lo), hi = lo;
    auto consider = [&](const Rational& v) {
        if (v < lo) lo = v;
        if (v > hi) hi = v;
    };
    consider((*this)(j.hi));
    for (const auto& bp : breakpoints_)
        if (j.lo < bp && bp < j.hi) consider((*this)(bp));
    return ClosedInterval(std::move(lo), std::move(hi));
}

IntervalUnion PLMap::image(const IntervalUnion& u) const {
    std::vector<ClosedInterval> parts;
    parts.reserve(u.parts().size());
    for (const auto& p : u.parts()) parts.push_back(image(p));
    return union_normalize(std::move(parts));
}

const PLMap& tent_map() {
    static const PLMap tent({Rational(0), Rational(1, 2), Rational(1)},
                            {AffineMap(Rational(2), Rational(0)),
                             AffineMap(Rational(-2), Rational(2))});
    return tent;
}

IntervalUnion tent_image(const IntervalUnion& u) {
    for (const auto& p : u.parts())
        if (!tent_map().domain().contains(p))
            throw std::domain_error("input outside the tent domain [0,1]");
    return tent_map().image(u);
}

ClosedInterval tent_iterate(const ClosedInterval& j, std::uint64_t n) {
    if (!tent_map().domain().contains(j))
        throw std::domain_error("input outside the tent domain [0,1]");
    ClosedInterval cur = j;
    for (std::uint64_t i = 0; i < n; ++i) cur = tent_map().image(cur);
    return cur;
}

Rational tent_point_iterate(const Rational& x, std::uint64_t n) {
    Rational cur = x;
    for (std::uint64_t i = 0; i < n; ++i) cur = tent_map()(cur);
    return cur;
}

ClosedInterval step_image(const GrowthSchedule& s, Space space, std::uint64_t n,
                          const ClosedInterval& sub, std::optional<std::uint64_t> max_index) {
    OrbitInterval from = block_locate(s, space, n, max_index);
    if (!from.interval.contains(sub)) throw std::domain_error("point outside dynamical core");
    OrbitInterval to = block_locate(s, space, n + 1, max_index);
    return affine_image(AffineMap::bijection(from.interval, to.interval), sub);
}

// ---------------------------------------------------------------------------
// OrbitCursor

void OrbitCursor::load_block(std::uint32_t block) {
    block_ = block;
    BlockDescriptor d = block_descriptor(*schedule_, space_, block);
    base_ = d.base;
    stride_ = d.stride;
    piece_length_ = d.piece_length;
    if (d.count.fits_ulong_p()) {
        block_count_ = to_uint64(d.count);
        block_unbounded_ = false;
    } else {
        block_count_ = 0;
        block_unbounded_ = true;
    }
}

OrbitCursor::OrbitCursor(const GrowthSchedule& s, Space space, const ClosedInterval& seed,
                         std::optional<std::uint64_t> max_index)
    : schedule_(&s), space_(space), cap_(max_index.value_or(s.default_index_cap())) {
    ClosedInterval base(Rational(1, 2), Rational(3, 2));
    if (!base.contains(seed)) throw std::domain_error("point outside dynamical core");
    load_block(0);
    offset_ = 0;
    lo_off_ = seed.lo - base_;
    hi_off_ = seed.hi - base_;
}

OrbitCursor::OrbitCursor(const GrowthSchedule& s, Space space, std::uint64_t n,
                         const ClosedInterval& sub, std::optional<std::uint64_t> max_index)
    : schedule_(&s), space_(space), cap_(max_index.value_or(s.default_index_cap())) {
    OrbitInterval at = block_locate(s, space, n, cap_);
    if (!at.interval.contains(sub)) throw std::domain_error("point outside dynamical core");
    n_ = n;
    load_block(at.block);
    offset_ = at.offset;
    lo_off_ = sub.lo - base_;
    hi_off_ = sub.hi - base_;
}

void OrbitCursor::step() {
    if (n_ + 1 > cap_) throw CapError("schedule index exceeds feasibility cap");
    if (block_unbounded_ || offset_ + 1 < block_count_) {
        lo_off_ += stride_;
        hi_off_ += stride_;
        ++offset_;
        ++n_;
        return;
    }
    // crossing into the next block: rescale relative to the final piece
    Rational piece_lo = stride_ * Rational::from_uint(offset_);
    Rational old_piece_length = piece_length_;
    load_block(block_ + 1);
    Rational ratio = piece_length_ / old_piece_length;
    lo_off_ = (lo_off_ - piece_lo) * ratio;
    hi_off_ = (hi_off_ - piece_lo) * ratio;
    offset_ = 0;
    ++n_;
}

ClosedInterval OrbitCursor::interval() const {
    return ClosedInterval(base_ + lo_off_, base_ + hi_off_);
}

ClosedInterval iterate_base_interval(const GrowthSchedule& s, Space space,
                                     const ClosedInterval& sub, std::uint64_t n,
                                     std::optional<std::uint64_t> max_index) {
    OrbitCursor cursor(s, space, sub, max_index);
    for (std::uint64_t i = 0; i < n; ++i) cursor.step();
    return cursor.interval();
}

// ---------------------------------------------------------------------------
// Closed form

namespace {

const ClosedInterval& head_interval(Space space, std::uint64_t n) {
    auto ci = [](long a, long b, long c, long d) { return ClosedInterval(Rational(a, b), Rational(c, d)); };
    static const std::vector<ClosedInterval> head_x{
        ci(1, 2, 3, 2), ci(2, 1, 5, 2),  ci(3, 1, 7, 2),  ci(18, 1, 20, 1),
        ci(21, 1, 23, 1), ci(24, 1, 26, 1), ci(27, 1, 29, 1), ci(30, 1, 32, 1)};
    static const std::vector<ClosedInterval> head_y{
        ci(1, 2, 3, 2), ci(2, 1, 3, 1),  ci(4, 1, 5, 1),  ci(18, 1, 55, 3),
        ci(19, 1, 58, 3), ci(20, 1, 61, 3), ci(21, 1, 64, 3), ci(22, 1, 67, 3)};
    return (space == Space::X ? head_x : head_y)[n];
}

}  // namespace

ClosedInterval orbit_interval_closed_form(const GrowthSchedule& s, Space space, std::uint64_t n,
                                          std::optional<std::uint64_t> max_index) {
    if (!s.is_paper()) throw std::domain_error("closed form valid only for paper schedule");
    std::uint64_t cap = max_index.value_or(s.default_index_cap());
    if (n > cap) throw CapError("schedule index exceeds feasibility cap");
    if (n <= 7) return head_interval(space, n);

    BigInt big_n = big_from_uint(n);
    BigInt acc = 0;  // 2^S_1 + ... + 2^S_{2k-1}, accumulated
    for (std::uint64_t k = 1;; ++k) {
        const BigInt& s_odd_prev = s.prefix_sum(2 * k - 1);
        if (!s_odd_prev.fits_ulong_p()) throw CapError("index beyond materializable blocks");
        acc += BigInt(1) << s_odd_prev.get_ui();
        BigInt a_k = acc + (2 * k + 2);

        const BigInt& s_even = s.prefix_sum(2 * k);
        if (!s_even.fits_ulong_p()) throw CapError("index beyond materializable blocks");
        BigInt slow_end = a_k + (BigInt(1) << s_even.get_ui());
        if (big_n <= slow_end) {
            Rational off = Rational::from_uint(n - to_uint64(a_k));
            Rational base{s.prefix_sum(2 * k + 1)};
            long kk = static_cast<long>(k);
            if (space == Space::X) {
                Rational lo = base + off;
                return ClosedInterval(lo, lo + Rational(1, 2 * kk + 2));
            }
            Rational lo = base + Rational(2 * kk + 2) * off;
            return ClosedInterval(lo, lo + Rational(2 * kk + 1));
        }

        BigInt b_k = slow_end + 1;
        const BigInt& s_odd = s.prefix_sum(2 * k + 1);
        if (!(s_odd.fits_ulong_p() && s_odd.get_ui() <= 8'000'000))
            throw CapError("index beyond materializable blocks");
        BigInt fast_end = b_k + (BigInt(1) << s_odd.get_ui());
        if (big_n <= fast_end) {
            Rational off = Rational::from_uint(n - to_uint64(b_k));
            Rational base{s.prefix_sum(2 * k + 2)};
            long kk = static_cast<long>(k);
            if (space == Space::X) {
                Rational lo = base + Rational(2 * kk + 3) * off;
                return ClosedInterval(lo, lo + Rational(2 * kk + 2));
            }
            Rational lo = base + off;
            return ClosedInterval(lo, lo + Rational(1, 2 * kk + 3));
        }
        acc += BigInt(1) << s_even.get_ui();
    }
}

// ---------------------------------------------------------------------------
// Product space

Rational ZSet::axis_diameter() const {
    Rational best(0);
    if (!x_part.empty()) best = std::max(best, interval_diameter(x_part));
    if (!y_part.empty()) best = std::max(best, interval_diameter(y_part));
    return best;
}

ZSet z_step(const GrowthSchedule& s, const ZSet& zs, std::uint64_t n_x, std::uint64_t n_y,
            std::optional<std::uint64_t> max_index) {
    std::vector<ClosedInterval> xs, ys;
    for (const auto& p : zs.x_part.parts()) xs.push_back(step_image(s, Space::X, n_x, p, max_index));
    for (const auto& p : zs.y_part.parts()) ys.push_back(step_image(s, Space::Y, n_y, p, max_index));
    return ZSet(union_normalize(std::move(xs)), union_normalize(std::move(ys)));
}

}  // namespace semiflow
