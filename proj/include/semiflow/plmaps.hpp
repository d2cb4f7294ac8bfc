#pragma once

#include "semiflow/schedule.hpp"

namespace semiflow {

/// Continuous piecewise-linear self-description of a single closed
/// interval: strictly increasing breakpoints and one affine piece per
/// subinterval, agreeing at the shared breakpoints.
class PLMap {
public:
    PLMap(std::vector<Rational> breakpoints, std::vector<AffineMap> pieces);

    const ClosedInterval& domain() const { return domain_; }

    Rational operator()(const Rational& x) const;
    IntervalUnion image(const IntervalUnion& u) const;
    ClosedInterval image(const ClosedInterval& j) const;

private:
    std::vector<Rational> breakpoints_;
    std::vector<AffineMap> pieces_;
    ClosedInterval domain_;
};

/// The tent map x -> 1 - |1 - 2x| on [0, 1].
const PLMap& tent_map();

/// Exact tent-map image; parts crossing 1/2 are split and the pieces
/// merged back. Input must lie inside [0, 1].
IntervalUnion tent_image(const IntervalUnion& u);

/// n-fold tent image of a single interval (stays a single interval).
ClosedInterval tent_iterate(const ClosedInterval& j, std::uint64_t n);

/// Pointwise tent orbit value.
Rational tent_point_iterate(const Rational& x, std::uint64_t n);

/// Image of sub (contained in interval n of the enumeration) under the
/// unique increasing affine bijection onto interval n+1.
ClosedInterval step_image(const GrowthSchedule& s, Space space, std::uint64_t n,
                          const ClosedInterval& sub, std::optional<std::uint64_t> max_index = {});

/// Step-by-step orbit of a subinterval of the shared base interval.
/// Internally the interval is tracked as an exact offset pair relative to
/// the current block base so that stepping inside huge-base blocks stays
/// cheap; endpoints materialize only on request.
class OrbitCursor {
public:
    OrbitCursor(const GrowthSchedule& s, Space space, const ClosedInterval& seed,
                std::optional<std::uint64_t> max_index = {});

    /// Re-seats the cursor at index n carrying `sub` (must lie inside
    /// interval n); used to seed parallel chunks.
    OrbitCursor(const GrowthSchedule& s, Space space, std::uint64_t n, const ClosedInterval& sub,
                std::optional<std::uint64_t> max_index = {});

    std::uint64_t index() const { return n_; }
    void step();
    Rational diameter() const { return hi_off_ - lo_off_; }
    ClosedInterval interval() const;

private:
    void load_block(std::uint32_t block);

    const GrowthSchedule* schedule_;
    Space space_;
    std::uint64_t cap_;
    std::uint64_t n_ = 0;
    std::uint32_t block_ = 0;
    std::uint64_t offset_ = 0;        // piece index inside the block
    std::uint64_t block_count_ = 0;   // pieces in this block, clamped to uint64
    bool block_unbounded_ = false;    // count exceeds uint64 (deep fast blocks)
    Rational base_;                   // block base coordinate
    Rational stride_;
    Rational piece_length_;
    Rational next_ratio_;             // piece length of block+1 over this one
    Rational lo_off_, hi_off_;        // seed image relative to base_
};

/// n-fold composition of step images starting from the base interval.
ClosedInterval iterate_base_interval(const GrowthSchedule& s, Space space,
                                     const ClosedInterval& sub, std::uint64_t n,
                                     std::optional<std::uint64_t> max_index = {});

/// Interval n via the window formulas (slow window: unit stride and piece
/// 1/(2k+2) from the odd block base; fast window: stride 2k+3 and piece
/// 2k+2; second space swaps the roles), with the first eight intervals
/// enumerated directly. Standard schedule only; must agree with
/// block_locate everywhere.
ClosedInterval orbit_interval_closed_form(const GrowthSchedule& s, Space space, std::uint64_t n,
                                          std::optional<std::uint64_t> max_index = {});

/// Subset of the two-axis product space: one interval union per axis.
struct ZSet {
    IntervalUnion x_part;
    IntervalUnion y_part;

    ZSet(IntervalUnion x, IntervalUnion y) : x_part(std::move(x)), y_part(std::move(y)) {
        if (x_part.empty() && y_part.empty())
            throw std::invalid_argument("empty product-space subset");
    }

    /// Largest single-axis diameter; exact lower bound for the product
    /// metric diameter, and exact when one part is empty.
    Rational axis_diameter() const;
};

/// One combined step: the first-axis part advances under the first map,
/// the second-axis part under the second; parts never mix. n_from gives
/// the enumeration index each part currently occupies.
ZSet z_step(const GrowthSchedule& s, const ZSet& zs, std::uint64_t n_x, std::uint64_t n_y,
            std::optional<std::uint64_t> max_index = {});

}  // namespace semiflow
