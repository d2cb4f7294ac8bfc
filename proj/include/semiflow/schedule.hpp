#pragma once

#include "semiflow/interval.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace semiflow {

enum class Space { X, Y };

inline std::string space_str(Space s) { return s == Space::X ? "X" : "Y"; }

/// The growth sequence L and its prefix sums behind the two block spaces.
/// The standard flavor is L_1 = 2 and L_n = 2^(sum of earlier L) * 2n; its
/// terms through n = 4 are materializable (the n = 4 prefix sum is an
/// integer of roughly 4.7e5 digits), n >= 5 is out of reach by design.
/// Custom flavors carry an explicit finite list of terms and exist for
/// structural testing.
class GrowthSchedule {
public:
    static GrowthSchedule paper();
    static GrowthSchedule custom(std::vector<BigInt> terms);

    bool is_paper() const { return paper_; }

    /// (L_n, prefix sum through n). Throws CapError past the feasibility cap.
    std::pair<BigInt, BigInt> growth_values(std::uint64_t n) const;

    /// Prefix sum through n (the block-base coordinate).
    const BigInt& prefix_sum(std::uint64_t n) const;

    /// Largest n for which growth_values is materializable.
    std::uint64_t max_term() const { return terms_.size() - 1; }

    /// Largest block whose descriptor is materializable (base needs the
    /// prefix sum of that index).
    std::uint32_t max_block() const { return static_cast<std::uint32_t>(terms_.size() - 1); }

    /// First global interval index of each block, while representable.
    /// Blocks 1.. have 2^(prefix sum of the previous index) + 1 intervals.
    const BigInt& block_start(std::uint32_t block) const;

    /// Default cap on global indices: everything through block 3 (or through
    /// the last materializable block when fewer exist).
    std::uint64_t default_index_cap() const { return default_cap_; }

private:
    GrowthSchedule(bool paper, std::vector<BigInt> terms);

    bool paper_;
    std::vector<BigInt> terms_;   // L_0, L_1, ...
    std::vector<BigInt> sums_;    // prefix sums
    std::vector<BigInt> starts_;  // block start indices, one past max_block
    std::uint64_t default_cap_;
};

/// Geometry of one block: `count` congruent pieces of length `piece_length`
/// whose left endpoints are `stride` apart, starting at `base`.
struct BlockDescriptor {
    Space space;
    std::uint32_t block;
    Rational base;
    BigInt count;
    Rational piece_length;
    Rational stride;
};

/// True for blocks whose pieces are the short (1/(b+1)) ones: odd blocks in
/// the first space, even blocks in the second.
bool slow_block(Space space, std::uint32_t block);

BlockDescriptor block_descriptor(const GrowthSchedule& s, Space space, std::uint32_t block);

/// One enumerated interval: global index, block, offset inside the block,
/// and its exact endpoints.
struct OrbitInterval {
    std::uint64_t global_index;
    Space space;
    std::uint32_t block;
    std::uint64_t offset;
    ClosedInterval interval;
};

/// Locates the n-th interval of the enumeration by block arithmetic, O(1)
/// bignum work per call. `max_index` overrides the schedule's default cap.
OrbitInterval block_locate(const GrowthSchedule& s, Space space, std::uint64_t n,
                           std::optional<std::uint64_t> max_index = {});

enum class WindowPhase { head, slow_first, fast_first };

std::string window_phase_str(WindowPhase w);

/// Window classification of a global index: the head is enumerated
/// directly; past it, index n sits in the k-th slow window (block 2k+1,
/// anchored at a_k) or the k-th fast window (block 2k+2, anchored at b_k).
/// Slow/fast is named from the first space's perspective; the second space
/// swaps the roles.
struct WindowLocation {
    WindowPhase phase;
    std::uint64_t k;       // 0 for the head
    std::uint64_t anchor;  // a_k or b_k; 0 for the head
};

WindowLocation window_of(const GrowthSchedule& s, std::uint64_t n,
                         std::optional<std::uint64_t> max_index = {});

struct ScheduleValidation {
    bool ok = true;
    std::string reason;
};

/// Structural soundness: positive terms, strictly increasing prefix sums,
/// at least two pieces per block, and pairwise-disjoint intervals in each
/// space, checked through `through_block` (clamped to what exists).
ScheduleValidation schedule_validate(const GrowthSchedule& s, std::uint32_t through_block = 4);

}  // namespace semiflow
