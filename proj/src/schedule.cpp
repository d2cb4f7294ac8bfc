#include "semiflow/schedule.hpp"

#include <algorithm>
#include <limits>

namespace semiflow {

namespace {

// Hard ceiling on 2^e materialization: e up to 8e6 bits (~1 MB integers).
// The standard schedule needs e = 1572882 for the block-4 geometry.
constexpr unsigned long kMaxPow2Exponent = 8'000'000;

BigInt pow2(unsigned long e) {
    BigInt r = 1;
    r <<= e;
    return r;
}

bool pow2_feasible(const BigInt& e) {
    return e >= 0 && e.fits_ulong_p() && e.get_ui() <= kMaxPow2Exponent;
}

std::uint64_t clamped_u64(const BigInt& n) {
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 64)
        return std::numeric_limits<std::uint64_t>::max();
    return to_uint64(n);
}

}  // namespace

GrowthSchedule::GrowthSchedule(bool paper, std::vector<BigInt> terms)
    : paper_(paper), terms_(std::move(terms)) {
    if (terms_.empty() || terms_[0] != 0)
        throw std::invalid_argument("growth schedule starts with a zero term");
    sums_.reserve(terms_.size());
    BigInt acc = 0;
    for (const auto& t : terms_) {
        acc += t;
        sums_.push_back(acc);
    }

    starts_.push_back(BigInt(0));
    for (std::uint32_t b = 0; b <= max_block(); ++b) {
        BigInt count;
        if (b == 0) {
            count = 1;
        } else {
            if (!pow2_feasible(sums_[b - 1])) break;
            count = pow2(sums_[b - 1].get_ui()) + 1;
        }
        starts_.push_back(starts_.back() + count);
    }

    std::uint32_t through = std::min<std::uint32_t>(3, static_cast<std::uint32_t>(starts_.size()) - 2);
    default_cap_ = clamped_u64(starts_[through + 1]) - 1;
}

GrowthSchedule GrowthSchedule::paper() {
    std::vector<BigInt> terms{BigInt(0), BigInt(2)};
    BigInt sum = 2;
    for (std::uint64_t n = 2; n <= 4; ++n) {
        // L_n = 2^(L_1 + ... + L_{n-1}) * 2n
        BigInt ln = pow2(sum.get_ui()) * (2 * n);
        terms.push_back(ln);
        sum += ln;
    }
    return GrowthSchedule(true, std::move(terms));
}

GrowthSchedule GrowthSchedule::custom(std::vector<BigInt> terms) {
    return GrowthSchedule(false, std::move(terms));
}

std::pair<BigInt, BigInt> GrowthSchedule::growth_values(std::uint64_t n) const {
    if (n >= terms_.size()) throw CapError("schedule index exceeds feasibility cap");
    return {terms_[n], sums_[n]};
}

const BigInt& GrowthSchedule::prefix_sum(std::uint64_t n) const {
    if (n >= sums_.size()) throw CapError("schedule index exceeds feasibility cap");
    return sums_[n];
}

const BigInt& GrowthSchedule::block_start(std::uint32_t block) const {
    if (block >= starts_.size()) throw CapError("index beyond materializable blocks");
    return starts_[block];
}

bool slow_block(Space space, std::uint32_t block) {
    if (block == 0) throw std::invalid_argument("block 0 is the shared base interval");
    return space == Space::X ? block % 2 == 1 : block % 2 == 0;
}

BlockDescriptor block_descriptor(const GrowthSchedule& s, Space space, std::uint32_t block) {
    if (block == 0)
        return {space, 0, Rational(1, 2), BigInt(1), Rational(1), Rational(0)};
    if (block > s.max_block()) throw CapError("index beyond materializable blocks");
    const BigInt& prev_sum = s.prefix_sum(block - 1);
    if (!(prev_sum >= 0 && prev_sum.fits_ulong_p() && prev_sum.get_ui() <= kMaxPow2Exponent))
        throw CapError("index beyond materializable blocks");
    BigInt count = pow2(prev_sum.get_ui()) + 1;
    Rational base{s.prefix_sum(block)};
    if (slow_block(space, block))
        return {space, block, base, count, Rational(1, static_cast<long>(block) + 1), Rational(1)};
    return {space, block, base, count, Rational(static_cast<long>(block)),
            Rational(static_cast<long>(block) + 1)};
}

namespace {

struct Located {
    std::uint32_t block;
    std::uint64_t offset;
};

Located locate_index(const GrowthSchedule& s, std::uint64_t n,
                     std::optional<std::uint64_t> max_index) {
    std::uint64_t cap = max_index.value_or(s.default_index_cap());
    if (n > cap) throw CapError("schedule index exceeds feasibility cap");
    BigInt big_n = big_from_uint(n);
    std::uint32_t b = 0;
    while (s.block_start(b + 1) <= big_n) ++b;  // throws past materializable blocks
    return {b, n - to_uint64(s.block_start(b))};
}

}  // namespace

OrbitInterval block_locate(const GrowthSchedule& s, Space space, std::uint64_t n,
                           std::optional<std::uint64_t> max_index) {
    Located at = locate_index(s, n, max_index);
    if (at.block == 0)
        return {n, space, 0, 0, ClosedInterval(Rational(1, 2), Rational(3, 2))};
    BlockDescriptor d = block_descriptor(s, space, at.block);
    Rational lo = d.base + d.stride * Rational::from_uint(at.offset);
    Rational hi = lo + d.piece_length;
    return {n, space, at.block, at.offset, ClosedInterval(lo, hi)};
}

std::string window_phase_str(WindowPhase w) {
    switch (w) {
        case WindowPhase::head: return "enumerated-head";
        case WindowPhase::slow_first: return "X-slow";
        case WindowPhase::fast_first: return "X-fast";
    }
    return "?";
}

WindowLocation window_of(const GrowthSchedule& s, std::uint64_t n,
                         std::optional<std::uint64_t> max_index) {
    Located at = locate_index(s, n, max_index);
    if (at.block <= 2) return {WindowPhase::head, 0, 0};
    std::uint64_t anchor = to_uint64(s.block_start(at.block));
    if (at.block % 2 == 1) return {WindowPhase::slow_first, (at.block - 1) / 2, anchor};
    return {WindowPhase::fast_first, (at.block - 2) / 2, anchor};
}

ScheduleValidation schedule_validate(const GrowthSchedule& s, std::uint32_t through_block) {
    std::uint32_t tb = std::min(through_block, s.max_block());
    for (std::uint64_t n = 1; n <= tb; ++n) {
        auto [ln, sum] = s.growth_values(n);
        if (ln < 1)
            return {false, "growth term " + std::to_string(n) + " is not strictly positive"};
        if (sum <= s.prefix_sum(n - 1))
            return {false, "prefix sums not strictly increasing at " + std::to_string(n)};
    }
    for (Space space : {Space::X, Space::Y}) {
        Rational prev_end(0);
        for (std::uint32_t b = 0; b <= tb; ++b) {
            BlockDescriptor d = block_descriptor(s, space, b);
            if (b >= 1 && d.count < 2)
                return {false, "block " + std::to_string(b) + " has fewer than two pieces"};
            if (b >= 1 && !(d.stride > d.piece_length))
                return {false, "pieces of block " + std::to_string(b) + " overlap in space " +
                                   space_str(space)};
            if (b >= 1 && !(d.base > prev_end))
                return {false, "blocks " + std::to_string(b - 1) + " and " + std::to_string(b) +
                                   " overlap in space " + space_str(space)};
            prev_end = d.base + d.stride * Rational(BigInt(d.count - 1)) + d.piece_length;
        }
    }
    return {true, ""};
}

}  // namespace semiflow
