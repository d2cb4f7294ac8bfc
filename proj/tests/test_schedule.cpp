#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semiflow/schedule.hpp"

using namespace semiflow;

namespace {

const GrowthSchedule& paper() {
    static const GrowthSchedule s = GrowthSchedule::paper();
    return s;
}

// a small custom schedule whose first five blocks stay disjoint:
// each term exceeds the span of the previous block in both spaces
GrowthSchedule small_custom() {
    return GrowthSchedule::custom({BigInt(0), BigInt(2), BigInt(4), BigInt(16), BigInt(260)});
}

}  // namespace

TEST_CASE("growth values of the standard schedule") {
    auto [l0, s0] = paper().growth_values(0);
    CHECK(l0 == 0);
    CHECK(s0 == 0);
    auto [l1, s1] = paper().growth_values(1);
    CHECK(l1 == 2);
    CHECK(s1 == 2);
    auto [l2, s2] = paper().growth_values(2);
    CHECK(l2 == 16);
    CHECK(s2 == 18);
    auto [l3, s3] = paper().growth_values(3);
    CHECK(l3 == 1572864);
    CHECK(s3 == 1572882);
    CHECK_THROWS_AS(paper().growth_values(5), CapError);
}

TEST_CASE("the fourth term is representable on demand") {
    auto [l4, s4] = paper().growth_values(4);
    // L_4 = 2^1572882 * 8 = 2^1572885
    CHECK(mpz_sizeinbase(l4.get_mpz_t(), 2) == 1572886);
    CHECK(l4 == BigInt(1) << 1572885);
    CHECK(s4 == (BigInt(1) << 1572885) + 1572882);
    CHECK(mpz_sizeinbase(s4.get_mpz_t(), 10) >= 473400);  // a ~473k-digit integer
}

TEST_CASE("prefix sums satisfy the recurrence") {
    for (std::uint64_t n = 1; n <= 4; ++n) {
        auto [ln, sn] = paper().growth_values(n);
        CHECK(sn - paper().prefix_sum(n - 1) == ln);
    }
}

TEST_CASE("block descriptors") {
    auto b0 = block_descriptor(paper(), Space::X, 0);
    CHECK(b0.base == Rational(1, 2));
    CHECK(b0.count == 1);

    auto x1 = block_descriptor(paper(), Space::X, 1);
    CHECK(x1.base == Rational(2));
    CHECK(x1.count == 2);  // 2^0 + 1
    CHECK(x1.piece_length == Rational(1, 2));
    CHECK(x1.stride == Rational(1));

    auto x2 = block_descriptor(paper(), Space::X, 2);
    CHECK(x2.base == Rational(18));
    CHECK(x2.count == 5);  // 2^2 + 1
    CHECK(x2.piece_length == Rational(2));
    CHECK(x2.stride == Rational(3));

    auto x3 = block_descriptor(paper(), Space::X, 3);
    CHECK(x3.count == 262145);  // 2^18 + 1
    CHECK(x3.piece_length == Rational(1, 4));

    auto y1 = block_descriptor(paper(), Space::Y, 1);
    CHECK(y1.piece_length == Rational(1));
    CHECK(y1.stride == Rational(2));

    auto y2 = block_descriptor(paper(), Space::Y, 2);
    CHECK(y2.piece_length == Rational(1, 3));
    CHECK(y2.stride == Rational(1));

    auto y3 = block_descriptor(paper(), Space::Y, 3);
    CHECK(y3.piece_length == Rational(3));
    CHECK(y3.stride == Rational(4));

    // block 4 geometry is constructible even though its pieces are mostly
    // beyond the index cap
    auto x4 = block_descriptor(paper(), Space::X, 4);
    CHECK(x4.piece_length == Rational(4));
    CHECK(x4.stride == Rational(5));
    CHECK(x4.count == (BigInt(1) << 1572882) + 1);
    CHECK_THROWS_AS(block_descriptor(paper(), Space::X, 5), CapError);
}

TEST_CASE("block starts") {
    CHECK(paper().block_start(0) == 0);
    CHECK(paper().block_start(1) == 1);
    CHECK(paper().block_start(2) == 3);
    CHECK(paper().block_start(3) == 8);
    CHECK(paper().block_start(4) == 262153);
    CHECK(paper().default_index_cap() == 262152);
}

TEST_CASE("locating enumerated intervals") {
    auto i0 = block_locate(paper(), Space::X, 0);
    CHECK(i0.block == 0);
    CHECK(i0.interval == ClosedInterval(Rational(1, 2), Rational(3, 2)));

    auto i8 = block_locate(paper(), Space::X, 8);
    CHECK(i8.block == 3);
    CHECK(i8.offset == 0);
    CHECK(i8.interval ==
          ClosedInterval(Rational(1572882), Rational(1572882) + Rational(1, 4)));

    auto j2 = block_locate(paper(), Space::Y, 2);
    CHECK(j2.block == 1);
    CHECK(j2.offset == 1);
    CHECK(j2.interval == ClosedInterval(Rational(4), Rational(5)));

    // the last index under the default cap
    auto last = block_locate(paper(), Space::X, 262152);
    CHECK(last.block == 3);
    CHECK(last.offset == 262144);
    CHECK(last.interval.lo == Rational(1572882 + 262144));

    CHECK_THROWS_AS(block_locate(paper(), Space::X, 262153), CapError);

    // raising the cap exposes the first pieces of block 4
    auto deep = block_locate(paper(), Space::X, 262153, 300000);
    CHECK(deep.block == 4);
    CHECK(deep.offset == 0);
    CHECK(deep.interval.diameter() == Rational(4));
    CHECK(Rational(deep.interval.lo) == Rational(paper().prefix_sum(4)));

    auto deep_y = block_locate(paper(), Space::Y, 262153, 300000);
    CHECK(deep_y.interval.diameter() == Rational(1, 5));
}

TEST_CASE("consecutive enumerated intervals are disjoint with gaps") {
    for (Space sp : {Space::X, Space::Y}) {
        ClosedInterval prev = block_locate(paper(), sp, 0).interval;
        for (std::uint64_t n = 1; n <= 400; ++n) {
            ClosedInterval cur = block_locate(paper(), sp, n).interval;
            CHECK(prev.hi < cur.lo);
            prev = cur;
        }
    }
}

TEST_CASE("window classification") {
    auto w5 = window_of(paper(), 5);
    CHECK(w5.phase == WindowPhase::head);

    auto w8 = window_of(paper(), 8);
    CHECK(w8.phase == WindowPhase::slow_first);
    CHECK(w8.k == 1);
    CHECK(w8.anchor == 8);

    auto wmid = window_of(paper(), 100000);
    CHECK(wmid.phase == WindowPhase::slow_first);
    CHECK(wmid.anchor == 8);

    auto wfast = window_of(paper(), 262153, 300000);
    CHECK(wfast.phase == WindowPhase::fast_first);
    CHECK(wfast.k == 1);
    CHECK(wfast.anchor == 262153);

    CHECK(window_phase_str(w5.phase) == "enumerated-head");
    CHECK(window_phase_str(w8.phase) == "X-slow");
    CHECK(window_phase_str(wfast.phase) == "X-fast");
}

TEST_CASE("window anchors match the displayed index sums") {
    // a_1 = 2^2 + 4, b_1 = 2^2 + 2^18 + 5
    CHECK(window_of(paper(), 8).anchor == (1ull << 2) + 4);
    CHECK(window_of(paper(), 262153, 300000).anchor == (1ull << 2) + (1ull << 18) + 5);
}

TEST_CASE("count law for the first slow window") {
    // block 3 holds 2^18 + 1 pieces, indices 8 .. 262152
    auto d = block_descriptor(paper(), Space::X, 3);
    CHECK(d.count == 262145);
    CHECK(paper().block_start(3) + d.count - 1 == 262152);
}

TEST_CASE("schedule validation") {
    CHECK(schedule_validate(paper()).ok);
    CHECK(schedule_validate(paper(), 4).ok);

    auto custom = small_custom();
    CHECK(schedule_validate(custom, 4).ok);

    auto zero_term = GrowthSchedule::custom({BigInt(0), BigInt(0), BigInt(4)});
    auto v = schedule_validate(zero_term);
    CHECK_FALSE(v.ok);
    CHECK(v.reason.find("not strictly positive") != std::string::npos);

    // slowly growing terms make the third block collide with the fourth
    auto cramped = GrowthSchedule::custom({BigInt(0), BigInt(2), BigInt(4), BigInt(6)});
    auto vc = schedule_validate(cramped);
    CHECK_FALSE(vc.ok);
    CHECK(vc.reason.find("overlap") != std::string::npos);
}

TEST_CASE("custom schedules index like the standard one") {
    auto custom = small_custom();
    // sums: 0, 2, 6, 22, 282; counts: 1, 2, 5, 65, 2^22+1
    CHECK(custom.block_start(1) == 1);
    CHECK(custom.block_start(2) == 3);
    CHECK(custom.block_start(3) == 8);
    CHECK(custom.block_start(4) == 73);
    CHECK(custom.default_index_cap() == 72);

    auto i8 = block_locate(custom, Space::X, 8);
    CHECK(i8.block == 3);
    CHECK(i8.interval == ClosedInterval(Rational(22), Rational(22) + Rational(1, 4)));

    auto deep = block_locate(custom, Space::X, 80, 200);
    CHECK(deep.block == 4);
    CHECK(deep.offset == 7);
}

TEST_CASE("growth value caps") {
    auto custom = small_custom();
    CHECK(custom.growth_values(4).first == 260);
    CHECK_THROWS_AS(custom.growth_values(5), CapError);
    CHECK_THROWS_AS(custom.growth_values(1000), CapError);
}
