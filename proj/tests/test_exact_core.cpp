#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semiflow/interval.hpp"

#include <algorithm>
#include <random>

using namespace semiflow;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
    return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rational normalization and text form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(-1, 3).str() == "-1/3");
    CHECK(Rational(7, 2).denominator() == 2);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse(" -5/10 ") == Rational(-1, 2));
    CHECK(Rational::parse("42") == Rational(42));
    CHECK_THROWS_AS(Rational::parse("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 1200; ++i) {
        Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Rational(0));
        if (a != Rational(0)) CHECK(a * (Rational(1) / a) == Rational(1));
    }
}

TEST_CASE("decimal rendering is exact") {
    CHECK(Rational(1, 4).decimal() == "0.250000000000000");
    CHECK(Rational(1, 3).decimal() == "0.333333333333333");
    CHECK(Rational(2, 3).decimal() == "0.666666666666667");
    CHECK(Rational(3).decimal() == "3.00000000000000");
    CHECK(Rational(0).decimal() == "0");
    CHECK(Rational(-1, 8).decimal() == "-0.125000000000000");
    CHECK(Rational(999999999999999l, 1000000000000000l).decimal() == "0.999999999999999");
    CHECK(Rational(1, 20).decimal(3) == "0.0500");
    CHECK(Rational(1572882).decimal(4) == "1573000");
}

TEST_CASE("affine images") {
    // identity
    CHECK(affine_image(AffineMap(Rational(1), Rational(0)),
                       ClosedInterval(Rational(3), Rational(7, 2))) ==
          ClosedInterval(Rational(3), Rational(7, 2)));
    // the first connecting case of the block map
    CHECK(affine_image(AffineMap(Rational(1, 2), Rational(7, 4)),
                       ClosedInterval(Rational(1, 2), Rational(3, 2))) ==
          ClosedInterval(Rational(2), Rational(5, 2)));
    // negative slope swaps endpoints (the tent's right lap)
    CHECK(affine_image(AffineMap(Rational(-2), Rational(2)),
                       ClosedInterval(Rational(1, 2), Rational(3, 4))) ==
          ClosedInterval(Rational(1, 2), Rational(1)));
    CHECK_THROWS_AS(AffineMap(Rational(0), Rational(1)), std::invalid_argument);
}

TEST_CASE("affine image scales diameter by |slope|") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Rational slope = random_rational(rng);
        if (slope == Rational(0)) slope = Rational(1);
        AffineMap m(slope, random_rational(rng));
        Rational a = random_rational(rng), b = random_rational(rng);
        ClosedInterval j(std::min(a, b), std::max(a, b));
        CHECK(affine_image(m, j).diameter() == abs(slope) * j.diameter());
    }
}

TEST_CASE("union normalization") {
    auto u = union_normalize({ClosedInterval(Rational(0), Rational(1)),
                              ClosedInterval(Rational(1), Rational(2))});
    REQUIRE(u.parts().size() == 1);
    CHECK(u.parts()[0] == ClosedInterval(Rational(0), Rational(2)));

    auto v = union_normalize({ClosedInterval(Rational(0), Rational(1)),
                              ClosedInterval(Rational(3), Rational(4)),
                              ClosedInterval(Rational(1, 2), Rational(2))});
    REQUIRE(v.parts().size() == 2);
    CHECK(v.parts()[0] == ClosedInterval(Rational(0), Rational(2)));
    CHECK(v.parts()[1] == ClosedInterval(Rational(3), Rational(4)));

    CHECK(union_normalize({}).empty());
}

TEST_CASE("union normalization is idempotent and order-insensitive") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<ClosedInterval> parts;
        std::uniform_int_distribution<long> coord(-40, 40);
        std::uniform_int_distribution<int> count(0, 8);
        int n = count(rng);
        for (int i = 0; i < n; ++i) {
            Rational a(coord(rng), 4), b(coord(rng), 4);
            parts.emplace_back(std::min(a, b), std::max(a, b));
        }
        auto once = union_normalize(parts);
        auto twice = union_normalize({once.parts().begin(), once.parts().end()});
        CHECK(once == twice);

        std::shuffle(parts.begin(), parts.end(), rng);
        CHECK(union_normalize(parts) == once);
        if (!once.empty()) {
            auto shuffled = union_normalize(parts);
            CHECK(interval_diameter(shuffled) == interval_diameter(once));
        }
    }
}

TEST_CASE("diameter") {
    CHECK(interval_diameter(union_normalize({ClosedInterval(Rational(0), Rational(1))})) ==
          Rational(1));
    CHECK(interval_diameter(union_normalize({ClosedInterval(Rational(2), Rational(5, 2))})) ==
          Rational(1, 2));
    CHECK(interval_diameter(union_normalize({ClosedInterval(Rational(7), Rational(7))})) ==
          Rational(0));
    CHECK_THROWS_AS(interval_diameter(IntervalUnion()), std::domain_error);
}

TEST_CASE("interior overlap") {
    CHECK_FALSE(interiors_intersect(ClosedInterval(Rational(0), Rational(1)),
                                    ClosedInterval(Rational(1), Rational(2))));
    CHECK(interiors_intersect(ClosedInterval(Rational(0), Rational(1)),
                              ClosedInterval(Rational(1, 2), Rational(2))));
    CHECK_FALSE(interiors_intersect(ClosedInterval(Rational(0), Rational(1, 4)),
                                    ClosedInterval(Rational(1, 4), Rational(1, 2))));
    CHECK_THROWS_AS(interiors_intersect(ClosedInterval(Rational(1), Rational(1)),
                                        ClosedInterval(Rational(0), Rational(2))),
                    std::domain_error);
}

TEST_CASE("interval text round trip") {
    ClosedInterval j(Rational(-3, 7), Rational(22));
    CHECK(j.str() == "[-3/7, 22]");
    CHECK(ClosedInterval::parse(j.str()) == j);
    CHECK_THROWS_AS(ClosedInterval::parse("nope"), std::invalid_argument);
    CHECK_THROWS_AS(ClosedInterval(Rational(1), Rational(0)), std::invalid_argument);
}

TEST_CASE("uint64 round trips through the big integer layer") {
    CHECK(to_uint64(big_from_uint(0)) == 0);
    CHECK(to_uint64(big_from_uint(262153)) == 262153);
    std::uint64_t big = 0xffffffffffffffffULL;
    CHECK(to_uint64(big_from_uint(big)) == big);
    CHECK_THROWS_AS(to_uint64(BigInt(-1)), std::overflow_error);
}
