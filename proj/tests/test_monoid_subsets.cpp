#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semiflow/subsets.hpp"

#include <random>

using namespace semiflow;

namespace {

const GElement kInf = GElement::infinity();

SubsetDesc make_n(IndexRuns prefix, std::uint64_t T, std::uint64_t p,
                  std::set<std::uint64_t> res) {
    return SubsetDesc::make(Ambient::naturals, std::move(prefix), T, p, std::move(res), false);
}

SubsetDesc make_g(IndexRuns prefix, std::uint64_t T, std::uint64_t p, std::set<std::uint64_t> res,
                  bool inf) {
    return SubsetDesc::make(Ambient::g_monoid, std::move(prefix), T, p, std::move(res), inf);
}

SubsetDesc random_desc(std::mt19937_64& rng, Ambient ambient) {
    std::uniform_int_distribution<std::uint64_t> tdist(0, 10), pdist(1, 6), coin(0, 1);
    std::uint64_t T = tdist(rng), p = pdist(rng);
    std::vector<std::uint64_t> pts;
    for (std::uint64_t n = 0; n < T; ++n)
        if (coin(rng)) pts.push_back(n);
    std::set<std::uint64_t> res;
    for (std::uint64_t r = 0; r < p; ++r)
        if (coin(rng)) res.insert(r);
    bool inf = ambient == Ambient::g_monoid && coin(rng) == 1;
    return SubsetDesc::make(ambient, IndexRuns::from_points(pts), T, p, std::move(res), inf);
}

const SubsetDesc evens = make_n(IndexRuns(), 0, 2, {0});
const SubsetDesc inf_only = make_g(IndexRuns(), 0, 1, {}, true);
const SubsetDesc co_inf = make_g(IndexRuns(), 0, 1, {0}, false);  // everything but inf

}  // namespace

TEST_CASE("monoid addition") {
    CHECK(monoid_add(GElement(0), GElement(7)) == GElement(7));
    CHECK(monoid_add(GElement(3), GElement(4)) == GElement(7));
    CHECK(monoid_add(GElement(5), kInf) == kInf);
    CHECK(monoid_add(kInf, kInf) == kInf);
    CHECK(GElement::parse("inf").is_infinity());
    CHECK(GElement::parse("12") == GElement(12));
}

TEST_CASE("index runs") {
    IndexRuns r({{5, 9}, {2, 3}, {10, 12}});
    CHECK(r.runs().size() == 2);  // 5..9 and 10..12 merge
    CHECK(r.member(2));
    CHECK_FALSE(r.member(4));
    CHECK(r.covers(5, 12));
    CHECK_FALSE(r.covers(3, 5));
    CHECK(r.count() == 10);
    CHECK(r.complement_below(14) == IndexRuns({{0, 1}, {4, 4}, {13, 13}}));
    CHECK(r.shifted(3) == IndexRuns({{5, 6}, {8, 15}}));
    CHECK(r.intersect(IndexRuns({{0, 6}})) == IndexRuns({{2, 3}, {5, 6}}));
    CHECK(r.str() == "{2..3, 5..12}");
}

TEST_CASE("membership semantics") {
    SubsetDesc b = make_n(IndexRuns::from_points({1}), 5, 3, {0});
    CHECK(b.member(1));
    CHECK_FALSE(b.member(0));
    CHECK_FALSE(b.member(3));  // 3 < T, not in finite part
    CHECK(b.member(6));        // 6 >= T, 6 mod 3 == 0
    CHECK_FALSE(b.member(7));
    CHECK(b.member(9));
    CHECK_FALSE(b.member(kInf));
    CHECK(inf_only.member(kInf));
    CHECK_FALSE(inf_only.member(0));
}

TEST_CASE("grammar round trip") {
    SubsetDesc b = SubsetDesc::parse("ambient=G; finite={1,3,4}; T=6; p=3; R={0,2}; inf=yes");
    CHECK(b.ambient == Ambient::g_monoid);
    CHECK(b.member(1));
    CHECK(b.member(4));
    CHECK_FALSE(b.member(5));
    CHECK(b.member(6));
    CHECK(b.member(8));
    CHECK(b.contains_infinity);
    CHECK(SubsetDesc::parse(b.str()) == b);
    CHECK(SubsetDesc::parse("ambient=N; finite={0..4}; T=9; p=1; R={}; inf=no").prefix.count() == 5);
    CHECK_THROWS_AS(SubsetDesc::parse("finite={}; T=0; p=1; R={}"), std::invalid_argument);
    CHECK_THROWS_AS(SubsetDesc::parse("ambient=N; R={3}; p=2"), std::invalid_argument);
    CHECK_THROWS_AS(SubsetDesc::parse("ambient=N; inf=yes"), std::invalid_argument);
}

TEST_CASE("classification of the canonical examples") {
    auto ev = subset_classify(evens);
    CHECK(ev.syndetic);
    CHECK_FALSE(ev.thick);
    CHECK_FALSE(ev.compact);
    CHECK(ev.periodic);
    CHECK_FALSE(ev.thickly_syndetic);
    CHECK_FALSE(ev.thickly_periodic);

    auto co = subset_classify(co_inf);
    CHECK_FALSE(co.syndetic);  // the translate by inf misses it
    CHECK_FALSE(co.thick);
    CHECK_FALSE(co.compact);

    auto just_inf = subset_classify(inf_only);
    CHECK(just_inf.syndetic);
    CHECK(just_inf.thick);
    CHECK(just_inf.compact);
    CHECK(just_inf.periodic);

    auto cofinite = subset_classify(make_n(IndexRuns(), 10, 1, {0}));
    CHECK(cofinite.thick);
    CHECK(cofinite.syndetic);
    CHECK(cofinite.thickly_syndetic);
    CHECK(cofinite.thickly_periodic);
}

TEST_CASE("complement flips membership pointwise") {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 50; ++i) {
        for (Ambient amb : {Ambient::naturals, Ambient::g_monoid}) {
            SubsetDesc b = random_desc(rng, amb);
            SubsetDesc c = subset_complement(b);
            for (std::uint64_t n = 0; n <= 40; ++n) CHECK(c.member(n) == !b.member(n));
            if (amb == Ambient::g_monoid) CHECK(c.member(kInf) == !b.member(kInf));
            // involution
            CHECK(subset_complement(c) == b);
        }
    }
    SubsetDesc spot = make_n(IndexRuns::from_points({1}), 5, 3, {0});
    SubsetDesc co = subset_complement(spot);
    for (std::uint64_t n = 0; n <= 20; ++n) CHECK(co.member(n) == !spot.member(n));
}

TEST_CASE("translate matches pointwise shifts") {
    CHECK(subset_translate(GElement(0), evens) == evens);

    SubsetDesc shifted = subset_translate(GElement(3), evens);
    for (std::uint64_t n = 0; n <= 20; ++n)
        CHECK(shifted.member(n) == (n >= 3 && (n - 3) % 2 == 0));

    // translating a non-empty set by inf collapses it
    SubsetDesc some = make_g(IndexRuns::from_points({2, 4}), 5, 1, {}, true);
    SubsetDesc collapsed = subset_translate(kInf, some);
    CHECK(collapsed.member(kInf));
    CHECK(collapsed.finite());
    CHECK(collapsed.prefix.empty());

    std::mt19937_64 rng(55);
    for (int i = 0; i < 40; ++i) {
        SubsetDesc b = random_desc(rng, Ambient::naturals);
        std::uint64_t t = i % 7;
        SubsetDesc tb = subset_translate(GElement(t), b);
        for (std::uint64_t n = 0; n <= 40; ++n)
            CHECK(tb.member(n) == (n >= t && b.member(n - t)));
    }
}

TEST_CASE("duality: syndetic iff complement not thick") {
    std::mt19937_64 rng(77);
    for (Ambient amb : {Ambient::naturals, Ambient::g_monoid}) {
        for (int i = 0; i < 220; ++i) {
            SubsetDesc b = random_desc(rng, amb);
            auto vb = subset_classify(b);
            auto vc = subset_classify(subset_complement(b));
            CHECK(vb.syndetic == !vc.thick);
            CHECK(vb.thick == !vc.syndetic);
        }
    }
}

TEST_CASE("bounded oracle on canonical examples") {
    auto co = brute_force_classify(co_inf, 5, 50);
    CHECK_FALSE(co.syndetic);

    auto cofinite = brute_force_classify(make_n(IndexRuns(), 10, 1, {0}), 12, 100);
    CHECK(cofinite.thick);

    SubsetDesc full_n = make_n(IndexRuns(), 0, 1, {0});
    auto full = brute_force_classify(full_n, 6, 60);
    CHECK(full.syndetic);
    CHECK(full.thick);
    CHECK(full.thickly_syndetic);
    CHECK(full.periodic);
    CHECK(full.thickly_periodic);

    SubsetDesc full_g = make_g(IndexRuns(), 0, 1, {0}, true);
    auto fullg = brute_force_classify(full_g, 6, 60);
    CHECK(fullg.syndetic);
    CHECK(fullg.thick);
}

TEST_CASE("decision procedure agrees with the bounded oracle") {
    std::mt19937_64 rng(31337);
    for (int i = 0; i < 120; ++i) {
        SubsetDesc b = random_desc(rng, Ambient::naturals);
        auto fast = subset_classify(b);
        auto slow = brute_force_classify(b, 40, 200);
        CHECK(fast == slow);
    }
    for (int i = 0; i < 120; ++i) {
        SubsetDesc b = random_desc(rng, Ambient::g_monoid);
        auto fast = subset_classify(b);
        auto slow = brute_force_classify(b, 8, 64);
        CHECK(fast == slow);
        // the collapse law: every class verdict equals inf membership
        CHECK(fast.syndetic == b.contains_infinity);
        CHECK(fast.thick == b.contains_infinity);
        CHECK(fast.thickly_syndetic == b.contains_infinity);
        CHECK(fast.periodic == b.contains_infinity);
        CHECK(fast.thickly_periodic == b.contains_infinity);
    }
}

TEST_CASE("naturals-class laws") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 120; ++i) {
        SubsetDesc b = random_desc(rng, Ambient::naturals);
        auto v = subset_classify(b);
        CHECK(v.syndetic == !b.residues.empty());
        bool cofinite = b.residues.size() == b.period;
        CHECK(v.thick == cofinite);
        CHECK(v.thickly_syndetic == v.thick);
        CHECK(v.thickly_periodic == v.thick);
        if (v.periodic) CHECK(v.syndetic);
        if (v.thick) CHECK(v.periodic);  // cofinite tail embeds a progression
    }
}

TEST_CASE("monoid property verdicts") {
    auto n = monoid_properties(Ambient::naturals);
    CHECK(n.sp);
    CHECK(n.dsp);
    auto g = monoid_properties(Ambient::g_monoid);
    CHECK_FALSE(g.sp);
    CHECK_FALSE(g.dsp);
}

TEST_CASE("smallest witnesses are reported") {
    auto v = subset_classify(evens);
    CHECK(v.witnesses.at("syndetic") == "K={0..1} meets every translate");
    CHECK(v.witnesses.at("periodic").find("d=2, t=0") != std::string::npos);
}
