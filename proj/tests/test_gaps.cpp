#include "doctest.h"
#include "helpers.hpp"
#include "selfsim/gaps.hpp"

using namespace ts;

TEST_CASE("cantor gap enumeration is exact") {
    IFS c = cantor();
    GapList top = gaps_above(c, rat("1/4"));
    REQUIRE(top.gaps.size() == 1);
    CHECK(top.gaps[0].interval == Interval::open(rat("1/3"), rat("2/3")));
    CHECK(top.gaps[0].length == rat("1/3"));

    GapList mid = gaps_above(c, rat("1/10"));
    REQUIRE(mid.gaps.size() == 3);
    CHECK(mid.gaps[1].interval == Interval::open(rat("1/9"), rat("2/9")));
    CHECK(mid.gaps[2].interval == Interval::open(rat("7/9"), rat("8/9")));

    // 1/3, two of 1/9, four of 1/27.
    CHECK(gaps_above(c, rat("1/28")).gaps.size() == 7);
    CHECK_THROWS_AS(gaps_above(c, rat("0")), std::invalid_argument);
}

TEST_CASE("gap lists are stable under refinement") {
    for (const IFS& f : {cantor(), third_shift(), overlap_ifs()}) {
        GapList coarse = gaps_above(f, rat("1/20"));
        GapList fine = gaps_above(f, rat("1/200"));
        REQUIRE(fine.gaps.size() >= coarse.gaps.size());
        for (std::size_t k = 0; k < coarse.gaps.size(); ++k) {
            CHECK(fine.gaps[k].interval == coarse.gaps[k].interval);
        }
    }
}

TEST_CASE("parallel volume matches hand values") {
    IFS c = cantor();
    CHECK(parallel_volume(c, rat("1/18")) == rat("8/9"));
    CHECK(parallel_volume(c, rat("1/6")) == rat("4/3"));
    // Saturation: for eps >= g every gap is filled.
    CHECK(parallel_volume(c, rat("1")) == rat("3"));
    CHECK_THROWS_AS(parallel_volume(c, rat("0")), std::invalid_argument);
}

TEST_CASE("volume formula agrees with the inflated-cover oracle exactly") {
    for (const IFS& f : {cantor(), overlap_ifs()}) {
        Rational eps = f.hull().length() / 4;
        for (int k = 0; k < 20; ++k) {
            // measure(inflate(cover(2eps), eps)) is lambda(F_eps) exactly:
            // cover parts have endpoints in F and length <= 2 eps.
            Rational direct = parallel_volume(f, eps);
            Rational oracle = f.cover(2 * eps).inflate(eps).measure();
            CHECK(direct == oracle);
            eps = eps * rat("7/10");
        }
    }
}

TEST_CASE("parallel volume is increasing in eps") {
    IFS f = third_shift();
    Rational prev = parallel_volume(f, rat("1/1000"));
    for (int k = 2; k <= 12; ++k) {
        Rational cur = parallel_volume(f, Rational(k) / 1000);
        CHECK(cur >= prev);
        prev = cur;
    }
}

TEST_CASE("rescaled volumes hit the closed form at eps = g") {
    IFS c = cantor();
    DimensionEnclosure d = moran_dimension(c, rat("1/1000000000000000000"));
    auto samples = rescaled_volume_samples(c, {rat("1/6")}, d);
    REQUIRE(samples.size() == 1);
    // (1/6)^(D-1) * 4/3 = 2^(2-D) because 3^D = 2.
    Enclosure want = pow_rational(rat("2"), Rational(2) - d.value, 192);
    CHECK(samples[0].second.upper_rational() >= want.lower_rational());
    CHECK(samples[0].second.lower_rational() <= want.upper_rational());
}
