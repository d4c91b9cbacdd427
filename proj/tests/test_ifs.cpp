#include "doctest.h"
#include "helpers.hpp"

using namespace ts;

TEST_CASE("hull endpoints with certificates") {
    IFS c = cantor();
    CHECK(c.hull() == Interval::closed(rat("0"), rat("1")));
    CHECK(c.certificate_point(c.hull_lo_certificate()) == rat("0"));
    CHECK(c.certificate_point(c.hull_hi_certificate()) == rat("1"));

    CHECK(third_shift().hull() == Interval::closed(rat("0"), rat("1/2")));
    CHECK(overlap_ifs().hull() == Interval::closed(rat("0"), rat("2")));
}

TEST_CASE("hull for an orientation-reversing system") {
    // {-x/2 + 1, x/4}: fixed points 2/3 and 0; the hull endpoint 1 is the
    // image of 0 under the reversing map.
    IFS f = IFS::create({Similarity{-1, rat("1/2"), rat("1")},
                         Similarity{1, rat("1/4"), rat("0")}});
    CHECK(f.hull() == Interval::closed(rat("0"), rat("1")));
    CHECK(f.certificate_point(f.hull_lo_certificate()) == rat("0"));
    CHECK(f.certificate_point(f.hull_hi_certificate()) == rat("1"));
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(IFS::create({Similarity{1, rat("1/2"), rat("0")}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(IFS::create({Similarity{1, rat("5/4"), rat("0")},
                                 Similarity{1, rat("1/2"), rat("1/2")}}),
                    std::invalid_argument);
    // Common fixed point: the attractor degenerates to one point.
    CHECK_THROWS_AS(IFS::create({Similarity{1, rat("1/2"), rat("0")},
                                 Similarity{1, rat("1/3"), rat("0")}}),
                    std::invalid_argument);
}

TEST_CASE("word maps compose") {
    IFS c = cantor();
    AffineMap direct = c.word_map({1, 2, 2});
    AffineMap manual =
        c.map(1).map().compose(c.map(2).map().compose(c.map(2).map()));
    CHECK(direct == manual);
    CHECK(c.word_ratio({1, 2, 2}) == rat("1/27"));
    CHECK(c.word_map({}) == AffineMap::identity());
}

TEST_CASE("covers refine monotonically and stay covers") {
    IFS c = cantor();
    IntervalSet coarse = c.cover(rat("1/9"));
    CHECK(coarse.component_count() == 4);
    CHECK(coarse.measure() == rat("4/9"));
    IntervalSet fine = c.cover(rat("1/27"));
    CHECK(coarse.contains(fine));
    // Certificate points of F stay inside every cover.
    CHECK(fine.contains_point(c.certificate_point(c.hull_hi_certificate())));
}

TEST_CASE("dimension enclosures honor the requested width") {
    Rational w = rat("1/1000000000000000");  // 1e-15
    DimensionEnclosure d = moran_dimension(cantor(), w);
    CHECK(d.value.width() <= w);
    CHECK(close_to(d.value, dec(kDimCantor), rat("1/100000000000000000000")));

    DimensionEnclosure d2 = moran_dimension(overlap_ifs(), w);
    CHECK(d2.value.width() <= w);
    CHECK(close_to(d2.value, dec(kDimOverlap), rat("1/100000000000000000000")));

    // (1/2)^s + (1/4)^s = 1 at s = log2((1+sqrt5)/2).
    IFS golden = IFS::create({Similarity{1, rat("1/2"), rat("0")},
                              Similarity{1, rat("1/4"), rat("3/4")}});
    DimensionEnclosure d3 = moran_dimension(golden, w);
    CHECK(close_to(d3.value, dec(kDimGolden), rat("1/100000000000000000000")));

    CHECK(moran_dimension(unit_halves(), w).exactly_one());
    IFS fat = IFS::create({Similarity{1, rat("2/3"), rat("0")},
                           Similarity{1, rat("2/3"), rat("1/3")}});
    CHECK_THROWS_AS(moran_dimension(fat, w), std::domain_error);
}

TEST_CASE("lattice classification") {
    LatticeClass c = lattice_classify(cantor());
    REQUIRE(c.tag == LatticeClass::Tag::Lattice);
    CHECK(c.base == rat("1/3"));
    CHECK(c.exponents == std::vector<long>{1, 1});

    // 4/9 = (2/3)^2, 2/3 = (2/3)^1.
    IFS mixed = IFS::create({Similarity{1, rat("4/9"), rat("0")},
                             Similarity{1, rat("2/3"), rat("1/3")}});
    LatticeClass m = lattice_classify(mixed);
    REQUIRE(m.tag == LatticeClass::Tag::Lattice);
    CHECK(m.base == rat("2/3"));
    CHECK(m.exponents == std::vector<long>{2, 1});

    // 1/6 and 1/9 have non-proportional prime signatures.
    IFS non = IFS::create({Similarity{1, rat("1/6"), rat("0")},
                           Similarity{1, rat("1/9"), rat("8/9")}});
    CHECK(lattice_classify(non).tag == LatticeClass::Tag::Nonlattice);

    IFS non2 = IFS::create({Similarity{1, rat("1/2"), rat("0")},
                            Similarity{1, rat("1/3"), rat("2/3")}});
    CHECK(lattice_classify(non2).tag == LatticeClass::Tag::Nonlattice);
}

TEST_CASE("iterates shrink toward the attractor") {
    IFS c = cantor();
    IntervalSet s = c.hull_set();
    Rational prev = s.measure();
    for (int n = 0; n < 5; ++n) {
        s = c.image(s);
        CHECK(s.measure() < prev);
        prev = s.measure();
    }
    CHECK(s.measure() == rat("32/243"));  // (2/3)^5
    CHECK(c.iterate(5, c.hull_set()) == s);
}
