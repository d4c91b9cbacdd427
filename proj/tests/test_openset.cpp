#include "doctest.h"
#include "helpers.hpp"
#include "selfsim/openset.hpp"

using namespace ts;

TEST_CASE("the open hull is feasible for separated systems") {
    IFS c = cantor();
    IntervalSet o = convex_iterate(c, 0);
    CHECK(o.parts()[0] == Interval::open(rat("0"), rat("1")));
    FeasibilityCheck fc = check_feasible(c, o);
    CHECK(fc.feasible);
    CHECK(fc.checked_pairs.size() == 1);
    CHECK(find_feasible_convex_iterate(c, 3) == 0);
    CHECK(find_feasible_convex_iterate(third_shift(), 3) == 0);
}

TEST_CASE("overlapping digit system: every iterated hull fails") {
    IFS f = overlap_ifs();
    for (int m = 0; m <= 5; ++m) {
        FeasibilityCheck fc = check_feasible(f, convex_iterate(f, m));
        CHECK(!fc.feasible);
        CHECK(fc.failure == FeasibilityCheck::Failure::Overlap);
        CHECK(!fc.witness.empty());
        if (m == 0) {
            // phi_1(0,2) = (0,1) and phi_2(0,2) = (1/4, 3/4).
            CHECK(fc.i == 1);
            CHECK(fc.j == 2);
            CHECK(fc.witness.parts()[0] == Interval::open(rat("1/4"), rat("1/2")));
        }
    }
    CHECK(!find_feasible_convex_iterate(f, 5));
}

TEST_CASE("generator data for finite unions") {
    IFS c = cantor();
    OpenSetRep rep = OpenSetRep::finite_union(convex_iterate(c, 0), true);
    GeneratorData gen = generator_data(c, rep);
    CHECK(gen.finite);
    REQUIRE(gen.components.size() == 1);
    CHECK(gen.components[0].interval == Interval::open(rat("1/3"), rat("2/3")));
    CHECK(gen.g == rat("1/6"));
    CHECK(gen.lambda_gamma_lo == rat("1/3"));
    CHECK(gen.lambda_gamma_hi == rat("1/3"));
    // Gamma keeps its boundary points, G does not.
    CHECK(gen.gamma.contains_point(rat("1/3")));

    // Touching images: Gamma picks up the touching point, G is one interval.
    GeneratorData gen2 = generator_data(
        third_shift(), OpenSetRep::finite_union(convex_iterate(third_shift(), 0), true));
    REQUIRE(gen2.components.size() == 1);
    CHECK(gen2.components[0].interval == Interval::open(rat("1/6"), rat("1/3")));
    CHECK(gen2.g == rat("1/12"));
    CHECK(gen2.lambda_gamma_lo == rat("1/6"));
}

TEST_CASE("generator measure identity holds on certified feasible unions") {
    std::vector<IFS> systems;
    systems.push_back(cantor());
    systems.push_back(third_shift());
    systems.push_back(to_ifs(DigitSystem{rat("5"), {rat("0"), rat("2"), rat("4")}}));
    systems.push_back(to_ifs(DigitSystem{rat("4"), {rat("0"), rat("3")}}));
    systems.push_back(to_ifs(DigitSystem{rat("4"), {rat("0"), rat("1"), rat("3")}}));
    for (const IFS& f : systems) {
        auto m = find_feasible_convex_iterate(f, 3);
        REQUIRE(m);
        IntervalSet o = convex_iterate(f, *m);
        GeneratorData gen =
            generator_data(f, OpenSetRep::finite_union(o, true));
        CHECK(gen.lambda_gamma_lo == o.measure() * (1 - f.ratio_sum()));
    }
}

TEST_CASE("trivial systems have no generator components") {
    IFS u = unit_halves();
    OpenSetRep rep = OpenSetRep::finite_union(convex_iterate(u, 0), true);
    CHECK_THROWS_AS(generator_data(u, rep), std::domain_error);
    OpenSetRep uncertified = OpenSetRep::finite_union(convex_iterate(cantor(), 0), false);
    CHECK_THROWS_AS(generator_data(cantor(), uncertified), std::invalid_argument);
}

TEST_CASE("word family search returns the exact route when it applies") {
    auto cert = construct_U_lambda(cantor(), 3, 6);
    REQUIRE(cert);
    CHECK(cert->m == 0);
    CHECK(cert->verified_depth == -1);
    auto cert2 = construct_U_lambda(third_shift(), 3, 6);
    REQUIRE(cert2);
    CHECK(cert2->m == 0);
    CHECK(cert2->verified_depth == -1);
}

TEST_CASE("depth-superset certificates re-verify at higher depth") {
    // Lambda = {(1)} over the Cantor system: B = [0, 1/3], images of the
    // closed superset stay disjoint at every depth.
    std::vector<Word> lambda{{1}};
    for (int depth = 0; depth <= 4; ++depth) {
        CHECK(verify_u_lambda_at_depth(cantor(), lambda, depth));
    }
    // With genuinely overlapping word images no depth can certify.
    CHECK(!verify_u_lambda_at_depth(overlap_ifs(), {{1}}, 3));
}

TEST_CASE("truncated generator data for a word-family open set") {
    // U for Lambda = {(1)} over the Cantor system satisfies
    // U = (0,1/3) union phi_2(U), so lambda(U) = 1/2 and lambda(Gamma) = 1/6;
    // its generator components are (1/9, 2/9) scaled by powers of 1/3.
    OpenSetRep rep = OpenSetRep::u_lambda({{1}}, 1, 7, true);
    GeneratorData gen = generator_data(cantor(), rep);
    CHECK(!gen.finite);
    REQUIRE(gen.components.size() >= 4);
    CHECK(gen.components[0].interval == Interval::open(rat("1/9"), rat("2/9")));
    CHECK(gen.components[0].exact);
    CHECK(gen.g == rat("1/18"));
    Rational expect = rat("1/9");
    for (std::size_t k = 0; k + 1 < gen.components.size(); ++k) {
        CHECK(gen.gap_lengths[k] == expect);
        expect /= 3;
    }
    CHECK(gen.lambda_gamma_lo <= rat("1/6"));
    CHECK(gen.lambda_gamma_hi >= rat("1/6"));
    CHECK(gen.resolution > 0);
}

TEST_CASE("strongness and compatibility certificates") {
    IFS c = cantor();
    IntervalSet o = convex_iterate(c, 0);
    CHECK(certify_strong(c, o).has_value());
    CHECK(certify_compatible(c, o));
    // An open set avoiding F entirely cannot be certified strong.
    IntervalSet off(Interval::open(rat("5/12"), rat("7/12")));
    CHECK(!certify_strong(c, off, 6).has_value());
    // Boundary points far from F are not F-points.
    IntervalSet bad(Interval::open(rat("0"), rat("5/12")));
    CHECK(!certify_compatible(c, bad, 8));
}
