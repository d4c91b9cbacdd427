#include <stdexcept>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "selfsim/neighbor.hpp"

using namespace selfsim;
using namespace ts;

namespace {

AffineMap shift(const Rational& t) { return AffineMap{Rational(1), t}; }

int count_occurrences(const std::string& hay, const std::string& needle) {
    int n = 0;
    for (std::size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + 1)) {
        ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("separated systems have an empty trimmed neighbor graph") {
    for (const IFS& ifs : {cantor(), third_shift()}) {
        NeighborGraph g = neighbor_graph(ifs);
        CHECK(!g.incomplete);
        CHECK(!g.identity_found);
        NeighborGraph t = trim(g);
        CHECK(t.vertices.empty());
        BoundaryClassification c = classify(g);
        CHECK(c.verdict == BoundaryVerdict::Empty);
        CHECK(c.trimmed_vertices == 0);
    }
}

TEST_CASE("a single touching point gives a finite boundary") {
    NeighborGraph g = neighbor_graph(unit_halves());
    CHECK(!g.incomplete);
    BoundaryClassification c = classify(g);
    CHECK(c.verdict == BoundaryVerdict::Finite);
    // The surviving maps are the unit translations x +- 1, each a self-loop.
    CHECK(c.trimmed_vertices == 2);
}

TEST_CASE("base 4 digits {0,1,6} yield a countably infinite boundary") {
    NeighborGraph g = neighbor_graph(overlap_ifs(), 500);
    CHECK(!g.incomplete);
    CHECK(!g.identity_found);
    NeighborGraph t = trim(g);
    CHECK(t.vertices.size() == 4);
    // Survivors are exactly the translations x +- 1 and x +- 2.
    for (const Rational& c : {rat("1"), rat("-1"), rat("2"), rat("-2")}) {
        bool found = false;
        for (const AffineMap& m : t.vertices) {
            if (m == shift(c)) found = true;
        }
        CHECK(found);
    }
    BoundaryClassification cls = classify(g);
    CHECK(cls.verdict == BoundaryVerdict::CountablyInfinite);
}

TEST_CASE("classification rules on hand-built graphs") {
    // Double self-loop: more internal edges than vertices, uncountable.
    NeighborGraph dbl;
    dbl.vertices = {shift(rat("1"))};
    dbl.edges = {{-1, 0, 1, 2}, {0, 0, 1, 1}, {0, 0, 2, 2}};
    CHECK(classify(dbl).verdict == BoundaryVerdict::Uncountable);

    // Simple two-cycle feeding a terminal self-loop: countable.
    NeighborGraph cyc;
    cyc.vertices = {shift(rat("1")), shift(rat("2")), shift(rat("3"))};
    cyc.edges = {{-1, 0, 1, 2},
                 {0, 1, 1, 1},
                 {1, 0, 2, 2},
                 {0, 2, 1, 2},
                 {2, 2, 1, 1}};
    CHECK(classify(cyc).verdict == BoundaryVerdict::CountablyInfinite);

    // Exit-free self-loop only: finite.
    NeighborGraph fin;
    fin.vertices = {shift(rat("1"))};
    fin.edges = {{-1, 0, 1, 2}, {0, 0, 1, 1}};
    CHECK(classify(fin).verdict == BoundaryVerdict::Finite);

    NeighborGraph inc;
    inc.incomplete = true;
    CHECK_THROWS_AS(classify(inc), std::invalid_argument);
}

TEST_CASE("vertex budget exhaustion is reported, not silently truncated") {
    IFS heavy = IFS::create({Similarity{1, rat("2/3"), rat("0")},
                             Similarity{1, rat("2/3"), rat("1/4")}});
    NeighborGraph g = neighbor_graph(heavy, 50);
    CHECK(g.incomplete);
    CHECK_THROWS_AS(classify(g), std::invalid_argument);
}

TEST_CASE("dot rendering lists every vertex and labeled edge") {
    NeighborGraph g = neighbor_graph(overlap_ifs(), 500);
    std::string dot = to_dot(g);
    CHECK(dot.find("digraph") == 0);
    CHECK(count_occurrences(dot, " [label=\"") ==
          static_cast<int>(g.vertices.size() + g.edges.size()));
    CHECK(count_occurrences(dot, " -> ") == static_cast<int>(g.edges.size()));
    CHECK(dot.find("root [shape=point]") != std::string::npos);
    CHECK(dot.find("(truncated)") == std::string::npos);
    // The x +- 1 two-cycle has exits toward the x +- 2 self-loops.
    CHECK(dot.find("fillcolor=lightblue") != std::string::npos);

    NeighborGraph inc = neighbor_graph(
        IFS::create({Similarity{1, rat("2/3"), rat("0")},
                     Similarity{1, rat("2/3"), rat("1/4")}}),
        50);
    CHECK(to_dot(inc).find("(truncated)") != std::string::npos);
}
