#ifndef SELFSIM_DIGIT_HPP
#define SELFSIM_DIGIT_HPP

#include <vector>

#include "selfsim/ifs.hpp"

namespace selfsim {

/// Base-A digit system: maps x -> (x + d_j) / A. Digits may exceed A - 1,
/// which is what makes overlapping hull images possible.
struct DigitSystem {
    Rational base;                 // A > 1
    std::vector<Rational> digits;  // distinct, >= 2 of them, input order kept
};

/// Validates and converts to the similarity system (ratio 1/A, sign +1,
/// translation d_j / A). Throws std::invalid_argument.
IFS to_ifs(const DigitSystem& sys);

/// Residue test for integer base and digits: pairwise distinct digits mod A
/// rule out exact word coincidences, which for an integer grid is equivalent
/// to the open set condition. A residue collision decides nothing.
struct ModCheck {
    bool applicable = false;   // base and digits all integers
    bool distinct_residues = false;
    int i = 0, j = 0;          // colliding letters (1-based) when not distinct
    bool osc_certified = false;
};

ModCheck osc_mod_check(const DigitSystem& sys);

/// Separation test via the closed difference set of same-length word values:
/// differences evolve by delta -> A delta + (d_i - d_j) and any chain leading
/// to an exact coincidence stays within |delta| <= spread/(A-1). If the set
/// stabilizes without reaching 0, no two word maps ever coincide and the
/// open set condition holds; if 0 is reached, it fails, with witness words.
struct SeparationCheck {
    enum class Result { Holds, Fails, Inconclusive };
    Result result = Result::Inconclusive;
    int depth_reached = 0;
    bool stabilized = false;
    Rational min_difference;  // smallest nonzero |delta| seen
    Word witness_u;           // coinciding words on failure (digit letters)
    Word witness_v;
};

SeparationCheck osc_helau_check(const DigitSystem& sys, int max_depth);

/// The base-4 digit system {0, 1, 6}: for every k the images of the words
/// 1 3 (2 3)^k and 2 (2 3)^k 2 overlap in an interval of positive length,
/// so no iterated convex hull can ever satisfy the disjointness requirement.
struct OverlapExample {
    DigitSystem system;
    Word u;
    Word v;
    Interval image_u;
    Interval image_v;
    Rational endpoint_difference;  // |left endpoint gap| between the images
    Rational overlap_length;       // positive
    Rational interval_length;      // common length of the two images
};

OverlapExample example_overlap(int k);

}  // namespace selfsim

#endif
