#ifndef SELFSIM_GAPS_HPP
#define SELFSIM_GAPS_HPP

#include <utility>
#include <vector>

#include "selfsim/ifs.hpp"

namespace selfsim {

/// Bounded complementary interval of F inside its convex hull.
struct Gap {
    Interval interval;  // open, endpoints in F
    Rational length;
    Rational birth_resolution;  // the theta at which it was enumerated
};

struct GapList {
    std::vector<Gap> gaps;  // sorted by decreasing length, then position
    Rational theta;
};

/// All gaps of F with length strictly greater than theta (exact).
GapList gaps_above(const IFS& ifs, const Rational& theta);

/// Exact rational value of lambda(F_eps).
Rational parallel_volume(const IFS& ifs, const Rational& eps);

/// Per-sample enclosures of eps^{D-1} * lambda(F_eps).
std::vector<std::pair<Rational, Enclosure>> rescaled_volume_samples(
    const IFS& ifs, const std::vector<Rational>& eps_list, const DimensionEnclosure& dim);

}  // namespace selfsim

#endif
