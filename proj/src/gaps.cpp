#include "selfsim/gaps.hpp"

#include <algorithm>
#include <stdexcept>

namespace selfsim {

GapList gaps_above(const IFS& ifs, const Rational& theta) {
    if (theta <= 0) throw std::invalid_argument("gaps_above: theta must be positive");
    // Every component of hull \ cover(theta) is exactly a gap of F, because
    // cover-interval endpoints lie in F; gaps longer than theta cannot hide
    // inside a single cover interval of length <= theta.
    IntervalSet complement = ifs.hull_set().subtract(ifs.cover(theta));
    GapList out;
    out.theta = theta;
    for (const auto& iv : complement.parts()) {
        if (iv.length() > theta)
            out.gaps.push_back(Gap{Interval::open(iv.lo, iv.hi), iv.length(), theta});
    }
    std::sort(out.gaps.begin(), out.gaps.end(), [](const Gap& a, const Gap& b) {
        if (a.length != b.length) return a.length > b.length;
        return a.interval.lo < b.interval.lo;
    });
    return out;
}

Rational parallel_volume(const IFS& ifs, const Rational& eps) {
    if (eps <= 0) throw std::invalid_argument("parallel_volume: eps must be positive");
    // lambda(F_eps) = lambda(hull) + 2 eps - sum over gaps longer than 2 eps
    // of the uncovered middle (d_j - 2 eps).
    Rational v = ifs.hull().length() + 2 * eps;
    for (const auto& gap : gaps_above(ifs, 2 * eps).gaps)
        v -= gap.length - 2 * eps;
    return v;
}

std::vector<std::pair<Rational, Enclosure>> rescaled_volume_samples(
    const IFS& ifs, const std::vector<Rational>& eps_list, const DimensionEnclosure& dim) {
    Enclosure d_minus_1 = dim.value - Rational(1);
    std::vector<std::pair<Rational, Enclosure>> out;
    out.reserve(eps_list.size());
    for (const auto& eps : eps_list) {
        Rational vol = parallel_volume(ifs, eps);
        Enclosure val = pow_rational(eps, d_minus_1, dim.value.precision()) * vol;
        out.emplace_back(eps, std::move(val));
    }
    return out;
}

}  // namespace selfsim
