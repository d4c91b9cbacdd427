#ifndef SELFSIM_INTERVAL_SET_HPP
#define SELFSIM_INTERVAL_SET_HPP

#include <optional>
#include <vector>

#include "selfsim/rational.hpp"

namespace selfsim {

/// One interval with rational endpoints and open/closed endpoint flags.
/// Degenerate single points are represented as lo == hi with both ends closed.
struct Interval {
    Rational lo;
    Rational hi;
    bool lo_closed = true;
    bool hi_closed = true;

    bool is_point() const { return lo == hi; }
    Rational length() const { return hi - lo; }
    bool contains(const Rational& x) const;

    /// Empty results (lo > hi, or a point with an open end) become nullopt.
    static std::optional<Interval> make(Rational lo, Rational hi, bool lo_closed,
                                        bool hi_closed);
    static Interval closed(Rational lo, Rational hi);
    static Interval open(Rational lo, Rational hi);
    static Interval point(Rational x);

    bool operator==(const Interval&) const = default;
};

/// Finite disjoint union of intervals, kept sorted and normalized:
/// overlapping or compatibly touching intervals are merged, so parts()
/// are exactly the connected components.
class IntervalSet {
public:
    IntervalSet() = default;
    explicit IntervalSet(const Interval& iv) : parts_{iv} {}

    static IntervalSet from_intervals(std::vector<Interval> ivs);

    const std::vector<Interval>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    std::size_t component_count() const { return parts_.size(); }

    /// Lebesgue measure: sum of component lengths (flags are irrelevant).
    Rational measure() const;

    /// Closed eps-neighborhood; throws std::invalid_argument for eps < 0.
    IntervalSet inflate(const Rational& eps) const;

    IntervalSet unite(const IntervalSet& other) const;
    IntervalSet intersect(const IntervalSet& other) const;
    IntervalSet subtract(const IntervalSet& other) const;

    IntervalSet closure() const;
    IntervalSet interior() const;

    /// Image under x -> scale*x + offset (scale != 0).
    IntervalSet apply_affine(const Rational& scale, const Rational& offset) const;

    bool contains_point(const Rational& x) const;
    bool contains(const IntervalSet& other) const;  // superset test
    bool disjoint(const IntervalSet& other) const;

    /// Smallest interval containing the set; requires nonempty.
    Interval hull_interval() const;

    bool operator==(const IntervalSet&) const = default;

private:
    std::vector<Interval> parts_;
};

}  // namespace selfsim

#endif
