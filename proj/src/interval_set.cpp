#include "selfsim/interval_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace selfsim {

bool Interval::contains(const Rational& x) const {
    if (x < lo || x > hi) return false;
    if (x == lo && !lo_closed) return false;
    if (x == hi && !hi_closed) return false;
    return true;
}

std::optional<Interval> Interval::make(Rational lo, Rational hi, bool lo_closed,
                                       bool hi_closed) {
    if (lo > hi) return std::nullopt;
    if (lo == hi && !(lo_closed && hi_closed)) return std::nullopt;
    return Interval{std::move(lo), std::move(hi), lo_closed, hi_closed};
}

Interval Interval::closed(Rational lo, Rational hi) {
    return Interval{std::move(lo), std::move(hi), true, true};
}

Interval Interval::open(Rational lo, Rational hi) {
    return Interval{std::move(lo), std::move(hi), false, false};
}

Interval Interval::point(Rational x) { return Interval{x, x, true, true}; }

namespace {

// Intersection of two intervals, empty -> nullopt.
std::optional<Interval> intersect_intervals(const Interval& a, const Interval& b) {
    Rational lo;
    bool lo_closed;
    if (a.lo > b.lo) {
        lo = a.lo;
        lo_closed = a.lo_closed;
    } else if (b.lo > a.lo) {
        lo = b.lo;
        lo_closed = b.lo_closed;
    } else {
        lo = a.lo;
        lo_closed = a.lo_closed && b.lo_closed;
    }
    Rational hi;
    bool hi_closed;
    if (a.hi < b.hi) {
        hi = a.hi;
        hi_closed = a.hi_closed;
    } else if (b.hi < a.hi) {
        hi = b.hi;
        hi_closed = b.hi_closed;
    } else {
        hi = a.hi;
        hi_closed = a.hi_closed && b.hi_closed;
    }
    return Interval::make(std::move(lo), std::move(hi), lo_closed, hi_closed);
}

// a \ b as zero, one or two intervals.
void subtract_intervals(const Interval& a, const Interval& b, std::vector<Interval>& out) {
    // part of a strictly left of b (keeping b.lo itself when b.lo is open)
    {
        Rational hi;
        bool hi_closed;
        if (b.lo < a.hi) {
            hi = b.lo;
            hi_closed = !b.lo_closed;
        } else {
            hi = a.hi;
            hi_closed = b.lo > a.hi ? a.hi_closed : (a.hi_closed && !b.lo_closed);
        }
        if (auto piece = Interval::make(a.lo, std::move(hi), a.lo_closed, hi_closed))
            out.push_back(*piece);
    }
    // part of a strictly right of b
    {
        Rational lo;
        bool lo_closed;
        if (b.hi > a.lo) {
            lo = b.hi;
            lo_closed = !b.hi_closed;
        } else {
            lo = a.lo;
            lo_closed = b.hi < a.lo ? a.lo_closed : (a.lo_closed && !b.hi_closed);
        }
        if (auto piece = Interval::make(std::move(lo), a.hi, lo_closed, a.hi_closed))
            out.push_back(*piece);
    }
}

// Whether sorted-adjacent intervals form one connected component.
bool mergeable(const Interval& cur, const Interval& next) {
    if (next.lo < cur.hi) return true;
    if (next.lo == cur.hi) return cur.hi_closed || next.lo_closed;
    return false;
}

}  // namespace

IntervalSet IntervalSet::from_intervals(std::vector<Interval> ivs) {
    std::sort(ivs.begin(), ivs.end(), [](const Interval& a, const Interval& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        if (a.lo_closed != b.lo_closed) return a.lo_closed;
        return a.hi < b.hi;
    });
    IntervalSet s;
    for (auto& iv : ivs) {
        if (!s.parts_.empty() && mergeable(s.parts_.back(), iv)) {
            Interval& cur = s.parts_.back();
            if (iv.hi > cur.hi) {
                cur.hi = iv.hi;
                cur.hi_closed = iv.hi_closed;
            } else if (iv.hi == cur.hi) {
                cur.hi_closed = cur.hi_closed || iv.hi_closed;
            }
        } else {
            s.parts_.push_back(std::move(iv));
        }
    }
    return s;
}

Rational IntervalSet::measure() const {
    Rational m = 0;
    for (const auto& iv : parts_) m += iv.length();
    return m;
}

IntervalSet IntervalSet::inflate(const Rational& eps) const {
    if (eps < 0) throw std::invalid_argument("inflate: negative epsilon");
    std::vector<Interval> out;
    out.reserve(parts_.size());
    for (const auto& iv : parts_)
        out.push_back(Interval::closed(iv.lo - eps, iv.hi + eps));
    return from_intervals(std::move(out));
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
    std::vector<Interval> all = parts_;
    all.insert(all.end(), other.parts_.begin(), other.parts_.end());
    return from_intervals(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
    std::vector<Interval> out;
    for (const auto& a : parts_)
        for (const auto& b : other.parts_) {
            if (b.lo > a.hi) break;
            if (auto iv = intersect_intervals(a, b)) out.push_back(*iv);
        }
    return from_intervals(std::move(out));
}

IntervalSet IntervalSet::subtract(const IntervalSet& other) const {
    std::vector<Interval> current = parts_;
    for (const auto& b : other.parts_) {
        std::vector<Interval> next;
        for (const auto& a : current) subtract_intervals(a, b, next);
        current = std::move(next);
    }
    return from_intervals(std::move(current));
}

IntervalSet IntervalSet::closure() const {
    std::vector<Interval> out = parts_;
    for (auto& iv : out) {
        iv.lo_closed = true;
        iv.hi_closed = true;
    }
    return from_intervals(std::move(out));
}

IntervalSet IntervalSet::interior() const {
    std::vector<Interval> out;
    for (const auto& iv : parts_) {
        if (iv.is_point()) continue;
        out.push_back(Interval::open(iv.lo, iv.hi));
    }
    return from_intervals(std::move(out));
}

IntervalSet IntervalSet::apply_affine(const Rational& scale, const Rational& offset) const {
    if (scale == 0) throw std::invalid_argument("apply_affine: zero scale");
    std::vector<Interval> out;
    out.reserve(parts_.size());
    for (const auto& iv : parts_) {
        Rational a = scale * iv.lo + offset;
        Rational b = scale * iv.hi + offset;
        if (scale > 0)
            out.push_back(Interval{a, b, iv.lo_closed, iv.hi_closed});
        else
            out.push_back(Interval{b, a, iv.hi_closed, iv.lo_closed});
    }
    return from_intervals(std::move(out));
}

bool IntervalSet::contains_point(const Rational& x) const {
    for (const auto& iv : parts_) {
        if (iv.lo > x) return false;
        if (iv.contains(x)) return true;
    }
    return false;
}

bool IntervalSet::contains(const IntervalSet& other) const {
    return other.subtract(*this).empty();
}

bool IntervalSet::disjoint(const IntervalSet& other) const {
    return intersect(other).empty();
}

Interval IntervalSet::hull_interval() const {
    if (parts_.empty()) throw std::domain_error("hull_interval of empty set");
    return Interval{parts_.front().lo, parts_.back().hi, parts_.front().lo_closed,
                    parts_.back().hi_closed};
}

}  // namespace selfsim
