#ifndef SELFSIM_IFS_HPP
#define SELFSIM_IFS_HPP

#include <utility>
#include <vector>

#include "selfsim/enclosure.hpp"
#include "selfsim/interval_set.hpp"
#include "selfsim/rational.hpp"

namespace selfsim {

/// x -> scale*x + offset with scale != 0.
struct AffineMap {
    Rational scale;
    Rational offset;

    Rational operator()(const Rational& x) const { return scale * x + offset; }
    AffineMap compose(const AffineMap& inner) const {
        return AffineMap{scale * inner.scale, scale * inner.offset + offset};
    }
    AffineMap inverse() const {
        return AffineMap{Rational(1) / scale, -offset / scale};
    }
    static AffineMap identity() { return AffineMap{Rational(1), Rational(0)}; }
    bool operator==(const AffineMap&) const = default;
};

/// Contracting similarity x -> sign*ratio*x + translation, ratio in (0,1).
struct Similarity {
    int sign = 1;
    Rational ratio;
    Rational translation;

    AffineMap map() const {
        return AffineMap{sign > 0 ? ratio : Rational(-ratio), translation};
    }
    Rational fixed_point() const {
        return translation / (1 - map().scale);
    }
};

/// Word over the alphabet {1..N}; empty word is the identity.
using Word = std::vector<int>;

/// Membership certificate for a point of F: point = phi_prefix(fix(phi_cycle)).
struct PointCertificate {
    Word prefix;
    Word cycle;  // nonempty
};

class IFS {
public:
    /// Validates (N >= 2, ratios in (0,1), nondegenerate attractor) and
    /// computes the convex hull interval. Throws std::invalid_argument.
    static IFS create(std::vector<Similarity> maps);

    int size() const { return static_cast<int>(maps_.size()); }
    const Similarity& map(int letter) const { return maps_.at(letter - 1); }
    const std::vector<Similarity>& maps() const { return maps_; }

    /// Smallest closed interval [a,b] with Phi[a,b] subset [a,b]; endpoints lie in F.
    const Interval& hull() const { return hull_; }
    IntervalSet hull_set() const { return IntervalSet(hull_); }
    IntervalSet open_hull() const {
        return IntervalSet(Interval::open(hull_.lo, hull_.hi));
    }
    const PointCertificate& hull_lo_certificate() const { return cert_lo_; }
    const PointCertificate& hull_hi_certificate() const { return cert_hi_; }

    AffineMap word_map(const Word& w) const;
    Rational word_ratio(const Word& w) const;

    /// Exact image phi_w(S); the empty word is the identity.
    IntervalSet apply_word(const Word& w, const IntervalSet& s) const;

    /// Phi S = union of the phi_i(S).
    IntervalSet image(const IntervalSet& s) const;
    /// Phi^n S.
    IntervalSet iterate(int n, IntervalSet s) const;

    /// Adaptive cover of F by word images phi_w(hull) of length <= delta,
    /// over a prefix-free word set; normalized (overlaps merged).
    IntervalSet cover(const Rational& delta) const;
    /// Same cover before normalization, with the producing words.
    std::vector<std::pair<Word, Interval>> cover_words(const Rational& delta) const;

    Rational ratio_sum() const;

    /// Evaluates phi_prefix(fix(phi_cycle)) exactly.
    Rational certificate_point(const PointCertificate& c) const;

private:
    IFS() = default;
    std::vector<Similarity> maps_;
    Interval hull_;
    PointCertificate cert_lo_;
    PointCertificate cert_hi_;
};

/// Enclosure of D = dim_M(F), the root of the Moran equation sum r_i^s = 1.
struct DimensionEnclosure {
    Enclosure value;
    Rational requested_width;

    bool definitely_below_one() const { return value.definitely_le(Rational(1)) && !value.contains(Rational(1)); }
    bool exactly_one() const {
        return value.lower_rational() == 1 && value.upper_rational() == 1;
    }
};

/// Root enclosure of width <= target_width in (0,1]. Throws std::domain_error
/// when sum r_i > 1 (no root at or below 1; OSC cannot hold on the line).
DimensionEnclosure moran_dimension(const IFS& ifs, const Rational& target_width);

struct LatticeClass {
    enum class Tag { Lattice, Nonlattice, Unknown };
    Tag tag = Tag::Unknown;
    Rational base;                     // in (0,1) when Lattice
    std::vector<long> exponents;       // r_i = base^{k_i}, gcd(k_i) = 1
};

/// Exact lattice/nonlattice decision via prime-exponent vectors of the ratios.
LatticeClass lattice_classify(const IFS& ifs);

}  // namespace selfsim

#endif
