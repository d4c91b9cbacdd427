#ifndef SELFSIM_ENCLOSURE_HPP
#define SELFSIM_ENCLOSURE_HPP

#include <mpfr.h>

#include <string>

#include "selfsim/rational.hpp"

namespace selfsim {

/// Certified interval [lower, upper] containing an exact real value.
/// Every operation rounds outward (lower toward -inf, upper toward +inf),
/// so any inequality that holds at the endpoints holds for the true value.
class Enclosure {
public:
    static constexpr mpfr_prec_t kDefaultPrec = 128;

    explicit Enclosure(mpfr_prec_t prec = kDefaultPrec);
    Enclosure(const Enclosure& other);
    Enclosure(Enclosure&& other) noexcept;
    Enclosure& operator=(const Enclosure& other);
    Enclosure& operator=(Enclosure&& other) noexcept;
    ~Enclosure();

    static Enclosure from_rational(const Rational& q, mpfr_prec_t prec = kDefaultPrec);
    static Enclosure from_bounds(const Rational& lo, const Rational& hi,
                                 mpfr_prec_t prec = kDefaultPrec);
    static Enclosure zero(mpfr_prec_t prec = kDefaultPrec);

    mpfr_prec_t precision() const { return prec_; }

    Enclosure operator+(const Enclosure& rhs) const;
    Enclosure operator-(const Enclosure& rhs) const;
    Enclosure operator*(const Enclosure& rhs) const;
    Enclosure operator/(const Enclosure& rhs) const;  // rhs must not contain 0
    Enclosure operator-() const;

    Enclosure operator+(const Rational& rhs) const;
    Enclosure operator-(const Rational& rhs) const;
    Enclosure operator*(const Rational& rhs) const;
    Enclosure operator/(const Rational& rhs) const;

    /// base^exponent for a base enclosure with lower > 0.
    Enclosure pow(const Enclosure& exponent) const;

    /// Tightest interval containing both (set union hull).
    Enclosure hull(const Enclosure& other) const;
    /// Intersection; throws std::domain_error when disjoint.
    Enclosure intersect(const Enclosure& other) const;

    bool contains(const Rational& q) const;
    bool contains_zero() const;
    bool definitely_positive() const;  // lower > 0
    bool definitely_negative() const;  // upper < 0
    bool definitely_lt(const Enclosure& other) const;  // upper < other.lower
    bool definitely_gt(const Enclosure& other) const;
    bool definitely_le(const Rational& q) const;  // upper <= q
    bool definitely_ge(const Rational& q) const;

    /// Endpoints are always exactly representable rationals (binary floats).
    Rational lower_rational() const;
    Rational upper_rational() const;
    Rational width() const;

    double lower_double() const;  // rounded down
    double upper_double() const;  // rounded up
    double midpoint_double() const;

    /// Decimal endpoint strings, rounded outward; deterministic for a
    /// given precision, suitable for byte-identical output.
    std::string lower_string(int digits = 25) const;
    std::string upper_string(int digits = 25) const;
    std::string to_string(int digits = 25) const;

private:
    mpfr_t lo_;
    mpfr_t hi_;
    mpfr_prec_t prec_;

    friend Enclosure pow_rational(const Rational& base, const Enclosure& exponent,
                                  mpfr_prec_t prec);
};

/// base^exponent for an exact rational base > 0.
Enclosure pow_rational(const Rational& base, const Enclosure& exponent,
                       mpfr_prec_t prec = Enclosure::kDefaultPrec);

Enclosure operator+(const Rational& lhs, const Enclosure& rhs);
Enclosure operator-(const Rational& lhs, const Enclosure& rhs);
Enclosure operator*(const Rational& lhs, const Enclosure& rhs);
Enclosure operator/(const Rational& lhs, const Enclosure& rhs);

}  // namespace selfsim

#endif
