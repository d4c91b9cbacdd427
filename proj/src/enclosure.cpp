#include "selfsim/enclosure.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace selfsim {

namespace {

mpfr_prec_t join_prec(const Enclosure& a, const Enclosure& b) {
    return std::max(a.precision(), b.precision());
}

}  // namespace

Enclosure::Enclosure(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Enclosure::Enclosure(const Enclosure& other) : prec_(other.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Enclosure::Enclosure(Enclosure&& other) noexcept : prec_(other.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

Enclosure& Enclosure::operator=(const Enclosure& other) {
    if (this != &other) {
        mpfr_set_prec(lo_, other.prec_);
        mpfr_set_prec(hi_, other.prec_);
        prec_ = other.prec_;
        mpfr_set(lo_, other.lo_, MPFR_RNDD);
        mpfr_set(hi_, other.hi_, MPFR_RNDU);
    }
    return *this;
}

Enclosure& Enclosure::operator=(Enclosure&& other) noexcept {
    if (this != &other) {
        mpfr_swap(lo_, other.lo_);
        mpfr_swap(hi_, other.hi_);
        std::swap(prec_, other.prec_);
    }
    return *this;
}

Enclosure::~Enclosure() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Enclosure Enclosure::from_rational(const Rational& q, mpfr_prec_t prec) {
    Enclosure e(prec);
    mpfr_set_q(e.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(e.hi_, q.get_mpq_t(), MPFR_RNDU);
    return e;
}

Enclosure Enclosure::from_bounds(const Rational& lo, const Rational& hi, mpfr_prec_t prec) {
    if (lo > hi) throw std::invalid_argument("enclosure bounds out of order");
    Enclosure e(prec);
    mpfr_set_q(e.lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(e.hi_, hi.get_mpq_t(), MPFR_RNDU);
    return e;
}

Enclosure Enclosure::zero(mpfr_prec_t prec) { return Enclosure(prec); }

Enclosure Enclosure::operator+(const Enclosure& rhs) const {
    Enclosure r(join_prec(*this, rhs));
    mpfr_add(r.lo_, lo_, rhs.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, rhs.hi_, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::operator-(const Enclosure& rhs) const {
    Enclosure r(join_prec(*this, rhs));
    mpfr_sub(r.lo_, lo_, rhs.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, rhs.lo_, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::operator*(const Enclosure& rhs) const {
    Enclosure r(join_prec(*this, rhs));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    // lower: min over the four corner products rounded down
    mpfr_mul(r.lo_, lo_, rhs.lo_, MPFR_RNDD);
    mpfr_mul(t, lo_, rhs.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, rhs.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, rhs.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    // upper: max over the four corner products rounded up
    mpfr_mul(r.hi_, lo_, rhs.lo_, MPFR_RNDU);
    mpfr_mul(t, lo_, rhs.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, rhs.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, rhs.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

Enclosure Enclosure::operator/(const Enclosure& rhs) const {
    if (rhs.contains_zero()) throw std::domain_error("division by enclosure containing 0");
    Enclosure r(join_prec(*this, rhs));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    mpfr_div(r.lo_, lo_, rhs.lo_, MPFR_RNDD);
    mpfr_div(t, lo_, rhs.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, hi_, rhs.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, hi_, rhs.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(r.hi_, lo_, rhs.lo_, MPFR_RNDU);
    mpfr_div(t, lo_, rhs.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, hi_, rhs.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, hi_, rhs.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

Enclosure Enclosure::operator-() const {
    Enclosure r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::operator+(const Rational& rhs) const {
    return *this + from_rational(rhs, prec_);
}
Enclosure Enclosure::operator-(const Rational& rhs) const {
    return *this - from_rational(rhs, prec_);
}
Enclosure Enclosure::operator*(const Rational& rhs) const {
    return *this * from_rational(rhs, prec_);
}
Enclosure Enclosure::operator/(const Rational& rhs) const {
    return *this / from_rational(rhs, prec_);
}

Enclosure operator+(const Rational& lhs, const Enclosure& rhs) {
    return Enclosure::from_rational(lhs, rhs.precision()) + rhs;
}
Enclosure operator-(const Rational& lhs, const Enclosure& rhs) {
    return Enclosure::from_rational(lhs, rhs.precision()) - rhs;
}
Enclosure operator*(const Rational& lhs, const Enclosure& rhs) {
    return Enclosure::from_rational(lhs, rhs.precision()) * rhs;
}
Enclosure operator/(const Rational& lhs, const Enclosure& rhs) {
    return Enclosure::from_rational(lhs, rhs.precision()) / rhs;
}

Enclosure Enclosure::pow(const Enclosure& exponent) const {
    if (mpfr_sgn(lo_) <= 0)
        throw std::domain_error("pow requires a positive base enclosure");
    Enclosure r(join_prec(*this, exponent));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    // x^y is monotone in each argument for fixed sign regimes, but taking
    // all four corners outward is sound without case analysis.
    mpfr_pow(r.lo_, lo_, exponent.lo_, MPFR_RNDD);
    mpfr_pow(t, lo_, exponent.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_pow(t, hi_, exponent.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_pow(t, hi_, exponent.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_pow(r.hi_, lo_, exponent.lo_, MPFR_RNDU);
    mpfr_pow(t, lo_, exponent.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_pow(t, hi_, exponent.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_pow(t, hi_, exponent.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

Enclosure pow_rational(const Rational& base, const Enclosure& exponent, mpfr_prec_t prec) {
    if (base <= 0) throw std::domain_error("pow_rational requires base > 0");
    mpfr_prec_t p = std::max(prec, exponent.precision());
    return Enclosure::from_rational(base, p).pow(exponent);
}

Enclosure Enclosure::hull(const Enclosure& other) const {
    Enclosure r(join_prec(*this, other));
    mpfr_min(r.lo_, lo_, other.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, hi_, other.hi_, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::intersect(const Enclosure& other) const {
    Enclosure r(join_prec(*this, other));
    mpfr_max(r.lo_, lo_, other.lo_, MPFR_RNDD);
    mpfr_min(r.hi_, hi_, other.hi_, MPFR_RNDU);
    if (mpfr_cmp(r.lo_, r.hi_) > 0)
        throw std::domain_error("intersection of disjoint enclosures");
    return r;
}

bool Enclosure::contains(const Rational& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool Enclosure::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Enclosure::definitely_positive() const { return mpfr_sgn(lo_) > 0; }
bool Enclosure::definitely_negative() const { return mpfr_sgn(hi_) < 0; }

bool Enclosure::definitely_lt(const Enclosure& other) const {
    return mpfr_cmp(hi_, other.lo_) < 0;
}
bool Enclosure::definitely_gt(const Enclosure& other) const {
    return mpfr_cmp(lo_, other.hi_) > 0;
}
bool Enclosure::definitely_le(const Rational& q) const {
    return mpfr_cmp_q(hi_, q.get_mpq_t()) <= 0;
}
bool Enclosure::definitely_ge(const Rational& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) >= 0;
}

Rational Enclosure::lower_rational() const {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), lo_);
    return q;
}

Rational Enclosure::upper_rational() const {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), hi_);
    return q;
}

Rational Enclosure::width() const { return upper_rational() - lower_rational(); }

double Enclosure::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Enclosure::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Enclosure::midpoint_double() const {
    return 0.5 * (lower_double() + upper_double());
}

namespace {
std::string format_directed(const mpfr_t x, int digits, mpfr_rnd_t rnd) {
    char* buf = nullptr;
    std::string fmt = "%." + std::to_string(digits) + "R*g";
    mpfr_asprintf(&buf, fmt.c_str(), rnd, x);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}
}  // namespace

std::string Enclosure::lower_string(int digits) const {
    return format_directed(lo_, digits, MPFR_RNDD);
}

std::string Enclosure::upper_string(int digits) const {
    return format_directed(hi_, digits, MPFR_RNDU);
}

std::string Enclosure::to_string(int digits) const {
    return "[" + lower_string(digits) + ", " + upper_string(digits) + "]";
}

}  // namespace selfsim
