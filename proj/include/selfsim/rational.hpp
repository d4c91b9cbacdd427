#ifndef SELFSIM_RATIONAL_HPP
#define SELFSIM_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace selfsim {

// Exact rational arithmetic. mpq_class keeps values canonical
// (positive denominator, reduced), which is exactly the invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q" or "p" (optionally signed). Throws on malformed input or q = 0.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + s);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a > b ? a : b; }

}  // namespace selfsim

#endif
