#ifndef SELFSIM_TESTS_HELPERS_HPP
#define SELFSIM_TESTS_HELPERS_HPP

#include <string>
#include <vector>

#include "selfsim/digit.hpp"
#include "selfsim/ifs.hpp"

namespace ts {

using namespace selfsim;

inline Rational rat(const std::string& s) { return parse_rational(s); }

// "0.63092975..." (optionally signed) to the exact rational it denotes.
inline Rational dec(const std::string& s) {
    bool neg = false;
    std::size_t pos = 0;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        pos = 1;
    }
    Integer num(0), den(1);
    bool seen_dot = false;
    for (; pos < s.size(); ++pos) {
        if (s[pos] == '.') {
            seen_dot = true;
            continue;
        }
        num = num * 10 + (s[pos] - '0');
        if (seen_dot) den *= 10;
    }
    Rational q(num, den);
    q.canonicalize();
    return neg ? Rational(-q) : q;
}

// |enclosure - value| <= tol, endpoint-wise.
inline bool close_to(const Enclosure& e, const Rational& value, const Rational& tol) {
    return e.upper_rational() >= value - tol && e.lower_rational() <= value + tol;
}

inline IFS cantor() {
    return IFS::create({Similarity{1, rat("1/3"), rat("0")},
                        Similarity{1, rat("1/3"), rat("2/3")}});
}

// {x/3, (x+1)/3}: attractor in [0, 1/2], images touch at 1/6.
inline IFS third_shift() {
    return IFS::create({Similarity{1, rat("1/3"), rat("0")},
                        Similarity{1, rat("1/3"), rat("1/3")}});
}

// {x/2, (x+1)/2}: attractor [0, 1].
inline IFS unit_halves() {
    return IFS::create({Similarity{1, rat("1/2"), rat("0")},
                        Similarity{1, rat("1/2"), rat("1/2")}});
}

inline DigitSystem overlap_system() {
    return DigitSystem{rat("4"), {rat("0"), rat("1"), rat("6")}};
}

inline IFS overlap_ifs() { return to_ifs(overlap_system()); }

// Frozen oracle decimals (45 significant digits, independent computation).
inline const char* kDimCantor = "0.630929753571457437099527114342760854299585640";
inline const char* kDimOverlap = "0.792481250360578090726869471973908254379907204";
inline const char* kDimHalfThird = "0.787884911025869783628555917298434738269083137";
inline const char* kDimGolden = "0.694241913630617301738790266898595223463567285";
inline const char* kCantorPMax = "2.58304046866039041309161692348390310823437638";
inline const char* kCantorPMin = "2.49497571594624131852863312107638322418474157";
inline const char* kCantorEpsStar = "0.0974937501201926969089564906579694181266357346";
inline const char* kCantorAmplitude = "0.0880647527141490945629838024075198840496348104";
inline const char* kThirdShiftPEnds = "1.66802451568432233695647062688211974880094961";

}  // namespace ts

#endif
