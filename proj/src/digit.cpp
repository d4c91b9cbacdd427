#include "selfsim/digit.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace selfsim {
namespace {

void validate(const DigitSystem& sys) {
    if (!(sys.base > 1)) {
        throw std::invalid_argument("digit base must exceed 1");
    }
    if (sys.digits.size() < 2) {
        throw std::invalid_argument("at least two digits required");
    }
    for (std::size_t i = 0; i < sys.digits.size(); ++i) {
        for (std::size_t j = i + 1; j < sys.digits.size(); ++j) {
            if (sys.digits[i] == sys.digits[j]) {
                throw std::invalid_argument("digits must be distinct");
            }
        }
    }
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace

IFS to_ifs(const DigitSystem& sys) {
    validate(sys);
    std::vector<Similarity> maps;
    maps.reserve(sys.digits.size());
    for (const Rational& d : sys.digits) {
        maps.push_back(Similarity{1, Rational(1) / sys.base, d / sys.base});
    }
    return IFS::create(std::move(maps));
}

ModCheck osc_mod_check(const DigitSystem& sys) {
    validate(sys);
    ModCheck out;
    if (!is_integer(sys.base)) {
        return out;
    }
    for (const Rational& d : sys.digits) {
        if (!is_integer(d)) {
            return out;
        }
    }
    out.applicable = true;
    Integer a = sys.base.get_num();
    const int n = static_cast<int>(sys.digits.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Integer diff = sys.digits[i].get_num() - sys.digits[j].get_num();
            if (mpz_divisible_p(diff.get_mpz_t(), a.get_mpz_t())) {
                out.i = i + 1;
                out.j = j + 1;
                return out;
            }
        }
    }
    out.distinct_residues = true;
    out.osc_certified = true;
    return out;
}

SeparationCheck osc_helau_check(const DigitSystem& sys, int max_depth) {
    validate(sys);
    if (max_depth < 1) {
        throw std::invalid_argument("depth must be at least 1");
    }
    SeparationCheck out;
    const int n = static_cast<int>(sys.digits.size());
    Rational lo = sys.digits[0], hi = sys.digits[0];
    for (const Rational& d : sys.digits) {
        lo = min(lo, d);
        hi = max(hi, d);
    }
    const Rational bound = (hi - lo) / (sys.base - 1);

    struct Node {
        Rational parent;  // meaningless when root
        int i = 0, j = 0;  // appended letters (1-based)
        bool root = false;
    };
    std::map<Rational, Node> seen;
    std::vector<Rational> frontier;

    auto reconstruct = [&](Rational delta, int li, int lj) {
        // Walk back to the root, then reverse: letters were appended.
        std::vector<int> us{li}, vs{lj};
        for (;;) {
            const Node& node = seen.at(delta);
            us.push_back(node.i);
            vs.push_back(node.j);
            if (node.root) break;
            delta = node.parent;
        }
        std::reverse(us.begin(), us.end());
        std::reverse(vs.begin(), vs.end());
        out.witness_u = Word(us.begin(), us.end());
        out.witness_v = Word(vs.begin(), vs.end());
    };

    bool have_min = false;
    auto note_magnitude = [&](const Rational& delta) {
        Rational m = abs(delta);
        if (!have_min || m < out.min_difference) {
            out.min_difference = m;
            have_min = true;
        }
    };

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Rational delta = sys.digits[i] - sys.digits[j];
            if (abs(delta) > bound) continue;
            if (seen.emplace(delta, Node{Rational(0), i + 1, j + 1, true}).second) {
                frontier.push_back(delta);
                note_magnitude(delta);
            }
        }
    }
    out.depth_reached = 1;

    for (int depth = 2; depth <= max_depth && !frontier.empty(); ++depth) {
        std::vector<Rational> next;
        for (const Rational& delta : frontier) {
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    Rational child = sys.base * delta + sys.digits[i] - sys.digits[j];
                    if (child == 0) {
                        out.result = SeparationCheck::Result::Fails;
                        out.depth_reached = depth;
                        reconstruct(delta, i + 1, j + 1);
                        return out;
                    }
                    if (abs(child) > bound) continue;
                    if (seen.emplace(child, Node{delta, i + 1, j + 1, false}).second) {
                        next.push_back(child);
                        note_magnitude(child);
                    }
                }
            }
        }
        out.depth_reached = depth;
        frontier = std::move(next);
    }
    out.stabilized = frontier.empty();
    out.result = out.stabilized ? SeparationCheck::Result::Holds
                                : SeparationCheck::Result::Inconclusive;
    return out;
}

OverlapExample example_overlap(int k) {
    if (k < 0) {
        throw std::invalid_argument("k must be nonnegative");
    }
    OverlapExample out;
    out.system = DigitSystem{Rational(4), {Rational(0), Rational(1), Rational(6)}};
    IFS ifs = to_ifs(out.system);

    out.u = {1, 3};
    out.v = {2};
    for (int t = 0; t < k; ++t) {
        out.u.push_back(2);
        out.u.push_back(3);
        out.v.push_back(2);
        out.v.push_back(3);
    }
    out.v.push_back(2);

    AffineMap mu = ifs.word_map(out.u);
    AffineMap mv = ifs.word_map(out.v);
    const Interval& hull = ifs.hull();
    out.image_u = Interval::closed(mu(hull.lo), mu(hull.hi));
    out.image_v = Interval::closed(mv(hull.lo), mv(hull.hi));
    out.endpoint_difference = abs(out.image_v.lo - out.image_u.lo);
    out.interval_length = out.image_u.length();
    Rational olo = max(out.image_u.lo, out.image_v.lo);
    Rational ohi = min(out.image_u.hi, out.image_v.hi);
    out.overlap_length = ohi > olo ? ohi - olo : Rational(0);
    if (!(out.overlap_length > 0)) {
        throw std::logic_error("expected overlapping word images");
    }
    return out;
}

}  // namespace selfsim
