#include "selfsim/ifs.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace selfsim {

namespace {

// Value of the endpoint of phi_i([a,b]) on the min side / max side.
Rational image_min(const Similarity& s, const Rational& a, const Rational& b) {
    return s.sign > 0 ? Rational(s.ratio * a + s.translation)
                      : Rational(-s.ratio * b + s.translation);
}
Rational image_max(const Similarity& s, const Rational& a, const Rational& b) {
    return s.sign > 0 ? Rational(s.ratio * b + s.translation)
                      : Rational(-s.ratio * a + s.translation);
}

}  // namespace

IFS IFS::create(std::vector<Similarity> maps) {
    if (maps.size() < 2) throw std::invalid_argument("IFS needs at least 2 maps");
    for (const auto& s : maps) {
        if (s.sign != 1 && s.sign != -1)
            throw std::invalid_argument("similarity sign must be +1 or -1");
        if (s.ratio <= 0 || s.ratio >= 1)
            throw std::invalid_argument("similarity ratio must lie in (0,1)");
    }
    IFS ifs;
    ifs.maps_ = std::move(maps);

    // The hull [a,b] satisfies a = min_i image_min(i) and b = max_i image_max(i).
    // Enumerate which map attains each extremum and solve the resulting
    // linear system exactly; accept the consistent solution.
    const int n = ifs.size();
    bool found = false;
    for (int i0 = 1; i0 <= n && !found; ++i0) {
        for (int i1 = 1; i1 <= n && !found; ++i1) {
            const Similarity& smin = ifs.map(i0);
            const Similarity& smax = ifs.map(i1);
            Rational a, b;
            if (smin.sign > 0 && smax.sign > 0) {
                a = smin.fixed_point();
                b = smax.fixed_point();
            } else if (smin.sign > 0) {
                a = smin.fixed_point();
                b = -smax.ratio * a + smax.translation;
            } else if (smax.sign > 0) {
                b = smax.fixed_point();
                a = -smin.ratio * b + smin.translation;
            } else {
                // a = -r0 b + t0, b = -r1 a + t1
                a = (smin.translation - smin.ratio * smax.translation) /
                    (1 - smin.ratio * smax.ratio);
                b = -smax.ratio * a + smax.translation;
            }
            if (a >= b) continue;
            bool ok = true;
            for (int i = 1; i <= n && ok; ++i) {
                if (image_min(ifs.map(i), a, b) < a) ok = false;
                if (image_max(ifs.map(i), a, b) > b) ok = false;
            }
            if (!ok) continue;
            ifs.hull_ = Interval::closed(a, b);
            // a = phi_{i0}(a or b) depending on orientation; unfold into
            // a prefix/cycle word certificate of F-membership.
            if (smin.sign > 0) {
                ifs.cert_lo_ = PointCertificate{{}, {i0}};
            } else if (smax.sign > 0) {
                ifs.cert_lo_ = PointCertificate{{i0}, {i1}};
            } else {
                ifs.cert_lo_ = PointCertificate{{}, {i0, i1}};
            }
            if (smax.sign > 0) {
                ifs.cert_hi_ = PointCertificate{{}, {i1}};
            } else if (smin.sign > 0) {
                ifs.cert_hi_ = PointCertificate{{i1}, {i0}};
            } else {
                ifs.cert_hi_ = PointCertificate{{}, {i1, i0}};
            }
            found = true;
        }
    }
    if (!found)
        throw std::invalid_argument("degenerate IFS: attractor is a single point");
    return ifs;
}

AffineMap IFS::word_map(const Word& w) const {
    AffineMap m = AffineMap::identity();
    for (int letter : w) m = m.compose(map(letter).map());
    return m;
}

Rational IFS::word_ratio(const Word& w) const {
    Rational r = 1;
    for (int letter : w) r *= map(letter).ratio;
    return r;
}

IntervalSet IFS::apply_word(const Word& w, const IntervalSet& s) const {
    AffineMap m = word_map(w);
    return s.apply_affine(m.scale, m.offset);
}

IntervalSet IFS::image(const IntervalSet& s) const {
    IntervalSet out;
    for (const auto& sim : maps_) {
        AffineMap m = sim.map();
        out = out.unite(s.apply_affine(m.scale, m.offset));
    }
    return out;
}

IntervalSet IFS::iterate(int n, IntervalSet s) const {
    for (int k = 0; k < n; ++k) s = image(s);
    return s;
}

std::vector<std::pair<Word, Interval>> IFS::cover_words(const Rational& delta) const {
    if (delta <= 0) throw std::invalid_argument("cover: delta must be positive");
    std::vector<std::pair<Word, Interval>> out;
    const Rational hull_len = hull_.length();
    struct Item {
        Word w;
        AffineMap m;
        Rational len;
    };
    std::vector<Item> stack{{Word{}, AffineMap::identity(), hull_len}};
    while (!stack.empty()) {
        Item it = std::move(stack.back());
        stack.pop_back();
        if (it.len <= delta) {
            Rational x = it.m(hull_.lo);
            Rational y = it.m(hull_.hi);
            if (x > y) std::swap(x, y);
            out.emplace_back(std::move(it.w), Interval::closed(std::move(x), std::move(y)));
            continue;
        }
        for (int i = 1; i <= size(); ++i) {
            Word w = it.w;
            w.push_back(i);
            stack.push_back(Item{std::move(w), it.m.compose(map(i).map()),
                                 it.len * map(i).ratio});
        }
    }
    return out;
}

IntervalSet IFS::cover(const Rational& delta) const {
    std::vector<Interval> ivs;
    for (auto& [w, iv] : cover_words(delta)) ivs.push_back(iv);
    return IntervalSet::from_intervals(std::move(ivs));
}

Rational IFS::ratio_sum() const {
    Rational s = 0;
    for (const auto& m : maps_) s += m.ratio;
    return s;
}

Rational IFS::certificate_point(const PointCertificate& c) const {
    if (c.cycle.empty()) throw std::invalid_argument("certificate cycle is empty");
    AffineMap cyc = word_map(c.cycle);
    Rational fix = cyc.offset / (1 - cyc.scale);
    return word_map(c.prefix)(fix);
}

DimensionEnclosure moran_dimension(const IFS& ifs, const Rational& target_width) {
    if (target_width <= 0)
        throw std::invalid_argument("moran_dimension: target width must be positive");
    Rational s1 = ifs.ratio_sum();
    if (s1 > 1)
        throw std::domain_error("moran_dimension: sum of ratios exceeds 1");
    if (s1 == 1) {
        return DimensionEnclosure{Enclosure::from_bounds(Rational(1), Rational(1)),
                                  target_width};
    }
    // Bisect on dyadic rationals. s -> sum r_i^s is strictly decreasing with
    // value N >= 2 at s = 0 and s1 < 1 at s = 1, so the root lies in (0,1).
    Rational lo = 0, hi = 1;
    mpfr_prec_t prec = 96;
    const Rational one(1);
    int iterations = 0;
    while (hi - lo > target_width) {
        if (++iterations > 100000)
            throw std::runtime_error("moran_dimension: bisection failed to converge");
        // When the trial point happens to be the exact root (e.g. s = 1/2
        // for three ratio-1/9 maps), no finite precision can separate the
        // sum from 1; fall back to other interior points, at most one of
        // which can be the root.
        static const Rational kOffsets[] = {Rational(1, 2), Rational(5, 11),
                                            Rational(3, 7), Rational(2, 5),
                                            Rational(1, 3)};
        std::size_t offset = 0;
        Rational mid = lo + (hi - lo) * kOffsets[offset];
        bool decided = false;
        while (!decided) {
            Enclosure e = Enclosure::from_rational(mid, prec);
            Enclosure sum = Enclosure::zero(prec);
            for (const auto& m : ifs.maps())
                sum = sum + Enclosure::from_rational(m.ratio, prec).pow(e);
            if (sum.definitely_ge(one)) {
                lo = mid;
                decided = true;
            } else if (sum.definitely_le(one)) {
                hi = mid;
                decided = true;
            } else if (prec < (1 << 14)) {
                prec *= 2;
            } else if (++offset < std::size(kOffsets)) {
                mid = lo + (hi - lo) * kOffsets[offset];
                prec = 96;
            } else {
                throw std::runtime_error("moran_dimension: precision blow-up");
            }
        }
    }
    // Dyadic bounds: pick enough bits to represent them exactly, so the
    // certified inequalities sum r^lower >= 1 >= sum r^upper survive.
    mpfr_prec_t out_prec = std::max<mpfr_prec_t>(128, iterations + 32);
    return DimensionEnclosure{Enclosure::from_bounds(lo, hi, out_prec), target_width};
}

namespace {

// Prime exponent vector of a positive integer; throws if a factor resists
// trial division and is not a probable prime.
void accumulate_factors(const Integer& value, int sign, std::map<Integer, long>& out) {
    Integer n = value;
    if (n <= 0) throw std::domain_error("factorization of nonpositive integer");
    for (unsigned long p = 2; p <= 1048576UL && n > 1; p = (p == 2 ? 3 : p + 2)) {
        if (mpz_cmp_ui(n.get_mpz_t(), p * p) < 0 && mpz_cmp_ui(n.get_mpz_t(), p) != 0)
            break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            out[Integer(p)] += sign;
        }
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0)
            throw std::domain_error("lattice_classify: ratio has an intractable factor");
        out[n] += sign;
    }
}

Rational power_of(const Rational& base, long k) {
    // base^k for k > 0 via exact integer powers.
    Rational num, den;
    mpz_pow_ui(num.get_num_mpz_t(), base.get_num().get_mpz_t(), k);
    mpz_pow_ui(num.get_den_mpz_t(), base.get_den().get_mpz_t(), k);
    num.canonicalize();
    (void)den;
    return num;
}

}  // namespace

LatticeClass lattice_classify(const IFS& ifs) {
    // Exponent vector of each ratio over the primes appearing in any of them.
    std::vector<std::map<Integer, long>> vecs;
    for (const auto& m : ifs.maps()) {
        std::map<Integer, long> v;
        accumulate_factors(m.ratio.get_num(), +1, v);
        accumulate_factors(m.ratio.get_den(), -1, v);
        std::erase_if(v, [](const auto& kv) { return kv.second == 0; });
        if (v.empty()) throw std::logic_error("ratio 1 cannot occur");
        vecs.push_back(std::move(v));
    }

    // Primitive direction of the first vector.
    long g1 = 0;
    for (const auto& [p, e] : vecs[0]) g1 = std::gcd(g1, e);
    g1 = std::abs(g1);
    std::map<Integer, long> primitive;
    for (const auto& [p, e] : vecs[0]) primitive[p] = e / g1;

    // Each vector must be an integer multiple of the primitive direction.
    std::vector<long> multiples;
    for (const auto& v : vecs) {
        if (v.size() != primitive.size()) return LatticeClass{LatticeClass::Tag::Nonlattice};
        long mult = 0;
        for (const auto& [p, e] : v) {
            auto it = primitive.find(p);
            if (it == primitive.end()) return LatticeClass{LatticeClass::Tag::Nonlattice};
            if (e % it->second != 0) return LatticeClass{LatticeClass::Tag::Nonlattice};
            long q = e / it->second;
            if (mult == 0)
                mult = q;
            else if (mult != q)
                return LatticeClass{LatticeClass::Tag::Nonlattice};
        }
        multiples.push_back(mult);
    }

    long d = 0;
    for (long m : multiples) d = std::gcd(d, m);
    d = std::abs(d);

    // Base value of the primitive direction, raised to the gcd of multiples.
    Rational unit(1);
    for (const auto& [p, e] : primitive) {
        Rational q(p);
        long k = e * d;
        Rational factor = power_of(q, std::abs(k));
        unit *= (k >= 0) ? factor : Rational(1) / factor;
    }
    // Convention: base in (0,1) with positive exponents k_i.
    std::vector<long> exponents;
    bool flip = unit > 1;
    if (flip) unit = Rational(1) / unit;
    for (long m : multiples) exponents.push_back(flip ? -m / d : m / d);

    LatticeClass result;
    result.tag = LatticeClass::Tag::Lattice;
    result.base = unit;
    result.exponents = exponents;
    // Exact verification: r_i = base^{k_i} with k_i > 0.
    for (int i = 0; i < ifs.size(); ++i) {
        if (exponents[i] <= 0 || power_of(unit, exponents[i]) != ifs.map(i + 1).ratio)
            throw std::logic_error("lattice_classify: verification failed");
    }
    return result;
}

}  // namespace selfsim
