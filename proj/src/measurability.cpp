#include "selfsim/measurability.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace selfsim {
namespace {

constexpr mpfr_prec_t kPrec = 192;

Enclosure enc(const Rational& q) { return Enclosure::from_rational(q, kPrec); }

// Componentwise min/max of two value enclosures: encloses min(x, y) for any
// x in a, y in b.
Enclosure enclosure_min(const Enclosure& a, const Enclosure& b) {
    return Enclosure::from_bounds(min(a.lower_rational(), b.lower_rational()),
                                  min(a.upper_rational(), b.upper_rational()), kPrec);
}

Enclosure enclosure_max(const Enclosure& a, const Enclosure& b) {
    return Enclosure::from_bounds(max(a.lower_rational(), b.lower_rational()),
                                  max(a.upper_rational(), b.upper_rational()), kPrec);
}

// Smallest level with 2 r^level eps <= d. Requires 0 < r < 1, d > 0, eps > 0.
long level_for(const Rational& d, const Rational& r, const Rational& eps) {
    Rational t = Rational(2) * eps;
    long level = 0;
    while (t > d) {
        t *= r;
        ++level;
    }
    return level;
}

struct PFunctionInputs {
    Rational r;
    Rational g;
    Enclosure lambda_gamma;
    Enclosure d_minus_1;   // D - 1
    Enclosure denom_a;     // r^{D-1} - 1, positive
    Enclosure denom_b;     // 1 - r^D, positive
};

PFunctionInputs prepare_inputs(const GeneratorData& gen, const DimensionEnclosure& dim,
                               const LatticeClass& lat) {
    if (lat.tag != LatticeClass::Tag::Lattice) {
        throw std::invalid_argument(
            "criterion function requires a lattice ratio system");
    }
    if (!dim.definitely_below_one()) {
        throw std::invalid_argument(
            "dimension enclosure must lie strictly below 1; tighten it first");
    }
    if (!(gen.g > 0)) {
        throw std::domain_error("g = 0: generator has no components");
    }
    PFunctionInputs in;
    in.r = lat.base;
    in.g = gen.g;
    in.lambda_gamma =
        Enclosure::from_bounds(gen.lambda_gamma_lo, gen.lambda_gamma_hi, kPrec);
    in.d_minus_1 = dim.value - Rational(1);
    in.denom_a = pow_rational(in.r, in.d_minus_1, kPrec) - Rational(1);
    in.denom_b = Rational(1) - pow_rational(in.r, dim.value, kPrec);
    if (!in.denom_a.definitely_positive() || !in.denom_b.definitely_positive()) {
        throw std::invalid_argument(
            "dimension enclosure too wide to separate the geometric factors");
    }
    return in;
}

// Assembles the piecewise form from an explicit list of component lengths.
PiecewisePower assemble(const PFunctionInputs& in, const DimensionEnclosure& dim,
                        const std::vector<Rational>& lengths, Enclosure tail) {
    PiecewisePower pp;
    pp.base = in.r;
    pp.dim = dim;
    pp.domain_lo = in.r * in.g;
    pp.domain_hi = in.g;
    pp.tail = std::move(tail);

    // Each component contributes exactly one breakpoint d/(2 r^level) in
    // (r g, g]; a breakpoint at g coincides with the domain end.
    std::map<Rational, BreakpointInfo> interior;
    for (std::size_t j = 0; j < lengths.size(); ++j) {
        Rational beta = lengths[j] / 2;
        long level = 0;
        while (beta <= pp.domain_lo) {
            beta /= in.r;
            ++level;
        }
        if (beta < pp.domain_hi) {
            interior.emplace(beta, BreakpointInfo{beta, j, level});
        }
    }
    std::vector<Rational> bounds;
    bounds.push_back(pp.domain_lo);
    for (const auto& [eps, info] : interior) {
        bounds.push_back(eps);
        pp.breakpoints.push_back(info);
    }
    bounds.push_back(pp.domain_hi);

    for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
        PowerPiece piece;
        piece.lo = bounds[k];
        piece.hi = bounds[k + 1];
        Enclosure a = in.lambda_gamma / in.denom_a;
        Enclosure b = Enclosure::zero(kPrec);
        for (const Rational& d : lengths) {
            long level = level_for(d, in.r, piece.hi);
            Enclosure ra = pow_rational(in.r, in.d_minus_1 * Rational(level), kPrec);
            Enclosure rb = pow_rational(in.r, dim.value * Rational(level), kPrec);
            a = a + (ra - Rational(1)) / in.denom_a * d;
            b = b + Rational(2) * rb / in.denom_b;
        }
        piece.coef_a = std::move(a);
        piece.coef_b = std::move(b);
        pp.pieces.push_back(std::move(piece));
    }
    return pp;
}

Enclosure eval_piece(const PowerPiece& piece, const DimensionEnclosure& dim,
                     const Enclosure& eps) {
    Enclosure d_minus_1 = dim.value - Rational(1);
    return piece.coef_a * eps.pow(d_minus_1) + piece.coef_b * eps.pow(dim.value);
}

Enclosure eval_piece(const PowerPiece& piece, const DimensionEnclosure& dim,
                     const Rational& eps) {
    Enclosure d_minus_1 = dim.value - Rational(1);
    return piece.coef_a * pow_rational(eps, d_minus_1, kPrec) +
           piece.coef_b * pow_rational(eps, dim.value, kPrec);
}

struct PieceExtrema {
    Enclosure min_value;
    Enclosure max_value;
    Enclosure arg_min;
    Enclosure arg_max;
};

PieceExtrema piece_extrema(const PowerPiece& piece, const DimensionEnclosure& dim) {
    Enclosure f_lo = eval_piece(piece, dim, piece.lo);
    Enclosure f_hi = eval_piece(piece, dim, piece.hi);
    Enclosure e_lo = enc(piece.lo);
    Enclosure e_hi = enc(piece.hi);
    Enclosure one_minus_d = Rational(1) - dim.value;

    PieceExtrema out;
    // Endpoint maximum holds whenever the piece is decreasing-then-increasing
    // or monotone, i.e. for nonnegative coefficients.
    auto endpoint_max = [&] {
        out.max_value = enclosure_max(f_lo, f_hi);
        if (f_lo.definitely_gt(f_hi)) {
            out.arg_max = e_lo;
        } else if (f_hi.definitely_gt(f_lo)) {
            out.arg_max = e_hi;
        } else {
            out.arg_max = e_lo.hull(e_hi);
        }
    };

    if (piece.coef_a.definitely_positive() && piece.coef_b.definitely_positive() &&
        one_minus_d.definitely_positive()) {
        // Unique interior critical point eps* = A (1-D) / (B D); the minimum
        // sits at eps* clamped into the piece.
        Enclosure eps_star =
            piece.coef_a * one_minus_d / (piece.coef_b * dim.value);
        Rational cl = min(max(eps_star.lower_rational(), piece.lo), piece.hi);
        Rational ch = min(max(eps_star.upper_rational(), piece.lo), piece.hi);
        Enclosure clamped = Enclosure::from_bounds(cl, ch, kPrec);
        out.min_value = eval_piece(piece, dim, clamped);
        out.arg_min = clamped;
        endpoint_max();
        return out;
    }
    bool b_exactly_zero = piece.coef_b.lower_rational() == 0 &&
                          piece.coef_b.upper_rational() == 0;
    if (b_exactly_zero && piece.coef_a.definitely_positive()) {
        // Pure power: monotone, extrema at the endpoints.
        out.min_value = enclosure_min(f_lo, f_hi);
        out.arg_min = f_lo.definitely_lt(f_hi) ? e_lo : e_hi;
        endpoint_max();
        return out;
    }
    // Coefficient signs ambiguous: fall back to a range evaluation over the
    // whole piece. Sound, merely wider.
    Enclosure range = eval_piece(piece, dim, e_lo.hull(e_hi));
    out.min_value = Enclosure::from_bounds(
        range.lower_rational(),
        min(f_lo.upper_rational(), f_hi.upper_rational()), kPrec);
    out.max_value = Enclosure::from_bounds(
        max(f_lo.lower_rational(), f_hi.lower_rational()),
        range.upper_rational(), kPrec);
    out.arg_min = e_lo.hull(e_hi);
    out.arg_max = e_lo.hull(e_hi);
    return out;
}

Extrema extrema_core(const PiecewisePower& pp) {
    if (pp.pieces.empty()) {
        throw std::invalid_argument("empty piecewise function");
    }
    Extrema out;
    bool first = true;
    Rational best_min_hi;
    Rational best_max_lo;
    for (const PowerPiece& piece : pp.pieces) {
        PieceExtrema pe = piece_extrema(piece, pp.dim);
        if (first) {
            out.min_value = pe.min_value;
            out.max_value = pe.max_value;
            out.arg_min = pe.arg_min;
            out.arg_max = pe.arg_max;
            best_min_hi = pe.min_value.upper_rational();
            best_max_lo = pe.max_value.lower_rational();
            first = false;
            continue;
        }
        out.min_value = enclosure_min(out.min_value, pe.min_value);
        out.max_value = enclosure_max(out.max_value, pe.max_value);
        if (pe.min_value.upper_rational() < best_min_hi) {
            best_min_hi = pe.min_value.upper_rational();
            out.arg_min = pe.arg_min;
        }
        if (pe.max_value.lower_rational() > best_max_lo) {
            best_max_lo = pe.max_value.lower_rational();
            out.arg_max = pe.arg_max;
        }
    }
    return out;
}

}  // namespace

Enclosure PiecewisePower::eval_core(const Rational& eps) const {
    if (!(eps > domain_lo) || !(eps <= domain_hi)) {
        throw std::domain_error("eps outside (r g, g]");
    }
    for (const PowerPiece& piece : pieces) {
        if (eps > piece.lo && eps <= piece.hi) {
            return eval_piece(piece, dim, eps);
        }
    }
    throw std::logic_error("pieces do not partition the domain");
}

Enclosure PiecewisePower::eval(const Rational& eps) const {
    return eval_core(eps) + tail;
}

Enclosure PiecewisePower::limit_at_domain_lo() const {
    if (pieces.empty()) {
        throw std::invalid_argument("empty piecewise function");
    }
    return eval_piece(pieces.front(), dim, domain_lo) + tail;
}

PiecewisePower p_function(const IFS& ifs, const GeneratorData& gen,
                          const DimensionEnclosure& dim, const LatticeClass& lat) {
    (void)ifs;
    if (!gen.finite) {
        throw std::invalid_argument(
            "complete component list required; use p_truncated for truncated data");
    }
    PFunctionInputs in = prepare_inputs(gen, dim, lat);
    return assemble(in, dim, gen.gap_lengths, Enclosure::zero(kPrec));
}

PiecewisePower p_truncated(const IFS& ifs, const GeneratorData& gen,
                           const DimensionEnclosure& dim, const LatticeClass& lat,
                           const Rational& assumed_min_gap) {
    (void)ifs;
    PFunctionInputs in = prepare_inputs(gen, dim, lat);

    std::vector<Rational> lengths;
    Rational discovered(0);
    for (const GeneratorComponent& comp : gen.components) {
        if (comp.exact) {
            lengths.push_back(comp.length);
            discovered += comp.length;
        }
    }
    Rational mass = gen.lambda_gamma_hi - discovered;
    if (mass < 0) {
        mass = 0;
    }
    Enclosure tail = Enclosure::zero(kPrec);
    if (mass > 0) {
        if (!(assumed_min_gap > 0)) {
            throw std::domain_error(
                "undiscovered component mass is positive; a minimal component "
                "length assumption is required to bound the tail");
        }
        // Each undiscovered component of length d contributes at most
        // (2 eps)^{1-D} (r^{D-1}/(r^{D-1}-1) + 1/(1-r^D)) d^D to the bracket;
        // with d >= assumed_min_gap, sum d^D <= mass * assumed_min_gap^{D-1},
        // and the eps^{D-1} prefactor turns (2 eps)^{1-D} into the constant
        // 2^{1-D}, uniformly on the domain.
        Enclosure one_minus_d = Rational(1) - dim.value;
        Enclosure kc = pow_rational(in.r, in.d_minus_1, kPrec) / in.denom_a +
                       Rational(1) / in.denom_b;
        Enclosure bound = pow_rational(Rational(2), one_minus_d, kPrec) * kc *
                          pow_rational(assumed_min_gap, in.d_minus_1, kPrec) * mass;
        tail = Enclosure::from_bounds(Rational(0), bound.upper_rational(), kPrec);
    }
    return assemble(in, dim, lengths, std::move(tail));
}

Extrema p_extrema(const PiecewisePower& pp) {
    Extrema out = extrema_core(pp);
    out.min_value = out.min_value + pp.tail;
    out.max_value = out.max_value + pp.tail;
    return out;
}

Enclosure amplitude(const PiecewisePower& pp) {
    Extrema core = extrema_core(pp);
    Enclosure amp = core.max_value - core.min_value;
    // The tail shifts values pointwise by numbers in [0, t], so the true
    // amplitude differs from the core amplitude by at most t either way.
    Rational t = pp.tail.upper_rational();
    amp = amp + Enclosure::from_bounds(-t, t, kPrec);
    Rational lo = max(Rational(0), amp.lower_rational());
    return Enclosure::from_bounds(lo, amp.upper_rational(), kPrec);
}

Verdict compute_verdict(const IFS& ifs, const VerdictOptions& options) {
    Verdict v;
    Rational rsum = ifs.ratio_sum();
    if (rsum > 1) {
        v.status = VerdictStatus::Inconclusive;
        v.note = "contraction ratios sum to more than 1; no open set condition "
                 "is possible on the line";
        return v;
    }
    v.lattice = lattice_classify(ifs);
    if (rsum == 1) {
        // D = 1: measurable, content = lambda(F), obtained as the decreasing
        // limit of cover measures.
        v.status = VerdictStatus::MeasurableTrivial;
        DimensionEnclosure one;
        one.value = Enclosure::from_rational(Rational(1), kPrec);
        one.requested_width = Rational(0);
        v.dim = one;
        Rational delta = ifs.hull().length();
        Rational prev = ifs.cover(delta).measure();
        int iter = 0;
        while (iter < options.trivial_max_iter) {
            delta /= 2;
            Rational cur = ifs.cover(delta).measure();
            ++iter;
            if (prev - cur < options.trivial_tol) {
                prev = cur;
                break;
            }
            prev = cur;
        }
        v.trivial_iterations = iter;
        v.content = prev;
        v.note = iter < options.trivial_max_iter
                     ? "content is the stabilized cover-measure limit"
                     : "content is an upper bound; cover measures had not "
                       "stabilized within the iteration budget";
        return v;
    }

    DimensionEnclosure dim = moran_dimension(ifs, options.dim_width);
    v.dim = dim;
    if (v.lattice.tag == LatticeClass::Tag::Nonlattice) {
        v.status = VerdictStatus::MeasurableNonlattice;
        // Empirical, non-normative content estimate from rescaled volumes.
        std::vector<Rational> grid;
        Rational eps = ifs.hull().length() / 16;
        for (int k = 0; k < 10; ++k) {
            grid.push_back(eps);
            eps /= 2;
        }
        auto samples = rescaled_volume_samples(ifs, grid, dim);
        double acc = 0;
        for (const auto& [e, val] : samples) {
            acc += val.midpoint_double();
        }
        v.content_estimate = acc / static_cast<double>(samples.size());
        v.note = "content estimate is an empirical average of rescaled "
                 "volumes, not a certified value";
        return v;
    }
    if (v.lattice.tag != LatticeClass::Tag::Lattice) {
        v.status = VerdictStatus::Inconclusive;
        v.note = "ratio system could not be classified as lattice or nonlattice";
        return v;
    }

    // Lattice, D < 1: not measurable provided an open set condition holds.
    std::optional<OpenSetRep> rep;
    if (auto m = find_feasible_convex_iterate(ifs, options.max_convex_m)) {
        rep = OpenSetRep::finite_union(convex_iterate(ifs, *m), true);
    } else if (auto cert =
                   construct_U_lambda(ifs, options.ulambda_max_m,
                                      options.ulambda_max_depth)) {
        rep = OpenSetRep::u_lambda(cert->lambda, cert->m,
                                   options.ulambda_truncation_depth, true);
    }
    if (!rep) {
        v.status = VerdictStatus::Inconclusive;
        v.note = "lattice system, but no open set certificate was found; "
                 "non-measurability is not certified";
        return v;
    }
    v.osc_certified = true;
    v.status = VerdictStatus::NotMeasurableLattice;
    try {
        GeneratorData gen = generator_data(ifs, *rep);
        PiecewisePower pp = gen.finite ? p_function(ifs, gen, dim, v.lattice)
                                       : p_truncated(ifs, gen, dim, v.lattice);
        Enclosure amp = amplitude(pp);
        v.amplitude = amp;
        v.amplitude_available = true;
        v.note = amp.definitely_positive()
                     ? "criterion function oscillation certified positive"
                     : "criterion oscillation enclosure computed, but its "
                       "lower bound is not positive at this precision";
    } catch (const std::exception& e) {
        v.amplitude_available = false;
        v.note = std::string("open set certified; oscillation bound "
                             "unavailable: ") +
                 e.what();
    }
    return v;
}

PluriphaseReport pluriphase_check(const IFS& ifs, const GeneratorData& gen) {
    (void)ifs;
    if (!gen.finite) {
        throw std::invalid_argument(
            "pluriphase check requires a complete component list");
    }
    PluriphaseReport rep;
    rep.gap_count = gen.gap_lengths.size();
    std::vector<Rational> points;
    for (const Rational& d : gen.gap_lengths) {
        points.push_back(d / 2);
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    rep.breakpoints = points;
    // Slope of eps -> sum_j min(2 eps, d_j) between consecutive breakpoints:
    // twice the number of components not yet saturated.
    for (std::size_t k = 0; k <= points.size(); ++k) {
        long active = 0;
        for (const Rational& d : gen.gap_lengths) {
            if (k == 0 || d / 2 > points[k - 1]) {
                if (k == 0 || d / 2 != points[k - 1]) {
                    ++active;
                }
            }
        }
        rep.slopes.push_back(Rational(2) * Rational(active));
    }
    bool ok = !rep.slopes.empty() && rep.slopes.back() == 0;
    for (std::size_t k = 0; k + 1 < rep.slopes.size(); ++k) {
        if (rep.slopes[k] < rep.slopes[k + 1]) {
            ok = false;
        }
    }
    rep.piecewise_linear = ok;
    return rep;
}

}  // namespace selfsim
