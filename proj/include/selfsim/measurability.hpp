#ifndef SELFSIM_MEASURABILITY_HPP
#define SELFSIM_MEASURABILITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "selfsim/gaps.hpp"
#include "selfsim/ifs.hpp"
#include "selfsim/openset.hpp"

namespace selfsim {

/// One piece of the criterion function: eps -> A*eps^(D-1) + B*eps^D on
/// the half-open subinterval (lo, hi].
struct PowerPiece {
    Rational lo;
    Rational hi;
    Enclosure coef_a;
    Enclosure coef_b;
};

/// Breakpoint provenance: which gap and which scaling level produced it.
struct BreakpointInfo {
    Rational eps;
    std::size_t gap_index;
    long level;
};

/// The renewal-criterion function p on (r*g, g] in exact piecewise-power
/// form. Continuity across breakpoints holds by construction; a nonzero
/// additive tail band accounts for truncated component lists.
struct PiecewisePower {
    Rational domain_lo;  // r*g (excluded)
    Rational domain_hi;  // g (included)
    Rational base;       // lattice base r in (0,1)
    DimensionEnclosure dim;
    std::vector<PowerPiece> pieces;  // partition of (r*g, g], ascending
    std::vector<BreakpointInfo> breakpoints;
    Enclosure tail;  // [0, bound] added to every value; [0,0] when exact

    /// Value at eps in (domain_lo, domain_hi].
    Enclosure eval(const Rational& eps) const;
    /// Value without the tail band.
    Enclosure eval_core(const Rational& eps) const;
    /// One-sided limit as eps decreases to domain_lo.
    Enclosure limit_at_domain_lo() const;
};

/// Exact construction from a complete generator component list.
/// Throws on nonlattice input, g = 0, or a dimension enclosure touching 1.
PiecewisePower p_function(const IFS& ifs, const GeneratorData& gen,
                          const DimensionEnclosure& dim, const LatticeClass& lat);

/// Truncated construction: pieces from the certified-exact components, plus
/// an additive tail band for the undiscovered mass. The undiscovered
/// component lengths must admit a positive lower bound assumed_min_gap;
/// without one, a nonzero undiscovered mass is rejected (the convergence
/// rate of the criterion series has no effective a-priori bound).
PiecewisePower p_truncated(const IFS& ifs, const GeneratorData& gen,
                           const DimensionEnclosure& dim, const LatticeClass& lat,
                           const Rational& assumed_min_gap = Rational(0));

struct Extrema {
    Enclosure min_value;
    Enclosure max_value;
    Enclosure arg_min;
    Enclosure arg_max;
};

/// Global extrema over the closure of the domain, via the per-piece
/// closed form critical point eps* = A(1-D)/(B D).
Extrema p_extrema(const PiecewisePower& pp);

/// max - min with outward rounding; positive lower bound certifies
/// non-constancy of p.
Enclosure amplitude(const PiecewisePower& pp);

enum class VerdictStatus {
    NotMeasurableLattice,
    MeasurableNonlattice,
    MeasurableTrivial,
    Inconclusive,
};

struct VerdictOptions {
    Rational dim_width = Rational(Integer(1), Integer("1000000000000000000000000000000"));
    int max_convex_m = 8;
    int ulambda_max_m = 3;
    int ulambda_max_depth = 8;
    int ulambda_truncation_depth = 8;
    Rational trivial_tol = Rational(Integer(1), Integer(1000000000));
    int trivial_max_iter = 64;
};

struct Verdict {
    VerdictStatus status = VerdictStatus::Inconclusive;
    LatticeClass lattice;
    std::optional<DimensionEnclosure> dim;
    std::optional<Enclosure> amplitude;      // lattice witness
    std::optional<Rational> content;         // trivial (D = 1) case, exact limit value
    std::optional<double> content_estimate;  // nonlattice, empirical, non-normative
    bool osc_certified = false;  // a feasible open set was found
    bool amplitude_available = false;
    int trivial_iterations = 0;
    std::string note;
};

Verdict compute_verdict(const IFS& ifs, const VerdictOptions& options = {});

/// Piecewise-linear report of eps -> lambda(F_eps intersect Gamma)
/// = sum_j min(2 eps, d_j), with breakpoints exactly {d_j / 2}.
struct PluriphaseReport {
    std::vector<Rational> breakpoints;  // ascending, distinct
    std::vector<Rational> slopes;       // one per partition interval, ending 0
    bool piecewise_linear = false;
    std::size_t gap_count = 0;
};

/// Requires gen.finite; throws std::invalid_argument otherwise.
PluriphaseReport pluriphase_check(const IFS& ifs, const GeneratorData& gen);

}  // namespace selfsim

#endif
