#ifndef SELFSIM_OPENSET_HPP
#define SELFSIM_OPENSET_HPP

#include <optional>
#include <vector>

#include "selfsim/ifs.hpp"

namespace selfsim {

/// Outcome of the exact OSC check for a finite union of open intervals.
struct FeasibilityCheck {
    bool feasible = false;
    enum class Failure { None, NotContained, Overlap };
    Failure failure = Failure::None;
    int i = 0;  // offending pair (1-based letters) when failure == Overlap,
    int j = 0;  // offending letter when failure == NotContained
    IntervalSet witness;  // the overlap, or the escaping part
    /// Pairwise disjointness witnesses on success: (i, j) checked pairs.
    std::vector<std::pair<int, int>> checked_pairs;
};

/// Exact m-fold image of the open hull interior.
IntervalSet convex_iterate(const IFS& ifs, int m);

/// Exact check of phi_i(O) subset O and pairwise disjoint images.
FeasibilityCheck check_feasible(const IFS& ifs, const IntervalSet& open_set);

/// Smallest m <= max_m with Phi^m I feasible, if any.
std::optional<int> find_feasible_convex_iterate(const IFS& ifs, int max_m);

/// Feasibility certificate for U_Lambda (eq-style infinite union generated
/// from the word family Lambda).
struct ULambdaCertificate {
    std::vector<Word> lambda;
    int m = 0;
    /// Depth n at which the superset-disjointness criterion held;
    /// -1 marks an exact finite-union check (Lambda = Sigma^m).
    int verified_depth = -1;
};

/// Searches families kappa Sigma^k with |kappa| + k = m <= max_m, kappa by
/// length then lexicographically; sound, incomplete semi-decision.
std::optional<ULambdaCertificate> construct_U_lambda(const IFS& ifs, int max_m,
                                                     int max_verify_depth);

/// Re-runs the superset-disjointness criterion for a given candidate at one
/// fixed depth. Used for independent re-verification of certificates.
bool verify_u_lambda_at_depth(const IFS& ifs, const std::vector<Word>& lambda,
                              int depth);

struct OpenSetRep {
    enum class Kind { FiniteUnion, ULambda };
    Kind kind = Kind::FiniteUnion;
    IntervalSet set;               // FiniteUnion: the open set itself
    std::vector<Word> lambda;      // ULambda: generating word family
    int m = 0;
    int truncation_depth = 8;      // ULambda: working depth
    bool feasible_certified = false;
    bool strong_certified = false;
    bool compatible_certified = false;

    static OpenSetRep finite_union(IntervalSet open_set, bool feasible);
    static OpenSetRep u_lambda(std::vector<Word> lambda, int m, int truncation_depth,
                               bool feasible);
};

/// Strongness certificate: finds a cover interval contained in O, whose
/// endpoints are F-points. Bounded search; nullopt means "not certified".
std::optional<Rational> certify_strong(const IFS& ifs, const IntervalSet& open_set,
                                       int max_refinements = 12);

/// Compatibility certificate: each boundary point of O is exhibited as a
/// word image of a hull endpoint (hence lies in F). Bounded word depth.
bool certify_compatible(const IFS& ifs, const IntervalSet& open_set, int max_depth = 24);

/// Component of G = O \ closure(Phi O) discovered for a generator.
struct GeneratorComponent {
    Interval interval;  // open
    Rational length;
    bool exact = true;  // endpoints certified exact (always true when finite)
};

/// The data (Gamma, gap lengths d_j, g) driving the measurability criterion.
struct GeneratorData {
    IntervalSet gamma;                       // O \ Phi O (truncated for ULambda)
    std::vector<GeneratorComponent> components;  // G_j, sorted by decreasing length
    std::vector<Rational> gap_lengths;       // diam(G_j), descending
    Rational g;                              // max d_j / 2
    Rational lambda_gamma_lo;                // lambda(Gamma); lo == hi when finite
    Rational lambda_gamma_hi;
    bool finite = true;
    Rational resolution;  // 0 when finite; else bound on undiscovered diameters
};

/// Throws std::invalid_argument when O lacks a feasibility certificate and
/// std::domain_error when g = 0 (Gamma null; trivial set).
GeneratorData generator_data(const IFS& ifs, const OpenSetRep& rep);

}  // namespace selfsim

#endif
