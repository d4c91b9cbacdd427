#include "selfsim/openset.hpp"

#include <stdexcept>

namespace selfsim {

namespace {

std::vector<Word> all_words(int alphabet, int length) {
    std::vector<Word> out{Word{}};
    for (int step = 0; step < length; ++step) {
        std::vector<Word> next;
        next.reserve(out.size() * alphabet);
        for (const auto& w : out)
            for (int i = 1; i <= alphabet; ++i) {
                Word v = w;
                v.push_back(i);
                next.push_back(std::move(v));
            }
        out = std::move(next);
    }
    return out;
}

IntervalSet elementary_union(const IFS& ifs, const std::vector<Word>& lambda) {
    IntervalSet b;
    for (const auto& u : lambda) b = b.unite(ifs.apply_word(u, ifs.hull_set()));
    return b;
}

bool pairwise_disjoint_images(const IFS& ifs, const IntervalSet& s) {
    for (int i = 1; i <= ifs.size(); ++i) {
        AffineMap mi = ifs.map(i).map();
        IntervalSet si = s.apply_affine(mi.scale, mi.offset);
        for (int j = i + 1; j <= ifs.size(); ++j) {
            AffineMap mj = ifs.map(j).map();
            if (!si.disjoint(s.apply_affine(mj.scale, mj.offset))) return false;
        }
    }
    return true;
}

// A_n = union_{|w| <= n} phi_w(closure B) union Phi^{n+1} closed-hull:
// a closed superset of closure(U_Lambda).
IntervalSet depth_superset(const IFS& ifs, const IntervalSet& b_closed, int depth) {
    IntervalSet s = b_closed;
    for (int level = 0; level < depth; ++level) s = b_closed.unite(ifs.image(s));
    return s.unite(ifs.iterate(depth + 1, ifs.hull_set()));
}

}  // namespace

IntervalSet convex_iterate(const IFS& ifs, int m) {
    if (m < 0) throw std::invalid_argument("convex_iterate: m must be >= 0");
    return ifs.iterate(m, ifs.open_hull());
}

FeasibilityCheck check_feasible(const IFS& ifs, const IntervalSet& open_set) {
    FeasibilityCheck result;
    if (open_set.empty()) {
        result.failure = FeasibilityCheck::Failure::NotContained;
        return result;
    }
    std::vector<IntervalSet> images;
    for (int i = 1; i <= ifs.size(); ++i) {
        AffineMap m = ifs.map(i).map();
        images.push_back(open_set.apply_affine(m.scale, m.offset));
        IntervalSet escaped = images.back().subtract(open_set);
        if (!escaped.empty()) {
            result.failure = FeasibilityCheck::Failure::NotContained;
            result.i = i;
            result.witness = escaped;
            return result;
        }
    }
    for (int i = 0; i < ifs.size(); ++i)
        for (int j = i + 1; j < ifs.size(); ++j) {
            IntervalSet overlap = images[i].intersect(images[j]);
            if (!overlap.empty()) {
                result.failure = FeasibilityCheck::Failure::Overlap;
                result.i = i + 1;
                result.j = j + 1;
                result.witness = overlap;
                return result;
            }
            result.checked_pairs.emplace_back(i + 1, j + 1);
        }
    result.feasible = true;
    return result;
}

std::optional<int> find_feasible_convex_iterate(const IFS& ifs, int max_m) {
    for (int m = 0; m <= max_m; ++m)
        if (check_feasible(ifs, convex_iterate(ifs, m)).feasible) return m;
    return std::nullopt;
}

bool verify_u_lambda_at_depth(const IFS& ifs, const std::vector<Word>& lambda, int depth) {
    IntervalSet b = elementary_union(ifs, lambda).closure();
    return pairwise_disjoint_images(ifs, depth_superset(ifs, b, depth));
}

std::optional<ULambdaCertificate> construct_U_lambda(const IFS& ifs, int max_m,
                                                     int max_verify_depth) {
    if (max_m < 0 || max_verify_depth < 0)
        throw std::invalid_argument("construct_U_lambda: caps must be nonnegative");
    for (int m = 0; m <= max_m; ++m) {
        for (int kappa_len = 0; kappa_len <= m; ++kappa_len) {
            int k = m - kappa_len;
            for (const Word& kappa : all_words(ifs.size(), kappa_len)) {
                std::vector<Word> lambda;
                for (const Word& omega : all_words(ifs.size(), k)) {
                    Word u = kappa;
                    u.insert(u.end(), omega.begin(), omega.end());
                    lambda.push_back(std::move(u));
                }
                if (kappa_len == 0) {
                    // Lambda = Sigma^m, where U_Lambda collapses to Phi^m I:
                    // decide feasibility exactly.
                    if (check_feasible(ifs, convex_iterate(ifs, m)).feasible)
                        return ULambdaCertificate{std::move(lambda), m, -1};
                    continue;
                }
                IntervalSet b = elementary_union(ifs, lambda);
                // Necessary condition: the open core of B already sits inside
                // U_Lambda, so overlapping images rule the candidate out.
                if (!pairwise_disjoint_images(ifs, b.interior())) continue;
                IntervalSet b_closed = b.closure();
                for (int n = 0; n <= max_verify_depth; ++n) {
                    if (pairwise_disjoint_images(ifs, depth_superset(ifs, b_closed, n)))
                        return ULambdaCertificate{std::move(lambda), m, n};
                }
            }
        }
    }
    return std::nullopt;
}

OpenSetRep OpenSetRep::finite_union(IntervalSet open_set, bool feasible) {
    OpenSetRep rep;
    rep.kind = Kind::FiniteUnion;
    rep.set = std::move(open_set);
    rep.feasible_certified = feasible;
    return rep;
}

OpenSetRep OpenSetRep::u_lambda(std::vector<Word> lambda, int m, int truncation_depth,
                                bool feasible) {
    OpenSetRep rep;
    rep.kind = Kind::ULambda;
    rep.lambda = std::move(lambda);
    rep.m = m;
    rep.truncation_depth = truncation_depth;
    rep.feasible_certified = feasible;
    return rep;
}

std::optional<Rational> certify_strong(const IFS& ifs, const IntervalSet& open_set,
                                       int max_refinements) {
    Rational delta = ifs.hull().length();
    for (int step = 0; step < max_refinements; ++step) {
        delta /= 2;
        IntervalSet cov = ifs.cover(delta);
        for (const auto& iv : cov.parts())
            if (open_set.contains(IntervalSet(iv))) return delta;
    }
    return std::nullopt;
}

namespace {

// Is x an image phi_w(e) of a hull endpoint, |w| <= max_depth?
bool endpoint_in_f(const IFS& ifs, const Rational& x, int max_depth) {
    struct Node {
        AffineMap m;
        int depth;
    };
    std::vector<Node> stack{{AffineMap::identity(), 0}};
    const Rational a = ifs.hull().lo, b = ifs.hull().hi;
    while (!stack.empty()) {
        Node node = stack.back();
        stack.pop_back();
        Rational lo = node.m(a), hi = node.m(b);
        if (lo > hi) std::swap(lo, hi);
        if (x < lo || x > hi) continue;
        if (node.m(a) == x || node.m(b) == x) return true;
        if (node.depth == max_depth) continue;
        for (int i = 1; i <= ifs.size(); ++i)
            stack.push_back(Node{node.m.compose(ifs.map(i).map()), node.depth + 1});
    }
    return false;
}

}  // namespace

bool certify_compatible(const IFS& ifs, const IntervalSet& open_set, int max_depth) {
    for (const auto& iv : open_set.parts()) {
        if (!endpoint_in_f(ifs, iv.lo, max_depth)) return false;
        if (!endpoint_in_f(ifs, iv.hi, max_depth)) return false;
    }
    return true;
}

namespace {

GeneratorData generator_data_finite(const IFS& ifs, const IntervalSet& open_set) {
    GeneratorData data;
    IntervalSet phi_o = ifs.image(open_set);
    data.gamma = open_set.subtract(phi_o);
    IntervalSet g_region = open_set.subtract(phi_o.closure());
    for (const auto& iv : g_region.parts())
        data.components.push_back(GeneratorComponent{iv, iv.length(), true});
    std::sort(data.components.begin(), data.components.end(),
              [](const GeneratorComponent& a, const GeneratorComponent& b) {
                  if (a.length != b.length) return a.length > b.length;
                  return a.interval.lo < b.interval.lo;
              });
    for (const auto& c : data.components) data.gap_lengths.push_back(c.length);
    if (data.components.empty())
        throw std::domain_error("generator_data: g = 0 (Gamma is null; trivial set)");
    data.g = data.gap_lengths.front() / 2;
    data.lambda_gamma_lo = data.lambda_gamma_hi = data.gamma.measure();
    data.finite = true;
    data.resolution = 0;
    return data;
}

GeneratorData generator_data_u_lambda(const IFS& ifs, const OpenSetRep& rep) {
    const int n = rep.truncation_depth;
    if (n < 1) throw std::invalid_argument("generator_data: truncation depth required");
    IntervalSet b_open = elementary_union(ifs, rep.lambda).interior();
    // U_n = union_{|w| <= n} phi_w(B interior), an increasing exhaustion of U.
    IntervalSet u_n = b_open;
    for (int level = 0; level < n; ++level) u_n = b_open.unite(ifs.image(u_n));
    IntervalSet phi_u_n = ifs.image(u_n);
    IntervalSet remainder = ifs.iterate(n + 1, ifs.hull_set());

    // Every point of Phi^{n+1} hull is within delta of F, hence of
    // closure(Phi U); components of G longer than 2*delta are discovered.
    Rational r_max = 0;
    for (const auto& m : ifs.maps()) r_max = max(r_max, m.ratio);
    Rational delta = ifs.hull().length();
    for (int level = 0; level <= n; ++level) delta *= r_max;

    IntervalSet phi_closed = phi_u_n.closure();
    IntervalSet inner = u_n.subtract(phi_closed.unite(remainder));

    GeneratorData data;
    data.gamma = u_n.subtract(phi_u_n.unite(remainder));
    for (const auto& iv : inner.parts()) {
        // An endpoint is exact when a component of closure(Phi U_n) abuts it:
        // that component certifies the local boundary of closure(Phi U).
        auto is_known = [&](const Rational& x) {
            for (const auto& p : phi_closed.parts())
                if (p.lo == x || p.hi == x) return true;
            return false;
        };
        bool exact = is_known(iv.lo) && is_known(iv.hi);
        data.components.push_back(GeneratorComponent{iv, iv.length(), exact});
    }
    std::sort(data.components.begin(), data.components.end(),
              [](const GeneratorComponent& a, const GeneratorComponent& b) {
                  if (a.length != b.length) return a.length > b.length;
                  return a.interval.lo < b.interval.lo;
              });
    for (const auto& c : data.components) data.gap_lengths.push_back(c.length);
    if (data.components.empty())
        throw std::domain_error("generator_data: no components above truncation resolution");
    data.g = data.gap_lengths.front() / 2;
    Rational shrink = 1 - ifs.ratio_sum();
    data.lambda_gamma_lo = u_n.measure() * shrink;
    data.lambda_gamma_hi = u_n.unite(remainder).measure() * shrink;
    data.finite = false;
    data.resolution = 2 * delta;
    return data;
}

}  // namespace

GeneratorData generator_data(const IFS& ifs, const OpenSetRep& rep) {
    if (!rep.feasible_certified)
        throw std::invalid_argument("generator_data: open set lacks feasibility certificate");
    if (rep.kind == OpenSetRep::Kind::FiniteUnion)
        return generator_data_finite(ifs, rep.set);
    return generator_data_u_lambda(ifs, rep);
}

}  // namespace selfsim
