#pragma once

#include <stdexcept>
#include <vector>

#include "conway/algebraic.hpp"
#include "conway/board.hpp"
#include "conway/sequences.hpp"

namespace conway {

namespace detail {
/// m (phi_k + 1)^{d-1} / (phi_k - 1)^d, the element whose base-phi logarithm
/// drives both d-dimensional bounds.
inline FieldElement bound_element(const Int& m, int k, int d) {
    FieldElement phi = FieldElement::phi(k);
    FieldElement one = FieldElement::one(k);
    return (phi + one).pow(d - 1) * (phi - one).pow(d).inverse() * Rat(m);
}
}  // namespace detail

struct UpperBound {
    long row;
    bool strict;  // energy threshold hit exactly; the raw bound was reduced by 1
};

/// Pagoda upper bound on the attainable row in d dimensions. The raw bound is
/// floor(log_phi(m (phi+1)^{d-1}/(phi-1)^d)) + 1; when the argument is exactly
/// a power of phi_k the E_0 > 1 requirement is strict and the bound drops by one.
inline UpperBound upper_bound_row(const GameParams& params) {
    params.validate();
    FloorLog fl = floor_log_phi(detail::bound_element(params.m, params.k, params.d));
    if (fl.exact) return {fl.exponent, true};
    return {fl.exponent + 1, false};
}

/// Constructive lower bound formula: floor of the same logarithm.
inline long lower_bound_row_formula(const GameParams& params) {
    params.validate();
    return floor_log_phi(detail::bound_element(params.m, params.k, params.d)).exponent;
}

/// Highest attainable row of the 1-D game: floor(log_phi(m/(phi_k-1))) + 1
/// for m > 1; a lone checker per cell only ever reaches row 1.
inline long max_row_1d(const Int& m, int k) {
    if (m < 1) throw std::invalid_argument("max_row_1d: m must be >= 1");
    if (m == 1) return 1;
    FieldElement phi = FieldElement::phi(k);
    FieldElement x = (phi - FieldElement::one(k)).inverse() * Rat(m);
    FloorLog fl = floor_log_phi(x);
    return fl.exact ? fl.exponent : fl.exponent + 1;
}

/// floor(m / (phi_k - 1)): the exact cap on checkers placeable on row 1.
inline Int row1_cap(const Int& m, int k) {
    if (m < 1) throw std::invalid_argument("row1_cap: m must be >= 1");
    FieldElement phi = FieldElement::phi(k);
    FieldElement x = (phi - FieldElement::one(k)).inverse() * Rat(m);
    return floor_field(x).value;
}

/// Per-cell counts along the projection chain Z^d -> ... -> Z:
/// m_0 = m, m_{i+1} = m_i + 2 floor(m_i/(phi_k-1)).
inline std::vector<Int> projected_m(const GameParams& params) {
    params.validate();
    std::vector<Int> out{Int(params.m)};
    for (int i = 1; i < params.d; ++i) out.push_back(out.back() + 2 * row1_cap(out.back(), params.k));
    return out;
}

/// Row constructively reached: project to one dimension, then run the 1-D
/// column fill on the amassed per-cell count.
inline long achieved_row(const GameParams& params) {
    params.validate();
    return max_row_1d(projected_m(params).back(), params.k);
}

struct BoundsReport {
    GameParams params;
    long lower = 0;
    long upper = 0;
    bool strict_upper = false;
    long achieved = 0;
    std::vector<Int> projected;
    /// m = 1, d >= 2: the 1-D theorem is applied to the projected count,
    /// which projection has already pushed above 1.
    bool projected_m_substitution = false;
};

inline BoundsReport bounds_report(const GameParams& params) {
    params.validate();
    BoundsReport r;
    r.params = params;
    UpperBound ub = upper_bound_row(params);
    r.upper = ub.row;
    r.strict_upper = ub.strict;
    r.lower = lower_bound_row_formula(params);
    r.projected = projected_m(params);
    r.achieved = achieved_row(params);
    r.projected_m_substitution = (params.m == 1 && params.d >= 2);
    return r;
}

/// C(d) = sum_{i=0..d} eps_i ((phi_k+1)/(phi_k-1))^i for caller-chosen
/// eps_i in (0,2).
inline FieldElement C_bound(int d, int k, const std::vector<Rat>& epsilons) {
    if (static_cast<int>(epsilons.size()) != d + 1)
        throw std::invalid_argument("C_bound: need d+1 epsilons");
    FieldElement phi = FieldElement::phi(k);
    FieldElement one = FieldElement::one(k);
    FieldElement ratio = (phi + one) * (phi - one).inverse();
    FieldElement acc = FieldElement::zero(k);
    for (int i = 0; i <= d; ++i) {
        const Rat& eps = epsilons[static_cast<size_t>(i)];
        if (eps <= 0 || eps >= 2) throw std::invalid_argument("C_bound: epsilon out of (0,2)");
        acc = acc + ratio.pow(i) * eps;
    }
    return acc;
}

namespace detail {
/// Certified dyadic bracket on log_phi of a positive field element, via exact
/// comparisons of y^r against integer powers of phi_k.
inline Interval log_phi_interval(const FieldElement& y, int precision_bits) {
    int k = y.order();
    long r = 1L << precision_bits;
    FieldElement yr = y.pow(r);
    long p = floor_log_phi(yr).exponent;  // phi^p <= y^r < phi^{p+1}
    return {Rat(p, r), Rat(p + 1, r)};
}
}  // namespace detail

/// E(m) = -log_phi(1 - (C(d-2)/m)((phi_k-1)/(phi_k+1))^{d-1}), bracketed.
/// Logarithms leave the field, so this returns a certified interval.
inline Interval error_term_E(const Int& m, int d, int k, const std::vector<Rat>& epsilons) {
    if (d < 2) throw std::invalid_argument("error_term_E: d must be >= 2");
    FieldElement phi = FieldElement::phi(k);
    FieldElement one = FieldElement::one(k);
    FieldElement ratio = (phi - one) * (phi + one).inverse();
    FieldElement inner =
        one - C_bound(d - 2, k, epsilons) * ratio.pow(d - 1) * Rat(Rat(1) / Rat(m));
    if (sign(inner) <= 0) throw std::domain_error("error_term_E: logarithm argument not positive");
    Interval lg = detail::log_phi_interval(inner, 10);
    return {-lg.hi, -lg.lo};
}

struct SingleSquareCaps {
    Int lower;  // projection-then-amass construction
    Int upper;  // floor(((phi_k+1)/(phi_k-1))^d m)
};

inline SingleSquareCaps single_square_caps(const GameParams& params) {
    params.validate();
    Int last = projected_m(params).back();
    Int lower = last + 2 * row1_cap(last, params.k);
    FieldElement phi = FieldElement::phi(params.k);
    FieldElement one = FieldElement::one(params.k);
    FieldElement ratio = (phi + one) * (phi - one).inverse();
    Int upper = floor_field(ratio.pow(params.d) * Rat(params.m)).value;
    return {lower, upper};
}

struct GapEntry {
    Int m;
    long upper;
    long achieved;
};

/// Values of m in [m_from, m_to] where the construction misses the pagoda
/// upper bound.
inline std::vector<GapEntry> scan_gap(int k, int d, const Int& m_from, const Int& m_to) {
    std::vector<GapEntry> out;
    for (Int m = m_from; m <= m_to; ++m) {
        if (m < 1) continue;
        UpperBound ub = upper_bound_row(GameParams{static_cast<int>(m.get_si()), k, d});
        Int chain = m;
        for (int i = 1; i < d; ++i) chain += 2 * row1_cap(chain, k);
        long achieved = max_row_1d(chain, k);
        if (achieved < ub.row) out.push_back({m, ub.row, achieved});
    }
    return out;
}

/// Gap check at one (possibly huge) m.
inline GapEntry gap_at(const Int& m, int k, int d) {
    FloorLog fl = floor_log_phi(detail::bound_element(m, k, d));
    long upper = fl.exact ? fl.exponent : fl.exponent + 1;
    Int chain = m;
    for (int i = 1; i < d; ++i) chain += 2 * row1_cap(chain, k);
    return {m, upper, max_row_1d(chain, k)};
}

}  // namespace conway
