#pragma once

#include <stdexcept>
#include <string>

#include "conway/algebraic.hpp"
#include "conway/board.hpp"

namespace conway {

/// Weighting alpha^{d(x,T)} with alpha = 1/phi_k; the defining relation
/// 1 - alpha - ... - alpha^k = 0 makes direct jumps toward T energy-neutral.
struct WeightSpec {
    Position target;
    int k;

    WeightSpec(Position t, int order)
        : target(std::move(t)), k(order), alpha_(FieldElement::phi(order).pow(-1)) {}

    const FieldElement& alpha() const { return alpha_; }

private:
    FieldElement alpha_;
};

inline FieldElement weight(const Position& p, const WeightSpec& spec) {
    return spec.alpha().pow(taxicab(p, spec.target));
}

/// Exact closed-form energy of the fresh board with target at height
/// `target_row` >= 0 above the half-space: m alpha^n (1+alpha)^{d-1} / (1-alpha)^d.
inline FieldElement background_energy(const GameParams& params, long target_row, const WeightSpec& spec) {
    params.validate();
    if (target_row < 0) throw std::invalid_argument("background_energy: target row must be >= 0");
    int k = spec.k;
    FieldElement a = spec.alpha();
    FieldElement one = FieldElement::one(k);
    FieldElement col = a.pow(target_row) * (one - a).inverse() * Rat(params.m);
    FieldElement layer = (one + a) * (one - a).inverse();
    return col * layer.pow(params.d - 1);
}

inline FieldElement board_energy(const BoardState& b, const WeightSpec& spec) {
    int k = spec.k;
    FieldElement e = FieldElement::zero(k);
    if (b.background() == Background::HalfSpace)
        e = background_energy(b.params(), row_of(spec.target), spec);
    for (const auto& [p, c] : b.delta()) e = e + weight(p, spec) * Rat(c);
    return e;
}

/// Energy change of a legal move, from the k+1 affected cells only.
inline FieldElement move_delta_energy(const BoardState& b, const Move& mv, const WeightSpec& spec) {
    if (auto bad = move_violation(b, mv))
        throw IllegalMove("move_delta_energy: illegal move", *bad);
    FieldElement delta = weight(step(mv.from, mv.axis, mv.sign, b.params().k), spec);
    for (long j = 0; j < b.params().k; ++j)
        delta = delta - weight(step(mv.from, mv.axis, mv.sign, j), spec);
    return delta;
}

/// Certifies the pagoda property by enumerating move templates. A move along
/// one axis with signed start offset u (in move direction, relative to T's
/// coordinate on that axis) changes the energy by
///     alpha^off * (alpha^{|u+k|} - sum_{j<k} alpha^{|u+j|}),
/// where off is the constant off-axis distance. The off-axis factor is
/// positive, so signs depend on u alone; for u >= 0 the bracket scales by
/// alpha per unit and for u <= -k it vanishes identically, so a finite range
/// of u covers every template.
inline bool verify_pagoda(int k, int d) {
    if (k < 2 || d < 1) throw std::invalid_argument("verify_pagoda: need k >= 2, d >= 1");
    FieldElement a = FieldElement::phi(k).pow(-1);
    for (long u = -2 * k - 2; u <= 2 * k + 2; ++u) {
        FieldElement delta = a.pow(std::abs(u + k));
        for (long j = 0; j < k; ++j) delta = delta - a.pow(std::abs(u + j));
        int s = sign(delta);
        if (s > 0) return false;
        bool toward_same_side = u <= -k;  // the exactly energy-neutral template
        if ((s == 0) != toward_same_side) return false;
    }
    return true;
}

enum class Verdict { UnreachableEnergy, UnreachableInfinite, Inconclusive };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::UnreachableEnergy: return "UNREACHABLE_ENERGY";
        case Verdict::UnreachableInfinite: return "UNREACHABLE_INFINITE";
        default: return "INCONCLUSIVE";
    }
}

/// The two unattainability conditions: target energy exceeding the initial
/// energy, or a background change (infinitely many cells would have to move).
inline Verdict unreachability_check(const BoardState& initial, const BoardState& target,
                                    const WeightSpec& spec) {
    if (!(initial.params() == target.params()))
        throw std::invalid_argument("unreachability_check: parameter mismatch");
    FieldElement gap = board_energy(target, spec) - board_energy(initial, spec);
    if (sign(gap) > 0) return Verdict::UnreachableEnergy;
    if (initial.background() != target.background()) return Verdict::UnreachableInfinite;
    return Verdict::Inconclusive;
}

}  // namespace conway
