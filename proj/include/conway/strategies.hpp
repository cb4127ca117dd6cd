#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "conway/algebraic.hpp"
#include "conway/board.hpp"
#include "conway/bounds.hpp"
#include "conway/sequences.hpp"

namespace conway {

/// Per-row requirement table plus the move schedule realizing it on the 1-D
/// board. requirements[i] is the (possibly negative) number of checkers to
/// add to row -i; from `cutoff` on, k consecutive non-positive values close
/// the recurrence and certify non-positivity forever.
struct ConstructionPlan {
    GameParams params;
    long target_row = 0;
    std::vector<Int> requirements;
    long cutoff = 0;
    MoveTrace schedule;
};

namespace detail {

inline void append_jumps(std::vector<Move>& moves, long from_row, const Int& count) {
    for (Int c = 0; c < count; ++c) moves.push_back(Move{Position{from_row}, 0, 1});
}

/// Bottom-up top-up phase: to add requirements[i] checkers to row -i, jump
/// that many times from row -(i+k); deepest augmented row first so every
/// jump's support cells are already in place.
inline void schedule_topup(std::vector<Move>& moves, const std::vector<Int>& req, long cutoff, int k) {
    for (long i = cutoff - 1; i >= 0; --i) {
        const Int& r = req[static_cast<size_t>(i)];
        if (r > 0) append_jumps(moves, -(i + k), r);
    }
}

/// k-nacci jumping on rows base..base+k-1 already holding S_0(n)..S_{k-1}(n):
/// phase p jumps the S_0(n-p) checkers of the current bottom row over the
/// k-1 rows above, shifting the whole pattern one row up.
inline void schedule_knacci_jumps(std::vector<Move>& moves, int k, long n, long base) {
    for (long p = 0; p < n; ++p) append_jumps(moves, base + p, S(k, 0, n - p));
}

/// Scans the requirement recurrence for the first depth with k consecutive
/// non-positive entries. Once k consecutive entries are all >= m the tail can
/// only grow, so absence of a cutoff is certified too.
inline std::optional<long> find_cutoff(const std::vector<Int>& first_values, int k, const Int& m,
                                       std::vector<Int>& out) {
    out = first_values;
    auto value_at = [&](long i) -> const Int& {
        while (static_cast<long>(out.size()) <= i) {
            Int next(-m);
            for (int j = 1; j <= k; ++j) next += out[out.size() - static_cast<size_t>(j)];
            out.push_back(next);
        }
        return out[static_cast<size_t>(i)];
    };
    for (long i = 0; i < 100000; ++i) {
        bool all_nonpos = true, all_big = true;
        for (int j = 0; j < k; ++j) {
            const Int& v = value_at(i + j);
            if (v > 0) all_nonpos = false;
            if (v < m) all_big = false;
        }
        if (all_nonpos) {
            out.resize(static_cast<size_t>(i + k));
            return i;
        }
        if (all_big) return std::nullopt;
    }
    throw std::logic_error("find_cutoff: requirement sequence did not settle");
}

}  // namespace detail

/// Initial 1-D board for pure k-nacci jumping: row -i holds S_{k-i-1}(n)
/// checkers, nothing else.
inline BoardState knacci_jump_initial(int k, long n) {
    BoardState b(GameParams{1, k, 1}, Background::Empty);
    for (int i = 0; i < k; ++i) b.adjust(Position{static_cast<long>(-i)}, S(k, k - i - 1, n));
    return b;
}

/// Moves converting the k-nacci stack into one checker on row n.
inline MoveTrace knacci_jump_plan(int k, long n) {
    if (n < 1) throw std::invalid_argument("knacci_jump_plan: n must be >= 1");
    MoveTrace t;
    t.params = GameParams{1, k, 1};
    detail::schedule_knacci_jumps(t.moves, k, n, -(k - 1));
    t.claim = TraceClaim{n, std::nullopt};
    return t;
}

/// The 1-D column-fill construction reaching row n from the fresh board, or
/// a certified infeasibility when n exceeds the attainable row.
struct ColumnFillResult {
    bool feasible = false;
    ConstructionPlan plan;
};

inline ColumnFillResult column_fill_plan(const Int& m, int k, long n) {
    if (m <= 1) throw std::invalid_argument("column_fill_plan: m must be > 1");
    if (n < 1) throw std::invalid_argument("column_fill_plan: n must be >= 1");

    // Eventually non-positive iff phi^{n-1} (phi-1) <= m, exactly in the field.
    FieldElement phi = FieldElement::phi(k);
    FieldElement gap = phi.pow(n - 1) * (phi - FieldElement::one(k)) - FieldElement::from_rat(k, Rat(m));
    bool cert_feasible = sign(gap) <= 0;

    std::vector<Int> first;
    for (int i = 0; i < k; ++i) first.push_back(knacci(k, n + i + k - 1) - cumulative_a(k, i) * m);
    std::vector<Int> req;
    std::optional<long> cutoff = detail::find_cutoff(first, k, m, req);
    if (cutoff.has_value() != cert_feasible)
        throw std::logic_error("column_fill_plan: integer cutoff and field certificate disagree");
    if (!cutoff) return {};

    ColumnFillResult res;
    res.feasible = true;
    res.plan.params = GameParams{static_cast<int>(m.get_si()), k, 1};
    res.plan.target_row = n;
    res.plan.requirements = req;
    res.plan.cutoff = *cutoff;
    res.plan.schedule.params = res.plan.params;
    detail::schedule_topup(res.plan.schedule.moves, req, *cutoff, k);
    detail::schedule_knacci_jumps(res.plan.schedule.moves, k, n, -(k - 1));
    res.plan.schedule.claim = TraceClaim{n, std::nullopt};
    return res;
}

/// Plan adding exactly floor(m/(phi_k-1)) checkers to row 1 of the fresh
/// 1-D board.
inline ConstructionPlan row1_amass_plan(const Int& m, int k) {
    if (m < 1) throw std::invalid_argument("row1_amass_plan: m must be >= 1");
    Int M = row1_cap(m, k);

    std::vector<Int> first;
    for (int i = 0; i < k; ++i) first.push_back(knacci(k, k + i) * M - cumulative_a(k, i) * m);
    std::vector<Int> req;
    std::optional<long> cutoff = detail::find_cutoff(first, k, m, req);
    if (!cutoff) throw std::logic_error("row1_amass_plan: no cutoff; contradicts M <= m/(phi-1)");

    ConstructionPlan plan;
    plan.params = GameParams{static_cast<int>(m.get_si()), k, 1};
    plan.target_row = 1;
    plan.requirements = req;
    plan.cutoff = *cutoff;
    plan.schedule.params = plan.params;
    detail::schedule_topup(plan.schedule.moves, req, *cutoff, k);
    detail::append_jumps(plan.schedule.moves, -(k - 1), M);
    plan.schedule.claim = TraceClaim{std::nullopt, std::make_pair(Position{1}, M)};
    return plan;
}

/// One projection step: amass M checkers onto the central hyperplane from
/// both sides of every fiber along `axis`, turning per-cell count input_m
/// into input_m + 2M one dimension lower.
struct ProjectionStep {
    int axis;
    Int input_m;
    Int amass_M;
};

/// Composition of projection steps followed by the 1-D column fill at the
/// achieved row. Flattenable to a concrete trace for d = 2; for d >= 3 the
/// per-fiber sub-traces are instantiated on demand via fiber_trace().
struct ProjectionPlan {
    GameParams params;
    std::vector<ProjectionStep> steps;
    ConstructionPlan column;  // on the final per-cell count
    long target_row = 0;
};

inline ProjectionPlan projection_plan(const GameParams& params) {
    params.validate();
    if (params.d < 2) throw std::invalid_argument("projection_plan: d must be >= 2");
    ProjectionPlan plan;
    plan.params = params;
    std::vector<Int> chain = projected_m(params);
    for (int i = 0; i + 1 < params.d; ++i)
        plan.steps.push_back(ProjectionStep{i, chain[static_cast<size_t>(i)],
                                            row1_cap(chain[static_cast<size_t>(i)], params.k)});
    plan.target_row = max_row_1d(chain.back(), params.k);
    auto col = column_fill_plan(chain.back(), params.k, plan.target_row);
    if (!col.feasible) throw std::logic_error("projection_plan: column fill at achieved row infeasible");
    plan.column = std::move(col.plan);
    return plan;
}

/// Amass sub-trace for one side of one fiber, mapped into d dimensions.
/// `fiber` fixes every coordinate except `axis`; side +1 amasses from
/// positive coordinates toward 0, side -1 from negative ones.
inline std::vector<Move> fiber_trace(const ConstructionPlan& amass, int axis, int side,
                                     const Position& fiber) {
    std::vector<Move> out;
    out.reserve(amass.schedule.moves.size());
    for (const Move& mv : amass.schedule.moves) {
        long plan_row = mv.from[0];  // 1-D plan rows; row 1 maps to coordinate 0
        Position p = fiber;
        p[static_cast<size_t>(axis)] = side * (1 - plan_row) * -1;  // row r -> side*(r-1)
        out.push_back(Move{std::move(p), axis, side});
    }
    return out;
}

/// Concrete 2-D trace: amass both sides of every row the column plan touches,
/// then run the column plan up the central column.
inline MoveTrace flatten_projection(const ProjectionPlan& plan) {
    if (plan.params.d != 2)
        throw std::invalid_argument("flatten_projection: only d = 2 traces are flattenable");
    int k = plan.params.k;
    long depth = plan.column.cutoff + k;  // deepest row the column plan touches
    ConstructionPlan amass = row1_amass_plan(plan.steps[0].input_m, k);

    MoveTrace t;
    t.params = plan.params;
    for (long y = 0; y >= -depth; --y) {
        for (int side : {-1, 1}) {
            for (Move& mv : fiber_trace(amass, 0, side, Position{0, y})) t.moves.push_back(std::move(mv));
        }
    }
    for (const Move& mv : plan.column.schedule.moves)
        t.moves.push_back(Move{Position{0, mv.from[0]}, 1, 1});
    t.claim = TraceClaim{plan.target_row, std::nullopt};
    return t;
}

}  // namespace conway
