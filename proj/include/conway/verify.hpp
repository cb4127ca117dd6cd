#pragma once

#include <optional>
#include <string>

#include "conway/board.hpp"
#include "conway/pagoda.hpp"

namespace conway {

struct VerifyReport {
    bool ok = false;
    std::string failure;              // empty when ok
    long max_row_reached = 0;
    size_t moves_applied = 0;
    size_t energy_neutral_moves = 0;  // only meaningful with energy_check
};

namespace detail {
inline std::optional<Position> energy_target(const MoveTrace& t) {
    if (!t.claim) return std::nullopt;
    if (t.claim->count_at) return t.claim->count_at->first;
    if (t.claim->row) {
        Position p(static_cast<size_t>(t.params.d), 0);
        p.back() = *t.claim->row;
        return p;
    }
    return std::nullopt;
}
}  // namespace detail

/// Replays a trace from `initial`, checks its claim, and optionally certifies
/// move-by-move that no move increases the pagoda energy toward the claimed
/// target.
inline VerifyReport verify_trace(BoardState state, const MoveTrace& trace, bool energy_check = false) {
    VerifyReport rep;
    std::optional<WeightSpec> spec;
    if (energy_check) {
        auto target = detail::energy_target(trace);
        if (!target) {
            rep.failure = "energy check requested but the trace has no claim to target";
            return rep;
        }
        spec = WeightSpec{*target, trace.params.k};
    }

    for (size_t i = 0; i < trace.moves.size(); ++i) {
        const Move& mv = trace.moves[i];
        if (auto bad = move_violation(state, mv)) {
            rep.failure = "illegal move at index " + std::to_string(i);
            return rep;
        }
        if (spec) {
            int s = sign(move_delta_energy(state, mv, *spec));
            if (s > 0) {
                rep.failure = "energy increase at move index " + std::to_string(i);
                return rep;
            }
            if (s == 0) ++rep.energy_neutral_moves;
        }
        state = apply_move(state, mv);
        ++rep.moves_applied;
    }

    rep.max_row_reached = state.max_row_occupied();
    if (trace.claim && !claim_holds(state, *trace.claim)) {
        rep.failure = "claim not satisfied by final state";
        return rep;
    }
    rep.ok = true;
    return rep;
}

inline VerifyReport verify_trace(const MoveTrace& trace, bool energy_check = false) {
    return verify_trace(BoardState(trace.params), trace, energy_check);
}

}  // namespace conway
