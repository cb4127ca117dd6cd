#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "conway/rational.hpp"

namespace conway {

struct GameParams {
    int m = 1;  // checkers per background cell
    int k = 2;  // jump order: a move jumps over k-1 occupied cells
    int d = 1;  // dimension

    void validate() const {
        if (m < 1) throw std::invalid_argument("GameParams: m must be >= 1");
        if (k < 2) throw std::invalid_argument("GameParams: k must be >= 2");
        if (d < 1) throw std::invalid_argument("GameParams: d must be >= 1");
    }

    bool operator==(const GameParams&) const = default;
};

/// Point of Z^d. The last coordinate is the row (height); rows <= 0 form the
/// initially filled half-space.
using Position = std::vector<long>;

inline long row_of(const Position& p) { return p.back(); }

inline long taxicab(const Position& a, const Position& b) {
    if (a.size() != b.size()) throw std::invalid_argument("taxicab: dimension mismatch");
    long acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc += std::abs(a[i] - b[i]);
    return acc;
}

struct Move {
    Position from;
    int axis = 0;
    int sign = 1;  // +1 or -1

    bool operator==(const Move&) const = default;
};

enum class Background { HalfSpace, Empty };

/// Replay claim carried by a trace: either "a checker reaches row n" or
/// "position p holds count c".
struct TraceClaim {
    std::optional<long> row;
    std::optional<std::pair<Position, Int>> count_at;
};

struct MoveTrace {
    GameParams params;
    std::vector<Move> moves;
    std::optional<TraceClaim> claim;
};

/// Immutable-by-convention game state: half-space (or empty) background plus
/// a finite sparse delta of per-cell count differences.
class BoardState {
public:
    explicit BoardState(GameParams params, Background bg = Background::HalfSpace)
        : params_(params), bg_(bg) {
        params_.validate();
    }

    const GameParams& params() const { return params_; }
    Background background() const { return bg_; }
    const std::map<Position, Int>& delta() const { return delta_; }

    Int background_at(const Position& p) const {
        if (bg_ == Background::Empty) return 0;
        return row_of(p) <= 0 ? Int(params_.m) : Int(0);
    }

    Int count_at(const Position& p) const {
        if (static_cast<int>(p.size()) != params_.d)
            throw std::invalid_argument("count_at: dimension mismatch");
        Int c = background_at(p);
        auto it = delta_.find(p);
        if (it != delta_.end()) c += it->second;
        return c;
    }

    Int added_at(const Position& p) const {
        auto it = delta_.find(p);
        return it == delta_.end() ? Int(0) : it->second;
    }

    void adjust(const Position& p, const Int& by) {
        Int nv = delta_[p] + by;
        if (background_at(p) + nv < 0) throw std::logic_error("BoardState: negative count");
        if (nv == 0)
            delta_.erase(p);
        else
            delta_[p] = nv;
    }

    /// Highest row holding a positive delta above row 0; 0 for a fresh board.
    long max_row_occupied() const {
        long best = 0;
        for (const auto& [p, c] : delta_) {
            if (c > 0 && row_of(p) > best) best = row_of(p);
        }
        return best;
    }

    bool operator==(const BoardState& o) const {
        return params_ == o.params_ && bg_ == o.bg_ && delta_ == o.delta_;
    }

private:
    GameParams params_;
    Background bg_;
    std::map<Position, Int> delta_;
};

struct IllegalMove : std::runtime_error {
    Position offending_cell;
    IllegalMove(std::string msg, Position cell)
        : std::runtime_error(std::move(msg)), offending_cell(std::move(cell)) {}
};

inline Position step(Position p, int axis, int sign, long by) {
    p[static_cast<size_t>(axis)] += sign * by;
    return p;
}

/// Checks the move preconditions; returns the first offending cell if illegal.
inline std::optional<Position> move_violation(const BoardState& b, const Move& mv) {
    const auto& params = b.params();
    if (static_cast<int>(mv.from.size()) != params.d || mv.axis < 0 || mv.axis >= params.d ||
        (mv.sign != 1 && mv.sign != -1))
        return mv.from;
    for (long j = 0; j < params.k; ++j) {
        Position cell = step(mv.from, mv.axis, mv.sign, j);
        if (b.count_at(cell) < 1) return cell;
    }
    return std::nullopt;
}

/// One (m,k)-jump: the mover and the k-1 cells jumped over each lose a
/// checker; the landing cell k steps away gains one.
inline BoardState apply_move(const BoardState& b, const Move& mv) {
    if (auto bad = move_violation(b, mv))
        throw IllegalMove("apply_move: required cell is empty", *bad);
    BoardState out = b;
    for (long j = 0; j < b.params().k; ++j) out.adjust(step(mv.from, mv.axis, mv.sign, j), -1);
    out.adjust(step(mv.from, mv.axis, mv.sign, b.params().k), 1);
    return out;
}

/// Axis-aligned finite box.
struct Window {
    std::vector<long> lo;  // inclusive, one per coordinate
    std::vector<long> hi;  // inclusive

    bool contains(const Position& p) const {
        for (size_t i = 0; i < p.size(); ++i) {
            if (p[i] < lo[i] || p[i] > hi[i]) return false;
        }
        return true;
    }
};

namespace detail {
template <typename F>
inline void for_each_cell(const Window& w, F&& f) {
    size_t d = w.lo.size();
    for (size_t i = 0; i < d; ++i) {
        if (w.lo[i] > w.hi[i]) return;
    }
    Position p(w.lo.begin(), w.lo.end());
    for (;;) {
        f(p);
        size_t i = 0;
        while (i < d) {
            if (p[i] < w.hi[i]) {
                ++p[i];
                break;
            }
            p[i] = w.lo[i];
            ++i;
        }
        if (i == d) return;
    }
}
}  // namespace detail

/// All legal moves whose origin and landing cell both lie inside the window.
inline std::vector<Move> legal_moves(const BoardState& b, const Window& w) {
    std::vector<Move> out;
    const auto& params = b.params();
    detail::for_each_cell(w, [&](const Position& p) {
        if (b.count_at(p) < 1) return;
        for (int axis = 0; axis < params.d; ++axis) {
            for (int sign : {1, -1}) {
                Move mv{p, axis, sign};
                if (!w.contains(step(p, axis, sign, params.k))) continue;
                if (!move_violation(b, mv)) out.push_back(std::move(mv));
            }
        }
    });
    return out;
}

struct ReplayError : std::runtime_error {
    size_t move_index;
    Position offending_cell;
    ReplayError(std::string msg, size_t idx, Position cell)
        : std::runtime_error(std::move(msg)), move_index(idx), offending_cell(std::move(cell)) {}
};

/// Applies all moves in order from `initial`; throws ReplayError with the
/// index of the first illegal move.
inline BoardState replay_from(BoardState state, const MoveTrace& trace) {
    for (size_t i = 0; i < trace.moves.size(); ++i) {
        const Move& mv = trace.moves[i];
        if (auto bad = move_violation(state, mv))
            throw ReplayError("replay: illegal move at index " + std::to_string(i), i, *bad);
        for (long j = 0; j < state.params().k; ++j) state.adjust(step(mv.from, mv.axis, mv.sign, j), -1);
        state.adjust(step(mv.from, mv.axis, mv.sign, state.params().k), 1);
    }
    return state;
}

inline BoardState replay(const MoveTrace& trace) {
    return replay_from(BoardState(trace.params), trace);
}

/// True iff the replayed final state satisfies the trace's claim.
inline bool claim_holds(const BoardState& final_state, const TraceClaim& claim) {
    if (claim.row && final_state.max_row_occupied() < *claim.row) return false;
    if (claim.count_at && final_state.count_at(claim.count_at->first) < claim.count_at->second)
        return false;
    return true;
}

}  // namespace conway
