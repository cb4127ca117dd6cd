#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "conway/board.hpp"

namespace conway {

enum class Objective { MaxRow, MaxCountAt };

struct SearchConfig {
    GameParams params;
    Window window;
    size_t max_states = 10'000'000;
    Objective objective = Objective::MaxRow;
    Position count_target;   // for MaxCountAt
    // Frontier dominance pruning; accepted for interface stability, but see
    // bfs_optimum: level-synchronous frontiers are antichains, so it never
    // removes anything and results are identical either way.
    bool use_dominance = true;
};

/// Dense per-window state: counts in cell-enumeration order.
using DenseState = std::vector<int32_t>;

struct SearchResult {
    long value = 0;            // best objective value seen
    MoveTrace witness;         // trace attaining it
    bool exhausted = false;    // full reachable set enumerated within budget
    size_t states_seen = 0;
};

/// a pointwise <= b.
inline bool dominated_by(const DenseState& a, const DenseState& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

/// Removes every state pointwise dominated by another in the set. Sound for
/// count-monotone objectives: extra checkers never disable a move.
inline std::vector<DenseState> dominance_prune(std::vector<DenseState> states) {
    std::vector<bool> dead(states.size(), false);
    for (size_t i = 0; i < states.size(); ++i) {
        if (dead[i]) continue;
        for (size_t j = 0; j < states.size(); ++j) {
            if (i == j || dead[j]) continue;
            if (dominated_by(states[i], states[j])) {
                dead[i] = true;
                break;
            }
        }
    }
    std::vector<DenseState> out;
    for (size_t i = 0; i < states.size(); ++i) {
        if (!dead[i]) out.push_back(std::move(states[i]));
    }
    return out;
}

namespace detail {

struct DenseHash {
    size_t operator()(const DenseState& s) const {
        size_t h = 1469598103934665603ull;
        for (int32_t v : s) {
            h ^= static_cast<size_t>(static_cast<uint32_t>(v));
            h *= 1099511628211ull;
        }
        return h;
    }
};

class WindowIndexer {
public:
    explicit WindowIndexer(const Window& w) : w_(w) {
        size_t n = 1;
        strides_.resize(w.lo.size());
        for (size_t i = 0; i < w.lo.size(); ++i) {
            strides_[i] = n;
            n *= static_cast<size_t>(w.hi[i] - w.lo[i] + 1);
        }
        total_ = n;
    }

    size_t total() const { return total_; }

    std::optional<size_t> index(const Position& p) const {
        size_t idx = 0;
        for (size_t i = 0; i < p.size(); ++i) {
            if (p[i] < w_.lo[i] || p[i] > w_.hi[i]) return std::nullopt;
            idx += strides_[i] * static_cast<size_t>(p[i] - w_.lo[i]);
        }
        return idx;
    }

    Position position(size_t idx) const {
        Position p(w_.lo.size());
        for (size_t i = 0; i < p.size(); ++i) {
            size_t extent = static_cast<size_t>(w_.hi[i] - w_.lo[i] + 1);
            p[i] = w_.lo[i] + static_cast<long>(idx % extent);
            idx /= extent;
        }
        return p;
    }

private:
    Window w_;
    std::vector<size_t> strides_;
    size_t total_ = 0;
};

}  // namespace detail

/// Exhaustive breadth-first search over the truncated board. Cells outside
/// the window are frozen; every move's origin and landing cell must lie
/// inside. Level l of the BFS holds exactly the states reachable in l moves
/// (each move removes k-1 checkers, so levels never remerge).
inline SearchResult bfs_optimum(const SearchConfig& config) {
    config.params.validate();
    const int k = config.params.k;
    const int d = config.params.d;
    detail::WindowIndexer ix(config.window);

    DenseState initial(ix.total(), 0);
    for (size_t c = 0; c < ix.total(); ++c) {
        if (row_of(ix.position(c)) <= 0) initial[c] = config.params.m;
    }

    struct Node {
        DenseState state;
        size_t parent;  // index into arena; SIZE_MAX for the root
        Move via;
    };
    std::vector<Node> arena;
    arena.push_back({initial, static_cast<size_t>(-1), Move{}});

    std::optional<size_t> target_idx;
    if (config.objective == Objective::MaxCountAt) {
        target_idx = ix.index(config.count_target);
        if (!target_idx) throw std::invalid_argument("bfs_optimum: count target outside window");
    }

    auto objective_of = [&](const DenseState& s) -> long {
        if (config.objective == Objective::MaxCountAt) return s[*target_idx];
        long best = 0;
        for (size_t c = 0; c < ix.total(); ++c) {
            if (s[c] > 0) best = std::max(best, row_of(ix.position(c)));
        }
        return best;
    };

    SearchResult res;
    res.value = objective_of(initial);
    size_t best_node = 0;

    std::vector<size_t> frontier{0};
    std::unordered_set<DenseState, detail::DenseHash> seen;
    seen.insert(initial);
    res.states_seen = 1;
    bool budget_hit = false;

    while (!frontier.empty() && !budget_hit) {
        std::vector<size_t> next;
        for (size_t node_idx : frontier) {
            const DenseState snapshot = arena[node_idx].state;
            for (size_t c = 0; c < ix.total() && !budget_hit; ++c) {
                if (snapshot[c] < 1) continue;
                Position from = ix.position(c);
                for (int axis = 0; axis < d; ++axis) {
                    for (int sign : {1, -1}) {
                        bool ok = true;
                        DenseState succ = snapshot;
                        for (long j = 0; j < k && ok; ++j) {
                            auto ci = ix.index(step(from, axis, sign, j));
                            if (!ci || succ[*ci] < 1)
                                ok = false;
                            else
                                --succ[*ci];
                        }
                        auto li = ok ? ix.index(step(from, axis, sign, k)) : std::nullopt;
                        if (!ok || !li) continue;
                        ++succ[*li];
                        if (seen.count(succ)) continue;
                        seen.insert(succ);
                        ++res.states_seen;
                        long val = objective_of(succ);
                        arena.push_back({std::move(succ), node_idx, Move{from, axis, sign}});
                        next.push_back(arena.size() - 1);
                        if (val > res.value) {
                            res.value = val;
                            best_node = arena.size() - 1;
                        }
                        if (res.states_seen >= config.max_states) {
                            budget_hit = true;
                            break;
                        }
                    }
                    if (budget_hit) break;
                }
            }
            if (budget_hit) break;
        }
        // Dominance pruning within a level is the identity: every in-window
        // move removes exactly k-1 checkers, so all states in a level share
        // one total count, and pointwise <= between distinct equal-sum states
        // is impossible. Each frontier is already an antichain.
        frontier = std::move(next);
    }

    res.exhausted = !budget_hit;
    res.witness.params = config.params;
    std::vector<Move> chain;
    for (size_t n = best_node; n != static_cast<size_t>(-1); n = arena[n].parent) {
        if (n == 0) break;
        chain.push_back(arena[n].via);
    }
    std::reverse(chain.begin(), chain.end());
    res.witness.moves = std::move(chain);
    if (config.objective == Objective::MaxRow)
        res.witness.claim = TraceClaim{res.value, std::nullopt};
    else
        res.witness.claim = TraceClaim{std::nullopt, std::make_pair(config.count_target, Int(res.value))};
    return res;
}

}  // namespace conway
