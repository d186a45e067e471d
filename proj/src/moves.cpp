#include "coinflow/moves.hpp"

#include "coinflow/span.hpp"

namespace coinflow {

std::string to_string(const Action& a) {
    auto xy = [](Position p) { return std::to_string(p.x) + " " + std::to_string(p.y); };
    switch (a.kind) {
    case ActionKind::Move: return "mv " + xy(a.from) + " " + xy(a.to);
    case ActionKind::PickUp: return "up " + xy(a.from);
    case ActionKind::Drop: return "dn " + xy(a.from);
    }
    return {};
}

bool is_legal_destination(const Configuration& c, std::optional<Position> mover, Position p) {
    return c.occupied_neighbors(p, mover) >= 2;
}

std::vector<std::pair<Position, Position>> legal_moves(const Configuration& c) {
    std::vector<std::pair<Position, Position>> out;
    if (c.empty()) return out;
    // A destination keeps two neighbors after the mover leaves, so it is
    // already 2-adjacent and lies in the span.
    auto free = adjacent_set(c);
    for (auto from : c)
        for (auto to : free)
            if (is_legal_destination(c, from, to)) out.emplace_back(from, to);
    return out;
}

GameState apply(const GameState& state, const Action& a) {
    GameState next = state;
    switch (a.kind) {
    case ActionKind::Move:
        if (!state.board.contains(a.from)) throw Error("not_occupied", "no coin at " + to_string(a.from));
        if (a.from == a.to || state.board.contains(a.to))
            throw Error("illegal_move", "destination " + to_string(a.to) + " is occupied");
        if (!is_legal_destination(state.board, a.from, a.to))
            throw Error("illegal_move", to_string(a) + " lands with fewer than two neighbors");
        next.board.erase(a.from);
        next.board.insert(a.to);
        break;
    case ActionKind::PickUp:
        if (!next.board.erase(a.from)) throw Error("not_occupied", "no coin at " + to_string(a.from));
        ++next.hand;
        break;
    case ActionKind::Drop:
        if (state.hand < 1) throw Error("empty_hand", "no coin in hand for " + to_string(a));
        if (state.board.contains(a.from)) throw Error("drop_violates_2adjacency", to_string(a.from) + " is occupied");
        if (!is_legal_destination(state.board, std::nullopt, a.from))
            throw Error("drop_violates_2adjacency", to_string(a.from) + " has fewer than two neighbors");
        next.board.insert(a.from);
        --next.hand;
        break;
    }
    return next;
}

GameState validate_sequence(const GameState& initial, const ActionSequence& seq,
                            const std::optional<GameState>& expected_final) {
    GameState s = initial;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        try {
            s = apply(s, seq[i]);
        } catch (const Error& e) {
            throw Error(e.code(), "action " + std::to_string(i) + ": " + e.what(), i);
        }
    }
    if (expected_final && !(s == *expected_final))
        throw Error("final_mismatch", "sequence ends at " + to_string(s.board) + " hand " + std::to_string(s.hand));
    return s;
}

ActionSequence moves_only(const GameState& initial, const ActionSequence& seq) {
    // Picked coins stay on the rewritten board until a drop needs them.
    // Rewritten board == actual board + deferred at every step.
    ActionSequence out;
    GameState actual = initial;
    std::vector<Position> deferred;
    auto deferred_it = [&](Position p) { return std::find(deferred.begin(), deferred.end(), p); };

    for (std::size_t i = 0; i < seq.size(); ++i) {
        const Action& a = seq[i];
        try {
            actual = apply(actual, a);
        } catch (const Error& e) {
            throw Error(e.code(), "action " + std::to_string(i) + ": " + e.what(), i);
        }
        switch (a.kind) {
        case ActionKind::PickUp: deferred.push_back(a.from); break;
        case ActionKind::Drop:
            if (auto it = deferred_it(a.from); it != deferred.end()) {
                deferred.erase(it);
            } else {
                if (deferred.empty()) throw Error("unbalanced_hand", "drop without a matching pick-up", i);
                out.push_back(Action::move(deferred.back(), a.from));
                deferred.pop_back();
            }
            break;
        case ActionKind::Move:
            if (auto it = deferred_it(a.to); it != deferred.end())
                *it = a.from;
            else
                out.push_back(a);
            break;
        }
    }
    if (!deferred.empty()) throw Error("unbalanced_hand", "sequence ends with coins in hand");
    return out;
}

ActionSequence inverse(const ActionSequence& seq) {
    ActionSequence out;
    out.reserve(seq.size());
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
        switch (it->kind) {
        case ActionKind::Move: out.push_back(Action::move(it->to, it->from)); break;
        case ActionKind::PickUp: out.push_back(Action::drop(it->from)); break;
        case ActionKind::Drop: out.push_back(Action::pick_up(it->from)); break;
        }
    }
    return out;
}

} // namespace coinflow
