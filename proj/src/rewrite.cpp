#include "coinflow/rewrite.hpp"

#include <bit>
#include <queue>
#include <tuple>
#include <unordered_map>

namespace coinflow {

std::optional<ActionSequence> local_rewrite(const Configuration& board, int hand, const std::vector<Position>& window,
                                            const Configuration& goal, const RewriteOptions& options) {
    const int n = static_cast<int>(window.size());
    if (n > 64) throw Error("window_too_large", std::to_string(n) + " cells");
    std::unordered_map<Position, int> index;
    for (int i = 0; i < n; ++i) index[window[i]] = i;

    std::vector<std::uint64_t> nbr(n, 0);
    std::vector<int> outside(n, 0);
    std::uint64_t start = 0, target = 0;
    for (int i = 0; i < n; ++i) {
        for (auto q : neighbors(window[i])) {
            auto it = index.find(q);
            if (it != index.end()) nbr[i] |= std::uint64_t{1} << it->second;
            else if (board.contains(q)) ++outside[i];
        }
        if (board.contains(window[i])) start |= std::uint64_t{1} << i;
        if (goal.contains(window[i])) target |= std::uint64_t{1} << i;
    }
    for (auto g : goal)
        if (!index.count(g)) throw Error("goal_outside_window", to_string(g));
    if (start == target) return ActionSequence{};

    const int base = std::popcount(start);
    const int cap = base + std::min(hand, options.max_extra);
    if (std::popcount(target) > base + hand) return std::nullopt;

    auto count = [&](std::uint64_t s, int i) { return std::popcount(nbr[i] & s) + outside[i]; };

    // parent mask and the cell toggled to get here
    std::unordered_map<std::uint64_t, std::pair<std::uint64_t, int>> parent;
    parent.emplace(start, std::pair{start, -1});
    using Item = std::tuple<int, int, std::uint64_t>;  // priority, depth, mask
    std::priority_queue<Item, std::vector<Item>, std::greater<>> open;
    auto priority = [&](std::uint64_t s, int depth) {
        int h = std::popcount(s ^ target);
        return options.best_first ? h : depth;
    };
    open.emplace(priority(start, 0), 0, start);
    bool found = false;
    while (!open.empty() && !found) {
        auto [pr, depth, s] = open.top();
        open.pop();
        (void)pr;
        for (int i = 0; i < n && !found; ++i) {
            std::uint64_t bit = std::uint64_t{1} << i;
            std::uint64_t next;
            if (s & bit) {
                if (count(s, i) < 2) continue;
                next = s & ~bit;
            } else {
                if (count(s, i) < 2 || std::popcount(s) + 1 > cap) continue;
                next = s | bit;
            }
            if (parent.count(next)) continue;
            if (parent.size() >= options.max_states) return std::nullopt;
            parent.emplace(next, std::pair{s, i});
            if (next == target) found = true;
            else open.emplace(priority(next, depth + 1), depth + 1, next);
        }
    }
    if (!found) return std::nullopt;

    ActionSequence out;
    for (std::uint64_t s = target; s != start;) {
        auto [prev, i] = parent.at(s);
        out.push_back((s >> i) & 1u ? Action::drop(window[i]) : Action::pick_up(window[i]));
        s = prev;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

} // namespace coinflow
