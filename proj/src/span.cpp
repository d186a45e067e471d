#include "coinflow/span.hpp"

#include <deque>
#include <set>
#include <unordered_set>

namespace coinflow {

Configuration adjacent_set(const Configuration& c) {
    std::vector<Position> out;
    std::unordered_set<Position> seen;
    for (auto coin : c) {
        for (auto p : neighbors(coin)) {
            if (c.contains(p) || !seen.insert(p).second) continue;
            if (c.occupied_neighbors(p) >= 2) out.push_back(p);
        }
    }
    return Configuration(std::move(out));
}

Configuration span(const Configuration& c) {
    std::unordered_set<Position> occupied(c.begin(), c.end());
    auto count = [&](Position p) {
        int k = 0;
        for (auto q : neighbors(p)) k += occupied.count(q) ? 1 : 0;
        return k;
    };
    std::deque<Position> work;
    for (auto coin : c)
        for (auto p : neighbors(coin))
            if (!occupied.count(p)) work.push_back(p);
    while (!work.empty()) {
        Position p = work.front();
        work.pop_front();
        if (occupied.count(p) || count(p) < 2) continue;
        occupied.insert(p);
        for (auto q : neighbors(p))
            if (!occupied.count(q)) work.push_back(q);
    }
    return Configuration(std::vector<Position>(occupied.begin(), occupied.end()));
}

std::optional<std::size_t> SpanDecomposition::component_of(Position p) const {
    for (std::size_t i = 0; i < rectangles.size(); ++i)
        if (rectangles[i].contains(p)) return i;
    return std::nullopt;
}

Configuration SpanDecomposition::cells() const {
    std::vector<Position> out;
    for (const auto& r : rectangles) {
        auto cs = r.cells();
        out.insert(out.end(), cs.begin(), cs.end());
    }
    return Configuration(std::move(out));
}

SpanDecomposition decompose_span_set(const Configuration& cells) {
    SpanDecomposition out;
    std::unordered_set<Position> left(cells.begin(), cells.end());
    for (auto start : cells) {
        if (!left.count(start)) continue;
        std::vector<Position> comp{start};
        left.erase(start);
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (auto q : neighbors(comp[i]))
                if (left.erase(q)) comp.push_back(q);
        auto box = enclosing_rectangle(Configuration(comp));
        if (box.area() != static_cast<long>(comp.size()))
            throw Error("not_rectangular", "span component is not a rectangle: " + to_string(box));
        out.rectangles.push_back(box);
    }
    std::sort(out.rectangles.begin(), out.rectangles.end(),
              [](const Rectangle& a, const Rectangle& b) { return a.bottom_left() < b.bottom_left(); });
    for (std::size_t i = 0; i < out.rectangles.size(); ++i)
        for (std::size_t j = i + 1; j < out.rectangles.size(); ++j)
            if (dist(out.rectangles[i], out.rectangles[j]) < 3)
                throw Error("not_rectangular", "span components closer than 3");
    return out;
}

SpanDecomposition span_components(const Configuration& c) {
    if (c.empty()) throw Error("empty", "configuration has no coins");
    return decompose_span_set(span(c));
}

int adjacent_pair_count(const Configuration& c) {
    int pairs = 0;
    for (auto p : c) {
        if (c.contains({p.x + 1, p.y})) ++pairs;
        if (c.contains({p.x, p.y + 1})) ++pairs;
    }
    return pairs;
}

int perimeter(const Configuration& c) { return 4 * static_cast<int>(c.size()) - 2 * adjacent_pair_count(c); }

int min_cardinality(const Rectangle& r) { return (r.m + r.n + 1) / 2; }

int min_cardinality(const SpanDecomposition& s) {
    int total = 0;
    for (const auto& r : s.rectangles) total += min_cardinality(r);
    return total;
}

bool is_minimal(const Configuration& c) {
    auto full = span(c);
    for (auto coin : c)
        if (span(c.without(coin)) == full) return false;
    return true;
}

bool is_minimum(const Configuration& c) {
    return static_cast<int>(c.size()) == min_cardinality(span_components(c));
}

bool is_minimum_plus_one(const Configuration& c) {
    if (c.size() < 2) return false;
    auto comps = span_components(c);
    if (static_cast<int>(c.size()) != min_cardinality(comps) + 1) return false;
    return find_extra_coins(c, std::nullopt, 1).has_value();
}

std::optional<Configuration> find_extra_coins(const Configuration& a, const std::optional<Configuration>& relative_to,
                                              int k) {
    if (k < 0 || k > static_cast<int>(a.size())) return std::nullopt;
    if (k == 0) return Configuration{};
    const Configuration target = span(relative_to ? *relative_to : a);
    auto keeps = [&](const Configuration& removed) {
        return target.is_subset_of(span(set_difference(a, removed)));
    };

    if (k <= 2 && a.size() <= 64) {
        std::vector<Position> singles;
        for (auto c : a)
            if (keeps(Configuration{c})) singles.push_back(c);
        if (k == 1) return singles.empty() ? std::nullopt : std::optional<Configuration>(Configuration{singles[0]});
        for (std::size_t i = 0; i < singles.size(); ++i)
            for (std::size_t j = i + 1; j < singles.size(); ++j) {
                Configuration pair{singles[i], singles[j]};
                if (keeps(pair)) return pair;
            }
        return std::nullopt;
    }

    Configuration removed;
    for (auto c : a) {
        if (static_cast<int>(removed.size()) == k) break;
        if (keeps(removed.with(c))) removed.insert(c);
    }
    if (static_cast<int>(removed.size()) == k) return removed;
    return std::nullopt;
}

namespace {

bool redundant_search(Configuration& current, int k, std::vector<Position>& order,
                      std::set<Configuration>& failed) {
    if (static_cast<int>(order.size()) == k) return true;
    if (failed.count(current)) return false;
    std::vector<Position> candidates;
    for (auto c : current)
        if (current.occupied_neighbors(c) >= 2) candidates.push_back(c);
    for (auto c : candidates) {
        current.erase(c);
        order.push_back(c);
        if (redundant_search(current, k, order, failed)) return true;
        order.pop_back();
        current.insert(c);
    }
    failed.insert(current);
    return false;
}

} // namespace

std::optional<std::vector<Position>> find_redundant_coins(const Configuration& b, int k) {
    if (k < 0 || k > static_cast<int>(b.size())) return std::nullopt;
    Configuration current = b;
    std::vector<Position> order;
    std::set<Configuration> failed;
    if (redundant_search(current, k, order, failed)) return order;
    return std::nullopt;
}

bool all_isolated(const Configuration& c) { return adjacent_pair_count(c) == 0; }

} // namespace coinflow
