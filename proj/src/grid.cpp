#include "coinflow/grid.hpp"

#include <climits>

namespace coinflow {

std::string to_string(Position p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

Rectangle::Rectangle(int x0_, int y0_, int m_, int n_) : x0(x0_), y0(y0_), m(m_), n(n_) {
    if (m < 1 || n < 1) throw Error("invalid_rectangle", "width and height must be positive");
}

std::vector<Position> Rectangle::cells() const {
    std::vector<Position> out;
    out.reserve(static_cast<std::size_t>(area()));
    for (int x = x0; x <= x1(); ++x)
        for (int y = y0; y <= y1(); ++y) out.push_back({x, y});
    return out;
}

std::string to_string(const Rectangle& r) {
    return std::to_string(r.m) + "x" + std::to_string(r.n) + "@" + to_string(r.bottom_left());
}

int dist(const Rectangle& a, const Rectangle& b) {
    int dx = std::max({0, b.x0 - a.x1(), a.x0 - b.x1()});
    int dy = std::max({0, b.y0 - a.y1(), a.y0 - b.y1()});
    return dx + dy;
}

Configuration::Configuration(std::initializer_list<Position> coins) : Configuration(std::vector<Position>(coins)) {}

Configuration::Configuration(std::vector<Position> coins) : coins_(std::move(coins)) {
    std::sort(coins_.begin(), coins_.end());
    coins_.erase(std::unique(coins_.begin(), coins_.end()), coins_.end());
}

bool Configuration::insert(Position p) {
    auto it = std::lower_bound(coins_.begin(), coins_.end(), p);
    if (it != coins_.end() && *it == p) return false;
    coins_.insert(it, p);
    return true;
}

bool Configuration::erase(Position p) {
    auto it = std::lower_bound(coins_.begin(), coins_.end(), p);
    if (it == coins_.end() || *it != p) return false;
    coins_.erase(it);
    return true;
}

int Configuration::occupied_neighbors(Position p, std::optional<Position> ignore) const {
    int count = 0;
    for (auto q : neighbors(p))
        if (contains(q) && (!ignore || q != *ignore)) ++count;
    return count;
}

bool Configuration::is_subset_of(const Configuration& other) const {
    return std::includes(other.coins_.begin(), other.coins_.end(), coins_.begin(), coins_.end());
}

Configuration Configuration::without(Position p) const {
    Configuration c = *this;
    c.erase(p);
    return c;
}

Configuration Configuration::with(Position p) const {
    Configuration c = *this;
    c.insert(p);
    return c;
}

Configuration Configuration::translated(Position offset) const {
    Configuration c;
    c.coins_.reserve(coins_.size());
    for (auto p : coins_) c.coins_.push_back(p + offset);
    return c;
}

Configuration set_union(const Configuration& a, const Configuration& b) {
    std::vector<Position> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return Configuration(std::move(out));
}

Configuration set_difference(const Configuration& a, const Configuration& b) {
    std::vector<Position> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return Configuration(std::move(out));
}

Configuration set_intersection(const Configuration& a, const Rectangle& r) {
    std::vector<Position> out;
    for (auto p : a)
        if (r.contains(p)) out.push_back(p);
    return Configuration(std::move(out));
}

Rectangle enclosing_rectangle(const Configuration& c) {
    if (c.empty()) throw Error("empty", "configuration has no coins");
    int xmin = INT_MAX, xmax = INT_MIN, ymin = INT_MAX, ymax = INT_MIN;
    for (auto p : c) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    return Rectangle(xmin, ymin, xmax - xmin + 1, ymax - ymin + 1);
}

NormalizedConfiguration normalize_translation(const Configuration& c) {
    if (c.empty()) return {c, {0, 0}};
    auto r = enclosing_rectangle(c);
    Position offset = r.bottom_left();
    return {c.translated({-offset.x, -offset.y}), offset};
}

std::string to_string(const Configuration& c) {
    std::string s = "{";
    bool first = true;
    for (auto p : c) {
        if (!first) s += ",";
        s += to_string(p);
        first = false;
    }
    return s + "}";
}

} // namespace coinflow
