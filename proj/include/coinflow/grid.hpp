#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace coinflow {

// Every failure the library reports carries a short machine-readable code
// ("illegal_move", "parse_error", ...) next to the human message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message, std::optional<std::size_t> index = std::nullopt)
        : std::runtime_error(code + ": " + message), code_(std::move(code)), index_(index) {}

    const std::string& code() const noexcept { return code_; }
    std::optional<std::size_t> index() const noexcept { return index_; }

private:
    std::string code_;
    std::optional<std::size_t> index_;
};

struct Position {
    int x = 0;
    int y = 0;

    friend constexpr auto operator<=>(const Position&, const Position&) = default;
    friend constexpr Position operator+(Position a, Position b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Position operator-(Position a, Position b) { return {a.x - b.x, a.y - b.y}; }
};

std::string to_string(Position p);

constexpr int dist(Position p, Position q) {
    return (p.x > q.x ? p.x - q.x : q.x - p.x) + (p.y > q.y ? p.y - q.y : q.y - p.y);
}

constexpr std::array<Position, 4> neighbors(Position p) {
    return {Position{p.x + 1, p.y}, Position{p.x - 1, p.y}, Position{p.x, p.y + 1}, Position{p.x, p.y - 1}};
}

// Axis-aligned box of cells [x0, x0+m) x [y0, y0+n).
struct Rectangle {
    int x0 = 0;
    int y0 = 0;
    int m = 1;
    int n = 1;

    Rectangle() = default;
    Rectangle(int x0_, int y0_, int m_, int n_);

    int x1() const { return x0 + m - 1; }
    int y1() const { return y0 + n - 1; }
    int half_perimeter() const { return m + n; }
    bool even() const { return (m + n) % 2 == 0; }
    long area() const { return static_cast<long>(m) * n; }

    bool contains(Position p) const { return p.x >= x0 && p.x <= x1() && p.y >= y0 && p.y <= y1(); }
    bool contains(const Rectangle& r) const {
        return r.x0 >= x0 && r.x1() <= x1() && r.y0 >= y0 && r.y1() <= y1();
    }

    Position bottom_left() const { return {x0, y0}; }
    Position bottom_right() const { return {x1(), y0}; }
    Position top_left() const { return {x0, y1()}; }
    Position top_right() const { return {x1(), y1()}; }

    std::vector<Position> cells() const;

    friend auto operator<=>(const Rectangle&, const Rectangle&) = default;
};

std::string to_string(const Rectangle& r);

// Manhattan distance between the closest cells of two rectangles.
int dist(const Rectangle& a, const Rectangle& b);

// Finite set of occupied cells kept as a sorted vector.
class Configuration {
public:
    using const_iterator = std::vector<Position>::const_iterator;

    Configuration() = default;
    Configuration(std::initializer_list<Position> coins);
    explicit Configuration(std::vector<Position> coins);

    bool contains(Position p) const { return std::binary_search(coins_.begin(), coins_.end(), p); }
    bool insert(Position p);
    bool erase(Position p);

    std::size_t size() const { return coins_.size(); }
    bool empty() const { return coins_.empty(); }
    const_iterator begin() const { return coins_.begin(); }
    const_iterator end() const { return coins_.end(); }
    const std::vector<Position>& coins() const { return coins_; }
    const Position& operator[](std::size_t i) const { return coins_[i]; }

    // Occupied neighbors of p, optionally ignoring one coin.
    int occupied_neighbors(Position p, std::optional<Position> ignore = std::nullopt) const;
    bool is_subset_of(const Configuration& other) const;

    Configuration without(Position p) const;
    Configuration with(Position p) const;
    Configuration translated(Position offset) const;

    friend bool operator==(const Configuration&, const Configuration&) = default;
    friend auto operator<=>(const Configuration& a, const Configuration& b) { return a.coins_ <=> b.coins_; }

private:
    std::vector<Position> coins_;
};

Configuration set_union(const Configuration& a, const Configuration& b);
Configuration set_difference(const Configuration& a, const Configuration& b);
Configuration set_intersection(const Configuration& a, const Rectangle& r);

// Throws Error("empty") on an empty configuration.
Rectangle enclosing_rectangle(const Configuration& c);

// Translated copy whose enclosing rectangle starts at (0,0), plus the offset
// that was subtracted.
struct NormalizedConfiguration {
    Configuration config;
    Position offset;
};
NormalizedConfiguration normalize_translation(const Configuration& c);

std::string to_string(const Configuration& c);

} // namespace coinflow

template <>
struct std::hash<coinflow::Position> {
    std::size_t operator()(const coinflow::Position& p) const noexcept {
        auto ux = static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.x));
        auto uy = static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.y));
        std::uint64_t h = (ux << 32) ^ uy;
        h ^= h >> 33;
        h *= 0xff51afd7ed558ccdULL;
        h ^= h >> 33;
        return static_cast<std::size_t>(h);
    }
};

template <>
struct std::hash<coinflow::Configuration> {
    std::size_t operator()(const coinflow::Configuration& c) const noexcept {
        std::size_t h = c.size();
        for (const auto& p : c) h = h * 1000003u ^ std::hash<coinflow::Position>{}(p);
        return h;
    }
};
