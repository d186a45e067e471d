#include "coinflow/puzzle_io.hpp"

#include "coinflow/span.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>
#include <sstream>

namespace coinflow {

using nlohmann::json;

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

Error parse_error(std::size_t line, std::size_t col, const std::string& what) {
    return Error("parse_error", "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
}

Configuration coins_from_json(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array()) throw Error("parse_error", std::string("missing array \"") + key + "\"");
    Configuration c;
    for (const auto& e : j[key]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw Error("parse_error", std::string("\"") + key + "\" entries must be [x, y] integer pairs");
        Position p{e[0].get<int>(), e[1].get<int>()};
        if (!c.insert(p)) throw Error("duplicate_coin", to_string(p) + " listed twice in \"" + key + "\"");
    }
    return c;
}

void require_nonempty(const PuzzleFile& p) {
    if (p.start.empty()) throw Error("empty_configuration", "start has no coins");
    if (p.target.empty()) throw Error("empty_configuration", "target has no coins");
}

PuzzleFile parse_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error("parse_error", e.what());
    }
    if (!j.is_object()) throw Error("parse_error", "top level must be an object");
    PuzzleFile p;
    p.start = coins_from_json(j, "start");
    p.target = coins_from_json(j, "target");
    if (j.contains("name") && j["name"].is_string()) p.name = j["name"];
    if (j.contains("source") && j["source"].is_string()) p.source = j["source"];
    require_nonempty(p);
    return p;
}

PuzzleFile parse_grid(const std::string& text) {
    PuzzleFile p;
    Position origin{0, 0};
    std::vector<std::vector<std::pair<std::size_t, std::string>>> blocks(1);
    auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string& raw = lines[i];
        const std::size_t no = i + 1;
        std::string line = trim(raw);
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream in(line.substr(1));
            std::string key;
            in >> key;
            std::string rest;
            std::getline(in, rest);
            rest = trim(rest);
            if (key == "origin") {
                std::istringstream nums(rest);
                if (!(nums >> origin.x >> origin.y)) throw parse_error(no, 1, "origin needs two integers");
            } else if (key == "name") {
                p.name = rest;
            } else if (key == "source") {
                p.source = rest;
            }
            continue;
        }
        if (line == "---") {
            blocks.emplace_back();
            continue;
        }
        for (std::size_t c = 0; c < raw.size(); ++c)
            if (raw[c] != '.' && raw[c] != 'o' && raw[c] != ' ' && raw[c] != '\t')
                throw parse_error(no, c + 1, std::string("unexpected character '") + raw[c] + "'");
        blocks.back().push_back({no, raw});
    }
    if (blocks.size() != 2)
        throw parse_error(lines.size(), 1, "expected two blocks split by ---, found " + std::to_string(blocks.size()));
    auto to_config = [&](const std::vector<std::pair<std::size_t, std::string>>& rows) {
        Configuration c;
        const int h = static_cast<int>(rows.size());
        for (int r = 0; r < h; ++r) {
            const std::string& row = rows[r].second;
            int x = 0;
            for (char ch : row) {
                if (ch == ' ' || ch == '\t') continue;
                if (ch == 'o') c.insert({origin.x + x, origin.y + h - 1 - r});
                ++x;
            }
        }
        return c;
    };
    p.start = to_config(blocks[0]);
    p.target = to_config(blocks[1]);
    require_nonempty(p);
    return p;
}

struct Box {
    int x0 = 0, y0 = 0, x1 = -1, y1 = -1;
    void add(Position p) {
        if (x1 < x0) {
            x0 = x1 = p.x;
            y0 = y1 = p.y;
            return;
        }
        x0 = std::min(x0, p.x), x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y), y1 = std::max(y1, p.y);
    }
    void add(const Configuration& c) {
        for (auto p : c) add(p);
    }
    bool empty() const { return x1 < x0; }
};

std::string grid_rows(const Configuration& c, const Box& b) {
    std::string out;
    for (int y = b.y1; y >= b.y0; --y) {
        for (int x = b.x0; x <= b.x1; ++x) out += c.contains({x, y}) ? 'o' : '.';
        out += '\n';
    }
    return out;
}

// Cell marks for one frame: dropped and picked-up positions of the action.
struct Marks {
    std::optional<Position> dropped, picked;
};

Marks marks_of(const Action& a) {
    switch (a.kind) {
    case ActionKind::Move: return {a.to, a.from};
    case ActionKind::PickUp: return {std::nullopt, a.from};
    case ActionKind::Drop: return {a.from, std::nullopt};
    }
    return {};
}

std::vector<GameState> frames_of(const GameState& initial, const ActionSequence& seq, Box& box) {
    std::vector<GameState> states{initial};
    box.add(initial.board);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        GameState next;
        try {
            next = apply(states.back(), seq[i]);
        } catch (const Error& e) {
            throw Error(e.code(), e.what(), i);
        }
        box.add(seq[i].from);
        box.add(seq[i].to);
        states.push_back(next);
    }
    return states;
}

constexpr int cell = 24;

std::string svg_frame(const Configuration& c, const Box& b, int dx, const Marks& m) {
    std::ostringstream out;
    const int w = b.x1 - b.x0 + 1, h = b.y1 - b.y0 + 1;
    out << "  <g transform=\"translate(" << dx << ",0)\">\n";
    out << "    <rect x=\"0\" y=\"0\" width=\"" << w * cell << "\" height=\"" << h * cell
        << "\" fill=\"none\" stroke=\"#ccc\"/>\n";
    auto center = [&](Position p) {
        return std::pair{(p.x - b.x0) * cell + cell / 2, (b.y1 - p.y) * cell + cell / 2};
    };
    for (int x = b.x0; x <= b.x1; ++x)
        for (int y = b.y0; y <= b.y1; ++y) {
            auto [cx, cy] = center({x, y});
            out << "    <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"1.5\" fill=\"#bbb\"/>\n";
        }
    for (auto p : c) {
        auto [cx, cy] = center(p);
        out << "    <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"8\" fill=\"#333\"/>\n";
    }
    if (m.dropped) {
        auto [cx, cy] = center(*m.dropped);
        out << "    <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"11\" fill=\"none\" stroke=\"#c00\" stroke-width=\"2\"/>\n";
    }
    if (m.picked) {
        auto [cx, cy] = center(*m.picked);
        out << "    <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"8\" fill=\"none\" stroke=\"#333\"/>\n";
        out << "    <line x1=\"" << cx - 8 << "\" y1=\"" << cy - 8 << "\" x2=\"" << cx + 8 << "\" y2=\"" << cy + 8
            << "\" stroke=\"#c00\" stroke-width=\"2\"/>\n";
        out << "    <line x1=\"" << cx - 8 << "\" y1=\"" << cy + 8 << "\" x2=\"" << cx + 8 << "\" y2=\"" << cy - 8
            << "\" stroke=\"#c00\" stroke-width=\"2\"/>\n";
    }
    out << "  </g>\n";
    return out.str();
}

std::string svg_document(const std::vector<std::string>& frames, const Box& b) {
    const int w = (b.x1 - b.x0 + 1) * cell, h = (b.y1 - b.y0 + 1) * cell;
    const int total = static_cast<int>(frames.size()) * (w + cell) - cell;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << std::max(total, 0) << "\" height=\"" << h
        << "\">\n";
    for (const auto& f : frames) out << f;
    out << "</svg>\n";
    return out.str();
}

json rect_json(const Rectangle& r) { return {{"x", r.x0}, {"y", r.y0}, {"m", r.m}, {"n", r.n}}; }

json rational_json(const Rational& q) {
    return {{"num", q.num()}, {"den", q.den()}, {"text", to_string(q)}};
}

Rational rational_from(const json& j) { return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>()); }

Rectangle rect_from(const json& j) {
    return Rectangle(j.at("x").get<int>(), j.at("y").get<int>(), j.at("m").get<int>(), j.at("n").get<int>());
}

} // namespace

PuzzleFile parse_puzzle(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_json(text);
    return parse_grid(text);
}

std::string render_puzzle(const PuzzleFile& p) {
    Box b;
    b.add(p.start);
    b.add(p.target);
    std::string out;
    if (!p.name.empty()) out += "# name " + p.name + "\n";
    if (!p.source.empty()) out += "# source " + p.source + "\n";
    if (b.empty()) return out + "---\n";
    if (b.x0 != 0 || b.y0 != 0) out += "# origin " + std::to_string(b.x0) + " " + std::to_string(b.y0) + "\n";
    return out + grid_rows(p.start, b) + "---\n" + grid_rows(p.target, b);
}

std::string puzzle_to_json(const PuzzleFile& p) {
    auto coins = [](const Configuration& c) {
        std::string out = "[";
        for (std::size_t i = 0; i < c.size(); ++i)
            out += (i ? ", [" : "[") + std::to_string(c[i].x) + ", " + std::to_string(c[i].y) + "]";
        return out + "]";
    };
    std::string out = "{\n";
    if (!p.name.empty()) out += "  \"name\": " + json(p.name).dump() + ",\n";
    if (!p.source.empty()) out += "  \"source\": " + json(p.source).dump() + ",\n";
    out += "  \"start\": " + coins(p.start) + ",\n";
    out += "  \"target\": " + coins(p.target) + "\n}\n";
    return out;
}

ActionSequence parse_actions(const std::string& text) {
    ActionSequence seq;
    auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string line = trim(lines[i]);
        if (line.empty() || line[0] == '#') continue;
        std::istringstream in(line);
        std::string op;
        in >> op;
        auto read = [&](int count) {
            std::vector<int> v(count);
            for (auto& x : v)
                if (!(in >> x)) throw parse_error(i + 1, 1, "'" + op + "' needs " + std::to_string(count) + " integers");
            std::string junk;
            if (in >> junk) throw parse_error(i + 1, 1, "trailing text '" + junk + "'");
            return v;
        };
        if (op == "mv") {
            auto v = read(4);
            seq.push_back(Action::move({v[0], v[1]}, {v[2], v[3]}));
        } else if (op == "up") {
            auto v = read(2);
            seq.push_back(Action::pick_up({v[0], v[1]}));
        } else if (op == "dn") {
            auto v = read(2);
            seq.push_back(Action::drop({v[0], v[1]}));
        } else {
            throw parse_error(i + 1, 1, "unknown action '" + op + "'");
        }
    }
    return seq;
}

std::string render_actions(const ActionSequence& seq) {
    std::string out;
    for (const auto& a : seq) out += to_string(a) + "\n";
    return out;
}

std::string render_ascii(const Configuration& c) {
    Box b;
    b.add(c);
    if (b.empty()) return "";
    return grid_rows(c, b);
}

std::string render_ascii(const GameState& initial, const ActionSequence& seq) {
    Box b;
    auto states = frames_of(initial, seq, b);
    std::string out;
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (i > 0) out += "\n";
        out += "frame " + std::to_string(i);
        if (i > 0) out += ": " + to_string(seq[i - 1]);
        out += " (hand " + std::to_string(states[i].hand) + ")\n";
        if (b.empty()) continue;
        Marks m = i > 0 ? marks_of(seq[i - 1]) : Marks{};
        for (int y = b.y1; y >= b.y0; --y) {
            for (int x = b.x0; x <= b.x1; ++x) {
                Position p{x, y};
                char ch = states[i].board.contains(p) ? 'o' : '.';
                if (m.dropped == p) ch = '@';
                if (m.picked == p) ch = 'x';
                out += ch;
            }
            out += '\n';
        }
    }
    return out;
}

std::string render_svg(const Configuration& c) {
    Box b;
    b.add(c);
    if (b.empty()) b.add(Position{0, 0});
    return svg_document({svg_frame(c, b, 0, {})}, b);
}

std::string render_svg(const GameState& initial, const ActionSequence& seq) {
    Box b;
    auto states = frames_of(initial, seq, b);
    if (b.empty()) b.add(Position{0, 0});
    const int step = (b.x1 - b.x0 + 2) * cell;
    std::vector<std::string> frames;
    for (std::size_t i = 0; i < states.size(); ++i)
        frames.push_back(svg_frame(states[i].board, b, static_cast<int>(i) * step, i > 0 ? marks_of(seq[i - 1]) : Marks{}));
    return svg_document(frames, b);
}

std::string certificate_to_json(const Certificate& c) {
    json j;
    j["kind"] = to_string(c.kind);
    switch (c.kind) {
    case CertificateKind::NecessaryCondition:
        j["condition"] = c.condition;
        j["evidence"] = c.evidence;
        break;
    case CertificateKind::SplitBound:
        j["r1"] = rect_json(c.r1);
        j["r2"] = rect_json(c.r2);
        j["h"] = c.h;
        j["transposed"] = c.transposed;
        j["refined"] = c.refined;
        j["bound"] = rational_json(c.bound);
        j["coins"] = c.coins;
        if (c.case4_bound) j["case4_bound"] = rational_json(*c.case4_bound);
        break;
    case CertificateKind::PokingExhaustive:
    case CertificateKind::OracleExhaustive:
        j["states"] = c.states;
        j["coins"] = c.coins;
        break;
    }
    return j.dump(2);
}

Certificate certificate_from_json(const std::string& text) {
    try {
        auto j = json::parse(text);
        Certificate c;
        const std::string kind = j.at("kind");
        if (kind == "NecessaryCondition") {
            c.kind = CertificateKind::NecessaryCondition;
            c.condition = j.at("condition");
            c.evidence = j.value("evidence", "");
        } else if (kind == "SplitBound") {
            c.kind = CertificateKind::SplitBound;
            c.r1 = rect_from(j.at("r1"));
            c.r2 = rect_from(j.at("r2"));
            c.h = j.at("h");
            c.transposed = j.at("transposed");
            c.refined = j.at("refined");
            c.bound = rational_from(j.at("bound"));
            c.coins = j.at("coins");
            if (j.contains("case4_bound")) c.case4_bound = rational_from(j["case4_bound"]);
        } else if (kind == "PokingExhaustive" || kind == "OracleExhaustive") {
            c.kind = kind == "PokingExhaustive" ? CertificateKind::PokingExhaustive : CertificateKind::OracleExhaustive;
            c.states = j.at("states");
            c.coins = j.value("coins", 0);
        } else {
            throw Error("parse_error", "unknown certificate kind " + kind);
        }
        return c;
    } catch (const json::exception& e) {
        throw Error("parse_error", e.what());
    }
}

Configuration random_configuration(int m, int n, int k, std::uint64_t seed) {
    const Rectangle box(0, 0, m, n);
    if (k > m * n || k < min_cardinality(box))
        throw Error("generation_failed", std::to_string(k) + " coins cannot span " + to_string(box));
    std::mt19937_64 rng(seed);
    auto cells = box.cells();
    for (int attempt = 0; attempt < 200'000; ++attempt) {
        std::shuffle(cells.begin(), cells.end(), rng);
        Configuration c(std::vector<Position>(cells.begin(), cells.begin() + k));
        auto s = span_components(c);
        if (s.size() == 1 && s.rectangles[0] == box) return c;
    }
    throw Error("generation_failed", "no spanning draw for " + to_string(box) + " with " + std::to_string(k) + " coins");
}

} // namespace coinflow
