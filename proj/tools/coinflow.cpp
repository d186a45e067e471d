#include "coinflow/canonical.hpp"
#include "coinflow/infeasibility.hpp"
#include "coinflow/oracle.hpp"
#include "coinflow/poking.hpp"
#include "coinflow/puzzle_io.hpp"
#include "coinflow/solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace coinflow;

namespace {

constexpr int exit_solved = 0;
constexpr int exit_unsolvable = 1;
constexpr int exit_unknown = 2;
constexpr int exit_usage = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("io_error", "cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("io_error", "cannot write " + path);
    out << text;
}

int exit_for(Verdict v) {
    switch (v) {
    case Verdict::Solved: return exit_solved;
    case Verdict::Unsolvable: return exit_unsolvable;
    case Verdict::Unknown: return exit_unknown;
    }
    return exit_unknown;
}

nlohmann::json outcome_json(const SolveOutcome& o) {
    nlohmann::json j;
    j["verdict"] = to_string(o.verdict);
    j["method"] = o.method;
    if (o.verdict == Verdict::Solved) {
        auto moves = nlohmann::json::array();
        for (const auto& a : o.moves) moves.push_back(to_string(a));
        j["moves"] = moves;
    }
    if (o.certificate) j["certificate"] = nlohmann::json::parse(certificate_to_json(*o.certificate));
    if (!o.reason.empty()) j["reason"] = o.reason;
    return j;
}

void print_outcome(const SolveOutcome& o) {
    std::cout << "verdict: " << to_string(o.verdict) << "\nmethod: " << o.method << "\n";
    if (o.verdict == Verdict::Solved) {
        std::cout << "moves: " << o.moves.size() << "\n" << render_actions(o.moves);
    }
    if (o.certificate) std::cout << "certificate: " << certificate_to_json(*o.certificate) << "\n";
    if (!o.reason.empty()) std::cout << "reason: " << o.reason << "\n";
}

std::pair<int, int> parse_span(const std::string& s) {
    auto x = s.find_first_of("xX");
    if (x == std::string::npos) throw Error("parse_error", "span must look like MxN");
    try {
        return {std::stoi(s.substr(0, x)), std::stoi(s.substr(x + 1))};
    } catch (const std::exception&) {
        throw Error("parse_error", "span must look like MxN");
    }
}

std::string emit_puzzle(const PuzzleFile& p, bool as_json) { return as_json ? puzzle_to_json(p) : render_puzzle(p); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coinflow: coin-moving puzzles under the 2-adjacency rule"};
    app.require_subcommand(1);

    std::string file, moves_file, emit_file, method_name = "auto", svg_file;
    bool as_json = false, shortest = false;
    std::size_t max_states = default_max_states();

    auto* solve_cmd = app.add_subcommand("solve", "solve a puzzle");
    solve_cmd->add_option("file", file, "puzzle file")->required();
    solve_cmd->add_option("--method", method_name, "auto|same-span|two-extra|sweep|oracle");
    solve_cmd->add_option("--emit", emit_file, "write the moves to this file");
    solve_cmd->add_option("--max-states", max_states, "oracle state budget");
    solve_cmd->add_flag("--json", as_json, "JSON output");

    auto* check_cmd = app.add_subcommand("check", "replay a move file against a puzzle");
    check_cmd->add_option("file", file, "puzzle file")->required();
    check_cmd->add_option("moves", moves_file, "move file")->required();

    auto* classify_cmd = app.add_subcommand("classify", "verdict and certificate");
    classify_cmd->add_option("file", file, "puzzle file")->required();
    classify_cmd->add_option("--max-states", max_states, "oracle state budget");
    classify_cmd->add_flag("--json", as_json, "JSON output");

    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive search");
    oracle_cmd->add_option("file", file, "puzzle file")->required();
    oracle_cmd->add_option("--max-states", max_states, "state budget");
    oracle_cmd->add_flag("--shortest", shortest, "print a shortest solution");

    auto* gen_cmd = app.add_subcommand("gen", "generate puzzles");
    gen_cmd->require_subcommand(1);
    int family_n = 9;
    auto* gen_ce = gen_cmd->add_subcommand("counterexample", "the unsolvable n x n family");
    gen_ce->add_option("--n", family_n, "box size (>= 9)")->required();
    gen_ce->add_flag("--json", as_json, "JSON output");
    std::string span_text;
    int coins = 0;
    std::uint64_t seed = 0;
    auto* gen_rand = gen_cmd->add_subcommand("random", "random start and target spanning one box");
    gen_rand->add_option("--span", span_text, "MxN")->required();
    gen_rand->add_option("--coins", coins, "coins per configuration")->required();
    gen_rand->add_option("--seed", seed, "seed");
    gen_rand->add_flag("--json", as_json, "JSON output");

    auto* render_cmd = app.add_subcommand("render", "draw a puzzle or a move sequence");
    render_cmd->add_option("file", file, "puzzle file")->required();
    render_cmd->add_option("--svg", svg_file, "write SVG here");
    render_cmd->add_option("--moves", moves_file, "render this sequence as frames");

    auto* poke_cmd = app.add_subcommand("poke", "poking game on minimum chains");
    poke_cmd->require_subcommand(1);
    auto* poke_decide = poke_cmd->add_subcommand("decide", "is the target reachable by pokes");
    poke_decide->add_option("file", file, "puzzle file")->required();
    auto* poke_solve = poke_cmd->add_subcommand("solve", "pokes from start to target");
    poke_solve->add_option("file", file, "puzzle file")->required();
    poke_solve->add_option("--emit", emit_file, "write the actions to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return e.get_exit_code() == 0 ? code : exit_usage;
    }

    try {
        if (*gen_cmd) {
            PuzzleFile p;
            if (*gen_ce) {
                std::tie(p.start, p.target) = gen_counterexample(family_n);
                p.name = "counterexample n=" + std::to_string(family_n);
            } else {
                auto [m, n] = parse_span(span_text);
                p.start = random_configuration(m, n, coins, seed);
                p.target = random_configuration(m, n, coins, seed ^ 0x9e3779b97f4a7c15ULL);
                p.name = "random " + span_text + " k=" + std::to_string(coins) + " seed=" + std::to_string(seed);
            }
            std::cout << emit_puzzle(p, as_json);
            return exit_solved;
        }

        const PuzzleFile puzzle = parse_puzzle(slurp(file));
        const auto& a = puzzle.start;
        const auto& b = puzzle.target;
        SearchLimits limits;
        limits.max_states = max_states;

        if (*solve_cmd || *classify_cmd) {
            SolveOptions options;
            options.oracle_limits = limits;
            if (*solve_cmd) {
                auto m = parse_method(method_name);
                if (!m) throw Error("usage", "unknown method " + method_name);
                options.method = *m;
            }
            auto o = solve(a, b, options);
            if (o.verdict == Verdict::Solved && !emit_file.empty()) spit(emit_file, render_actions(o.moves));
            if (o.verdict == Verdict::Unsolvable && o.certificate) {
                std::string why;
                if (!check_certificate(a, b, *o.certificate, &why)) {
                    std::cerr << "certificate rejected: " << why << "\n";
                    return exit_unknown;
                }
            }
            if (as_json)
                std::cout << outcome_json(o).dump(2) << "\n";
            else
                print_outcome(o);
            return exit_for(o.verdict);
        }

        if (*check_cmd) {
            auto seq = parse_actions(slurp(moves_file));
            try {
                validate_sequence(GameState{a, 0}, seq, GameState{b, 0});
            } catch (const Error& e) {
                std::cout << "invalid: " << e.what();
                if (e.index()) std::cout << " (action " << *e.index() + 1 << ")";
                std::cout << "\n";
                return exit_unsolvable;
            }
            std::cout << "valid: " << seq.size() << " actions\n";
            return exit_solved;
        }

        if (*oracle_cmd) {
            auto r = oracle_search(a, b, limits);
            std::cout << "states: " << r.states << "\n";
            switch (r.verdict) {
            case OracleVerdict::Reachable:
                std::cout << "reachable in " << r.moves.size() << " moves\n";
                if (shortest) std::cout << render_actions(r.moves);
                return exit_solved;
            case OracleVerdict::Unreachable: std::cout << "unreachable\n"; return exit_unsolvable;
            case OracleVerdict::Exhausted: std::cout << "exhausted\n"; return exit_unknown;
            }
        }

        if (*render_cmd) {
            if (!moves_file.empty()) {
                auto seq = parse_actions(slurp(moves_file));
                GameState s{a, 0};
                if (!svg_file.empty()) spit(svg_file, render_svg(s, seq));
                std::cout << render_ascii(s, seq);
            } else {
                if (!svg_file.empty()) spit(svg_file, render_svg(a));
                std::cout << "start\n" << render_ascii(a) << "target\n" << render_ascii(b);
            }
            return exit_solved;
        }

        if (*poke_decide) {
            bool ok = chain_poking_decide(a, b);
            std::cout << (ok ? "reachable" : "unreachable") << "\n";
            return ok ? exit_solved : exit_unsolvable;
        }
        if (*poke_solve) {
            if (!chain_poking_decide(a, b)) {
                std::cout << "unreachable\n";
                return exit_unsolvable;
            }
            auto pokes = chain_poking_solve(a, b);
            auto actions = render_actions(pokes_to_actions(pokes));
            if (!emit_file.empty()) spit(emit_file, actions);
            std::cout << pokes.size() << " pokes\n" << actions;
            return exit_solved;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
