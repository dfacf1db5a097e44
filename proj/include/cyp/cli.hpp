#pragma once

// Command-line driver. Needs CLI11 and nlohmann/json on the include path.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cyp/json.hpp"
#include "cyp/report.hpp"

namespace cyp {

namespace detail {

inline bool read_file(const std::string& path, std::string& out) {
    std::ifstream f(path, std::ios::binary);
    if (!f) return false;
    std::ostringstream ss;
    ss << f.rdbuf();
    if (f.bad()) return false;
    out = ss.str();
    return true;
}

}  // namespace detail

/// Exit codes: 0 accepted, 1 the inputs fail the check, 2 usage, I/O or
/// internal errors. `tty` says whether `out` is a terminal (for --color auto).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool tty = false) {
    CLI::App app{"Checker for equational and inductive proofs about functional programs", "cyp"};
    app.require_subcommand(1);

    std::string theory_path, proof_path, junit_path, format = "human", color = "auto";
    std::uint64_t fuel = default_fuel, seed = CheckOptions{}.seed;
    std::size_t oracle_samples = 0;

    auto* check = app.add_subcommand("check", "check a proof file against a theory");
    check->add_option("theory", theory_path, "theory file (.cthy)")->required();
    check->add_option("proof", proof_path, "proof file (.cprf)")->required();
    check->add_option("--junit", junit_path, "write JUnit XML to this path");
    check->add_option("--format", format, "output format")->check(CLI::IsMember({"human", "json"}));
    check->add_option("--color", color, "colored output")->check(CLI::IsMember({"auto", "always", "never"}));
    check->add_option("--fuel", fuel, "evaluation bound for the oracle")->check(CLI::PositiveNumber);
    check->add_option("--oracle-samples", oracle_samples, "random instances per proven lemma (0 = off)");
    check->add_option("--seed", seed, "oracle seed");

    auto* goals = app.add_subcommand("goals", "list the goals of a theory");
    std::string goals_theory, goals_proof;
    goals->add_option("theory", goals_theory, "theory file (.cthy)")->required();
    goals->add_option("proof", goals_proof, "proof file (.cprf)");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    if (goals->parsed()) {
        std::string th_src, pr_src;
        if (!detail::read_file(goals_theory, th_src)) {
            err << "error: cannot read '" << goals_theory << "'\n";
            return 2;
        }
        if (!goals_proof.empty() && !detail::read_file(goals_proof, pr_src)) {
            err << "error: cannot read '" << goals_proof << "'\n";
            return 2;
        }
        if (goals_proof.empty()) {
            try {
                TheoryAst th = parse_theory(th_src, goals_theory);
                std::size_t i = 0;
                for (const auto* g : th.all<GoalDecl>()) out << "goal_" << ++i << ": " << pretty(g->eq) << "\n";
            } catch (const Error& e) {
                CheckReport r;
                r.sources[goals_theory] = th_src;
                r.theory_diagnostics.push_back(e.diagnostic());
                std::string s;
                detail::render_diag(s, r, e.diagnostic(), detail::Paint{false});
                err << s;
                return 1;
            }
            return 0;
        }
        CheckReport r = check_document(th_src, goals_theory, pr_src, goals_proof);
        if (!r.theory_ok) {
            err << render_human(r, false);
            return 1;
        }
        for (std::size_t i = 0; i < r.goals.size(); ++i) {
            const auto& g = r.goals[i];
            out << "goal_" << i + 1 << ": " << g.statement << "  ";
            if (g.satisfied) {
                const auto& l = r.lemmas[*g.proven_by];
                out << "proven by " << (l.name ? *l.name : "lemma_" + std::to_string(*g.proven_by + 1)) << "\n";
            } else {
                out << "unproven\n";
            }
        }
        return 0;
    }

    bool use_color = color == "always" || (color == "auto" && tty && std::getenv("NO_COLOR") == nullptr);
    if (color == "always" && std::getenv("NO_COLOR") != nullptr) use_color = false;

    std::string th_src, pr_src;
    if (!detail::read_file(theory_path, th_src)) {
        err << "error: cannot read '" << theory_path << "'\n";
        return 2;
    }
    if (!detail::read_file(proof_path, pr_src)) {
        err << "error: cannot read '" << proof_path << "'\n";
        return 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    CheckOptions opts;
    opts.fuel = fuel;
    opts.oracle_samples = oracle_samples;
    opts.seed = seed;
    CheckReport r;
    try {
        r = check_document(th_src, theory_path, pr_src, proof_path, opts);
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (!junit_path.empty()) {
        std::ofstream f(junit_path, std::ios::binary);
        f << emit_junit(r, wall);
        if (!f) {
            err << "error: cannot write '" << junit_path << "'\n";
            return 2;
        }
    }
    if (format == "json") out << to_json(r).dump(2) << "\n";
    else out << render_human(r, use_color);

    if (r.has_internal_error()) return 2;
    return r.accepted() ? 0 : 1;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, bool tty = false) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err, tty);
}

}  // namespace cyp
