#pragma once

// JSON rendering of a CheckReport. Needs nlohmann/json on the include path.

#include <json.hpp>

#include "cyp/checker.hpp"

namespace cyp {

inline nlohmann::ordered_json to_json(const SourceSpan& s) {
    return {{"file", s.file_name()},
            {"line", s.line_start},
            {"column", s.col_start},
            {"end_line", s.line_end},
            {"end_column", s.col_end}};
}

inline nlohmann::ordered_json to_json(const Diagnostic& d) {
    nlohmann::ordered_json j;
    j["severity"] = std::string(to_string(d.severity));
    j["code"] = d.code_name();
    j["kind"] = d.kind;
    j["span"] = to_json(d.span);
    j["message"] = d.message;
    if (d.expected) j["expected"] = *d.expected;
    if (d.stated) j["stated"] = *d.stated;
    auto rel = nlohmann::ordered_json::array();
    for (const auto& r : d.related) rel.push_back(to_json(r));
    j["related"] = rel;
    return j;
}

inline nlohmann::ordered_json to_json(const std::vector<Diagnostic>& ds) {
    auto a = nlohmann::ordered_json::array();
    for (const auto& d : ds) a.push_back(to_json(d));
    return a;
}

/// Mirrors CheckReport field by field. Timings are left out so identical
/// inputs give identical output.
inline nlohmann::ordered_json to_json(const CheckReport& r) {
    nlohmann::ordered_json j;
    j["theory_file"] = r.theory_file;
    j["proof_file"] = r.proof_file;
    j["theory_ok"] = r.theory_ok;
    j["theory_diagnostics"] = to_json(r.theory_diagnostics);
    auto lemmas = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < r.lemmas.size(); ++i) {
        const auto& l = r.lemmas[i];
        nlohmann::ordered_json lj;
        lj["index"] = i + 1;
        lj["name"] = l.name ? nlohmann::ordered_json(*l.name) : nlohmann::ordered_json(nullptr);
        lj["statement"] = l.statement;
        lj["verdict"] = std::string(to_string(l.verdict));
        lj["steps"] = l.steps;
        lj["span"] = to_json(l.span);
        lj["diagnostics"] = to_json(l.diagnostics);
        lemmas.push_back(lj);
    }
    j["lemmas"] = lemmas;
    auto goals = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < r.goals.size(); ++i) {
        const auto& g = r.goals[i];
        nlohmann::ordered_json gj;
        gj["index"] = i + 1;
        gj["statement"] = g.statement;
        gj["satisfied"] = g.satisfied;
        gj["blocked"] = g.blocked;
        gj["proven_by"] = g.proven_by ? nlohmann::ordered_json(*g.proven_by + 1) : nlohmann::ordered_json(nullptr);
        gj["diagnostics"] = to_json(g.diagnostics);
        goals.push_back(gj);
    }
    j["goals"] = goals;
    j["summary"] = {{"proven", r.count(Verdict::Proven)},
                    {"failed", r.count(Verdict::Failed)},
                    {"skipped", r.count(Verdict::Skipped)},
                    {"goals_satisfied", r.goals_met()},
                    {"goals_total", r.goals.size()},
                    {"steps", r.steps},
                    {"accepted", r.accepted()}};
    return j;
}

}  // namespace cyp
