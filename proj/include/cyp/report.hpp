#pragma once

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "cyp/checker.hpp"

namespace cyp {

// ----------------------------------------------------------------- JUnit

namespace detail {

inline std::string xml_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        auto c = static_cast<unsigned char>(ch);
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default:
                // XML 1.0 forbids most control characters, even escaped
                if (c < 0x20 && c != '\t' && c != '\n' && c != '\r') out += ' ';
                else out += ch;
        }
    }
    return out;
}

inline std::string seconds3(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", s < 0 ? 0.0 : s);
    return buf;
}

inline std::string headline(const Diagnostic& d) {
    return d.code_name() + " at " + d.span.location() + ": " + d.message;
}

inline std::string diagnostic_list(const std::vector<Diagnostic>& ds) {
    std::string out;
    for (const auto& d : ds) {
        out += headline(d) + "\n";
        if (d.expected) out += "  expected: " + *d.expected + "\n";
        if (d.stated) out += "  stated:   " + *d.stated + "\n";
    }
    return out;
}

inline void junit_case(std::string& out, const std::string& name, const std::string& classname, double secs,
                       const char* child, const std::vector<Diagnostic>& ds, const std::string& skip_msg = {}) {
    out += "  <testcase name=\"" + xml_escape(name) + "\" classname=\"" + xml_escape(classname) + "\" time=\"" +
           seconds3(secs) + "\"";
    if (!child) {
        out += "/>\n";
        return;
    }
    out += ">\n";
    if (std::string_view(child) == "skipped") {
        out += "    <skipped message=\"" + xml_escape(skip_msg) + "\"/>\n";
    } else {
        const Diagnostic& first = ds.front();
        out += std::string("    <") + child + " message=\"" + xml_escape(headline(first)) + "\" type=\"" +
               first.code_name() + "\">" + xml_escape(diagnostic_list(ds)) + "</" + child + ">\n";
    }
    out += "  </testcase>\n";
}

}  // namespace detail

/// Apache Ant style JUnit XML: one testsuite, one testcase per lemma and
/// per theory goal, in file order.
inline std::string emit_junit(const CheckReport& r, double wall_time) {
    std::string classname = detail::file_stem(r.theory_file);
    std::string body;
    std::size_t tests = 0, failures = 0, errors = 0, skipped = 0;

    for (std::size_t i = 0; i < r.lemmas.size(); ++i) {
        const LemmaReport& l = r.lemmas[i];
        std::string name = l.name ? *l.name : "lemma_" + std::to_string(i + 1);
        ++tests;
        if (!r.theory_ok) {
            ++errors;
            detail::junit_case(body, name, classname, l.seconds, "error", r.theory_diagnostics);
        } else if (l.verdict == Verdict::Failed) {
            ++failures;
            detail::junit_case(body, name, classname, l.seconds, "failure", l.diagnostics);
        } else if (l.verdict == Verdict::Skipped) {
            ++skipped;
            detail::junit_case(body, name, classname, l.seconds, "skipped", {}, "not checked");
        } else {
            detail::junit_case(body, name, classname, l.seconds, nullptr, {});
        }
    }
    for (std::size_t i = 0; i < r.goals.size(); ++i) {
        const GoalReport& g = r.goals[i];
        std::string name = "goal_" + std::to_string(i + 1);
        ++tests;
        if (!r.theory_ok) {
            ++errors;
            detail::junit_case(body, name, classname, 0, "error", r.theory_diagnostics);
        } else if (g.satisfied) {
            detail::junit_case(body, name, classname, 0, nullptr, {});
        } else if (g.blocked) {
            ++skipped;
            detail::junit_case(body, name, classname, 0, "skipped", {}, g.diagnostics.front().message);
        } else {
            ++failures;
            detail::junit_case(body, name, classname, 0, "failure", g.diagnostics);
        }
    }
    if (!r.theory_ok && tests == 0) {
        ++tests;
        ++errors;
        detail::junit_case(body, "theory", classname, 0, "error", r.theory_diagnostics);
    }

    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<testsuite name=\"" + detail::xml_escape(detail::file_stem(r.proof_file)) + "\" tests=\"" +
           std::to_string(tests) + "\" failures=\"" + std::to_string(failures) + "\" errors=\"" +
           std::to_string(errors) + "\" skipped=\"" + std::to_string(skipped) + "\" time=\"" +
           detail::seconds3(wall_time) + "\">\n";
    out += body;
    out += "</testsuite>\n";
    return out;
}

// ----------------------------------------------------------------- human

namespace detail {

inline std::string source_line(const CheckReport& r, const SourceSpan& s) {
    auto it = r.sources.find(s.file_name());
    if (it == r.sources.end() || s.line_start <= 0) return {};
    std::istringstream in(it->second);
    std::string line;
    for (int i = 1; std::getline(in, line); ++i)
        if (i == s.line_start) return line;
    return {};
}

struct Paint {
    bool on;
    std::string operator()(const char* code, const std::string& s) const {
        return on ? std::string("\x1b[") + code + "m" + s + "\x1b[0m" : s;
    }
};

inline void render_diag(std::string& out, const CheckReport& r, const Diagnostic& d, const Paint& paint) {
    std::string loc = d.span.valid() ? d.span.location() : (d.span.file_name().empty() ? "<input>" : d.span.file_name());
    out += paint("1", loc + ":") + " " + paint("1;31", std::string(to_string(d.severity)) + "[" + d.code_name() + "]") +
           ": " + d.message + "\n";
    std::string text = source_line(r, d.span);
    if (!text.empty()) {
        std::string num = std::to_string(d.span.line_start);
        std::string pad(num.size(), ' ');
        out += " " + num + " | " + text + "\n";
        int from = d.span.col_start;
        int to = d.span.line_end == d.span.line_start ? d.span.col_end : static_cast<int>(text.size());
        if (to < from) to = from;
        std::string marks(static_cast<std::size_t>(from - 1), ' ');
        marks += std::string(static_cast<std::size_t>(to - from + 1), '^');
        out += " " + pad + " | " + paint("1;31", marks) + "\n";
    }
    if (d.expected) out += "  expected: " + *d.expected + "\n";
    if (d.stated) out += "  stated:   " + *d.stated + "\n";
}

inline std::string plural(std::size_t n, const std::string& word) {
    return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
}

}  // namespace detail

inline std::string summary_line(const CheckReport& r) {
    std::string s = detail::plural(r.count(Verdict::Proven), "lemma") + " proven";
    if (auto f = r.count(Verdict::Failed)) s += ", " + std::to_string(f) + " failed";
    if (auto k = r.count(Verdict::Skipped)) s += ", " + std::to_string(k) + " skipped";
    s += ", " + std::to_string(r.goals_met()) + "/" + std::to_string(r.goals.size()) + " goals satisfied";
    return s;
}

inline std::string render_human(const CheckReport& r, bool color) {
    detail::Paint paint{color};
    std::string out;
    for (const auto& d : r.theory_diagnostics) detail::render_diag(out, r, d, paint);
    for (const auto& l : r.lemmas)
        for (const auto& d : l.diagnostics) detail::render_diag(out, r, d, paint);
    if (r.theory_ok)
        for (const auto& g : r.goals)
            for (const auto& d : g.diagnostics) detail::render_diag(out, r, d, paint);
    out += summary_line(r) + "\n";
    return out;
}

}  // namespace cyp
