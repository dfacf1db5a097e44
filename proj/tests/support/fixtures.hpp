#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyp/cyp.hpp"

namespace cyp::test {

inline std::string fixture_path(const std::string& rel) { return std::string(CYP_FIXTURE_DIR) + "/" + rel; }
inline std::string golden_path(const std::string& rel) { return std::string(CYP_GOLDEN_DIR) + "/" + rel; }

inline std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline std::string fixture(const std::string& rel) { return slurp(fixture_path(rel)); }

/// Checks `<base>.cthy` against `proof` (both relative to the fixture dir),
/// reporting file names as written so golden output is path independent.
inline CheckReport check_fixture(const std::string& theory, const std::string& proof, CheckOptions opts = {}) {
    return check_document(fixture(theory), theory, fixture(proof), proof, opts);
}

inline CheckReport check_text(const std::string& theory, const std::string& proof, CheckOptions opts = {}) {
    return check_document(theory, "t.cthy", proof, "p.cprf", opts);
}

inline constexpr const char* append_theory =
    "data List a = [] | a : List a\n"
    "[] ++ ys = ys\n"
    "(x : xs) ++ ys = x : (xs ++ ys)\n"
    "goal xs ++ (ys ++ zs) .=. (xs ++ ys) ++ zs\n";

/// Fixtures whose lemmas are all proven; the mutation and oracle suites run on these.
inline std::vector<std::pair<std::string, std::string>> proven_fixtures() {
    return {{"append/append.cthy", "append/append.cprf"}, {"lists/lists.cthy", "lists/lists.cprf"}};
}

inline Signature signature_of(const std::string& theory_src) {
    return infer_signature(parse_theory(theory_src, "t.cthy"));
}

inline Term term(const std::string& text, const Signature& sig) {
    return resolve_symbols(parse_term(text), sig.function_names());
}

inline Equation equation(const std::string& lhs, const std::string& rhs, const Signature& sig) {
    return Equation{term(lhs, sig), term(rhs, sig), {}};
}

inline const Diagnostic* first_diag(const LemmaReport& l) {
    return l.diagnostics.empty() ? nullptr : &l.diagnostics.front();
}

}  // namespace cyp::test
