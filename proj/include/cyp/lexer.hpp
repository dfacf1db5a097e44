#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "cyp/diagnostic.hpp"

namespace cyp {

enum class Tok {
    LowerName,   // variables and function names
    UpperName,   // constructors and type names
    Nil,         // []
    Operator,    // symbolic name such as ++ or :
    LParen,
    RParen,
    Comma,
    Equals,      // =
    ProofEq,     // .=.
    Bar,         // |
    Newline,
    // keywords
    KwData,
    KwGoal,
    KwLemma,
    KwProof,
    KwBy,
    KwInduction,
    KwComputation,
    KwCase,        // case
    KwAnalysis,
    KwExtensionality,
    KwOn,
    KwWith,
    KwCaseHeader,  // Case
    KwToShow,      // To show:
    KwIH,          // IH, IH1, IH2, ...
    KwQed,
    KwDef,
    KwIf,
    KwThen,
    KwElse,
};

inline std::string_view to_string(Tok t) {
    switch (t) {
        case Tok::LowerName: return "identifier";
        case Tok::UpperName: return "constructor";
        case Tok::Nil: return "'[]'";
        case Tok::Operator: return "operator";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Comma: return "','";
        case Tok::Equals: return "'='";
        case Tok::ProofEq: return "'.=.'";
        case Tok::Bar: return "'|'";
        case Tok::Newline: return "end of line";
        case Tok::KwData: return "'data'";
        case Tok::KwGoal: return "'goal'";
        case Tok::KwLemma: return "'Lemma'";
        case Tok::KwProof: return "'Proof'";
        case Tok::KwBy: return "'by'";
        case Tok::KwInduction: return "'induction'";
        case Tok::KwComputation: return "'computation'";
        case Tok::KwCase: return "'case'";
        case Tok::KwAnalysis: return "'analysis'";
        case Tok::KwExtensionality: return "'extensionality'";
        case Tok::KwOn: return "'on'";
        case Tok::KwWith: return "'with'";
        case Tok::KwCaseHeader: return "'Case'";
        case Tok::KwToShow: return "'To show:'";
        case Tok::KwIH: return "'IH'";
        case Tok::KwQed: return "'QED'";
        case Tok::KwDef: return "'def'";
        case Tok::KwIf: return "'if'";
        case Tok::KwThen: return "'then'";
        case Tok::KwElse: return "'else'";
    }
    return "token";
}

struct Token {
    Tok kind;
    std::string text;
    SourceSpan span;
    int ih_index = 0;  // for KwIH: 0 for plain `IH`, k for `IHk`
};

namespace detail {

inline bool is_symbol_char(char c) {
    switch (c) {
        case '!': case '#': case '$': case '%': case '&': case '*': case '+': case '.':
        case '/': case '<': case '=': case '>': case '?': case '@': case '\\': case '^':
        case '|': case '-': case '~': case ':':
            return true;
        default:
            return false;
    }
}

inline bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

inline Tok keyword_or_name(const std::string& w, int& ih_index) {
    static const std::pair<std::string_view, Tok> kws[] = {
        {"data", Tok::KwData},       {"goal", Tok::KwGoal},
        {"Lemma", Tok::KwLemma},     {"Proof", Tok::KwProof},
        {"by", Tok::KwBy},           {"induction", Tok::KwInduction},
        {"computation", Tok::KwComputation}, {"case", Tok::KwCase},
        {"analysis", Tok::KwAnalysis}, {"extensionality", Tok::KwExtensionality},
        {"on", Tok::KwOn},           {"with", Tok::KwWith},
        {"Case", Tok::KwCaseHeader}, {"QED", Tok::KwQed},
        {"def", Tok::KwDef},         {"if", Tok::KwIf},
        {"then", Tok::KwThen},       {"else", Tok::KwElse},
    };
    for (const auto& [k, t] : kws)
        if (w == k) return t;
    if (w.size() >= 2 && w[0] == 'I' && w[1] == 'H') {
        bool digits = w.size() > 2 && w[2] != '0';
        for (std::size_t i = 2; i < w.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(w[i]))) digits = false;
        if (w.size() == 2) {
            ih_index = 0;
            return Tok::KwIH;
        }
        if (digits && w.size() < 8) {
            ih_index = std::stoi(w.substr(2));
            return Tok::KwIH;
        }
    }
    return std::isupper(static_cast<unsigned char>(w[0])) ? Tok::UpperName : Tok::LowerName;
}

}  // namespace detail

/// Splits source text into tokens. A Newline token ends every line that
/// holds tokens and every whitespace-only line (so two Newlines in a row
/// mark a blank line); lines holding only a comment produce nothing.
inline std::vector<Token> tokenize(std::string_view source, const std::string& file) {
    auto file_ptr = std::make_shared<const std::string>(file);
    std::vector<Token> out;
    int line = 1;
    int col = 1;
    std::size_t i = 0;
    bool line_has_tokens = false;
    bool line_has_comment = false;

    auto span_at = [&](int l, int c0, int c1) {
        SourceSpan s;
        s.file = file_ptr;
        s.line_start = s.line_end = l;
        s.col_start = c0;
        s.col_end = c1;
        return s;
    };
    auto push = [&](Tok k, std::string text, int c0, int len, int ih = 0) {
        out.push_back(Token{k, std::move(text), span_at(line, c0, c0 + std::max(len, 1) - 1), ih});
        line_has_tokens = true;
    };

    while (i < source.size()) {
        char c = source[i];
        if (c == '\n') {
            if (line_has_tokens || !line_has_comment) push(Tok::Newline, "\n", col, 1);
            ++line;
            col = 1;
            ++i;
            line_has_tokens = false;
            line_has_comment = false;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            ++col;
            continue;
        }
        int start_col = col;
        if (detail::is_ident_start(c)) {
            std::size_t j = i;
            while (j < source.size() && detail::is_ident_char(source[j])) ++j;
            std::string word(source.substr(i, j - i));
            int len = static_cast<int>(j - i);
            // `To show:` is one keyword, possibly with extra spaces.
            if (word == "To") {
                std::size_t k = j;
                while (k < source.size() && (source[k] == ' ' || source[k] == '\t')) ++k;
                if (source.substr(k, 5) == "show:" && k > j) {
                    len = static_cast<int>(k + 5 - i);
                    push(Tok::KwToShow, "To show:", start_col, len);
                    col += len;
                    i = k + 5;
                    continue;
                }
            }
            int ih = 0;
            Tok k = detail::keyword_or_name(word, ih);
            push(k, word, start_col, len, ih);
            col += len;
            i = j;
            continue;
        }
        if (c == '[') {
            if (i + 1 < source.size() && source[i + 1] == ']') {
                push(Tok::Nil, "[]", start_col, 2);
                col += 2;
                i += 2;
                continue;
            }
            throw Error(Code::ParseError, "UnterminatedToken", span_at(line, col, col),
                        "unterminated token: '[' must be immediately followed by ']'");
        }
        if (c == '(') { push(Tok::LParen, "(", start_col, 1); ++i; ++col; continue; }
        if (c == ')') { push(Tok::RParen, ")", start_col, 1); ++i; ++col; continue; }
        if (c == ',') { push(Tok::Comma, ",", start_col, 1); ++i; ++col; continue; }
        if (detail::is_symbol_char(c)) {
            std::size_t j = i;
            while (j < source.size() && detail::is_symbol_char(source[j])) ++j;
            std::string op(source.substr(i, j - i));
            if (op.size() >= 2 && op.find_first_not_of('-') == std::string::npos) {
                // line comment
                while (i < source.size() && source[i] != '\n') ++i;
                line_has_comment = true;
                continue;
            }
            int len = static_cast<int>(j - i);
            if (op == "=") push(Tok::Equals, op, start_col, len);
            else if (op == ".=.") push(Tok::ProofEq, op, start_col, len);
            else if (op == "|") push(Tok::Bar, op, start_col, len);
            else push(Tok::Operator, op, start_col, len);
            col += len;
            i = j;
            continue;
        }
        std::string shown = (static_cast<unsigned char>(c) < 0x20 || static_cast<unsigned char>(c) >= 0x7f)
                                ? "byte 0x" + [&] {
                                      const char* hex = "0123456789abcdef";
                                      unsigned char u = static_cast<unsigned char>(c);
                                      return std::string{hex[u >> 4], hex[u & 15]};
                                  }()
                                : std::string("'") + c + "'";
        throw Error(Code::ParseError, "IllegalCharacter", span_at(line, col, col), "illegal character " + shown);
    }
    return out;
}

}  // namespace cyp
