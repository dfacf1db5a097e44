#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cyp/ast.hpp"
#include "cyp/lexer.hpp"

namespace cyp {

namespace detail {

struct Line {
    std::vector<Token> toks;  // without the trailing Newline
    bool blank = false;
    SourceSpan span;
};

inline std::vector<Line> split_lines(const std::vector<Token>& toks) {
    std::vector<Line> lines;
    Line cur;
    for (const auto& t : toks) {
        if (t.kind == Tok::Newline) {
            if (cur.toks.empty()) {
                cur.blank = true;
                cur.span = t.span;
            }
            lines.push_back(std::move(cur));
            cur = Line{};
            continue;
        }
        cur.span = cur.toks.empty() ? t.span : SourceSpan::merge(cur.span, t.span);
        cur.toks.push_back(t);
    }
    if (!cur.toks.empty()) lines.push_back(std::move(cur));
    return lines;
}

inline std::string describe(const Token* t) {
    if (!t) return "end of line";
    if (t->kind == Tok::LowerName || t->kind == Tok::UpperName || t->kind == Tok::Operator)
        return "'" + t->text + "'";
    return std::string(to_string(t->kind));
}

/// Cursor over the tokens of a single line.
class LineCursor {
public:
    explicit LineCursor(const Line& l) : line_(l) {}

    const Token* peek(std::size_t ahead = 0) const {
        return pos_ + ahead < line_.toks.size() ? &line_.toks[pos_ + ahead] : nullptr;
    }
    bool at(Tok k, std::size_t ahead = 0) const {
        const Token* t = peek(ahead);
        return t && t->kind == k;
    }
    bool at_end() const { return pos_ >= line_.toks.size(); }
    const Token& next() { return line_.toks[pos_++]; }

    SourceSpan here() const {
        if (const Token* t = peek()) return t->span;
        SourceSpan s = line_.span;
        s.col_start = s.col_end = s.col_end + 1;
        s.line_start = s.line_end;
        return s;
    }

    [[noreturn]] void fail(const std::string& expected) const {
        throw Error(Code::ParseError, "ParseError", here(),
                    "expected " + expected + " but found " + describe(peek()));
    }

    const Token& expect(Tok k) {
        if (!at(k)) fail(std::string(to_string(k)));
        return next();
    }
    void expect_operator(const std::string& op) {
        if (!at(Tok::Operator) || peek()->text != op) fail("'" + op + "'");
        next();
    }
    void expect_end() {
        if (!at_end()) fail("end of line");
    }

private:
    const Line& line_;
    std::size_t pos_ = 0;
};

// --------------------------------------------------------------- terms

inline Term parse_term(LineCursor& c);

inline bool atom_start(const LineCursor& c) {
    return c.at(Tok::LowerName) || c.at(Tok::UpperName) || c.at(Tok::Nil) || c.at(Tok::LParen);
}

inline Term parse_atom(LineCursor& c) {
    if (c.at(Tok::LowerName)) {
        const Token& t = c.next();
        return Term::var(t.text, t.span);
    }
    if (c.at(Tok::UpperName) || c.at(Tok::Nil)) {
        const Token& t = c.next();
        return Term::sym(t.text, t.span);
    }
    if (c.at(Tok::LParen)) {
        const Token& open = c.next();
        if (c.at(Tok::Operator) && c.at(Tok::RParen, 1)) {
            const Token& op = c.next();
            const Token& close = c.next();
            return Term::sym(op.text, SourceSpan::merge(open.span, close.span));
        }
        Term inner = parse_term(c);
        const Token& close = c.expect(Tok::RParen);
        return inner.with_span(SourceSpan::merge(open.span, close.span));
    }
    c.fail("a term");
}

inline Term parse_app(LineCursor& c) {
    Term t = parse_atom(c);
    while (atom_start(c)) t = Term::app(t, parse_atom(c));
    return t;
}

inline Term parse_infix(LineCursor& c) {
    std::vector<Term> operands{parse_app(c)};
    std::vector<Token> ops;
    while (c.at(Tok::Operator)) {
        const Token& op = c.next();
        if (!ops.empty() && op.text != ops.front().text)
            throw Error(Code::ParseError, "MixedOperators", op.span,
                        "operators '" + ops.front().text + "' and '" + op.text +
                            "' cannot be mixed without parentheses");
        ops.push_back(op);
        operands.push_back(parse_app(c));
    }
    Term r = operands.back();
    for (std::size_t i = ops.size(); i-- > 0;) {
        Term f = Term::app(Term::sym(ops[i].text, ops[i].span), operands[i]);
        r = Term::app(f, r, SourceSpan::merge(operands[i].span(), r.span()));
    }
    return r;
}

inline Term parse_term(LineCursor& c) {
    if (c.at(Tok::KwIf)) {
        const Token& kw = c.next();
        Term cond = parse_term(c);
        c.expect(Tok::KwThen);
        Term t = parse_term(c);
        c.expect(Tok::KwElse);
        Term e = parse_term(c);
        return Term::ite(cond, t, e, SourceSpan::merge(kw.span, e.span()));
    }
    return parse_infix(c);
}

inline Equation parse_equation(LineCursor& c, Tok sep) {
    Equation eq;
    eq.lhs = parse_term(c);
    c.expect(sep);
    eq.rhs = parse_term(c);
    eq.span = SourceSpan::merge(eq.lhs.span(), eq.rhs.span());
    return eq;
}

// ---------------------------------------------------------------- types

inline TypeAst parse_type(LineCursor& c);

inline TypeAst parse_atom_type(LineCursor& c) {
    if (c.at(Tok::UpperName)) {
        const Token& t = c.next();
        return {Type::con(t.text), t.span};
    }
    if (c.at(Tok::LowerName)) {
        const Token& t = c.next();
        return {Type::var(t.text), t.span};
    }
    if (c.at(Tok::LParen)) {
        const Token& open = c.next();
        TypeAst inner = parse_type(c);
        const Token& close = c.expect(Tok::RParen);
        inner.span = SourceSpan::merge(open.span, close.span);
        return inner;
    }
    c.fail("a type");
}

inline bool atom_type_start(const LineCursor& c) {
    return c.at(Tok::UpperName) || c.at(Tok::LowerName) || c.at(Tok::LParen);
}

inline TypeAst parse_btype(LineCursor& c) {
    if (c.at(Tok::UpperName)) {
        const Token& t = c.next();
        TypeAst r{Type::con(t.text), t.span};
        while (atom_type_start(c)) {
            TypeAst a = parse_atom_type(c);
            r.type.args.push_back(a.type);
            r.span = SourceSpan::merge(r.span, a.span);
        }
        return r;
    }
    return parse_atom_type(c);
}

inline TypeAst parse_type(LineCursor& c) {
    TypeAst dom = parse_btype(c);
    if (c.at(Tok::Operator) && c.peek()->text == "->") {
        c.next();
        TypeAst cod = parse_type(c);
        return {Type::arrow(dom.type, cod.type), SourceSpan::merge(dom.span, cod.span)};
    }
    return dom;
}

inline ConstructorDecl parse_con_decl(LineCursor& c) {
    ConstructorDecl d;
    if (c.at(Tok::UpperName) || c.at(Tok::Nil)) {
        const Token& name = c.next();
        if (c.at(Tok::Operator) && c.peek()->text[0] == ':') {
            // `Left :+ right` with a nullary left operand type
            TypeAst left{Type::con(name.text), name.span};
            const Token& op = c.next();
            TypeAst right = parse_btype(c);
            d.name = op.text;
            d.infix = true;
            d.arg_types = {left, right};
            d.span = SourceSpan::merge(name.span, right.span);
            return d;
        }
        d.name = name.text;
        d.span = name.span;
        while (atom_type_start(c)) {
            d.arg_types.push_back(parse_atom_type(c));
            d.span = SourceSpan::merge(d.span, d.arg_types.back().span);
        }
        if (c.at(Tok::Operator) && c.peek()->text[0] == ':') {
            TypeAst left{Type::con(d.name), name.span};
            for (const auto& a : d.arg_types) left.type.args.push_back(a.type);
            const Token& op = c.next();
            TypeAst right = parse_btype(c);
            return ConstructorDecl{op.text, {left, right}, true, SourceSpan::merge(left.span, right.span)};
        }
        return d;
    }
    TypeAst left = parse_btype(c);
    if (!c.at(Tok::Operator) || c.peek()->text[0] != ':') c.fail("a constructor operator starting with ':'");
    const Token& op = c.next();
    TypeAst right = parse_btype(c);
    return ConstructorDecl{op.text, {left, right}, true, SourceSpan::merge(left.span, right.span)};
}

inline void check_type_vars(const Type& t, const std::set<std::string>& params, const SourceSpan& span) {
    if (t.is_var() && !params.count(t.name))
        throw Error(Code::ParseError, "UnboundTypeVariable", span,
                    "type variable '" + t.name + "' is not a parameter of the declared type");
    for (const auto& a : t.args) check_type_vars(a, params, span);
}

inline DataDecl parse_data_decl(LineCursor& c) {
    DataDecl d;
    const Token& kw = c.expect(Tok::KwData);
    const Token& name = c.expect(Tok::UpperName);
    d.type_name = name.text;
    std::set<std::string> params;
    while (c.at(Tok::LowerName)) {
        const Token& p = c.next();
        if (!params.insert(p.text).second)
            throw Error(Code::ParseError, "DuplicateTypeParameter", p.span,
                        "type parameter '" + p.text + "' declared twice");
        d.type_params.push_back(p.text);
    }
    c.expect(Tok::Equals);
    std::set<std::string> names;
    for (;;) {
        ConstructorDecl con = parse_con_decl(c);
        if (!names.insert(con.name).second)
            throw Error(Code::ParseError, "DuplicateConstructor", con.span,
                        "constructor '" + con.name + "' declared twice");
        for (const auto& a : con.arg_types) check_type_vars(a.type, params, a.span);
        d.constructors.push_back(std::move(con));
        if (!c.at(Tok::Bar)) break;
        c.next();
    }
    c.expect_end();
    d.span = SourceSpan::merge(kw.span, d.constructors.back().span);
    return d;
}

inline bool is_pattern(const Term& t) {
    if (t.is_var()) return true;
    if (t.is_ite()) return false;
    const Term& h = t.head();
    if (!h.is_sym() || !h.is_constructor()) return false;
    for (const auto& a : t.args())
        if (!is_pattern(a)) return false;
    return true;
}

inline void check_linear(const Term& p, std::set<std::string>& seen) {
    if (p.is_var()) {
        if (!seen.insert(p.name()).second)
            throw Error(Code::ParseError, "NonlinearPattern", p.span(),
                        "variable '" + p.name() + "' occurs more than once in the left-hand side");
        return;
    }
    for (std::size_t i = 0; i < p.num_children(); ++i) check_linear(p.child(i), seen);
}

inline void check_bound(const Term& t, const std::set<std::string>& bound) {
    if (t.is_var()) {
        if (!bound.count(t.name()))
            throw Error(Code::ParseError, "UnboundRhsVariable", t.span(),
                        "variable '" + t.name() + "' on the right-hand side is not bound by the left-hand side");
        return;
    }
    for (std::size_t i = 0; i < t.num_children(); ++i) check_bound(t.child(i), bound);
}

inline void parse_step_justification(LineCursor& c, Justification& j) {
    const Token& open = c.expect(Tok::LParen);
    c.expect(Tok::KwBy);
    if (c.at(Tok::KwDef)) {
        c.next();
        if (!(c.at(Tok::LowerName) || c.at(Tok::Operator))) c.fail("a function name");
        j.kind = Justification::Kind::Def;
        j.name = c.next().text;
    } else if (c.at(Tok::KwIH)) {
        j.kind = Justification::Kind::IH;
        j.ih_index = c.next().ih_index;
    } else if (c.at(Tok::KwLemma)) {
        c.next();
        if (!(c.at(Tok::LowerName) || c.at(Tok::UpperName))) c.fail("a lemma name");
        j.kind = Justification::Kind::Lemma;
        j.name = c.next().text;
    } else if (c.at(Tok::KwCase)) {
        c.next();
        j.kind = Justification::Kind::Case;
    } else {
        c.fail("'def', 'IH', 'Lemma' or 'case'");
    }
    const Token& close = c.expect(Tok::RParen);
    j.span = SourceSpan::merge(open.span, close.span);
}

// --------------------------------------------------------------- proofs

class ProofParser {
public:
    explicit ProofParser(std::vector<Line> lines) : lines_(std::move(lines)) {}

    ProofDoc doc;
    std::optional<std::string> current_name;
    SourceSpan current_span;
    bool in_lemma = false;

    void parse_all() {
        std::set<std::string> names;
        for (;;) {
            skip_blank();
            if (i_ >= lines_.size()) return;
            in_lemma = true;
            current_name.reset();
            current_span = lines_[i_].span;
            LemmaBlock lemma = parse_lemma(names);
            doc.lemmas.push_back(std::move(lemma));
            in_lemma = false;
        }
    }

private:
    std::vector<Line> lines_;
    std::size_t i_ = 0;

    void skip_blank() {
        while (i_ < lines_.size() && lines_[i_].blank) ++i_;
    }

    SourceSpan eof_span() const {
        if (lines_.empty()) return {};
        SourceSpan s = lines_.back().span;
        s.line_start = s.line_end;
        s.col_start = s.col_end;
        return s;
    }

    const Line& need_line(const char* what, const char* kind = "ParseError") {
        skip_blank();
        if (i_ >= lines_.size())
            throw Error(Code::ParseError, kind, eof_span(), std::string("expected ") + what + " but found end of file");
        return lines_[i_];
    }

    bool line_starts(Tok k) {
        skip_blank();
        return i_ < lines_.size() && !lines_[i_].toks.empty() && lines_[i_].toks[0].kind == k;
    }

    LemmaBlock parse_lemma(std::set<std::string>& names) {
        LemmaBlock lemma;
        const Line& line = lines_[i_++];
        LineCursor c(line);
        c.expect(Tok::KwLemma);
        if (c.at(Tok::LowerName) || c.at(Tok::UpperName)) {
            const Token& n = c.next();
            if (!names.insert(n.text).second)
                throw Error(Code::ParseError, "DuplicateLemma", n.span, "lemma '" + n.text + "' is declared twice");
            lemma.name = n.text;
            current_name = n.text;
        }
        c.expect_operator(":");
        lemma.statement = parse_equation(c, Tok::ProofEq);
        c.expect_end();
        lemma.span = line.span;
        lemma.proof = parse_node();
        return lemma;
    }

    void expect_qed() {
        if (i_ >= lines_.size())
            throw Error(Code::ParseError, "MissingQed", eof_span(), "expected 'QED' but found end of file");
        LineCursor c(lines_[i_++]);
        c.expect(Tok::KwQed);
        c.expect_end();
    }

    ProofNode parse_node() {
        const Line& line = need_line("'Proof'");
        ++i_;
        LineCursor c(line);
        ProofNode node;
        node.span = line.span;
        c.expect(Tok::KwProof);
        if (c.at_end()) {
            node.v = parse_equational();
            return node;
        }
        c.expect(Tok::KwBy);
        if (c.at(Tok::KwInduction)) {
            c.next();
            c.expect(Tok::KwOn);
            StructuralInduction s;
            s.type_name = c.expect(Tok::UpperName).text;
            s.var_name = c.expect(Tok::LowerName).text;
            c.expect_end();
            s.cases = parse_cases();
            node.v = std::move(s);
        } else if (c.at(Tok::KwComputation)) {
            c.next();
            c.expect(Tok::KwInduction);
            c.expect(Tok::KwOn);
            ComputationInduction ci;
            ci.arg_vars.push_back(c.expect(Tok::LowerName).text);
            while (c.at(Tok::LowerName)) ci.arg_vars.push_back(c.next().text);
            c.expect(Tok::KwWith);
            if (!(c.at(Tok::LowerName) || c.at(Tok::Operator))) c.fail("a function name");
            ci.fun_name = c.next().text;
            c.expect_end();
            ci.cases = parse_cases();
            node.v = std::move(ci);
        } else if (c.at(Tok::KwCase)) {
            c.next();
            c.expect(Tok::KwAnalysis);
            c.expect(Tok::KwOn);
            CaseAnalysis ca;
            ca.type_name = c.expect(Tok::UpperName).text;
            ca.scrutinee = parse_term(c);
            c.expect_end();
            ca.cases = parse_cases();
            node.v = std::move(ca);
        } else if (c.at(Tok::KwExtensionality)) {
            c.next();
            c.expect(Tok::KwWith);
            Extensionality e;
            e.fresh_var = c.expect(Tok::LowerName).text;
            c.expect_end();
            e.to_show = parse_to_show();
            e.body = parse_node();
            node.v = std::move(e);
        } else {
            c.fail("'induction', 'computation', 'case' or 'extensionality'");
        }
        return node;
    }

    Equation parse_to_show() {
        skip_blank();
        if (!line_starts(Tok::KwToShow)) {
            SourceSpan s = i_ < lines_.size() ? lines_[i_].span : eof_span();
            throw Error(Code::ParseError, "MissingToShow", s, "expected 'To show:' line");
        }
        LineCursor c(lines_[i_++]);
        c.next();
        Equation eq = parse_equation(c, Tok::ProofEq);
        c.expect_end();
        return eq;
    }

    std::vector<CaseBlock> parse_cases() {
        std::vector<CaseBlock> cases;
        for (;;) {
            skip_blank();
            if (i_ >= lines_.size())
                throw Error(Code::ParseError, "MissingQed", eof_span(), "expected 'QED' but found end of file");
            if (line_starts(Tok::KwQed)) {
                expect_qed();
                return cases;
            }
            if (!line_starts(Tok::KwCaseHeader)) {
                LineCursor c(lines_[i_]);
                c.fail("'Case' or 'QED'");
            }
            cases.push_back(parse_case());
        }
    }

    CaseBlock parse_case() {
        CaseBlock cb;
        const Line& line = lines_[i_++];
        cb.span = line.span;
        LineCursor c(line);
        c.expect(Tok::KwCaseHeader);
        cb.patterns.push_back(parse_term(c));
        while (c.at(Tok::Comma)) {
            c.next();
            cb.patterns.push_back(parse_term(c));
        }
        c.expect_end();
        cb.to_show = parse_to_show();
        while (line_starts(Tok::KwIH)) {
            const Line& l = lines_[i_++];
            LineCursor ic(l);
            IHLine ih;
            ih.index = ic.next().ih_index;
            ic.expect_operator(":");
            ih.eq = parse_equation(ic, Tok::ProofEq);
            ic.expect_end();
            ih.span = l.span;
            cb.ihs.push_back(std::move(ih));
        }
        cb.body = parse_node();
        return cb;
    }

    Equational parse_equational() {
        std::vector<Chain> chains;
        std::optional<Chain> cur;
        bool pending_split = false;
        for (;;) {
            if (i_ >= lines_.size())
                throw Error(Code::ParseError, "MissingQed", eof_span(), "expected 'QED' but found end of file");
            const Line& line = lines_[i_];
            if (line.blank) {
                ++i_;
                if (cur) pending_split = true;
                continue;
            }
            if (line.toks[0].kind == Tok::KwQed) {
                expect_qed();
                break;
            }
            ++i_;
            LineCursor c(line);
            if (c.at(Tok::LParen) && c.at(Tok::KwBy, 1)) {
                if (!cur || pending_split) c.fail("a term starting the chain");
                ChainStep step;
                parse_step_justification(c, step.just);
                c.expect(Tok::ProofEq);
                step.next = parse_term(c);
                c.expect_end();
                step.span = line.span;
                cur->steps.push_back(std::move(step));
                continue;
            }
            if (cur) {
                if (!pending_split) c.fail("'(by ...)' or a blank line");
                chains.push_back(std::move(*cur));
                cur.reset();
                pending_split = false;
                if (chains.size() >= 2)
                    throw Error(Code::ParseError, "ThirdChain", line.span,
                                "an equational proof has at most two chains");
            }
            Chain ch;
            ch.start = parse_term(c);
            c.expect_end();
            cur = std::move(ch);
        }
        if (cur) chains.push_back(std::move(*cur));
        if (chains.empty()) {
            SourceSpan s = i_ > 0 ? lines_[i_ - 1].span : SourceSpan{};
            throw Error(Code::ParseError, "EmptyProof", s, "an equational proof needs at least a start term");
        }
        Equational eq;
        eq.chain_l = std::move(chains[0]);
        if (chains.size() > 1) eq.chain_r = std::move(chains[1]);
        return eq;
    }
};

}  // namespace detail

/// Parses a single term written on one line.
inline Term parse_term(std::string_view text, const std::string& file = "<term>") {
    auto lines = detail::split_lines(tokenize(text, file));
    std::vector<detail::Line> content;
    for (auto& l : lines)
        if (!l.blank) content.push_back(std::move(l));
    if (content.size() != 1) {
        SourceSpan s = content.empty() ? SourceSpan{} : content[1].span;
        throw Error(Code::ParseError, "ParseError", s, "expected exactly one line holding a term");
    }
    detail::LineCursor c(content[0]);
    Term t = detail::parse_term(c);
    c.expect_end();
    return t;
}

/// Names defined by the theory's equations (the heads of their left-hand sides).
inline std::set<std::string> function_names(const TheoryAst& th) {
    std::set<std::string> out;
    for (const auto* e : th.all<FunEquation>()) out.insert(e->fun_name);
    return out;
}

inline TheoryAst parse_theory(std::string_view source, const std::string& file) {
    auto lines = detail::split_lines(tokenize(source, file));
    TheoryAst th;
    struct RawEq {
        Equation eq;
    };
    std::vector<std::pair<std::size_t, Equation>> raw_eqs;
    for (const auto& line : lines) {
        if (line.blank) continue;
        detail::LineCursor c(line);
        if (c.at(Tok::KwData)) {
            th.decls.emplace_back(detail::parse_data_decl(c));
        } else if (c.at(Tok::KwGoal)) {
            const Token& kw = c.next();
            GoalDecl g;
            g.eq = detail::parse_equation(c, Tok::ProofEq);
            g.eq.span = SourceSpan::merge(kw.span, g.eq.span);
            c.expect_end();
            th.decls.emplace_back(std::move(g));
        } else {
            Equation eq = detail::parse_equation(c, Tok::Equals);
            c.expect_end();
            raw_eqs.emplace_back(th.decls.size(), eq);
            th.decls.emplace_back(FunEquation{});
        }
    }
    if (th.decls.empty()) {
        SourceSpan s;
        s.file = std::make_shared<const std::string>(file);
        s.line_start = s.line_end = s.col_start = s.col_end = 1;
        throw Error(Code::ParseError, "EmptyTheory", s, "a theory needs at least one declaration");
    }

    std::set<std::string> funs;
    for (auto& [idx, eq] : raw_eqs) {
        const Term& h = eq.lhs.head();
        bool ok_head = (h.is_var()) || (h.is_sym() && !h.is_constructor() && is_symbolic_name(h.name()));
        if (!ok_head)
            throw Error(Code::ParseError, "NonPatternLhs", eq.lhs.span(),
                        "the left-hand side of an equation must be a function applied to patterns");
        funs.insert(h.name());
    }
    for (auto& [idx, eq] : raw_eqs) {
        FunEquation fe;
        const Term& h = eq.lhs.head();
        fe.fun_name = h.name();
        fe.lhs_patterns = eq.lhs.args();
        std::set<std::string> bound;
        for (const auto& p : fe.lhs_patterns) {
            if (!detail::is_pattern(p))
                throw Error(Code::ParseError, "NonPatternLhs", p.span(),
                            "argument of '" + fe.fun_name + "' is not a constructor pattern or variable");
            detail::check_linear(p, bound);
        }
        fe.lhs = Term::apply(Term::sym(h.name(), h.span()), fe.lhs_patterns);
        std::set<std::string> visible;
        for (const auto& f : funs)
            if (!bound.count(f)) visible.insert(f);
        fe.rhs = resolve_symbols(eq.rhs, visible);
        detail::check_bound(fe.rhs, bound);
        fe.span = eq.span;
        th.decls[idx] = std::move(fe);
    }
    for (auto& d : th.decls) {
        if (auto* g = std::get_if<GoalDecl>(&d)) {
            g->eq.lhs = resolve_symbols(g->eq.lhs, funs);
            g->eq.rhs = resolve_symbols(g->eq.rhs, funs);
        }
    }
    return th;
}

/// Result of a proof parse that keeps the lemmas read before a failure.
struct PartialProof {
    ProofDoc doc;
    std::optional<Diagnostic> error;
    std::optional<std::string> failed_lemma_name;
    SourceSpan failed_lemma_span;
};

inline PartialProof parse_proof_partial(std::string_view source, const std::string& file) {
    PartialProof out;
    std::vector<Token> toks;
    try {
        toks = tokenize(source, file);
    } catch (const Error& e) {
        out.error = e.diagnostic();
        return out;
    }
    detail::ProofParser p(detail::split_lines(toks));
    try {
        p.parse_all();
    } catch (const Error& e) {
        out.error = e.diagnostic();
        out.failed_lemma_name = p.current_name;
        out.failed_lemma_span = p.current_span;
    }
    out.doc = std::move(p.doc);
    return out;
}

inline ProofDoc parse_proof(std::string_view source, const std::string& file) {
    PartialProof p = parse_proof_partial(source, file);
    if (p.error) throw Error(*p.error);
    return std::move(p.doc);
}

}  // namespace cyp
