#pragma once

#include <string>

#include "cyp/ast.hpp"

namespace cyp {

namespace detail {

// Contexts a term can be printed in, from loosest to tightest.
enum class Prec { Top, Operand, Function, Argument };

inline bool is_infix(const Term& t) {
    if (!t.is_app() || !t.fun().is_app()) return false;
    const Term& f = t.fun().fun();
    return f.is_sym() && is_symbolic_name(f.name());
}

inline const std::string& infix_op(const Term& t) { return t.fun().fun().name(); }

inline void print_term(const Term& t, std::string& out, Prec prec) {
    switch (t.kind()) {
        case TermKind::Var:
            out += t.name();
            return;
        case TermKind::Sym:
            if (is_symbolic_name(t.name())) out += "(" + t.name() + ")";
            else out += t.name();
            return;
        case TermKind::Ite: {
            bool paren = prec != Prec::Top;
            if (paren) out += '(';
            out += "if ";
            print_term(t.cond(), out, Prec::Top);
            out += " then ";
            print_term(t.then_branch(), out, Prec::Top);
            out += " else ";
            print_term(t.else_branch(), out, Prec::Top);
            if (paren) out += ')';
            return;
        }
        case TermKind::App:
            break;
    }
    if (is_infix(t)) {
        bool paren = prec > Prec::Top;
        if (paren) out += '(';
        const std::string& op = infix_op(t);
        const Term& l = t.fun().arg();
        const Term& r = t.arg();
        // nested operators are always parenthesized, as in the exercise sheets
        print_term(l, out, Prec::Operand);
        out += ' ';
        out += op;
        out += ' ';
        print_term(r, out, Prec::Operand);
        if (paren) out += ')';
        return;
    }
    bool paren = prec == Prec::Argument;
    if (paren) out += '(';
    print_term(t.fun(), out, Prec::Function);
    out += ' ';
    print_term(t.arg(), out, Prec::Argument);
    if (paren) out += ')';
}

}  // namespace detail

inline std::string pretty(const Term& t) {
    std::string s;
    detail::print_term(t, s, detail::Prec::Top);
    return s;
}

inline std::string pretty_tuple(const std::vector<Term>& ts) {
    std::string s;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (i) s += ", ";
        s += pretty(ts[i]);
    }
    return s;
}

inline std::string pretty(const Equation& eq, const char* sep = ".=.") {
    return pretty(eq.lhs) + " " + sep + " " + pretty(eq.rhs);
}

inline std::string pretty(const Type& t) { return to_string(t); }

namespace detail {

inline std::string pretty_atom_type(const Type& t) {
    std::string s = to_string(t);
    if ((t.is_con() && !t.args.empty()) || t.is_arrow()) return "(" + s + ")";
    return s;
}

inline std::string pretty_btype(const Type& t) {
    if (t.is_arrow()) return "(" + to_string(t) + ")";
    return to_string(t);
}

inline std::string pretty_just(const Justification& j) {
    switch (j.kind) {
        case Justification::Kind::Def: return "(by def " + j.name + ")";
        case Justification::Kind::IH: return j.ih_index ? "(by IH" + std::to_string(j.ih_index) + ")" : "(by IH)";
        case Justification::Kind::Lemma: return "(by Lemma " + j.name + ")";
        case Justification::Kind::Case: return "(by case)";
    }
    return "";
}

inline void pretty_node(const ProofNode& n, std::string& out, int indent);

inline void pretty_cases(const std::vector<CaseBlock>& cases, std::string& out, int indent) {
    std::string pad(indent, ' ');
    for (const auto& c : cases) {
        out += pad + "Case ";
        for (std::size_t i = 0; i < c.patterns.size(); ++i) {
            if (i) out += ", ";
            out += pretty(c.patterns[i]);
        }
        out += "\n";
        out += pad + "  To show: " + pretty(c.to_show) + "\n";
        for (const auto& ih : c.ihs)
            out += pad + "  IH" + (ih.index ? std::to_string(ih.index) : "") + ": " + pretty(ih.eq) + "\n";
        pretty_node(*c.body, out, indent + 2);
    }
    out += pad + "QED\n";
}

inline void pretty_chain(const Chain& ch, std::string& out, const std::string& pad) {
    out += pad + "  " + pretty(ch.start) + "\n";
    for (const auto& s : ch.steps) out += pad + "  " + pretty_just(s.just) + " .=. " + pretty(s.next) + "\n";
}

inline void pretty_node(const ProofNode& n, std::string& out, int indent) {
    std::string pad(indent, ' ');
    if (auto* e = std::get_if<Equational>(&n.v)) {
        out += pad + "Proof\n";
        pretty_chain(e->chain_l, out, pad);
        if (e->chain_r) {
            out += "\n";
            pretty_chain(*e->chain_r, out, pad);
        }
        out += pad + "QED\n";
    } else if (auto* s = std::get_if<StructuralInduction>(&n.v)) {
        out += pad + "Proof by induction on " + s->type_name + " " + s->var_name + "\n";
        pretty_cases(s->cases, out, indent);
    } else if (auto* c = std::get_if<ComputationInduction>(&n.v)) {
        out += pad + "Proof by computation induction on";
        for (const auto& v : c->arg_vars) out += " " + v;
        out += " with " + c->fun_name + "\n";
        pretty_cases(c->cases, out, indent);
    } else if (auto* a = std::get_if<CaseAnalysis>(&n.v)) {
        out += pad + "Proof by case analysis on " + a->type_name + " " + pretty(a->scrutinee) + "\n";
        pretty_cases(a->cases, out, indent);
    } else if (auto* x = std::get_if<Extensionality>(&n.v)) {
        out += pad + "Proof by extensionality with " + x->fresh_var + "\n";
        out += pad + "To show: " + pretty(x->to_show) + "\n";
        pretty_node(*x->body, out, indent);
    }
}

}  // namespace detail

inline std::string pretty(const DataDecl& d) {
    std::string out = "data " + d.type_name;
    for (const auto& p : d.type_params) out += " " + p;
    out += " =";
    for (std::size_t i = 0; i < d.constructors.size(); ++i) {
        const auto& c = d.constructors[i];
        out += i ? " | " : " ";
        if (c.infix) {
            out += detail::pretty_btype(c.arg_types[0].type) + " " + c.name + " " +
                   detail::pretty_btype(c.arg_types[1].type);
        } else {
            out += c.name;
            for (const auto& a : c.arg_types) out += " " + detail::pretty_atom_type(a.type);
        }
    }
    return out;
}

inline std::string pretty(const TheoryAst& th) {
    std::string out;
    for (const auto& d : th.decls) {
        if (auto* dd = std::get_if<DataDecl>(&d)) out += pretty(*dd);
        else if (auto* fe = std::get_if<FunEquation>(&d)) out += pretty(fe->lhs) + " = " + pretty(fe->rhs);
        else if (auto* g = std::get_if<GoalDecl>(&d)) out += "goal " + pretty(g->eq);
        out += "\n";
    }
    return out;
}

inline std::string pretty(const ProofNode& n) {
    std::string out;
    detail::pretty_node(n, out, 0);
    return out;
}

inline std::string pretty(const ProofDoc& doc) {
    std::string out;
    for (std::size_t i = 0; i < doc.lemmas.size(); ++i) {
        const auto& l = doc.lemmas[i];
        if (i) out += "\n";
        out += "Lemma";
        if (l.name) out += " " + *l.name;
        out += ": " + pretty(l.statement) + "\n";
        detail::pretty_node(l.proof, out, 0);
    }
    return out;
}

}  // namespace cyp
