#pragma once

#include <cassert>
#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "cyp/diagnostic.hpp"

namespace cyp {

enum class TermKind { Var, Sym, App, Ite };

inline bool is_symbolic_name(const std::string& name) {
    return !name.empty() && !std::isalnum(static_cast<unsigned char>(name[0])) && name[0] != '_' &&
           name != "[]";
}

/// Uppercase names, `[]` and operators starting with `:` denote constructors.
inline bool is_constructor_name(const std::string& name) {
    if (name.empty()) return false;
    if (name == "[]") return true;
    if (name[0] == ':') return true;
    return std::isupper(static_cast<unsigned char>(name[0])) != 0;
}

/// Immutable first-order curried term. Copies share structure. Equality is
/// structural and ignores spans.
class Term {
public:
    Term() = default;

    static Term var(std::string name, SourceSpan span = {}) {
        return Term(std::make_shared<Node>(Node{TermKind::Var, std::move(name), {}, std::move(span)}));
    }
    static Term sym(std::string name, SourceSpan span = {}) {
        return Term(std::make_shared<Node>(Node{TermKind::Sym, std::move(name), {}, std::move(span)}));
    }
    static Term app(Term fun, Term arg, SourceSpan span = {}) {
        if (!span.valid()) span = SourceSpan::merge(fun.span(), arg.span());
        return Term(std::make_shared<Node>(Node{TermKind::App, {}, {std::move(fun), std::move(arg)}, std::move(span)}));
    }
    static Term ite(Term c, Term t, Term e, SourceSpan span = {}) {
        return Term(std::make_shared<Node>(
            Node{TermKind::Ite, {}, {std::move(c), std::move(t), std::move(e)}, std::move(span)}));
    }
    /// `head a1 ... an` as left-nested applications.
    static Term apply(Term head, const std::vector<Term>& args) {
        for (const auto& a : args) head = app(std::move(head), a);
        return head;
    }

    bool empty() const { return node_ == nullptr; }
    TermKind kind() const { return node_->kind; }
    bool is_var() const { return kind() == TermKind::Var; }
    bool is_sym() const { return kind() == TermKind::Sym; }
    bool is_app() const { return kind() == TermKind::App; }
    bool is_ite() const { return kind() == TermKind::Ite; }
    bool is_constructor() const { return is_sym() && is_constructor_name(name()); }

    const std::string& name() const { return node_->name; }
    const SourceSpan& span() const { return node_->span; }
    const Term& fun() const { return node_->kids[0]; }
    const Term& arg() const { return node_->kids[1]; }
    const Term& cond() const { return node_->kids[0]; }
    const Term& then_branch() const { return node_->kids[1]; }
    const Term& else_branch() const { return node_->kids[2]; }

    std::size_t num_children() const { return node_->kids.size(); }
    const Term& child(std::size_t i) const { return node_->kids[i]; }

    /// Same node with child `i` replaced.
    Term with_child(std::size_t i, Term c) const {
        auto n = std::make_shared<Node>(*node_);
        n->kids[i] = std::move(c);
        return Term(std::move(n));
    }
    Term with_span(SourceSpan s) const {
        auto n = std::make_shared<Node>(*node_);
        n->span = std::move(s);
        return Term(std::move(n));
    }

    /// Head of the application spine (the term itself for non-applications).
    const Term& head() const {
        const Term* t = this;
        while (t->is_app()) t = &t->fun();
        return *t;
    }
    std::vector<Term> args() const {
        std::vector<Term> out;
        const Term* t = this;
        while (t->is_app()) {
            out.push_back(t->arg());
            t = &t->fun();
        }
        return {out.rbegin(), out.rend()};
    }

    bool same_node(const Term& o) const { return node_ == o.node_; }

    friend bool operator==(const Term& a, const Term& b) {
        if (a.node_ == b.node_) return true;
        if (!a.node_ || !b.node_) return false;
        if (a.kind() != b.kind() || a.name() != b.name()) return false;
        if (a.num_children() != b.num_children()) return false;
        for (std::size_t i = 0; i < a.num_children(); ++i)
            if (!(a.child(i) == b.child(i))) return false;
        return true;
    }
    friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

private:
    struct Node {
        TermKind kind;
        std::string name;
        std::vector<Term> kids;
        SourceSpan span;
    };
    explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    std::shared_ptr<const Node> node_;
};

/// Strict weak order on structure, for use as a map key.
inline bool term_less(const Term& a, const Term& b) {
    if (a.kind() != b.kind()) return a.kind() < b.kind();
    if (a.name() != b.name()) return a.name() < b.name();
    if (a.num_children() != b.num_children()) return a.num_children() < b.num_children();
    for (std::size_t i = 0; i < a.num_children(); ++i) {
        if (term_less(a.child(i), b.child(i))) return true;
        if (term_less(b.child(i), a.child(i))) return false;
    }
    return false;
}

inline void collect_vars(const Term& t, std::vector<std::string>& out, std::set<std::string>& seen) {
    if (t.is_var()) {
        if (seen.insert(t.name()).second) out.push_back(t.name());
        return;
    }
    for (std::size_t i = 0; i < t.num_children(); ++i) collect_vars(t.child(i), out, seen);
}

/// Free variables in order of first occurrence (pre-order, left to right).
inline std::vector<std::string> free_vars(const Term& t) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    collect_vars(t, out, seen);
    return out;
}

inline std::set<std::string> var_set(const Term& t) {
    auto v = free_vars(t);
    return {v.begin(), v.end()};
}

inline bool occurs_var(const Term& t, const std::string& name) {
    if (t.is_var()) return t.name() == name;
    for (std::size_t i = 0; i < t.num_children(); ++i)
        if (occurs_var(t.child(i), name)) return true;
    return false;
}

inline std::size_t term_size(const Term& t) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < t.num_children(); ++i) n += term_size(t.child(i));
    return n;
}

/// Variables named in `names` become symbols. Everything else is untouched.
inline Term resolve_symbols(const Term& t, const std::set<std::string>& names) {
    if (t.is_var()) return names.count(t.name()) ? Term::sym(t.name(), t.span()) : t;
    if (t.is_sym()) return t;
    Term r = t;
    for (std::size_t i = 0; i < t.num_children(); ++i) {
        Term c = resolve_symbols(t.child(i), names);
        if (!c.same_node(t.child(i))) r = r.with_child(i, std::move(c));
    }
    return r;
}

/// Replaces variables by new names (a renaming); unmapped variables stay.
inline Term rename_vars(const Term& t, const std::map<std::string, std::string>& ren) {
    if (t.is_var()) {
        auto it = ren.find(t.name());
        return it == ren.end() ? t : Term::var(it->second, t.span());
    }
    if (t.is_sym()) return t;
    Term r = t;
    for (std::size_t i = 0; i < t.num_children(); ++i) {
        Term c = rename_vars(t.child(i), ren);
        if (!c.same_node(t.child(i))) r = r.with_child(i, std::move(c));
    }
    return r;
}

/// An equation of two terms, as written in goals, lemmas and hypotheses.
struct Equation {
    Term lhs;
    Term rhs;
    SourceSpan span;

    friend bool operator==(const Equation& a, const Equation& b) { return a.lhs == b.lhs && a.rhs == b.rhs; }
};

}  // namespace cyp
