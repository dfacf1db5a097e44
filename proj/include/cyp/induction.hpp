#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cyp/kernel.hpp"

namespace cyp {

/// The goal being proved and the variables in scope. Types may contain
/// unification variables owned by the caller's Unifier.
struct GoalContext {
    Equation goal;
    VarTypes var_types;
    Type goal_type;
    std::set<std::string> hyp_vars;  // variables mentioned by hypotheses in scope
};

struct Hypothesis {
    std::string name;  // IH, IH1, ..., or case
    Rule rule;
};

struct Obligation {
    std::string label;
    std::vector<Term> case_patterns;
    std::vector<Hypothesis> hypotheses;
    Equation goal;
    VarTypes ctx;
    Type goal_type;
    std::vector<std::string> fresh_vars;
};

/// A rule with no bound variables: every variable is a fixed constant.
inline Rule fixed_rule(const std::string& name, const Equation& eq) {
    Rule r;
    r.name = name;
    r.lhs = eq.lhs;
    r.rhs = eq.rhs;
    r.span = eq.span;
    return r;
}

namespace detail {

inline std::string ih_name(std::size_t i, std::size_t n) { return n == 1 ? "IH" : "IH" + std::to_string(i + 1); }

inline Equation subst_eq(const Equation& e, const Subst& s) {
    return Equation{apply_subst(s, e.lhs), apply_subst(s, e.rhs), e.span};
}

inline SourceSpan header_span(const std::vector<Term>& pats) {
    SourceSpan s;
    for (const auto& p : pats) s = SourceSpan::merge(s, p.span());
    return s;
}

// `C v1 ... vn` with distinct variables; returns the constructor and variables.
inline std::pair<std::string, std::vector<std::string>> constructor_header(const std::vector<Term>& pats,
                                                                         const Signature& sig) {
    if (pats.size() != 1)
        throw Error(Code::WrongCaseSet, "MalformedCase", header_span(pats),
                    "this case needs exactly one constructor pattern");
    const Term& p = pats[0];
    const Term& h = p.head();
    const ConstructorInfo* c = h.is_sym() ? sig.constructor(h.name()) : nullptr;
    if (!c)
        throw Error(Code::WrongCaseSet, "MalformedCase", p.span(),
                    "case '" + pretty(p) + "' is not a constructor applied to variables");
    std::vector<std::string> vs;
    for (const auto& a : p.args()) {
        if (!a.is_var())
            throw Error(Code::WrongCaseSet, "MalformedCase", a.span(),
                        "case arguments must be variables, found '" + pretty(a) + "'");
        if (std::find(vs.begin(), vs.end(), a.name()) != vs.end())
            throw Error(Code::WrongCaseSet, "MalformedCase", a.span(), "variable '" + a.name() + "' bound twice");
        vs.push_back(a.name());
    }
    if (vs.size() != c->arity())
        throw Error(Code::WrongCaseSet, "MalformedCase", p.span(),
                    "constructor '" + c->name + "' takes " + std::to_string(c->arity()) + " argument(s)");
    return {c->name, vs};
}

// Every constructor of `dt` exactly once across `headers`.
inline std::vector<std::pair<std::string, std::vector<std::string>>> constructor_cases(
    const std::vector<std::vector<Term>>& headers, const DatatypeInfo& dt, const Signature& sig,
    const SourceSpan& node_span) {
    std::vector<std::pair<std::string, std::vector<std::string>>> out;
    std::set<std::string> seen;
    for (const auto& h : headers) {
        auto hc = constructor_header(h, sig);
        if (std::find(dt.constructors.begin(), dt.constructors.end(), hc.first) == dt.constructors.end())
            throw Error(Code::WrongCaseSet, "ExtraCase", header_span(h),
                        "'" + hc.first + "' is not a constructor of " + dt.name);
        if (!seen.insert(hc.first).second)
            throw Error(Code::WrongCaseSet, "DuplicateCase", header_span(h),
                        "constructor '" + hc.first + "' has two cases");
        out.push_back(std::move(hc));
    }
    for (const auto& c : dt.constructors)
        if (!seen.count(c))
            throw Error(Code::WrongCaseSet, "MissingCase", node_span, "no case for constructor '" + c + "'");
    return out;
}

inline void check_fresh(const std::string& v, const SourceSpan& at, const GoalContext& g,
                        const std::set<std::string>& replaceable) {
    if (g.var_types.count(v) && !(replaceable.count(v) && !g.hyp_vars.count(v)))
        throw Error(Code::VariableClash, "VariableClash", at,
                    "case variable '" + v + "' clashes with a variable already in scope");
}

inline SourceSpan var_span(const std::vector<Term>& pats, const std::string& v) {
    for (const auto& p : pats) {
        if (p.is_var() && p.name() == v) return p.span();
        for (std::size_t i = 0; i < p.num_children(); ++i) {
            SourceSpan s = var_span({p.child(i)}, v);
            if (s.valid()) return s;
        }
    }
    return header_span(pats);
}

inline Type datatype_instance(const DatatypeInfo& dt, Unifier& u) {
    std::vector<Type> args;
    for (std::size_t i = 0; i < dt.params.size(); ++i) args.push_back(u.fresh());
    return Type::con(dt.name, args);
}

inline VarTypes without(VarTypes vt, const std::set<std::string>& drop, const std::set<std::string>& keep) {
    for (const auto& d : drop)
        if (!keep.count(d)) vt.erase(d);
    return vt;
}

}  // namespace detail

/// One obligation per Case header (in header order), each adopting the
/// header's variable names.
inline std::vector<Obligation> gen_structural(const GoalContext& g, const std::string& var,
                                              const std::string& type_name,
                                              const std::vector<std::vector<Term>>& case_headers,
                                              const Signature& sig, Unifier& u, const SourceSpan& span = {}) {
    if (!g.var_types.count(var) ||
        (!occurs_var(g.goal.lhs, var) && !occurs_var(g.goal.rhs, var)))
        throw Error(Code::WrongCaseSet, "VarNotInGoal", span, "'" + var + "' is not a variable of the goal");
    const DatatypeInfo* dt = sig.datatype(type_name);
    if (!dt) throw Error(Code::TypeMismatch, "UnknownSymbol", span, "unknown type '" + type_name + "'");
    Type inst = detail::datatype_instance(*dt, u);
    if (auto f = u.unify(g.var_types.at(var), inst)) {
        TypePrinter show{f->left, f->right};
        Diagnostic d = make_diag(Code::TypeMismatch, "TypeMismatch", span,
                                 "'" + var + "' has type " + show(f->left) + ", not " + type_name);
        d.expected = show(f->right);
        d.stated = show(f->left);
        throw Error(std::move(d));
    }
    Type var_type = u.resolve(inst);
    auto cases = detail::constructor_cases(case_headers, *dt, sig, span);

    std::vector<Obligation> out;
    for (std::size_t k = 0; k < cases.size(); ++k) {
        const auto& [cname, vs] = cases[k];
        const ConstructorInfo& c = *sig.constructor(cname);
        auto arg_types = sig.constructor_args_at(c, var_type.args);
        for (const auto& v : vs) detail::check_fresh(v, detail::var_span(case_headers[k], v), g, {var});
        Obligation ob;
        ob.label = cname;
        ob.case_patterns = case_headers[k];
        ob.fresh_vars = vs;
        ob.ctx = detail::without(g.var_types, {var}, g.hyp_vars);
        std::vector<Term> vterms;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            ob.ctx[vs[i]] = arg_types[i];
            vterms.push_back(Term::var(vs[i]));
        }
        ob.goal = detail::subst_eq(g.goal, {{var, Term::apply(Term::sym(cname), vterms)}});
        ob.goal_type = g.goal_type;
        std::vector<std::size_t> rec;
        for (std::size_t i = 0; i < arg_types.size(); ++i)
            if (u.resolve(arg_types[i]) == var_type) rec.push_back(i);
        for (std::size_t j = 0; j < rec.size(); ++j) {
            std::string n = detail::ih_name(j, rec.size());
            Equation e = detail::subst_eq(g.goal, {{var, vterms[rec[j]]}});
            ob.hypotheses.push_back({n, fixed_rule(n, e)});
        }
        out.push_back(std::move(ob));
    }
    return out;
}

namespace detail {

inline void find_branch_recursion(const Term& t, const std::string& f, bool in_branch, const FunEquation& eq) {
    if (in_branch && t.is_sym() && t.name() == f)
        throw Error(Code::IfThenElseRecursion, "IfThenElseRecursion", t.span(),
                    "recursive call of '" + f + "' inside a branch of an if-then-else in '" + pretty(eq.lhs) +
                        " = " + pretty(eq.rhs) + "'");
    if (t.is_ite()) {
        find_branch_recursion(t.cond(), f, in_branch, eq);
        find_branch_recursion(t.then_branch(), f, true, eq);
        find_branch_recursion(t.else_branch(), f, true, eq);
        return;
    }
    for (std::size_t i = 0; i < t.num_children(); ++i) find_branch_recursion(t.child(i), f, in_branch, eq);
}

// Saturated calls of `f` in pre-order.
inline void recursive_calls(const Term& t, const std::string& f, std::size_t arity, std::vector<std::vector<Term>>& out) {
    if (t.is_app() || t.is_sym()) {
        const Term& h = t.head();
        auto args = t.args();
        if (h.is_sym() && h.name() == f && args.size() == arity) out.push_back(args);
    }
    for (std::size_t i = 0; i < t.num_children(); ++i) recursive_calls(t.child(i), f, arity, out);
}

// Bijective variable renaming taking pattern tuple `a` to `b`.
inline bool alpha_patterns(const Term& a, const Term& b, std::map<std::string, std::string>& fwd,
                           std::map<std::string, std::string>& bwd) {
    if (a.is_var() && b.is_var()) {
        auto [i, f1] = fwd.emplace(a.name(), b.name());
        auto [j, f2] = bwd.emplace(b.name(), a.name());
        return i->second == b.name() && j->second == a.name();
    }
    if (a.kind() != b.kind() || a.name() != b.name() || a.num_children() != b.num_children()) return false;
    for (std::size_t k = 0; k < a.num_children(); ++k)
        if (!alpha_patterns(a.child(k), b.child(k), fwd, bwd)) return false;
    return true;
}

}  // namespace detail

/// Rejects `f` if a recursive call sits inside a then/else branch.
inline void check_computation_guard(const std::string& f, const Signature& sig) {
    const FunctionInfo* fi = sig.function(f);
    if (!fi) return;
    for (const auto& e : fi->equations) detail::find_branch_recursion(e.eq.rhs, f, false, e.eq);
}

/// One obligation per Case header; each header must be a defining equation
/// of `fun` up to renaming of its pattern variables.
inline std::vector<Obligation> gen_computation(const GoalContext& g, const std::string& fun,
                                               const std::vector<std::string>& arg_vars,
                                               const std::vector<std::vector<Term>>& case_headers,
                                               const Signature& sig, Unifier& u, const SourceSpan& span = {}) {
    const FunctionInfo* fi = sig.function(fun);
    if (!fi) throw Error(Code::TypeMismatch, "UnknownSymbol", span, "unknown function '" + fun + "'");
    if (fi->arity != arg_vars.size())
        throw Error(Code::WrongCaseSet, "ArityMismatch", span,
                    "'" + fun + "' takes " + std::to_string(fi->arity) + " argument(s) but " +
                        std::to_string(arg_vars.size()) + " induction variable(s) were given");
    std::set<std::string> targets;
    for (const auto& v : arg_vars) {
        if (sig.function(v) || sig.constructor(v))
            throw Error(Code::WrongCaseSet, "NonVariableTarget", span, "'" + v + "' is not a variable");
        if (!g.var_types.count(v) || (!occurs_var(g.goal.lhs, v) && !occurs_var(g.goal.rhs, v)))
            throw Error(Code::WrongCaseSet, "VarNotInGoal", span, "'" + v + "' is not a variable of the goal");
        if (!targets.insert(v).second)
            throw Error(Code::WrongCaseSet, "NonVariableTarget", span, "'" + v + "' is named twice");
    }
    check_computation_guard(fun, sig);

    // one instantiation shared by the function type and all pattern variables
    std::set<std::string> all_scheme;
    for (const auto& e : fi->equations) all_scheme.insert(e.scheme_vars.begin(), e.scheme_vars.end());
    for (const auto& q : fi->scheme.quantified) all_scheme.insert(q);
    std::map<std::string, Type> inst;
    for (const auto& s : all_scheme) inst[s] = u.fresh();
    Type ftype = substitute_type(fi->scheme.body, inst);
    for (const auto& v : arg_vars) {
        if (auto f = u.unify(ftype.dom(), g.var_types.at(v))) {
            TypePrinter show{f->right, f->left};
            Diagnostic d = make_diag(Code::TypeMismatch, "TypeMismatch", span,
                                     "'" + v + "' has type " + show(f->right) + " but '" + fun +
                                         "' expects " + show(f->left) + " here");
            d.expected = show(f->left);
            d.stated = show(f->right);
            throw Error(std::move(d));
        }
        Type cod = ftype.cod();
        ftype = std::move(cod);
    }

    std::vector<Obligation> out;
    std::vector<bool> used(fi->equations.size(), false);
    for (const auto& h : case_headers) {
        std::optional<std::size_t> which;
        std::map<std::string, std::string> fwd, bwd;
        for (std::size_t i = 0; i < fi->equations.size() && !which; ++i) {
            const auto& pats = fi->equations[i].eq.lhs_patterns;
            if (pats.size() != h.size()) continue;
            fwd.clear();
            bwd.clear();
            bool ok = true;
            for (std::size_t k = 0; ok && k < h.size(); ++k) ok = detail::alpha_patterns(pats[k], h[k], fwd, bwd);
            if (ok) which = i;
        }
        if (!which)
            throw Error(Code::WrongCaseSet, "ExtraCase", detail::header_span(h),
                        "case '" + pretty_tuple(h) + "' is not a defining equation of '" + fun + "'");
        if (used[*which])
            throw Error(Code::WrongCaseSet, "DuplicateCase", detail::header_span(h),
                        "equation " + std::to_string(*which + 1) + " of '" + fun + "' has two cases");
        used[*which] = true;
        const EquationInfo& ei = fi->equations[*which];

        Obligation ob;
        ob.label = pretty_tuple(h);
        ob.case_patterns = h;
        for (const auto& p : ei.eq.lhs_patterns)
            for (const auto& v : free_vars(p)) ob.fresh_vars.push_back(fwd.at(v));
        for (const auto& v : ob.fresh_vars) detail::check_fresh(v, detail::var_span(h, v), g, targets);
        ob.ctx = detail::without(g.var_types, targets, g.hyp_vars);
        for (const auto& [v, t] : ei.var_types) ob.ctx[fwd.at(v)] = substitute_type(t, inst);
        Subst s;
        for (std::size_t k = 0; k < arg_vars.size(); ++k) s[arg_vars[k]] = h[k];
        ob.goal = detail::subst_eq(g.goal, s);
        ob.goal_type = g.goal_type;
        Term rhs = rename_vars(ei.eq.rhs, fwd);
        std::vector<std::vector<Term>> calls;
        detail::recursive_calls(rhs, fun, fi->arity, calls);
        for (std::size_t j = 0; j < calls.size(); ++j) {
            Subst cs;
            for (std::size_t k = 0; k < arg_vars.size(); ++k) cs[arg_vars[k]] = calls[j][k];
            std::string n = detail::ih_name(j, calls.size());
            ob.hypotheses.push_back({n, fixed_rule(n, detail::subst_eq(g.goal, cs))});
        }
        out.push_back(std::move(ob));
    }
    for (std::size_t i = 0; i < used.size(); ++i)
        if (!used[i])
            throw Error(Code::WrongCaseSet, "MissingCase", span,
                        "no case for equation " + std::to_string(i + 1) + " of '" + fun + "': " +
                            pretty(fi->equations[i].eq.lhs));
    return out;
}

/// Goal unchanged in every case, plus the hypothesis `scrutinee .=. C vs`.
inline std::vector<Obligation> gen_case_analysis(const GoalContext& g, const std::string& type_name,
                                                 const Term& scrutinee,
                                                 const std::vector<std::vector<Term>>& case_headers,
                                                 const Signature& sig, Unifier& u, const SourceSpan& span = {}) {
    const DatatypeInfo* dt = sig.datatype(type_name);
    if (!dt) throw Error(Code::TypeMismatch, "UnknownSymbol", span, "unknown type '" + type_name + "'");
    Type st = infer_in(scrutinee, g.var_types, sig, u);
    Type inst = detail::datatype_instance(*dt, u);
    if (auto f = u.unify(st, inst)) {
        TypePrinter show{f->left, f->right};
        Diagnostic d = make_diag(Code::TypeMismatch, "TypeMismatch", scrutinee.span(),
                                 "'" + pretty(scrutinee) + "' has type " + show(f->left) + ", not " +
                                     type_name);
        d.expected = show(f->right);
        d.stated = show(f->left);
        throw Error(std::move(d));
    }
    Type stype = u.resolve(inst);
    auto cases = detail::constructor_cases(case_headers, *dt, sig, span);
    std::vector<Obligation> out;
    for (std::size_t k = 0; k < cases.size(); ++k) {
        const auto& [cname, vs] = cases[k];
        const ConstructorInfo& c = *sig.constructor(cname);
        auto arg_types = sig.constructor_args_at(c, stype.args);
        for (const auto& v : vs) detail::check_fresh(v, detail::var_span(case_headers[k], v), g, {});
        Obligation ob;
        ob.label = cname;
        ob.case_patterns = case_headers[k];
        ob.fresh_vars = vs;
        ob.ctx = g.var_types;
        std::vector<Term> vterms;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            ob.ctx[vs[i]] = arg_types[i];
            vterms.push_back(Term::var(vs[i]));
        }
        ob.goal = g.goal;
        ob.goal_type = g.goal_type;
        Equation h{scrutinee, Term::apply(Term::sym(cname), vterms), detail::header_span(case_headers[k])};
        ob.hypotheses.push_back({"case", fixed_rule("case", h)});
        out.push_back(std::move(ob));
    }
    return out;
}

/// `lhs w .=. rhs w` for a fresh `w` at the domain of the goal's arrow type.
inline Obligation gen_extensionality(const GoalContext& g, const std::string& fresh_var, const Signature& sig,
                                     Unifier& u, const SourceSpan& span = {}) {
    (void)sig;
    if (g.var_types.count(fresh_var))
        throw Error(Code::VariableClash, "VariableClash", span,
                    "'" + fresh_var + "' clashes with a variable already in scope");
    Type gt = u.resolve(g.goal_type);
    if (gt.is_flexible()) {
        Type arr = Type::arrow(u.fresh(), u.fresh());
        u.unify(gt, arr);
        gt = u.resolve(arr);
    }
    if (!gt.is_arrow()) {
        Diagnostic d = make_diag(Code::TypeMismatch, "NotFunctionType", span,
                                 "extensionality needs a goal of function type, not " + TypePrinter{gt}(gt));
        d.stated = TypePrinter{gt}(gt);
        throw Error(std::move(d));
    }
    Obligation ob;
    ob.label = "ext " + fresh_var;
    ob.fresh_vars = {fresh_var};
    ob.ctx = g.var_types;
    ob.ctx[fresh_var] = gt.dom();
    Term w = Term::var(fresh_var);
    ob.goal = Equation{Term::app(g.goal.lhs, w), Term::app(g.goal.rhs, w), g.goal.span};
    ob.goal_type = gt.cod();
    return ob;
}

}  // namespace cyp
