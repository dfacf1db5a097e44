#pragma once

#include <algorithm>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cyp/ast.hpp"
#include "cyp/pretty.hpp"
#include "cyp/type_expr.hpp"

namespace cyp {

using VarTypes = std::map<std::string, Type>;

/// Substitution over unification variables ('?'-prefixed). Rigid variables
/// only unify with themselves.
class Unifier {
public:
    struct Failure {
        bool occurs = false;
        Type left;
        Type right;
    };

    Type fresh() { return Type::var("?" + std::to_string(next_++)); }

    Type resolve(const Type& t) const {
        if (t.is_var()) {
            auto it = bind_.find(t.name);
            return it == bind_.end() ? t : resolve(it->second);
        }
        Type r = t;
        for (auto& a : r.args) a = resolve(a);
        return r;
    }

    /// Either unifies both types or leaves the substitution untouched.
    std::optional<Failure> unify(const Type& a, const Type& b) {
        auto saved = bind_;
        Failure f;
        if (unify_rec(a, b, f)) return std::nullopt;
        bind_ = std::move(saved);
        f.left = resolve(a);
        f.right = resolve(b);
        return f;
    }

    bool unifiable(const Type& a, const Type& b) const {
        Unifier copy = *this;
        return !copy.unify(a, b).has_value();
    }

private:
    std::map<std::string, Type> bind_;
    int next_ = 0;

    Type walk(const Type& t) const {
        const Type* p = &t;
        while (p->is_var()) {
            auto it = bind_.find(p->name);
            if (it == bind_.end()) break;
            p = &it->second;
        }
        return *p;
    }

    bool unify_rec(const Type& a0, const Type& b0, Failure& f) {
        Type a = walk(a0);
        Type b = walk(b0);
        if (a.is_flexible() && b.is_flexible() && a.name == b.name) return true;
        if (a.is_flexible()) return bind(a.name, b, f);
        if (b.is_flexible()) return bind(b.name, a, f);
        if (a.kind != b.kind || a.name != b.name || a.args.size() != b.args.size()) return false;
        for (std::size_t i = 0; i < a.args.size(); ++i)
            if (!unify_rec(a.args[i], b.args[i], f)) return false;
        return true;
    }

    bool bind(const std::string& v, const Type& t, Failure& f) {
        if (type_occurs(resolve(t), v)) {
            f.occurs = true;
            return false;
        }
        bind_[v] = t;
        return true;
    }
};

/// Names the unification variables of one diagnostic t0, t1, ... in order of
/// first appearance, so messages do not depend on the solver's counter.
class TypePrinter {
public:
    TypePrinter(std::initializer_list<Type> order) {
        for (const auto& t : order) visit(t);
    }
    std::string operator()(const Type& t) {
        visit(t);
        return to_string(substitute_type(t, names_));
    }

private:
    void visit(const Type& t) {
        for (const auto& v : type_vars(t))
            if (v[0] == '?' && !names_.count(v)) names_[v] = Type::var("t" + std::to_string(names_.size()));
    }
    std::map<std::string, Type> names_;
};

struct ConstructorInfo {
    std::string name;
    std::string type_name;
    std::vector<std::string> params;
    std::vector<Type> arg_types;  // over `params`
    TypeScheme scheme;
    std::size_t index = 0;  // position in the declaration
    SourceSpan span;

    std::size_t arity() const { return arg_types.size(); }
    Type result_type() const {
        std::vector<Type> ps;
        for (const auto& p : params) ps.push_back(Type::var(p));
        return Type::con(type_name, ps);
    }
};

struct DatatypeInfo {
    std::string name;
    std::vector<std::string> params;
    std::vector<std::string> constructors;  // declaration order
    SourceSpan span;
};

struct EquationInfo {
    FunEquation eq;
    VarTypes var_types;  // pattern variables, over scheme_vars
    std::vector<std::string> scheme_vars;
};

struct FunctionInfo {
    std::string name;
    TypeScheme scheme;
    std::size_t arity = 0;
    std::vector<EquationInfo> equations;
    SourceSpan span;

    /// Argument and result types of the scheme body peeled `arity` times.
    std::pair<std::vector<Type>, Type> split() const {
        std::vector<Type> args;
        Type t = scheme.body;
        for (std::size_t i = 0; i < arity && t.is_arrow(); ++i) {
            args.push_back(t.dom());
            Type cod = t.cod();
            t = std::move(cod);
        }
        return {args, t};
    }
};

struct Signature {
    std::map<std::string, ConstructorInfo> constructors;
    std::map<std::string, FunctionInfo> functions;
    std::map<std::string, DatatypeInfo> datatypes;
    std::vector<std::string> datatype_order;
    std::vector<std::string> function_order;

    const ConstructorInfo* constructor(const std::string& n) const {
        auto it = constructors.find(n);
        return it == constructors.end() ? nullptr : &it->second;
    }
    const FunctionInfo* function(const std::string& n) const {
        auto it = functions.find(n);
        return it == functions.end() ? nullptr : &it->second;
    }
    const DatatypeInfo* datatype(const std::string& n) const {
        auto it = datatypes.find(n);
        return it == datatypes.end() ? nullptr : &it->second;
    }

    /// True iff `data Bool = True | False` is declared, in that order.
    bool has_bool() const {
        const DatatypeInfo* d = datatype("Bool");
        return d && d->params.empty() && d->constructors == std::vector<std::string>{"True", "False"};
    }

    std::set<std::string> function_names() const {
        std::set<std::string> s;
        for (const auto& [n, f] : functions) s.insert(n);
        return s;
    }

    /// Constructor arguments at a concrete instance of its datatype.
    std::vector<Type> constructor_args_at(const ConstructorInfo& c, const std::vector<Type>& type_args) const {
        std::map<std::string, Type> m;
        for (std::size_t i = 0; i < c.params.size() && i < type_args.size(); ++i) m[c.params[i]] = type_args[i];
        std::vector<Type> out;
        for (const auto& a : c.arg_types) out.push_back(substitute_type(a, m));
        return out;
    }
};

inline Type instantiate(const TypeScheme& s, Unifier& u, std::map<std::string, Type>* out_map = nullptr) {
    std::map<std::string, Type> m;
    for (const auto& q : s.quantified) m[q] = u.fresh();
    if (out_map) *out_map = m;
    return substitute_type(s.body, m);
}

namespace detail {

struct InferEnv {
    const Signature& sig;
    const VarTypes& vars;
    Unifier& u;
    const std::map<std::string, Type>* mono = nullptr;  // functions under inference
};

[[noreturn]] inline void type_mismatch(const std::string& kind, const SourceSpan& at, const SourceSpan& other,
                                       const std::string& msg, const Type& expected, const Type& found,
                                       TypePrinter& show) {
    Diagnostic d = make_diag(Code::TypeMismatch, kind, at, msg);
    if (other.valid()) d.related.push_back(other);
    d.expected = show(expected);
    d.stated = show(found);
    throw Error(std::move(d));
}

inline Type infer(const Term& t, InferEnv& env) {
    switch (t.kind()) {
        case TermKind::Var: {
            auto it = env.vars.find(t.name());
            if (it == env.vars.end())
                throw Error(Code::TypeMismatch, "UnboundVariable", t.span(), "unbound variable '" + t.name() + "'");
            return it->second;
        }
        case TermKind::Sym: {
            if (env.mono) {
                auto it = env.mono->find(t.name());
                if (it != env.mono->end()) return it->second;
            }
            if (const auto* c = env.sig.constructor(t.name())) return instantiate(c->scheme, env.u);
            if (const auto* f = env.sig.function(t.name())) return instantiate(f->scheme, env.u);
            throw Error(Code::TypeMismatch, "UnknownSymbol", t.span(), "unknown symbol '" + t.name() + "'");
        }
        case TermKind::App: {
            Type tf = infer(t.fun(), env);
            Type ta = infer(t.arg(), env);
            Type r = env.u.fresh();
            if (auto fail = env.u.unify(tf, Type::arrow(ta, r))) {
                Type rf = env.u.resolve(tf);
                Type ra = env.u.resolve(ta);
                TypePrinter show{ra, rf};
                if (fail->occurs)
                    type_mismatch("OccursCheck", t.arg().span(), t.fun().span(),
                                  "infinite type: applying '" + pretty(t.fun()) + "' to '" + pretty(t.arg()) + "'",
                                  rf, ra, show);
                if (rf.is_arrow())
                    type_mismatch("TypeMismatch", t.arg().span(), t.fun().span(),
                                  "argument '" + pretty(t.arg()) + "' has type " + show(ra) + " but '" +
                                      pretty(t.fun()) + "' expects " + show(rf.dom()),
                                  rf.dom(), ra, show);
                type_mismatch("TypeMismatch", t.fun().span(), t.arg().span(),
                              "'" + pretty(t.fun()) + "' of type " + show(rf) + " is not a function", rf, ra, show);
            }
            return r;
        }
        case TermKind::Ite: {
            if (!env.sig.has_bool())
                throw Error(Code::MissingBoolDecl, "MissingBoolDecl", t.span(),
                            "if-then-else requires the declaration 'data Bool = True | False'");
            Type tc = infer(t.cond(), env);
            Type boolean = Type::con("Bool");
            if (env.u.unify(tc, boolean)) {
                Type rc = env.u.resolve(tc);
                TypePrinter show{rc};
                type_mismatch("TypeMismatch", t.cond().span(), t.span(),
                              "condition has type " + show(rc) + " but must be Bool", boolean, rc, show);
            }
            Type tt = infer(t.then_branch(), env);
            Type te = infer(t.else_branch(), env);
            if (auto fail = env.u.unify(tt, te)) {
                TypePrinter show{fail->left, fail->right};
                type_mismatch(fail->occurs ? "OccursCheck" : "TypeMismatch", t.else_branch().span(),
                              t.then_branch().span(),
                              "branches have different types " + show(fail->left) + " and " + show(fail->right),
                              fail->left, fail->right, show);
            }
            return tt;
        }
    }
    throw Error(Code::InternalError, "InternalError", t.span(), "unreachable term kind");
}

/// Renames the unification variables of `types` to a, b, c, ... in order of
/// first appearance, skipping names in `avoid`.
inline std::map<std::string, Type> generalizer(const std::vector<Type>& types, const std::set<std::string>& avoid,
                                               std::vector<std::string>& names,
                                               std::map<std::string, Type> ren = {}) {
    std::size_t k = 0;
    for (const auto& [from, to] : ren) {
        (void)from;
        names.push_back(to.name);
    }
    k = names.size();
    for (const auto& t : types) {
        for (const auto& v : type_vars(t)) {
            if (!(v.size() > 0 && v[0] == '?') || ren.count(v)) continue;
            std::string n;
            do {
                n = scheme_var_name(k++);
            } while (avoid.count(n));
            ren[v] = Type::var(n);
            names.push_back(n);
        }
    }
    return ren;
}

inline void check_type_wellformed(const Type& t, const std::map<std::string, std::size_t>& arities,
                                  const SourceSpan& span) {
    if (t.is_con()) {
        auto it = arities.find(t.name);
        if (it == arities.end())
            throw Error(Code::TypeMismatch, "UnknownSymbol", span, "unknown type '" + t.name + "'");
        if (it->second != t.args.size())
            throw Error(Code::TypeMismatch, "ArityMismatch", span,
                        "type '" + t.name + "' expects " + std::to_string(it->second) + " argument(s) but got " +
                            std::to_string(t.args.size()));
    }
    for (const auto& a : t.args) check_type_wellformed(a, arities, span);
}

inline void check_pattern_arity(const Term& p, const Signature& sig) {
    if (p.is_var()) return;
    const Term& h = p.head();
    auto args = p.args();
    const ConstructorInfo* c = sig.constructor(h.name());
    if (!c) throw Error(Code::TypeMismatch, "UnknownSymbol", h.span(), "unknown constructor '" + h.name() + "'");
    if (args.size() != c->arity())
        throw Error(Code::TypeMismatch, "ArityMismatch", p.span(),
                    "constructor '" + c->name + "' takes " + std::to_string(c->arity()) +
                        " argument(s) in patterns but is applied to " + std::to_string(args.size()));
    for (const auto& a : args) check_pattern_arity(a, sig);
}

}  // namespace detail

/// Reads constructor schemes from the data declarations and infers every
/// function as one mutually recursive, monomorphic group, generalizing
/// afterwards.
inline Signature infer_signature(const TheoryAst& th) {
    Signature sig;
    std::map<std::string, std::size_t> arities;
    for (const auto* d : th.all<DataDecl>()) {
        if (arities.count(d->type_name))
            throw Error(Code::ParseError, "DuplicateType", d->span, "type '" + d->type_name + "' declared twice");
        arities[d->type_name] = d->type_params.size();
    }
    for (const auto* d : th.all<DataDecl>()) {
        DatatypeInfo info{d->type_name, d->type_params, {}, d->span};
        std::vector<Type> params;
        for (const auto& p : d->type_params) params.push_back(Type::var(p));
        Type result = Type::con(d->type_name, params);
        for (std::size_t i = 0; i < d->constructors.size(); ++i) {
            const auto& cd = d->constructors[i];
            if (sig.constructors.count(cd.name))
                throw Error(Code::ParseError, "DuplicateConstructor", cd.span,
                            "constructor '" + cd.name + "' declared twice");
            ConstructorInfo ci;
            ci.name = cd.name;
            ci.type_name = d->type_name;
            ci.params = d->type_params;
            ci.index = i;
            ci.span = cd.span;
            for (const auto& a : cd.arg_types) {
                detail::check_type_wellformed(a.type, arities, a.span);
                ci.arg_types.push_back(a.type);
            }
            ci.scheme = TypeScheme{d->type_params, Type::function(ci.arg_types, result)};
            info.constructors.push_back(cd.name);
            sig.constructors.emplace(cd.name, std::move(ci));
        }
        sig.datatype_order.push_back(d->type_name);
        sig.datatypes.emplace(d->type_name, std::move(info));
    }

    Unifier u;
    std::map<std::string, Type> mono;
    std::map<std::string, std::vector<const FunEquation*>> eqs_of;
    for (const auto* e : th.all<FunEquation>()) {
        if (!mono.count(e->fun_name)) {
            mono[e->fun_name] = u.fresh();
            sig.function_order.push_back(e->fun_name);
        }
        eqs_of[e->fun_name].push_back(e);
    }
    std::map<const FunEquation*, VarTypes> local;
    for (const auto* e : th.all<FunEquation>()) {
        const auto& first = *eqs_of[e->fun_name].front();
        if (e->lhs_patterns.size() != first.lhs_patterns.size()) {
            Diagnostic d = make_diag(Code::TypeMismatch, "ArityMismatch", e->lhs.span(),
                                     "equations for '" + e->fun_name + "' have different numbers of arguments");
            d.related.push_back(first.lhs.span());
            throw Error(std::move(d));
        }
        VarTypes vars;
        for (const auto& p : e->lhs_patterns) {
            detail::check_pattern_arity(p, sig);
            for (const auto& v : free_vars(p)) vars[v] = u.fresh();
        }
        detail::InferEnv env{sig, vars, u, &mono};
        Type tl = detail::infer(e->lhs, env);
        Type tr = detail::infer(e->rhs, env);
        if (auto fail = u.unify(tl, tr)) {
            TypePrinter show{fail->left, fail->right};
            Diagnostic d = make_diag(Code::TypeMismatch, fail->occurs ? "OccursCheck" : "TypeMismatch", e->rhs.span(),
                                     fail->occurs ? "infinite type in the definition of '" + e->fun_name + "'"
                                                  : "right-hand side has type " + show(fail->right) +
                                                        " but the left-hand side has type " + show(fail->left));
            d.related.push_back(e->lhs.span());
            if (&first != e) d.related.push_back(first.span);
            d.expected = show(fail->left);
            d.stated = show(fail->right);
            throw Error(std::move(d));
        }
        local[e] = std::move(vars);
    }

    for (const auto& name : sig.function_order) {
        FunctionInfo fi;
        fi.name = name;
        fi.arity = eqs_of[name].front()->lhs_patterns.size();
        fi.span = eqs_of[name].front()->span;
        Type body = u.resolve(mono[name]);
        std::vector<std::string> names;
        auto ren = detail::generalizer({body}, {}, names);
        fi.scheme = TypeScheme{names, substitute_type(body, ren)};
        for (const auto* e : eqs_of[name]) {
            EquationInfo ei;
            ei.eq = *e;
            std::vector<Type> vts;
            for (const auto& [v, t] : local[e]) vts.push_back(u.resolve(t));
            std::vector<std::string> all_names;
            auto eren = detail::generalizer(vts, {}, all_names, ren);
            for (const auto& [v, t] : local[e]) ei.var_types[v] = substitute_type(u.resolve(t), eren);
            ei.scheme_vars = all_names;
            fi.equations.push_back(std::move(ei));
        }
        sig.functions.emplace(name, std::move(fi));
    }
    return sig;
}

/// Principal type of `t` when its variables have the (rigid) types in `ctx`.
/// Residual type variables are named t0, t1, ...
inline Type typecheck_term(const Term& t, const VarTypes& ctx, const Signature& sig) {
    Unifier u;
    detail::InferEnv env{sig, ctx, u};
    Type ty = u.resolve(detail::infer(t, env));
    std::set<std::string> avoid;
    for (const auto& [v, vt] : ctx)
        for (const auto& n : type_vars(vt)) avoid.insert(n);
    std::map<std::string, Type> ren;
    std::size_t k = 0;
    for (const auto& v : type_vars(ty)) {
        if (v[0] != '?') continue;
        std::string n;
        do {
            n = "t" + std::to_string(k++);
        } while (avoid.count(n));
        ren[v] = Type::var(n);
    }
    return substitute_type(ty, ren);
}

/// Typing of an implicitly quantified equation.
struct TypedGoal {
    Term lhs;
    Term rhs;
    VarTypes var_types;
    std::vector<std::string> var_order;  // first occurrence, lhs then rhs
    Type goal_type;
    std::vector<std::string> scheme_vars;
};

namespace detail {

inline TypedGoal generalize_goal(const Term& lhs, const Term& rhs, const std::vector<std::string>& order,
                                 const VarTypes& vars, const Type& goal_type, const Unifier& u) {
    TypedGoal g;
    g.lhs = lhs;
    g.rhs = rhs;
    g.var_order = order;
    std::vector<Type> types;
    for (const auto& v : order) types.push_back(u.resolve(vars.at(v)));
    types.push_back(u.resolve(goal_type));
    std::vector<std::string> names;
    auto ren = generalizer(types, {}, names);
    for (std::size_t i = 0; i < order.size(); ++i) g.var_types[order[i]] = substitute_type(types[i], ren);
    g.goal_type = substitute_type(types.back(), ren);
    g.scheme_vars = names;
    return g;
}

}  // namespace detail

inline TypedGoal infer_goal(const Equation& eq, const Signature& sig) {
    Unifier u;
    std::vector<std::string> order = free_vars(eq.lhs);
    for (const auto& v : free_vars(eq.rhs))
        if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
    VarTypes vars;
    for (const auto& v : order) vars[v] = u.fresh();
    detail::InferEnv env{sig, vars, u};
    Type tl = detail::infer(eq.lhs, env);
    Type tr = detail::infer(eq.rhs, env);
    if (auto fail = u.unify(tl, tr)) {
        TypePrinter show{fail->left, fail->right};
        Diagnostic d = make_diag(Code::TypeMismatch, fail->occurs ? "OccursCheck" : "TypeMismatch", eq.rhs.span(),
                                 "the two sides have different types " + show(fail->left) + " and " +
                                     show(fail->right));
        d.related.push_back(eq.lhs.span());
        d.expected = show(fail->left);
        d.stated = show(fail->right);
        throw Error(std::move(d));
    }
    return detail::generalize_goal(eq.lhs, eq.rhs, order, vars, tl, u);
}

/// Replaces scheme variables by fresh unification variables.
inline std::pair<VarTypes, Type> instantiate_goal(const TypedGoal& g, Unifier& u) {
    std::map<std::string, Type> m;
    for (const auto& s : g.scheme_vars) m[s] = u.fresh();
    VarTypes vt;
    for (const auto& [v, t] : g.var_types) vt[v] = substitute_type(t, m);
    return {vt, substitute_type(g.goal_type, m)};
}

/// Type of `t` in a context that may hold unification variables. Refines
/// `u` on success.
inline Type infer_in(const Term& t, const VarTypes& ctx, const Signature& sig, Unifier& u) {
    detail::InferEnv env{sig, ctx, u};
    return detail::infer(t, env);
}

}  // namespace cyp
