#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cyp/pretty.hpp"
#include "cyp/types.hpp"

namespace cyp {

using Subst = std::map<std::string, Term>;

namespace detail {

inline bool match_rec(const Term& p, const Term& t, const std::set<std::string>& vars, Subst& s) {
    if (p.is_var() && vars.count(p.name())) {
        auto [it, fresh] = s.emplace(p.name(), t);
        return fresh || it->second == t;
    }
    if (p.kind() != t.kind() || p.name() != t.name() || p.num_children() != t.num_children()) return false;
    for (std::size_t i = 0; i < p.num_children(); ++i)
        if (!match_rec(p.child(i), t.child(i), vars, s)) return false;
    return true;
}

}  // namespace detail

/// Syntactic matching. Only variables in `vars` are bound; everything else,
/// including variables of the target, is a constant. `init` is extended
/// consistently, so the result agrees with it.
inline std::optional<Subst> match(const Term& pattern, const Term& target, const std::set<std::string>& vars,
                                  Subst init = {}) {
    if (detail::match_rec(pattern, target, vars, init)) return init;
    return std::nullopt;
}

/// Simultaneous replacement of the variables in the domain of `s`.
inline Term apply_subst(const Subst& s, const Term& t) {
    if (s.empty()) return t;
    if (t.is_var()) {
        auto it = s.find(t.name());
        return it == s.end() ? t : it->second;
    }
    if (t.is_sym()) return t;
    Term r = t;
    for (std::size_t i = 0; i < t.num_children(); ++i) {
        Term c = apply_subst(s, t.child(i));
        if (!c.same_node(t.child(i))) r = r.with_child(i, std::move(c));
    }
    return r;
}

/// Path of child indices: 0/1 are the function and argument of an
/// application, 0/1/2 the condition and branches of an if-then-else.
using Position = std::vector<int>;

inline std::string to_string(const Position& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + "]";
}

inline const Term* subterm_at(const Term& t, const Position& p) {
    const Term* cur = &t;
    for (int i : p) {
        if (i < 0 || static_cast<std::size_t>(i) >= cur->num_children()) return nullptr;
        cur = &cur->child(static_cast<std::size_t>(i));
    }
    return cur;
}

inline Term replace_at(const Term& t, const Position& p, const Term& with, std::size_t depth = 0) {
    if (depth == p.size()) return with;
    auto i = static_cast<std::size_t>(p[depth]);
    return t.with_child(i, replace_at(t.child(i), p, with, depth + 1));
}

/// All positions of `t` in pre-order.
inline void all_positions(const Term& t, Position& cur, std::vector<Position>& out) {
    out.push_back(cur);
    for (std::size_t i = 0; i < t.num_children(); ++i) {
        cur.push_back(static_cast<int>(i));
        all_positions(t.child(i), cur, out);
        cur.pop_back();
    }
}

/// Positions at which a single rewrite can turn `a` into `b`: the prefixes
/// of the deepest position below which all differences lie. Every position
/// qualifies when the terms are equal.
inline std::vector<Position> candidate_positions(const Term& a, const Term& b) {
    std::vector<Position> out;
    Position cur;
    if (a == b) {
        all_positions(a, cur, out);
        return out;
    }
    const Term* x = &a;
    const Term* y = &b;
    out.push_back(cur);
    while (x->kind() == y->kind() && x->name() == y->name() && x->num_children() == y->num_children()) {
        int diff = -1;
        for (std::size_t i = 0; i < x->num_children(); ++i) {
            if (!(x->child(i) == y->child(i))) {
                if (diff >= 0) return out;
                diff = static_cast<int>(i);
            }
        }
        if (diff < 0) break;
        x = &x->child(static_cast<std::size_t>(diff));
        y = &y->child(static_cast<std::size_t>(diff));
        cur.push_back(diff);
        out.push_back(cur);
    }
    return out;
}

/// A rewrite rule usable in either direction. `vars` are bound by matching;
/// other variables are constants. `var_types` is over `scheme_vars`.
struct Rule {
    std::string name;
    Term lhs;
    Term rhs;
    std::set<std::string> vars;
    VarTypes var_types;
    std::vector<std::string> scheme_vars;
    SourceSpan span;
};

enum class Orientation { Forward, Reverse };

inline std::string_view to_string(Orientation o) { return o == Orientation::Forward ? "forward" : "reverse"; }

struct StepEvidence {
    Rule rule;
    std::size_t rule_index = 0;
    Position position;
    Orientation orientation = Orientation::Forward;
    Subst subst;

    const Term& from_side() const { return orientation == Orientation::Forward ? rule.lhs : rule.rhs; }
    const Term& to_side() const { return orientation == Orientation::Forward ? rule.rhs : rule.lhs; }
};

/// Typing environment of a step. Without a signature no type check is made.
struct StepContext {
    const Signature* sig = nullptr;
    const VarTypes* var_types = nullptr;
    Unifier* unifier = nullptr;
    bool enforce_types = true;
};

struct StepResult {
    std::optional<StepEvidence> evidence;
    // first instance that matched syntactically but failed the type check
    std::optional<StepEvidence> ill_typed;
    std::string type_error;

    explicit operator bool() const { return evidence.has_value(); }
};

namespace detail {

// Each bound term must have its rule variable's type under one
// instantiation of the rule's scheme. Commits to `ctx.unifier` on success.
inline bool type_consistent(const Rule& r, const Subst& s, const StepContext& ctx, std::string& why) {
    if (!ctx.sig || !ctx.enforce_types || s.empty()) return true;
    Unifier trial = ctx.unifier ? *ctx.unifier : Unifier{};
    std::map<std::string, Type> inst;
    for (const auto& sv : r.scheme_vars) inst[sv] = trial.fresh();
    static const VarTypes empty;
    const VarTypes& vt = ctx.var_types ? *ctx.var_types : empty;
    for (const auto& [v, term] : s) {
        auto it = r.var_types.find(v);
        if (it == r.var_types.end()) continue;
        Type want = substitute_type(it->second, inst);
        Type got;
        try {
            got = infer_in(term, vt, *ctx.sig, trial);
        } catch (const Error& e) {
            why = e.diagnostic().message;
            return false;
        }
        if (trial.unify(want, got)) {
            Type g = trial.resolve(got), w = trial.resolve(want);
            TypePrinter show{g, w};
            why = "'" + pretty(term) + "' has type " + show(g) + " but rule variable '" + v + "' needs " + show(w);
            return false;
        }
    }
    if (ctx.unifier) *ctx.unifier = std::move(trial);
    return true;
}

}  // namespace detail

/// Searches rules in order, positions in pre-order and forward before
/// reverse for a single rewrite taking `t` to `t_next`.
inline StepResult check_step(const Term& t, const Term& t_next, const std::vector<Rule>& rules,
                             const StepContext& ctx = {}) {
    StepResult res;
    auto positions = candidate_positions(t, t_next);
    for (std::size_t ri = 0; ri < rules.size(); ++ri) {
        const Rule& r = rules[ri];
        for (const auto& p : positions) {
            const Term* a = subterm_at(t, p);
            const Term* b = subterm_at(t_next, p);
            if (!a || !b) continue;
            for (auto o : {Orientation::Forward, Orientation::Reverse}) {
                const Term& from = o == Orientation::Forward ? r.lhs : r.rhs;
                const Term& to = o == Orientation::Forward ? r.rhs : r.lhs;
                auto s = match(from, *a, r.vars);
                if (!s) continue;
                s = match(to, *b, r.vars, std::move(*s));
                if (!s) continue;
                StepEvidence ev{r, ri, p, o, std::move(*s)};
                std::string why;
                if (detail::type_consistent(r, ev.subst, ctx, why)) {
                    res.evidence = std::move(ev);
                    return res;
                }
                if (!res.ill_typed) {
                    res.ill_typed = std::move(ev);
                    res.type_error = why;
                }
            }
        }
    }
    return res;
}

}  // namespace cyp
