#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "cyp/kernel.hpp"

namespace cyp {

enum class EvalStatus { Value, FuelExhausted, StuckTerm, NonGroundInput, FunctionValue };

inline std::string_view to_string(EvalStatus s) {
    switch (s) {
        case EvalStatus::Value: return "Value";
        case EvalStatus::FuelExhausted: return "FuelExhausted";
        case EvalStatus::StuckTerm: return "StuckTerm";
        case EvalStatus::NonGroundInput: return "NonGroundInput";
        case EvalStatus::FunctionValue: return "FunctionValue";
    }
    return "StuckTerm";
}

struct EvalResult {
    EvalStatus status = EvalStatus::Value;
    Term value;
    std::string detail;
    std::uint64_t reductions = 0;

    bool ok() const { return status == EvalStatus::Value; }
};

inline constexpr std::uint64_t default_fuel = 1'000'000;

namespace detail {

struct EvalAbort {
    EvalStatus status;
    std::string detail;
};

class Evaluator {
public:
    Evaluator(const Signature& sig, std::uint64_t fuel) : sig_(sig), fuel_(fuel) {}

    std::uint64_t used = 0;

    // Values are constructor trees or partial applications of a symbol to values.
    Term eval(const Term& t) {
        Depth guard(*this);
        switch (t.kind()) {
            case TermKind::Var:
                throw EvalAbort{EvalStatus::NonGroundInput, "free variable '" + t.name() + "'"};
            case TermKind::Sym:
                if (const auto* f = sig_.function(t.name()); f && f->arity == 0) return call(*f, {});
                if (!sig_.function(t.name()) && !sig_.constructor(t.name()))
                    throw EvalAbort{EvalStatus::StuckTerm, "unknown symbol '" + t.name() + "'"};
                return t;
            case TermKind::App: {
                Term f = eval(t.fun());
                Term a = eval(t.arg());
                return apply(f, a);
            }
            case TermKind::Ite: {
                tick();
                Term c = eval(t.cond());
                if (c.is_sym() && c.name() == "True") return eval(t.then_branch());
                if (c.is_sym() && c.name() == "False") return eval(t.else_branch());
                throw EvalAbort{EvalStatus::StuckTerm, "condition evaluated to '" + pretty(c) + "'"};
            }
        }
        throw EvalAbort{EvalStatus::StuckTerm, "unreachable"};
    }

    Term apply(const Term& f, const Term& a) {
        const Term& h = f.head();
        if (const auto* fi = sig_.function(h.name())) {
            auto args = f.args();
            args.push_back(a);
            if (args.size() == fi->arity) return call(*fi, args);
            if (args.size() < fi->arity) return Term::app(f, a);
            throw EvalAbort{EvalStatus::StuckTerm, "over-applied '" + h.name() + "'"};
        }
        if (const auto* c = sig_.constructor(h.name()); c && f.args().size() < c->arity()) return Term::app(f, a);
        throw EvalAbort{EvalStatus::StuckTerm, "cannot apply '" + pretty(f) + "'"};
    }

private:
    static constexpr int max_depth = 5000;

    struct Depth {
        explicit Depth(Evaluator& e) : e_(e) {
            if (++e_.depth_ > max_depth) {
                --e_.depth_;
                throw EvalAbort{EvalStatus::FuelExhausted, "recursion depth limit reached"};
            }
        }
        ~Depth() { --e_.depth_; }
        Depth(const Depth&) = delete;
        Depth& operator=(const Depth&) = delete;
        Evaluator& e_;
    };

    void tick() {
        if (used >= fuel_) throw EvalAbort{EvalStatus::FuelExhausted, "fuel exhausted"};
        ++used;
    }

    Term call(const FunctionInfo& f, const std::vector<Term>& args) {
        tick();
        const EquationInfo* hit = nullptr;
        Subst sigma;
        int hits = 0;
        for (const auto& e : f.equations) {
            std::set<std::string> vars;
            for (const auto& p : e.eq.lhs_patterns)
                for (const auto& v : free_vars(p)) vars.insert(v);
            Subst s;
            bool ok = true;
            for (std::size_t i = 0; ok && i < args.size(); ++i) {
                auto m = match(e.eq.lhs_patterns[i], args[i], vars, std::move(s));
                if (!m) ok = false;
                else s = std::move(*m);
            }
            if (ok) {
                if (++hits == 1) {
                    hit = &e;
                    sigma = std::move(s);
                }
            }
        }
        if (hits != 1)
            throw EvalAbort{EvalStatus::StuckTerm, std::to_string(hits) + " equations of '" + f.name +
                                                       "' match " + pretty(Term::apply(Term::sym(f.name), args))};
        return eval(apply_subst(sigma, hit->eq.rhs));
    }

    const Signature& sig_;
    std::uint64_t fuel_;
    int depth_ = 0;
};

inline bool is_constructor_value(const Term& t, const Signature& sig) {
    const Term& h = t.head();
    const auto* c = sig.constructor(h.name());
    if (!c) return false;
    auto args = t.args();
    if (args.size() != c->arity()) return false;
    for (const auto& a : args)
        if (!is_constructor_value(a, sig)) return false;
    return true;
}

}  // namespace detail

/// Call-by-value evaluation of a ground term. Every function call and
/// if-then-else reduction costs one unit of fuel.
inline EvalResult eval(const Term& t, const Signature& sig, std::uint64_t fuel = default_fuel) {
    EvalResult r;
    if (!free_vars(t).empty()) {
        r.status = EvalStatus::NonGroundInput;
        r.detail = "term has free variables";
        return r;
    }
    detail::Evaluator ev(sig, fuel);
    try {
        r.value = ev.eval(t);
    } catch (const detail::EvalAbort& a) {
        r.status = a.status;
        r.detail = a.detail;
        r.reductions = ev.used;
        return r;
    }
    r.reductions = ev.used;
    if (!detail::is_constructor_value(r.value, sig)) {
        r.status = EvalStatus::FunctionValue;
        r.detail = "result '" + pretty(r.value) + "' is a function value";
    }
    return r;
}

namespace detail {

inline constexpr int height_bound = 16;

// Least height of a ground value of `t`, or -1 if none exists within the bound.
inline int min_height(const Type& t, const Signature& sig, std::map<std::string, int>& memo, int depth = 0) {
    if (!t.is_con()) return -1;
    std::string key = to_string(t);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    if (depth > height_bound) return -1;
    const DatatypeInfo* dt = sig.datatype(t.name);
    if (!dt) return -1;
    int best = -1;
    for (const auto& cname : dt->constructors) {
        const ConstructorInfo& c = *sig.constructor(cname);
        int h = 1;
        for (const auto& a : sig.constructor_args_at(c, t.args)) {
            int ah = min_height(a, sig, memo, depth + 1);
            if (ah < 0) {
                h = -1;
                break;
            }
            h = std::max(h, ah + 1);
        }
        if (h > 0 && (best < 0 || h < best)) best = h;
    }
    if (depth == 0 || best >= 0) memo[key] = best;
    return best;
}

inline Term gen_rec(const Type& t, int budget, const Signature& sig, std::mt19937_64& rng,
                    std::map<std::string, int>& memo) {
    const DatatypeInfo* dt = t.is_con() ? sig.datatype(t.name) : nullptr;
    if (!dt) throw Error(Code::InternalError, "NotADatatype", {}, "cannot generate values of type " + to_string(t));
    std::vector<const ConstructorInfo*> usable;
    std::vector<int> heights;
    for (const auto& cname : dt->constructors) {
        const ConstructorInfo& c = *sig.constructor(cname);
        int h = 1;
        for (const auto& a : sig.constructor_args_at(c, t.args)) {
            int ah = min_height(a, sig, memo);
            if (ah < 0) {
                h = -1;
                break;
            }
            h = std::max(h, ah + 1);
        }
        if (h > 0) {
            usable.push_back(&c);
            heights.push_back(h);
        }
    }
    if (usable.empty())
        throw Error(Code::NoBaseConstructor, "NoBaseConstructor", dt->span,
                    "type " + to_string(t) + " has no finite value");
    if (budget <= 0) {
        int lo = *std::min_element(heights.begin(), heights.end());
        std::vector<const ConstructorInfo*> base;
        for (std::size_t i = 0; i < usable.size(); ++i)
            if (heights[i] == lo) base.push_back(usable[i]);
        usable = base;
    }
    const ConstructorInfo& c = *usable[rng() % usable.size()];
    auto arg_types = sig.constructor_args_at(c, t.args);
    int rest = budget > 0 ? budget - 1 : 0;
    std::vector<Term> args;
    for (std::size_t i = 0; i < arg_types.size(); ++i) {
        int share = i + 1 == arg_types.size() ? rest : static_cast<int>(rng() % static_cast<unsigned>(rest + 1));
        rest -= share;
        args.push_back(gen_rec(arg_types[i], share, sig, rng, memo));
    }
    return Term::apply(Term::sym(c.name), args);
}

}  // namespace detail

/// Deterministic random ground value of a fully applied datatype. `budget`
/// bounds the number of non-minimal constructor choices.
inline Term gen_ground(const Type& type, int size_budget, std::uint64_t seed, const Signature& sig) {
    std::mt19937_64 rng(seed);
    std::map<std::string, int> memo;
    return detail::gen_rec(type, size_budget, sig, rng, memo);
}

inline Term gen_ground(const Type& type, int size_budget, std::mt19937_64& rng, const Signature& sig) {
    std::map<std::string, int> memo;
    return detail::gen_rec(type, size_budget, sig, rng, memo);
}

}  // namespace cyp
