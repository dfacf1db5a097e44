#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cyp/eval.hpp"

namespace cyp {

struct Counterexample {
    Subst instance;
    EvalResult lhs;
    EvalResult rhs;
    std::string describe() const {
        std::string s;
        for (const auto& [v, t] : instance) s += (s.empty() ? "" : ", ") + v + " = " + pretty(t);
        return s;
    }
};

struct OracleStats {
    std::size_t samples = 0;
    std::size_t agreed = 0;
    std::size_t inconclusive = 0;  // fuel ran out or no instance could be built
};

namespace detail {

// Nullary datatypes with a finite value, in declaration order.
inline std::vector<std::string> ground_base_types(const Signature& sig) {
    std::vector<std::string> out;
    std::map<std::string, int> memo;
    for (const auto& n : sig.datatype_order) {
        const DatatypeInfo& d = sig.datatypes.at(n);
        if (d.params.empty() && min_height(Type::con(n), sig, memo) > 0) out.push_back(n);
    }
    return out;
}

// Stand-in element type for theories without a nullary datatype, such as a
// theory of lists alone. '#' keeps the names out of reach of source files.
inline constexpr const char* sample_type = "Elem#";

inline Signature with_sample_type(const Signature& sig) {
    Signature s = sig;
    DatatypeInfo d{sample_type, {}, {"E1#", "E2#"}, {}};
    for (std::size_t i = 0; i < d.constructors.size(); ++i) {
        ConstructorInfo c;
        c.name = d.constructors[i];
        c.type_name = sample_type;
        c.scheme = TypeScheme{{}, Type::con(sample_type)};
        c.index = i;
        s.constructors.emplace(c.name, std::move(c));
    }
    s.datatype_order.push_back(sample_type);
    s.datatypes.emplace(sample_type, std::move(d));
    return s;
}

// A symbol, possibly partially applied to random values, of type `want`.
inline std::optional<Term> gen_function_value(const Type& want, const Signature& sig, std::mt19937_64& rng,
                                              int budget, int depth = 0);

inline std::optional<Term> gen_value(const Type& t, const Signature& sig, std::mt19937_64& rng, int budget,
                                     int depth = 0) {
    if (t.is_arrow()) return gen_function_value(t, sig, rng, budget, depth);
    try {
        return gen_ground(t, budget, rng, sig);
    } catch (const Error&) {
        return std::nullopt;
    }
}

inline std::optional<Term> gen_function_value(const Type& want, const Signature& sig, std::mt19937_64& rng,
                                              int budget, int depth) {
    if (depth > 2) return std::nullopt;
    struct Cand {
        std::string name;
        const TypeScheme* scheme;
    };
    std::vector<Cand> cands;
    for (const auto& n : sig.function_order) cands.push_back({n, &sig.functions.at(n).scheme});
    for (const auto& n : sig.datatype_order)
        for (const auto& c : sig.datatypes.at(n).constructors) cands.push_back({c, &sig.constructors.at(c).scheme});
    // candidates whose type, after supplying k leading arguments, is `want`
    struct Option {
        std::string name;
        std::vector<Type> supplied;
    };
    std::vector<Option> options;
    for (const auto& c : cands) {
        Unifier u;
        Type t = instantiate(*c.scheme, u);
        std::vector<Type> supplied;
        while (true) {
            if (u.unifiable(t, want)) {
                Unifier v = u;
                v.unify(t, want);
                std::vector<Type> args;
                bool ground = true;
                for (const auto& s : supplied) {
                    Type r = v.resolve(s);
                    if (!type_vars(r).empty()) ground = false;
                    args.push_back(r);
                }
                if (ground) options.push_back({c.name, args});
            }
            if (!t.is_arrow()) break;
            supplied.push_back(t.dom());
            Type cod = t.cod();
            t = std::move(cod);
        }
    }
    while (!options.empty()) {
        std::size_t i = rng() % options.size();
        std::vector<Term> args;
        bool ok = true;
        for (const auto& a : options[i].supplied) {
            auto v = gen_value(a, sig, rng, budget / 2, depth + 1);
            if (!v) {
                ok = false;
                break;
            }
            args.push_back(*v);
        }
        if (ok) return Term::apply(Term::sym(options[i].name), args);
        options.erase(options.begin() + static_cast<long>(i));
    }
    return std::nullopt;
}

}  // namespace detail

/// Evaluates both sides of `g` on random ground instances. Scheme variables
/// of sample i are all set to the i-th nullary datatype (cyclically), or to a
/// two-valued stand-in when there is none; function-typed goals are applied
/// to random arguments first.
inline std::optional<Counterexample> oracle_check(const TypedGoal& g, const Signature& theory_sig,
                                                  std::size_t samples, std::uint64_t fuel, std::uint64_t seed,
                                                  int max_budget = 3, OracleStats* stats = nullptr) {
    auto bases = detail::ground_base_types(theory_sig);
    Signature extended;
    if (bases.empty() && !g.scheme_vars.empty()) {
        extended = detail::with_sample_type(theory_sig);
        bases = {detail::sample_type};
    }
    const Signature& sig = extended.datatypes.empty() ? theory_sig : extended;
    std::mt19937_64 rng(seed);
    OracleStats local;
    OracleStats& st = stats ? *stats : local;
    for (std::size_t i = 0; i < samples; ++i) {
        ++st.samples;
        std::map<std::string, Type> inst;
        if (!g.scheme_vars.empty()) {
            if (bases.empty()) {
                ++st.inconclusive;
                continue;
            }
            for (const auto& s : g.scheme_vars) inst[s] = Type::con(bases[i % bases.size()]);
        }
        Subst sigma;
        bool built = true;
        for (const auto& v : g.var_order) {
            Type t = substitute_type(g.var_types.at(v), inst);
            int budget = static_cast<int>(rng() % static_cast<unsigned>(max_budget + 1));
            auto val = detail::gen_value(t, sig, rng, budget);
            if (!val) {
                built = false;
                break;
            }
            sigma[v] = *val;
        }
        Term lhs = apply_subst(sigma, g.lhs);
        Term rhs = apply_subst(sigma, g.rhs);
        Type gt = substitute_type(g.goal_type, inst);
        int extra = 0;
        while (built && gt.is_arrow()) {
            int budget = static_cast<int>(rng() % static_cast<unsigned>(max_budget + 1));
            auto a = detail::gen_value(gt.dom(), sig, rng, budget);
            if (!a) {
                built = false;
                break;
            }
            sigma["arg" + std::to_string(extra++)] = *a;
            lhs = Term::app(lhs, *a);
            rhs = Term::app(rhs, *a);
            Type cod = gt.cod();
            gt = std::move(cod);
        }
        if (!built) {
            ++st.inconclusive;
            continue;
        }
        EvalResult l = eval(lhs, sig, fuel);
        EvalResult r = eval(rhs, sig, fuel);
        if (l.status == EvalStatus::FuelExhausted || r.status == EvalStatus::FuelExhausted) {
            ++st.inconclusive;
            continue;
        }
        if (!l.ok() || !r.ok() || !(l.value == r.value)) return Counterexample{sigma, l, r};
        ++st.agreed;
    }
    return std::nullopt;
}

}  // namespace cyp
