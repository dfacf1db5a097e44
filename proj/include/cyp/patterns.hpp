#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cyp/pretty.hpp"
#include "cyp/types.hpp"

namespace cyp {

/// An argument tuple no equation matches. `_` stands for any value.
struct CoverageGap {
    std::vector<Term> witness;
};

/// Two equations (1-based, textual order) whose patterns share an instance.
struct Overlap {
    std::size_t first = 0;
    std::size_t second = 0;
    std::vector<Term> witness;
};

namespace detail {

using PatRow = std::vector<Term>;

inline Term wildcard() { return Term::var("_"); }

// Usefulness of an all-wildcard row against `rows`: returns an argument
// tuple not matched by any row, or nullopt if the rows are exhaustive.
inline std::optional<std::vector<Term>> uncovered(const std::vector<PatRow>& rows, const std::vector<Type>& types,
                                                  const Signature& sig) {
    if (types.empty()) {
        if (rows.empty()) return std::vector<Term>{};
        return std::nullopt;
    }
    const Type& col = types[0];
    std::vector<Type> rest(types.begin() + 1, types.end());
    const DatatypeInfo* dt = col.is_con() ? sig.datatype(col.name) : nullptr;

    std::set<std::string> heads;
    for (const auto& r : rows)
        if (!r[0].is_var()) heads.insert(r[0].head().name());

    if (dt && !heads.empty() && heads.size() == dt->constructors.size()) {
        for (const auto& cname : dt->constructors) {
            const ConstructorInfo& c = *sig.constructor(cname);
            std::vector<PatRow> spec;
            for (const auto& r : rows) {
                PatRow nr;
                if (r[0].is_var()) {
                    nr.assign(c.arity(), wildcard());
                } else if (r[0].head().name() == cname) {
                    nr = r[0].args();
                } else {
                    continue;
                }
                nr.insert(nr.end(), r.begin() + 1, r.end());
                spec.push_back(std::move(nr));
            }
            std::vector<Type> ntypes = sig.constructor_args_at(c, col.args);
            ntypes.insert(ntypes.end(), rest.begin(), rest.end());
            if (auto w = uncovered(spec, ntypes, sig)) {
                std::vector<Term> sub(w->begin(), w->begin() + static_cast<long>(c.arity()));
                std::vector<Term> out{Term::apply(Term::sym(cname), sub)};
                out.insert(out.end(), w->begin() + static_cast<long>(c.arity()), w->end());
                return out;
            }
        }
        return std::nullopt;
    }

    std::vector<PatRow> def;
    for (const auto& r : rows)
        if (r[0].is_var()) def.emplace_back(r.begin() + 1, r.end());
    auto w = uncovered(def, rest, sig);
    if (!w) return std::nullopt;
    Term first = wildcard();
    if (dt && !heads.empty()) {
        for (const auto& cname : dt->constructors) {
            if (heads.count(cname)) continue;
            const ConstructorInfo& c = *sig.constructor(cname);
            first = Term::apply(Term::sym(cname), std::vector<Term>(c.arity(), wildcard()));
            break;
        }
    }
    std::vector<Term> out{first};
    out.insert(out.end(), w->begin(), w->end());
    return out;
}

// Most general common instance of two linear patterns from different rows.
inline std::optional<Term> unify_patterns(const Term& p, const Term& q) {
    if (p.is_var()) return q.is_var() ? wildcard() : q;
    if (q.is_var()) return p;
    if (p.head().name() != q.head().name()) return std::nullopt;
    auto pa = p.args();
    auto qa = q.args();
    if (pa.size() != qa.size()) return std::nullopt;
    std::vector<Term> args;
    for (std::size_t i = 0; i < pa.size(); ++i) {
        auto a = unify_patterns(pa[i], qa[i]);
        if (!a) return std::nullopt;
        args.push_back(*a);
    }
    return Term::apply(Term::sym(p.head().name()), args);
}

inline Term anonymize(const Term& t) {
    if (t.is_var()) return wildcard();
    if (t.is_sym()) return Term::sym(t.name());
    return Term::apply(Term::sym(t.head().name()), [&] {
        std::vector<Term> as;
        for (const auto& a : t.args()) as.push_back(anonymize(a));
        return as;
    }());
}

}  // namespace detail

/// Exhaustiveness of `f`'s equations over its argument types. The witness
/// takes missing constructors in declaration order.
inline std::optional<CoverageGap> check_exhaustive(const std::string& f, const Signature& sig) {
    const FunctionInfo* fi = sig.function(f);
    if (!fi) throw Error(Code::InternalError, "UnknownSymbol", {}, "no function '" + f + "'");
    std::vector<detail::PatRow> rows;
    for (const auto& e : fi->equations) rows.push_back(e.eq.lhs_patterns);
    auto [args, res] = fi->split();
    (void)res;
    auto w = detail::uncovered(rows, args, sig);
    if (!w) return std::nullopt;
    return CoverageGap{*w};
}

/// Pairwise disjointness; reports the first overlapping pair in textual order.
inline std::optional<Overlap> check_disjoint(const std::string& f, const Signature& sig) {
    const FunctionInfo* fi = sig.function(f);
    if (!fi) throw Error(Code::InternalError, "UnknownSymbol", {}, "no function '" + f + "'");
    const auto& eqs = fi->equations;
    for (std::size_t i = 0; i < eqs.size(); ++i) {
        for (std::size_t j = i + 1; j < eqs.size(); ++j) {
            const auto& a = eqs[i].eq.lhs_patterns;
            const auto& b = eqs[j].eq.lhs_patterns;
            std::vector<Term> w;
            bool ok = a.size() == b.size();
            for (std::size_t k = 0; ok && k < a.size(); ++k) {
                auto u = detail::unify_patterns(a[k], b[k]);
                if (!u) ok = false;
                else w.push_back(detail::anonymize(*u));
            }
            if (ok) return Overlap{i + 1, j + 1, w};
        }
    }
    return std::nullopt;
}

/// Totality diagnostics for every function of the signature.
inline std::vector<Diagnostic> check_totality(const Signature& sig) {
    std::vector<Diagnostic> out;
    for (const auto& name : sig.function_order) {
        const FunctionInfo& fi = sig.functions.at(name);
        if (auto gap = check_exhaustive(name, sig)) {
            auto d = make_diag(Code::CoverageGap, "CoverageGap", fi.span,
                               "equations for '" + name + "' do not cover the arguments " +
                                   pretty_tuple(gap->witness));
            out.push_back(std::move(d));
        }
        if (auto ov = check_disjoint(name, sig)) {
            const auto& e2 = fi.equations[ov->second - 1].eq;
            auto d = make_diag(Code::Overlap, "Overlap", e2.span,
                               "equations " + std::to_string(ov->first) + " and " + std::to_string(ov->second) +
                                   " for '" + name + "' overlap on " + pretty_tuple(ov->witness));
            d.related.push_back(fi.equations[ov->first - 1].eq.span);
            out.push_back(std::move(d));
        }
    }
    return out;
}

}  // namespace cyp
