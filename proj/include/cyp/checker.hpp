#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cyp/induction.hpp"
#include "cyp/oracle.hpp"
#include "cyp/parser.hpp"
#include "cyp/patterns.hpp"

namespace cyp {

struct CheckOptions {
    std::size_t oracle_samples = 0;
    std::uint64_t fuel = default_fuel;
    std::uint64_t seed = 20210901;
    bool enforce_types = true;  // only switched off to demonstrate the untyped failure mode
};

enum class Verdict { Proven, Failed, Skipped };

inline std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Proven: return "proven";
        case Verdict::Failed: return "failed";
        case Verdict::Skipped: return "skipped";
    }
    return "failed";
}

struct LemmaReport {
    std::optional<std::string> name;
    std::string statement;
    SourceSpan span;
    Verdict verdict = Verdict::Skipped;
    std::vector<Diagnostic> diagnostics;
    std::optional<TypedGoal> typed;  // refined statement typing, when proven
    std::size_t steps = 0;
    double seconds = 0;
};

struct GoalReport {
    std::string statement;
    SourceSpan span;
    bool satisfied = false;
    bool blocked = false;  // stated by a lemma that failed
    std::optional<std::size_t> proven_by;
    std::vector<Diagnostic> diagnostics;
};

struct CheckReport {
    std::string theory_file;
    std::string proof_file;
    std::map<std::string, std::string> sources;
    std::vector<Diagnostic> theory_diagnostics;
    std::vector<LemmaReport> lemmas;
    std::vector<GoalReport> goals;
    bool theory_ok = true;
    bool goals_satisfied = false;
    std::size_t steps = 0;
    double seconds = 0;

    std::size_t count(Verdict v) const {
        std::size_t n = 0;
        for (const auto& l : lemmas) n += l.verdict == v;
        return n;
    }
    std::size_t goals_met() const {
        std::size_t n = 0;
        for (const auto& g : goals) n += g.satisfied;
        return n;
    }
    bool accepted() const { return theory_ok && goals_satisfied && count(Verdict::Failed) == 0; }
    bool has_internal_error() const {
        auto in = [](const std::vector<Diagnostic>& ds) {
            for (const auto& d : ds)
                if (d.code == Code::InternalError) return true;
            return false;
        };
        if (in(theory_diagnostics)) return true;
        for (const auto& l : lemmas)
            if (in(l.diagnostics)) return true;
        return false;
    }
};

// ------------------------------------------------------------ resolution

namespace detail {

inline void resolve_eq(Equation& e, const std::set<std::string>& fs) {
    e.lhs = resolve_symbols(e.lhs, fs);
    e.rhs = resolve_symbols(e.rhs, fs);
}

inline void resolve_node(ProofNode& n, const std::set<std::string>& fs);

inline void resolve_chain(Chain& c, const std::set<std::string>& fs) {
    c.start = resolve_symbols(c.start, fs);
    for (auto& s : c.steps) s.next = resolve_symbols(s.next, fs);
}

inline void resolve_cases(std::vector<CaseBlock>& cs, const std::set<std::string>& fs) {
    for (auto& c : cs) {
        for (auto& p : c.patterns) p = resolve_symbols(p, fs);
        resolve_eq(c.to_show, fs);
        for (auto& ih : c.ihs) resolve_eq(ih.eq, fs);
        resolve_node(*c.body, fs);
    }
}

inline void resolve_node(ProofNode& n, const std::set<std::string>& fs) {
    if (auto* e = std::get_if<Equational>(&n.v)) {
        resolve_chain(e->chain_l, fs);
        if (e->chain_r) resolve_chain(*e->chain_r, fs);
    } else if (auto* s = std::get_if<StructuralInduction>(&n.v)) {
        resolve_cases(s->cases, fs);
    } else if (auto* c = std::get_if<ComputationInduction>(&n.v)) {
        resolve_cases(c->cases, fs);
    } else if (auto* a = std::get_if<CaseAnalysis>(&n.v)) {
        a->scrutinee = resolve_symbols(a->scrutinee, fs);
        resolve_cases(a->cases, fs);
    } else if (auto* x = std::get_if<Extensionality>(&n.v)) {
        resolve_eq(x->to_show, fs);
        resolve_node(*x->body, fs);
    }
}

}  // namespace detail

/// Proof terms are parsed without knowing the theory: lowercase names that
/// the theory defines become function symbols here.
inline void resolve_doc(ProofDoc& doc, const std::set<std::string>& function_names) {
    for (auto& l : doc.lemmas) {
        detail::resolve_eq(l.statement, function_names);
        detail::resolve_node(l.proof, function_names);
    }
}

/// Equal up to a bijective renaming of term variables and of type variables.
inline bool alpha_equivalent(const TypedGoal& a, const TypedGoal& b) {
    std::map<std::string, std::string> fwd, bwd;
    if (!detail::alpha_patterns(a.lhs, b.lhs, fwd, bwd) || !detail::alpha_patterns(a.rhs, b.rhs, fwd, bwd))
        return false;
    std::map<std::string, std::string> tf, tb;
    std::function<bool(const Type&, const Type&)> ty = [&](const Type& x, const Type& y) {
        if (x.is_var() && y.is_var()) {
            auto [i, f1] = tf.emplace(x.name, y.name);
            auto [j, f2] = tb.emplace(y.name, x.name);
            return i->second == y.name && j->second == x.name;
        }
        if (x.kind != y.kind || x.name != y.name || x.args.size() != y.args.size()) return false;
        for (std::size_t k = 0; k < x.args.size(); ++k)
            if (!ty(x.args[k], y.args[k])) return false;
        return true;
    };
    for (const auto& [va, vb] : fwd)
        if (!ty(a.var_types.at(va), b.var_types.at(vb))) return false;
    return ty(a.goal_type, b.goal_type);
}

inline bool alpha_equivalent_terms(const Equation& a, const Equation& b) {
    std::map<std::string, std::string> fwd, bwd;
    return detail::alpha_patterns(a.lhs, b.lhs, fwd, bwd) && detail::alpha_patterns(a.rhs, b.rhs, fwd, bwd);
}

/// Rule for citing a proven lemma: all its variables are bound.
inline Rule lemma_rule(const std::string& name, const TypedGoal& g, const SourceSpan& span = {}) {
    Rule r;
    r.name = "Lemma " + name;
    r.lhs = g.lhs;
    r.rhs = g.rhs;
    r.vars = {g.var_order.begin(), g.var_order.end()};
    r.var_types = g.var_types;
    r.scheme_vars = g.scheme_vars;
    r.span = span;
    return r;
}

inline std::vector<Rule> definition_rules(const FunctionInfo& f) {
    std::vector<Rule> out;
    for (std::size_t i = 0; i < f.equations.size(); ++i) {
        const EquationInfo& e = f.equations[i];
        Rule r;
        r.name = "def " + f.name + " #" + std::to_string(i + 1);
        r.lhs = e.eq.lhs;
        r.rhs = e.eq.rhs;
        for (const auto& p : e.eq.lhs_patterns)
            for (const auto& v : free_vars(p)) r.vars.insert(v);
        r.var_types = e.var_types;
        r.scheme_vars = e.scheme_vars;
        r.span = e.eq.span;
        out.push_back(std::move(r));
    }
    return out;
}

// ------------------------------------------------------------- lemma check

/// State for checking one lemma's proof tree.
class ProofChecker {
public:
    struct Scope {
        VarTypes vars;
        Type goal_type;
        std::vector<Hypothesis> hyps;
    };

    ProofChecker(const Signature& sig, const std::map<std::string, TypedGoal>& registry,
                 const std::map<std::string, std::size_t>& lemma_index, std::size_t current, Unifier& u,
                 bool enforce_types)
        : sig_(sig), registry_(registry), lemma_index_(lemma_index), current_(current), u_(u),
          enforce_types_(enforce_types) {}

    std::vector<Diagnostic> diags;
    std::size_t steps = 0;

    void check_node(const ProofNode& node, const Equation& goal, const Scope& sc) {
        if (auto* e = std::get_if<Equational>(&node.v)) {
            check_equational(*e, goal, sc);
            return;
        }
        GoalContext g{goal, sc.vars, sc.goal_type, hyp_vars(sc)};
        try {
            if (auto* s = std::get_if<StructuralInduction>(&node.v)) {
                auto obs = gen_structural(g, s->var_name, s->type_name, headers(s->cases), sig_, u_, node.span);
                check_cases(s->cases, obs, sc);
            } else if (auto* c = std::get_if<ComputationInduction>(&node.v)) {
                auto obs = gen_computation(g, c->fun_name, c->arg_vars, headers(c->cases), sig_, u_, node.span);
                check_cases(c->cases, obs, sc);
            } else if (auto* a = std::get_if<CaseAnalysis>(&node.v)) {
                auto obs = gen_case_analysis(g, a->type_name, a->scrutinee, headers(a->cases), sig_, u_, node.span);
                check_cases(a->cases, obs, sc);
            } else if (auto* x = std::get_if<Extensionality>(&node.v)) {
                Obligation ob = gen_extensionality(g, x->fresh_var, sig_, u_, node.span);
                if (!(x->to_show == ob.goal)) {
                    diags.push_back(to_show_mismatch(ob.goal, x->to_show, node.span));
                    return;
                }
                check_node(*x->body, ob.goal, Scope{ob.ctx, ob.goal_type, sc.hyps});
            }
        } catch (const Error& e) {
            diags.push_back(e.diagnostic());
        }
    }

private:
    static std::vector<std::vector<Term>> headers(const std::vector<CaseBlock>& cs) {
        std::vector<std::vector<Term>> out;
        for (const auto& c : cs) out.push_back(c.patterns);
        return out;
    }

    static std::set<std::string> hyp_vars(const Scope& sc) {
        std::set<std::string> out;
        for (const auto& h : sc.hyps) {
            for (const auto& v : free_vars(h.rule.lhs)) out.insert(v);
            for (const auto& v : free_vars(h.rule.rhs)) out.insert(v);
        }
        return out;
    }

    static Diagnostic to_show_mismatch(const Equation& expected, const Equation& stated, const SourceSpan& fallback) {
        Diagnostic d = make_diag(Code::ToShowMismatch, "ToShowMismatch", stated.span.valid() ? stated.span : fallback,
                                 "stated goal differs from the generated one");
        d.expected = pretty(expected);
        d.stated = pretty(stated);
        return d;
    }

    void check_cases(const std::vector<CaseBlock>& cases, const std::vector<Obligation>& obs, const Scope& sc) {
        for (std::size_t i = 0; i < cases.size() && i < obs.size(); ++i) {
            const CaseBlock& cb = cases[i];
            const Obligation& ob = obs[i];
            if (!(cb.to_show == ob.goal)) {
                diags.push_back(to_show_mismatch(ob.goal, cb.to_show, cb.span));
                continue;
            }
            std::vector<Hypothesis> hyps = sc.hyps;
            std::vector<Equation> generated;
            for (const auto& h : ob.hypotheses) {
                if (h.name == "case") hyps.push_back(h);
                else generated.push_back(Equation{h.rule.lhs, h.rule.rhs, {}});
            }
            if (!check_ihs(cb, generated)) continue;
            for (const auto& ih : cb.ihs) {
                std::string label = ih.index ? "IH" + std::to_string(ih.index) : "IH";
                hyps.push_back({label, fixed_rule(label, ih.eq)});
            }
            check_node(*cb.body, ob.goal, Scope{ob.ctx, ob.goal_type, std::move(hyps)});
        }
    }

    bool check_ihs(const CaseBlock& cb, const std::vector<Equation>& generated) {
        auto stated_has = [&](const Equation& e) {
            for (const auto& ih : cb.ihs)
                if (ih.eq == e) return true;
            return false;
        };
        auto generated_has = [&](const Equation& e) {
            for (const auto& g : generated)
                if (g == e) return true;
            return false;
        };
        for (const auto& g : generated) {
            if (!stated_has(g)) {
                Diagnostic d = make_diag(Code::IHMismatch, "MissingIH", cb.span,
                                         "induction hypothesis '" + pretty(g) + "' is not stated");
                d.expected = pretty(g);
                diags.push_back(std::move(d));
                return false;
            }
        }
        std::set<int> labels;
        for (const auto& ih : cb.ihs) {
            if (!generated_has(ih.eq)) {
                Diagnostic d = make_diag(Code::IHMismatch, "ExtraIH", ih.span.valid() ? ih.span : cb.span,
                                         generated.empty() ? "this case has no induction hypothesis"
                                                           : "'" + pretty(ih.eq) + "' is not an induction hypothesis of this case");
                d.stated = pretty(ih.eq);
                diags.push_back(std::move(d));
                return false;
            }
            if (!labels.insert(ih.index).second) {
                diags.push_back(make_diag(Code::IHMismatch, "DuplicateLabel", ih.span.valid() ? ih.span : cb.span,
                                          "hypothesis label used twice"));
                return false;
            }
        }
        return true;
    }

    bool typecheck(const Term& t, const Scope& sc) {
        try {
            Type ty = infer_in(t, sc.vars, sig_, u_);
            if (auto f = u_.unify(ty, sc.goal_type)) {
                TypePrinter show{f->left, f->right};
                Diagnostic d = make_diag(Code::TypeMismatch, "TypeMismatch", t.span(),
                                         "'" + pretty(t) + "' has type " + show(f->left) +
                                             " but the goal has type " + show(f->right));
                d.expected = show(f->right);
                d.stated = show(f->left);
                diags.push_back(std::move(d));
                return false;
            }
            return true;
        } catch (const Error& e) {
            diags.push_back(e.diagnostic());
            return false;
        }
    }

    std::string describe(const Justification& j) const {
        switch (j.kind) {
            case Justification::Kind::Def: return "def " + j.name;
            case Justification::Kind::IH: return j.ih_index ? "IH" + std::to_string(j.ih_index) : "IH";
            case Justification::Kind::Lemma: return "Lemma " + j.name;
            case Justification::Kind::Case: return "case";
        }
        return "";
    }

    // Rules named by a justification, or a diagnostic explaining why none exist.
    std::optional<std::vector<Rule>> rules_for(const ChainStep& st, const Scope& sc) {
        const Justification& j = st.just;
        std::vector<Rule> out;
        switch (j.kind) {
            case Justification::Kind::Def: {
                const FunctionInfo* f = sig_.function(j.name);
                if (!f) {
                    diags.push_back(make_diag(Code::StepRejected, "UnknownFunction", j.span,
                                              "'" + j.name + "' is not a function of the theory"));
                    return std::nullopt;
                }
                return definition_rules(*f);
            }
            case Justification::Kind::IH:
            case Justification::Kind::Case: {
                for (auto it = sc.hyps.rbegin(); it != sc.hyps.rend(); ++it) {
                    const std::string& n = it->name;
                    bool want;
                    if (j.kind == Justification::Kind::Case) want = n == "case";
                    else if (j.ih_index == 0) want = n.rfind("IH", 0) == 0;
                    else want = n == "IH" + std::to_string(j.ih_index);
                    if (want) {
                        out.push_back(it->rule);
                        if (j.kind == Justification::Kind::IH && j.ih_index != 0) break;
                    }
                }
                if (out.empty()) {
                    diags.push_back(make_diag(Code::StepRejected, "NoHypothesis", j.span,
                                              "no hypothesis '" + describe(j) + "' is in scope"));
                    return std::nullopt;
                }
                return out;
            }
            case Justification::Kind::Lemma: {
                if (auto it = registry_.find(j.name); it != registry_.end()) {
                    out.push_back(lemma_rule(j.name, it->second));
                    return out;
                }
                auto li = lemma_index_.find(j.name);
                if (li != lemma_index_.end() && li->second >= current_)
                    diags.push_back(make_diag(Code::ForwardLemmaReference, "ForwardLemmaReference", j.span,
                                              li->second == current_
                                                  ? "lemma '" + j.name + "' cannot be used in its own proof"
                                                  : "lemma '" + j.name + "' is proved later in the file"));
                else
                    diags.push_back(make_diag(Code::UnknownLemma, "UnknownLemma", j.span,
                                              "no proven lemma named '" + j.name + "'"));
                return std::nullopt;
            }
        }
        return std::nullopt;
    }

    void check_chain(const Chain& ch, const Scope& sc) {
        bool prev_ok = typecheck(ch.start, sc);
        const Term* prev = &ch.start;
        for (const auto& st : ch.steps) {
            ++steps;
            bool ok = typecheck(st.next, sc);
            if (ok && prev_ok) {
                if (auto rules = rules_for(st, sc)) {
                    StepContext ctx{&sig_, &sc.vars, &u_, enforce_types_};
                    StepResult r = check_step(*prev, st.next, *rules, ctx);
                    if (!r) {
                        Diagnostic d;
                        if (r.ill_typed) {
                            d = make_diag(Code::IllTypedInstantiation, "IllTypedInstantiation", st.just.span,
                                          "'" + r.ill_typed->rule.name + "' matches at position " +
                                              to_string(r.ill_typed->position) + " only at an inconsistent type: " +
                                              r.type_error);
                        } else {
                            d = make_diag(Code::StepRejected, "StepRejected", st.just.span,
                                          "(by " + describe(st.just) + ") does not rewrite '" + pretty(*prev) +
                                              "' to '" + pretty(st.next) + "'");
                        }
                        if (st.span.valid()) d.related.push_back(st.span);
                        diags.push_back(std::move(d));
                    }
                }
            }
            prev = &st.next;
            prev_ok = ok;
        }
    }

    void check_equational(const Equational& e, const Equation& goal, const Scope& sc) {
        auto endpoint = [&](const Term& stated, const Term& expected, const std::string& what) {
            Diagnostic d = make_diag(Code::ChainEndpointMismatch, "ChainEndpointMismatch", stated.span(),
                                     what + " is '" + pretty(stated) + "' but the goal needs '" + pretty(expected) +
                                         "'");
            d.expected = pretty(expected);
            d.stated = pretty(stated);
            diags.push_back(std::move(d));
        };
        if (!(e.chain_l.start == goal.lhs)) endpoint(e.chain_l.start, goal.lhs, "the chain starts at");
        check_chain(e.chain_l, sc);
        if (e.chain_r) {
            if (!(e.chain_r->start == goal.rhs)) endpoint(e.chain_r->start, goal.rhs, "the second chain starts at");
            check_chain(*e.chain_r, sc);
            if (!(e.chain_l.last() == e.chain_r->last())) {
                Diagnostic d = make_diag(Code::ChainsDoNotMeet, "ChainsDoNotMeet", e.chain_r->last().span(),
                                         "the chains end at '" + pretty(e.chain_l.last()) + "' and '" +
                                             pretty(e.chain_r->last()) + "'");
                d.related.push_back(e.chain_l.last().span());
                d.expected = pretty(e.chain_l.last());
                d.stated = pretty(e.chain_r->last());
                diags.push_back(std::move(d));
            }
        } else if (!(e.chain_l.last() == goal.rhs)) {
            endpoint(e.chain_l.last(), goal.rhs, "the chain ends at");
        }
    }

    const Signature& sig_;
    const std::map<std::string, TypedGoal>& registry_;
    const std::map<std::string, std::size_t>& lemma_index_;
    std::size_t current_;
    Unifier& u_;
    bool enforce_types_;
};

// ---------------------------------------------------------- whole document

namespace detail {

inline std::string file_stem(const std::string& path) {
    auto slash = path.find_last_of('/');
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = base.find_last_of('.');
    return dot == std::string::npos || dot == 0 ? base : base.substr(0, dot);
}

struct Theory {
    TheoryAst ast;
    Signature sig;
    std::vector<TypedGoal> goals;
    std::vector<SourceSpan> goal_spans;
};

}  // namespace detail

/// The full pipeline. Never throws: every problem lands in the report.
inline CheckReport check_document(const std::string& theory_src, const std::string& theory_file,
                                  const std::string& proof_src, const std::string& proof_file,
                                  const CheckOptions& opts = {}) {
    auto t0 = std::chrono::steady_clock::now();
    CheckReport rep;
    rep.theory_file = theory_file;
    rep.proof_file = proof_file;
    rep.sources[theory_file] = theory_src;
    rep.sources[proof_file] = proof_src;

    detail::Theory th;
    bool have_ast = false;
    try {
        th.ast = parse_theory(theory_src, theory_file);
        have_ast = true;
        th.sig = infer_signature(th.ast);
        for (auto& d : check_totality(th.sig)) rep.theory_diagnostics.push_back(std::move(d));
        for (const auto* g : th.ast.all<GoalDecl>()) {
            th.goals.push_back(infer_goal(g->eq, th.sig));
            th.goal_spans.push_back(g->eq.span);
        }
    } catch (const Error& e) {
        rep.theory_diagnostics.push_back(e.diagnostic());
    }
    rep.theory_ok = rep.theory_diagnostics.empty();
    if (have_ast) {
        for (const auto* g : th.ast.all<GoalDecl>()) {
            GoalReport gr;
            gr.statement = pretty(g->eq);
            gr.span = g->eq.span;
            rep.goals.push_back(std::move(gr));
        }
    }

    PartialProof pp = parse_proof_partial(proof_src, proof_file);
    if (rep.theory_ok) resolve_doc(pp.doc, th.sig.function_names());

    std::map<std::string, std::size_t> lemma_index;
    for (std::size_t i = 0; i < pp.doc.lemmas.size(); ++i)
        if (const auto& n = pp.doc.lemmas[i].name; n && !lemma_index.count(*n)) lemma_index[*n] = i;

    std::map<std::string, TypedGoal> registry;
    std::vector<const Equation*> failed_statements;
    for (std::size_t i = 0; i < pp.doc.lemmas.size(); ++i) {
        const LemmaBlock& lb = pp.doc.lemmas[i];
        auto l0 = std::chrono::steady_clock::now();
        LemmaReport lr;
        lr.name = lb.name;
        lr.statement = pretty(lb.statement);
        lr.span = lb.span;
        if (!rep.theory_ok) {
            lr.verdict = Verdict::Skipped;
            rep.lemmas.push_back(std::move(lr));
            continue;
        }
        if (lb.name && lemma_index.at(*lb.name) != i) {
            lr.diagnostics.push_back(make_diag(Code::ParseError, "DuplicateLemma", lb.span,
                                               "a lemma named '" + *lb.name + "' already exists"));
        } else {
            try {
                TypedGoal tg = infer_goal(lb.statement, th.sig);
                Unifier u;
                auto [vt, gt] = instantiate_goal(tg, u);
                ProofChecker pc(th.sig, registry, lemma_index, i, u, opts.enforce_types);
                pc.check_node(lb.proof, Equation{tg.lhs, tg.rhs, lb.statement.span},
                              ProofChecker::Scope{vt, gt, {}});
                lr.diagnostics = std::move(pc.diags);
                lr.steps = pc.steps;
                if (lr.diagnostics.empty()) {
                    lr.typed = detail::generalize_goal(tg.lhs, tg.rhs, tg.var_order, vt, gt, u);
                    if (opts.oracle_samples > 0) {
                        auto cx = oracle_check(*lr.typed, th.sig, opts.oracle_samples, opts.fuel, opts.seed + i);
                        if (cx)
                            lr.diagnostics.push_back(make_diag(
                                Code::InternalError, "OracleCounterexample", lb.span,
                                "accepted lemma fails on " + cx->describe() + ": " +
                                    (cx->lhs.ok() ? pretty(cx->lhs.value) : std::string(to_string(cx->lhs.status))) +
                                    " vs " +
                                    (cx->rhs.ok() ? pretty(cx->rhs.value) : std::string(to_string(cx->rhs.status)))));
                    }
                }
            } catch (const Error& e) {
                lr.diagnostics.push_back(e.diagnostic());
            }
        }
        rep.steps += lr.steps;
        if (lr.diagnostics.empty()) {
            lr.verdict = Verdict::Proven;
            if (lb.name) registry.emplace(*lb.name, *lr.typed);
        } else {
            lr.verdict = Verdict::Failed;
            lr.typed.reset();
            failed_statements.push_back(&lb.statement);
        }
        lr.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - l0).count();
        rep.lemmas.push_back(std::move(lr));
    }
    if (pp.error) {
        LemmaReport lr;
        lr.name = pp.failed_lemma_name;
        lr.span = pp.failed_lemma_span.valid() ? pp.failed_lemma_span : pp.error->span;
        lr.verdict = rep.theory_ok ? Verdict::Failed : Verdict::Skipped;
        lr.diagnostics.push_back(*pp.error);
        rep.lemmas.push_back(std::move(lr));
    }

    if (rep.theory_ok) {
        for (std::size_t gi = 0; gi < th.goals.size(); ++gi) {
            GoalReport& gr = rep.goals[gi];
            for (std::size_t li = 0; li < rep.lemmas.size(); ++li) {
                const auto& lr = rep.lemmas[li];
                if (lr.verdict == Verdict::Proven && alpha_equivalent(th.goals[gi], *lr.typed)) {
                    gr.satisfied = true;
                    gr.proven_by = li;
                    break;
                }
            }
            if (gr.satisfied) continue;
            Equation geq{th.goals[gi].lhs, th.goals[gi].rhs, {}};
            for (const auto* s : failed_statements) {
                Equation r{resolve_symbols(s->lhs, th.sig.function_names()),
                           resolve_symbols(s->rhs, th.sig.function_names()), {}};
                if (alpha_equivalent_terms(geq, r)) gr.blocked = true;
            }
            gr.diagnostics.push_back(make_diag(Code::UnprovenGoal, "UnprovenGoal", gr.span,
                                               gr.blocked ? "goal '" + gr.statement + "' is stated by a lemma that failed"
                                                          : "no proven lemma states goal '" + gr.statement + "'"));
        }
        rep.goals_satisfied = rep.goals_met() == rep.goals.size();
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace cyp
