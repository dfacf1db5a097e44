#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cyp/term.hpp"
#include "cyp/type_expr.hpp"

namespace cyp {

/// Deep-copying owning pointer, for recursive value types.
template <typename T>
class Box {
public:
    Box() : p_(std::make_unique<T>()) {}
    Box(T v) : p_(std::make_unique<T>(std::move(v))) {}  // NOLINT: implicit by intent
    Box(const Box& o) : p_(std::make_unique<T>(*o.p_)) {}
    Box(Box&&) noexcept = default;
    Box& operator=(const Box& o) {
        if (this != &o) p_ = std::make_unique<T>(*o.p_);
        return *this;
    }
    Box& operator=(Box&&) noexcept = default;

    T& operator*() { return *p_; }
    const T& operator*() const { return *p_; }
    T* operator->() { return p_.get(); }
    const T* operator->() const { return p_.get(); }

    friend bool operator==(const Box& a, const Box& b) { return *a.p_ == *b.p_; }

private:
    std::unique_ptr<T> p_;
};

// ---------------------------------------------------------------- theory

struct TypeAst {
    Type type;
    SourceSpan span;
    friend bool operator==(const TypeAst& a, const TypeAst& b) { return a.type == b.type; }
};

struct ConstructorDecl {
    std::string name;
    std::vector<TypeAst> arg_types;
    bool infix = false;  // written `a : List a`
    SourceSpan span;
    friend bool operator==(const ConstructorDecl& a, const ConstructorDecl& b) {
        return a.name == b.name && a.arg_types == b.arg_types && a.infix == b.infix;
    }
};

struct DataDecl {
    std::string type_name;
    std::vector<std::string> type_params;
    std::vector<ConstructorDecl> constructors;
    SourceSpan span;
    friend bool operator==(const DataDecl& a, const DataDecl& b) {
        return a.type_name == b.type_name && a.type_params == b.type_params && a.constructors == b.constructors;
    }
};

struct FunEquation {
    std::string fun_name;
    std::vector<Term> lhs_patterns;
    Term lhs;  // the whole left-hand side, `f p1 ... pn`
    Term rhs;
    SourceSpan span;
    friend bool operator==(const FunEquation& a, const FunEquation& b) {
        return a.fun_name == b.fun_name && a.lhs == b.lhs && a.rhs == b.rhs;
    }
};

struct GoalDecl {
    Equation eq;
    friend bool operator==(const GoalDecl& a, const GoalDecl& b) { return a.eq == b.eq; }
};

using TheoryDecl = std::variant<DataDecl, FunEquation, GoalDecl>;

struct TheoryAst {
    std::vector<TheoryDecl> decls;
    friend bool operator==(const TheoryAst& a, const TheoryAst& b) { return a.decls == b.decls; }

    template <typename T>
    std::vector<const T*> all() const {
        std::vector<const T*> out;
        for (const auto& d : decls)
            if (auto* p = std::get_if<T>(&d)) out.push_back(p);
        return out;
    }
};

// ----------------------------------------------------------------- proofs

struct Justification {
    enum class Kind { Def, IH, Lemma, Case };
    Kind kind = Kind::Def;
    std::string name;  // function for Def, lemma for Lemma
    int ih_index = 0;  // 0 = unlabeled `IH`
    SourceSpan span;   // the whole `(by ...)` group

    friend bool operator==(const Justification& a, const Justification& b) {
        return a.kind == b.kind && a.name == b.name && a.ih_index == b.ih_index;
    }
};

struct ChainStep {
    Justification just;
    Term next;
    SourceSpan span;  // the whole step line
    friend bool operator==(const ChainStep& a, const ChainStep& b) { return a.just == b.just && a.next == b.next; }
};

struct Chain {
    Term start;
    std::vector<ChainStep> steps;
    friend bool operator==(const Chain& a, const Chain& b) { return a.start == b.start && a.steps == b.steps; }
    const Term& last() const { return steps.empty() ? start : steps.back().next; }
};

struct ProofNode;

struct IHLine {
    int index = 0;  // 0 for `IH:`, k for `IHk:`
    Equation eq;
    SourceSpan span;
    friend bool operator==(const IHLine& a, const IHLine& b) { return a.index == b.index && a.eq == b.eq; }
};

struct CaseBlock {
    std::vector<Term> patterns;
    Equation to_show;
    std::vector<IHLine> ihs;
    Box<ProofNode> body;
    SourceSpan span;  // the `Case` header line
    friend bool operator==(const CaseBlock& a, const CaseBlock& b) {
        return a.patterns == b.patterns && a.to_show == b.to_show && a.ihs == b.ihs && a.body == b.body;
    }
};

struct Equational {
    Chain chain_l;
    std::optional<Chain> chain_r;
    friend bool operator==(const Equational& a, const Equational& b) {
        return a.chain_l == b.chain_l && a.chain_r == b.chain_r;
    }
};

struct StructuralInduction {
    std::string type_name;
    std::string var_name;
    std::vector<CaseBlock> cases;
    friend bool operator==(const StructuralInduction& a, const StructuralInduction& b) {
        return a.type_name == b.type_name && a.var_name == b.var_name && a.cases == b.cases;
    }
};

struct ComputationInduction {
    std::string fun_name;
    std::vector<std::string> arg_vars;
    std::vector<CaseBlock> cases;
    friend bool operator==(const ComputationInduction& a, const ComputationInduction& b) {
        return a.fun_name == b.fun_name && a.arg_vars == b.arg_vars && a.cases == b.cases;
    }
};

struct CaseAnalysis {
    std::string type_name;
    Term scrutinee;
    std::vector<CaseBlock> cases;
    friend bool operator==(const CaseAnalysis& a, const CaseAnalysis& b) {
        return a.type_name == b.type_name && a.scrutinee == b.scrutinee && a.cases == b.cases;
    }
};

struct Extensionality {
    std::string fresh_var;
    Equation to_show;
    Box<ProofNode> body;
    friend bool operator==(const Extensionality& a, const Extensionality& b) {
        return a.fresh_var == b.fresh_var && a.to_show == b.to_show && a.body == b.body;
    }
};

struct ProofNode {
    std::variant<Equational, StructuralInduction, ComputationInduction, CaseAnalysis, Extensionality> v;
    SourceSpan span;  // the `Proof ...` header line
    friend bool operator==(const ProofNode& a, const ProofNode& b) { return a.v == b.v; }
};

struct LemmaBlock {
    std::optional<std::string> name;
    Equation statement;
    ProofNode proof;
    SourceSpan span;  // the `Lemma` line
    friend bool operator==(const LemmaBlock& a, const LemmaBlock& b) {
        return a.name == b.name && a.statement == b.statement && a.proof == b.proof;
    }
};

struct ProofDoc {
    std::vector<LemmaBlock> lemmas;
    friend bool operator==(const ProofDoc& a, const ProofDoc& b) { return a.lemmas == b.lemmas; }
};

}  // namespace cyp
