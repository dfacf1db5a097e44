#include <gtest/gtest.h>

#include "support/fixtures.hpp"

using namespace cyp;
using namespace cyp::test;

namespace {

struct Goal {
    Signature sig;
    Unifier u;
    GoalContext ctx;

    Goal(const std::string& theory, const std::string& lhs, const std::string& rhs) : sig(signature_of(theory)) {
        Equation eq = equation(lhs, rhs, sig);
        TypedGoal g = infer_goal(eq, sig);
        auto [vt, gt] = instantiate_goal(g, u);
        ctx = GoalContext{eq, vt, gt, {}};
    }
    Term t(const std::string& s) const { return term(s, sig); }
    std::vector<std::vector<Term>> headers(std::initializer_list<std::vector<std::string>> hs) const {
        std::vector<std::vector<Term>> out;
        for (const auto& h : hs) {
            std::vector<Term> row;
            for (const auto& p : h) row.push_back(t(p));
            out.push_back(row);
        }
        return out;
    }
};

std::string show(const Equation& e) { return pretty(e); }

Code code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return Code::InternalError;
}

const std::string lists = fixture("lists/lists.cthy");

}  // namespace

TEST(Structural, AppendObligations) {
    Goal g(append_theory, "xs ++ (ys ++ zs)", "(xs ++ ys) ++ zs");
    auto obs = gen_structural(g.ctx, "xs", "List", g.headers({{"[]"}, {"x : xs"}}), g.sig, g.u);
    ASSERT_EQ(obs.size(), 2u);
    EXPECT_EQ(show(obs[0].goal), "[] ++ (ys ++ zs) .=. ([] ++ ys) ++ zs");
    EXPECT_TRUE(obs[0].hypotheses.empty());
    EXPECT_EQ(show(obs[1].goal), "(x : xs) ++ (ys ++ zs) .=. ((x : xs) ++ ys) ++ zs");
    ASSERT_EQ(obs[1].hypotheses.size(), 1u);
    EXPECT_EQ(obs[1].hypotheses[0].name, "IH");
    EXPECT_EQ(pretty(obs[1].hypotheses[0].rule.lhs), "xs ++ (ys ++ zs)");
    EXPECT_EQ(pretty(obs[1].hypotheses[0].rule.rhs), "(xs ++ ys) ++ zs");
    EXPECT_TRUE(obs[1].hypotheses[0].rule.vars.empty());
    EXPECT_EQ(obs[1].fresh_vars, (std::vector<std::string>{"x", "xs"}));
    EXPECT_EQ(to_string(g.u.resolve(obs[1].ctx.at("xs"))), to_string(g.u.resolve(obs[1].ctx.at("ys"))));
}

TEST(Structural, AdoptsStudentNames) {
    Goal g(append_theory, "xs ++ (ys ++ zs)", "(xs ++ ys) ++ zs");
    auto obs = gen_structural(g.ctx, "xs", "List", g.headers({{"[]"}, {"w : ws"}}), g.sig, g.u);
    EXPECT_EQ(show(obs[1].goal), "(w : ws) ++ (ys ++ zs) .=. ((w : ws) ++ ys) ++ zs");
    EXPECT_EQ(pretty(obs[1].hypotheses[0].rule.lhs), "ws ++ (ys ++ zs)");
}

TEST(Structural, NonRecursiveType) {
    Goal g("data U = U\nid U = U\n", "id u", "u");
    auto obs = gen_structural(g.ctx, "u", "U", g.headers({{"U"}}), g.sig, g.u);
    ASSERT_EQ(obs.size(), 1u);
    EXPECT_TRUE(obs[0].hypotheses.empty());
}

TEST(Structural, TreeHasTwoHypotheses) {
    Goal g(lists, "mirror (mirror t)", "t");
    auto obs = gen_structural(g.ctx, "t", "Tree", g.headers({{"Leaf"}, {"Node l x r"}}), g.sig, g.u);
    ASSERT_EQ(obs.size(), 2u);
    ASSERT_EQ(obs[1].hypotheses.size(), 2u);
    EXPECT_EQ(obs[1].hypotheses[0].name, "IH1");
    EXPECT_EQ(obs[1].hypotheses[1].name, "IH2");
    EXPECT_EQ(pretty(obs[1].hypotheses[0].rule.lhs), "mirror (mirror l)");
    EXPECT_EQ(pretty(obs[1].hypotheses[1].rule.lhs), "mirror (mirror r)");
}

TEST(Structural, CaseSetMustMatch) {
    Goal g(append_theory, "xs ++ []", "xs");
    EXPECT_EQ(code_of([&] { gen_structural(g.ctx, "xs", "List", g.headers({{"[]"}}), g.sig, g.u); }),
              Code::WrongCaseSet);
    EXPECT_EQ(code_of([&] {
                  gen_structural(g.ctx, "xs", "List", g.headers({{"[]"}, {"x : xs"}, {"[]"}}), g.sig, g.u);
              }),
              Code::WrongCaseSet);
    EXPECT_EQ(code_of([&] { gen_structural(g.ctx, "xs", "List", g.headers({{"[]"}, {"[] : xs"}}), g.sig, g.u); }),
              Code::WrongCaseSet);
    EXPECT_EQ(code_of([&] { gen_structural(g.ctx, "ws", "List", g.headers({{"[]"}, {"x : xs"}}), g.sig, g.u); }),
              Code::WrongCaseSet);
}

TEST(Structural, WrongType) {
    Goal g(std::string(append_theory) + "data U = U\n", "xs ++ []", "xs");
    EXPECT_EQ(code_of([&] { gen_structural(g.ctx, "xs", "U", g.headers({{"U"}}), g.sig, g.u); }), Code::TypeMismatch);
}

TEST(Structural, CaseVariableClash) {
    Goal g(append_theory, "xs ++ (ys ++ zs)", "(xs ++ ys) ++ zs");
    EXPECT_EQ(code_of([&] { gen_structural(g.ctx, "xs", "List", g.headers({{"[]"}, {"ys : xs"}}), g.sig, g.u); }),
              Code::VariableClash);
    // a repeated name is a malformed header, not a clash
    EXPECT_EQ(code_of([&] { gen_structural(g.ctx, "xs", "List", g.headers({{"[]"}, {"x : x"}}), g.sig, g.u); }),
              Code::WrongCaseSet);
}

TEST(Computation, AgreesWithStructural) {
    Goal a(append_theory, "xs ++ (ys ++ zs)", "(xs ++ ys) ++ zs");
    Goal b(append_theory, "xs ++ (ys ++ zs)", "(xs ++ ys) ++ zs");
    auto str = gen_structural(a.ctx, "xs", "List", a.headers({{"[]"}, {"x : xs"}}), a.sig, a.u);
    auto comp = gen_computation(b.ctx, "++", {"xs", "ys"}, b.headers({{"[]", "ys"}, {"x : xs", "ys"}}), b.sig, b.u);
    ASSERT_EQ(comp.size(), str.size());
    for (std::size_t i = 0; i < str.size(); ++i) {
        EXPECT_EQ(comp[i].goal, str[i].goal);
        ASSERT_EQ(comp[i].hypotheses.size(), str[i].hypotheses.size());
        for (std::size_t j = 0; j < str[i].hypotheses.size(); ++j) {
            EXPECT_EQ(comp[i].hypotheses[j].rule.lhs, str[i].hypotheses[j].rule.lhs);
            EXPECT_EQ(comp[i].hypotheses[j].rule.rhs, str[i].hypotheses[j].rule.rhs);
        }
    }
}

TEST(Computation, HypothesisFollowsRecursiveCall) {
    // interleave (x : xs) ys = x : interleave ys xs swaps its arguments
    Goal g(lists, "length (interleave xs ys)", "plus (length xs) (length ys)");
    auto obs = gen_computation(g.ctx, "interleave", {"xs", "ys"}, g.headers({{"[]", "ys"}, {"x : xs", "ys"}}), g.sig,
                               g.u);
    ASSERT_EQ(obs.size(), 2u);
    ASSERT_EQ(obs[1].hypotheses.size(), 1u);
    EXPECT_EQ(pretty(obs[1].hypotheses[0].rule.lhs), "length (interleave ys xs)");
    EXPECT_EQ(pretty(obs[1].hypotheses[0].rule.rhs), "plus (length ys) (length xs)");
}

TEST(Computation, BranchRecursionRejected) {
    Goal g(fixture("guard/guard.cthy"), "f x", "f x");
    try {
        gen_computation(g.ctx, "f", {"x"}, g.headers({{"Z"}, {"S n"}}), g.sig, g.u);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Code::IfThenElseRecursion);
        EXPECT_EQ(e.diagnostic().span.line_start, 9);
    }
}

TEST(Computation, ConditionRecursionAccepted) {
    Goal g(fixture("guard/guard.cthy"), "h x", "h x");
    auto obs = gen_computation(g.ctx, "h", {"x"}, g.headers({{"Z"}, {"S n"}}), g.sig, g.u);
    ASSERT_EQ(obs.size(), 2u);
    ASSERT_EQ(obs[1].hypotheses.size(), 1u);
    EXPECT_EQ(pretty(obs[1].hypotheses[0].rule.lhs), "h n");
}

TEST(Computation, NestedBranchRecursionRejected) {
    std::string th = fixture("guard/guard.cthy") +
                     "k Z = Z\nk (S n) = S (if isZero n then Z else S (k n))\n";
    Goal g(th, "k x", "k x");
    EXPECT_EQ(code_of([&] { gen_computation(g.ctx, "k", {"x"}, g.headers({{"Z"}, {"S n"}}), g.sig, g.u); }),
              Code::IfThenElseRecursion);
}

TEST(Computation, ArityAndCaseErrors) {
    Goal g(append_theory, "xs ++ []", "xs");
    EXPECT_EQ(code_of([&] { gen_computation(g.ctx, "++", {"xs"}, {}, g.sig, g.u); }), Code::WrongCaseSet);
    Goal h(append_theory, "xs ++ ys", "xs ++ ys");
    EXPECT_EQ(code_of([&] { gen_computation(h.ctx, "++", {"xs", "ys"}, h.headers({{"[]", "ys"}}), h.sig, h.u); }),
              Code::WrongCaseSet);
}

TEST(CaseAnalysis, BoolHypotheses) {
    Goal g(lists, "not (not b)", "b");
    auto obs = gen_case_analysis(g.ctx, "Bool", g.t("b"), g.headers({{"True"}, {"False"}}), g.sig, g.u);
    ASSERT_EQ(obs.size(), 2u);
    for (const auto& ob : obs) {
        EXPECT_EQ(ob.goal, g.ctx.goal);
        ASSERT_EQ(ob.hypotheses.size(), 1u);
        EXPECT_EQ(ob.hypotheses[0].name, "case");
    }
    EXPECT_EQ(pretty(Equation{obs[0].hypotheses[0].rule.lhs, obs[0].hypotheses[0].rule.rhs, {}}), "b .=. True");
    EXPECT_EQ(pretty(Equation{obs[1].hypotheses[0].rule.lhs, obs[1].hypotheses[0].rule.rhs, {}}), "b .=. False");
}

TEST(CaseAnalysis, CompoundScrutinee) {
    Goal g(append_theory, "xs ++ ys", "xs ++ ys");
    auto obs = gen_case_analysis(g.ctx, "List", g.t("xs ++ ys"), g.headers({{"[]"}, {"z : zs"}}), g.sig, g.u);
    ASSERT_EQ(obs.size(), 2u);
    auto hyp = [](const Obligation& o) {
        return pretty(Equation{o.hypotheses[0].rule.lhs, o.hypotheses[0].rule.rhs, {}});
    };
    EXPECT_EQ(hyp(obs[0]), "xs ++ ys .=. []");
    EXPECT_EQ(hyp(obs[1]), "xs ++ ys .=. z : zs");
}

TEST(Extensionality, AppliesBothSides) {
    Goal g(lists, "(++) []", "id");
    Obligation ob = gen_extensionality(g.ctx, "w", g.sig, g.u);
    EXPECT_EQ(show(ob.goal), "[] ++ w .=. id w");
    EXPECT_EQ(to_string(g.u.resolve(ob.ctx.at("w"))), to_string(g.u.resolve(ob.goal_type)));
}

TEST(Extensionality, NeedsFunctionType) {
    Goal g(append_theory, "xs ++ []", "xs");
    try {
        gen_extensionality(g.ctx, "w", g.sig, g.u);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Code::TypeMismatch);
        EXPECT_EQ(e.kind(), "NotFunctionType");
    }
}

TEST(Extensionality, FreshVariableMustBeFresh) {
    Goal g(lists, "comp f id", "f");
    EXPECT_EQ(code_of([&] { gen_extensionality(g.ctx, "f", g.sig, g.u); }), Code::VariableClash);
    Obligation ob = gen_extensionality(g.ctx, "v", g.sig, g.u);
    EXPECT_EQ(show(ob.goal), "comp f id v .=. f v");
}
