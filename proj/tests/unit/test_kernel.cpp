#include <gtest/gtest.h>

#include "support/fixtures.hpp"

using namespace cyp;
using namespace cyp::test;

namespace {

struct Append : ::testing::Test {
    Signature sig = signature_of(append_theory);
    std::vector<Rule> defs = definition_rules(*sig.function("++"));
    Term t(const std::string& s) const { return term(s, sig); }
};

}  // namespace

TEST_F(Append, MatchDecomposes) {
    auto s = match(t("x : xs"), t("a : (b : [])"), {"x", "xs"});
    ASSERT_TRUE(s);
    EXPECT_EQ(s->size(), 2u);
    EXPECT_EQ(s->at("x"), Term::var("a"));
    EXPECT_EQ(s->at("xs"), t("b : []"));
}

TEST_F(Append, MatchTreatsTargetVariablesAsConstants) {
    EXPECT_FALSE(match(t("[] ++ ys"), t("ys ++ zs"), {"ys"}));
}

TEST_F(Append, MatchIsConsistent) {
    EXPECT_TRUE(match(t("x ++ x"), t("a ++ a"), {"x"}));
    EXPECT_FALSE(match(t("x ++ x"), t("a ++ b"), {"x"}));
}

TEST_F(Append, MatchExtendsInitialSubstitution) {
    Subst init{{"x", Term::var("b")}};
    EXPECT_FALSE(match(t("x : []"), t("a : []"), {"x"}, init));
    EXPECT_TRUE(match(t("x : []"), t("b : []"), {"x"}, init));
}

TEST_F(Append, ApplySubst) {
    EXPECT_EQ(apply_subst({{"ys", Term::var("zs")}}, t("[] ++ ys")), t("[] ++ zs"));
    Term any = t("x : (xs ++ ys)");
    EXPECT_EQ(apply_subst({}, any), any);
    EXPECT_EQ(apply_subst({{"x", Term::var("y")}, {"y", Term::var("x")}}, t("x : y")), t("y : x"));
}

TEST_F(Append, Positions) {
    Term a = t("x : (xs ++ ys)");
    EXPECT_EQ(to_string(Position{0, 1}), "[0,1]");
    EXPECT_EQ(to_string(Position{}), "[]");
    ASSERT_NE(subterm_at(a, {1}), nullptr);
    EXPECT_EQ(*subterm_at(a, {1}), t("xs ++ ys"));
    EXPECT_EQ(subterm_at(a, {1, 0, 0, 0}), nullptr);
    EXPECT_EQ(replace_at(a, {1}, Term::var("zs")), t("x : zs"));
    std::vector<Position> all;
    Position cur;
    all_positions(a, cur, all);
    EXPECT_EQ(all.size(), term_size(a));
}

TEST_F(Append, BaseCaseFirstStep) {
    StepResult r = check_step(t("[] ++ (ys ++ zs)"), t("ys ++ zs"), defs);
    ASSERT_TRUE(r);
    EXPECT_EQ(r.evidence->rule_index, 0u);
    EXPECT_EQ(r.evidence->position, Position{});
    EXPECT_EQ(r.evidence->orientation, Orientation::Forward);
    EXPECT_EQ(r.evidence->subst.at("ys"), t("ys ++ zs"));
}

TEST_F(Append, BaseCaseSecondStepIsReverse) {
    Term from = t("ys ++ zs");
    Term to = t("([] ++ ys) ++ zs");
    StepResult r = check_step(from, to, defs);
    ASSERT_TRUE(r);
    const StepEvidence& e = *r.evidence;
    EXPECT_EQ(e.rule_index, 0u);
    EXPECT_EQ(e.orientation, Orientation::Reverse);
    // left argument of the outer ++
    EXPECT_EQ(e.position, (Position{0, 1}));
    EXPECT_EQ(e.subst.at("ys"), Term::var("ys"));
    EXPECT_EQ(apply_subst(e.subst, e.from_side()), *subterm_at(from, e.position));
    EXPECT_EQ(apply_subst(e.subst, e.to_side()), *subterm_at(to, e.position));
}

TEST_F(Append, StepNeedsARule) {
    EXPECT_FALSE(check_step(t("xs ++ ys"), t("ys ++ xs"), defs));
    EXPECT_FALSE(check_step(t("xs"), t("xs"), defs));
}

TEST_F(Append, OnePositionPerStep) {
    // both []-appends would have to fire at once
    EXPECT_FALSE(check_step(t("([] ++ xs) ++ ([] ++ ys)"), t("xs ++ ys"), defs));
    EXPECT_TRUE(check_step(t("([] ++ xs) ++ ([] ++ ys)"), t("xs ++ ([] ++ ys)"), defs));
}

TEST_F(Append, FixedRulesBindNothing) {
    Equation ih{t("xs ++ (ys ++ zs)"), t("(xs ++ ys) ++ zs"), {}};
    std::vector<Rule> rules{fixed_rule("IH", ih)};
    EXPECT_TRUE(check_step(t("x : (xs ++ (ys ++ zs))"), t("x : ((xs ++ ys) ++ zs)"), rules));
    EXPECT_FALSE(check_step(t("x : (ws ++ (ys ++ zs))"), t("x : ((ws ++ ys) ++ zs)"), rules));
}

TEST(Kernel, ExploitIsIllTyped) {
    Signature sig = signature_of("data U = U\ndata Bool = True | False\n");
    TypedGoal g = infer_goal(equation("x", "y", sig), sig);
    // pin the lemma at U the way its case-analysis proof does
    std::map<std::string, Type> at_u{{g.scheme_vars[0], Type::con("U")}};
    for (auto& [v, ty] : g.var_types) ty = substitute_type(ty, at_u);
    g.goal_type = substitute_type(g.goal_type, at_u);
    g.scheme_vars.clear();
    std::vector<Rule> rules{lemma_rule("eq_u", g)};
    VarTypes none;
    Unifier u;
    StepContext ctx{&sig, &none, &u};
    StepResult r = check_step(Term::sym("True"), Term::sym("False"), rules, ctx);
    EXPECT_FALSE(r);
    ASSERT_TRUE(r.ill_typed);
    EXPECT_NE(r.type_error.find("Bool"), std::string::npos);
    // without the type check the step goes through
    ctx.enforce_types = false;
    EXPECT_TRUE(check_step(Term::sym("True"), Term::sym("False"), rules, ctx));
    ctx.sig = nullptr;
    EXPECT_TRUE(check_step(Term::sym("True"), Term::sym("False"), rules, ctx));
}

TEST(Kernel, PolymorphicLemmaInstantiatesPerUse) {
    Signature sig = signature_of(std::string(append_theory) + "data Bool = True | False\n");
    TypedGoal g = infer_goal(equation("xs ++ []", "xs", sig), sig);
    std::vector<Rule> rules{lemma_rule("app_nil", g)};
    VarTypes ctx_types{{"bs", Type::con("List", {Type::con("Bool")})}};
    Unifier u;
    StepContext ctx{&sig, &ctx_types, &u};
    EXPECT_TRUE(check_step(term("bs ++ []", sig), Term::var("bs"), rules, ctx));
    EXPECT_TRUE(check_step(term("(True : []) ++ []", sig), term("True : []", sig), rules, ctx));
}
