#include <gtest/gtest.h>

#include <map>

#include "support/fixtures.hpp"

using namespace cyp;
using namespace cyp::test;

namespace {

Signature append_x() { return signature_of(std::string(append_theory) + "data X = A | B\n"); }

int height(const Term& t) {
    int h = 0;
    for (const auto& a : t.args()) h = std::max(h, height(a));
    return h + 1;
}

}  // namespace

TEST(Eval, AppendTwoSingletons) {
    Signature sig = append_x();
    EvalResult r = eval(term("(A : []) ++ (B : [])", sig), sig);
    ASSERT_TRUE(r.ok()) << r.detail;
    EXPECT_EQ(r.value, term("A : (B : [])", sig));
    EXPECT_EQ(r.reductions, 2u);
}

TEST(Eval, ValueIsItsOwnResult) {
    Signature sig = append_x();
    EvalResult r = eval(term("[]", sig), sig);
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(r.value, term("[]", sig));
    EXPECT_EQ(r.reductions, 0u);
}

TEST(Eval, FuelBound) {
    Signature sig = append_x();
    EvalResult r = eval(term("(A : (B : (A : []))) ++ []", sig), sig, 1);
    EXPECT_EQ(r.status, EvalStatus::FuelExhausted);
}

TEST(Eval, FreeVariablesAreRejected) {
    Signature sig = append_x();
    EXPECT_EQ(eval(term("xs ++ []", sig), sig).status, EvalStatus::NonGroundInput);
}

TEST(Eval, PartialApplicationIsAFunctionValue) {
    Signature sig = append_x();
    EXPECT_EQ(eval(term("(++) []", sig), sig).status, EvalStatus::FunctionValue);
}

TEST(Eval, StuckOnMissingEquation) {
    Signature sig = signature_of("data List a = [] | a : List a\ndata X = A\nhead (x : xs) = x\n");
    EXPECT_EQ(eval(term("head []", sig), sig).status, EvalStatus::StuckTerm);
}

TEST(Eval, IfThenElseAndHigherOrder) {
    Signature sig = signature_of(fixture("lists/lists.cthy"));
    EvalResult r = eval(term("map not (True : (False : []))", sig), sig);
    ASSERT_TRUE(r.ok()) << r.detail;
    EXPECT_EQ(r.value, term("False : (True : [])", sig));
    Signature g = signature_of(fixture("guard/guard.cthy"));
    EvalResult f = eval(term("f (S (S Z))", g), g);
    ASSERT_TRUE(f.ok()) << f.detail;
    EXPECT_EQ(f.value, Term::sym("Z"));
}

TEST(Eval, DeepRecursionDoesNotOverflow) {
    Signature sig = signature_of("data Nat = Z | S Nat\nloop Z = loop Z\nloop (S n) = Z\n");
    EvalResult r = eval(term("loop Z", sig), sig, 100000);
    EXPECT_EQ(r.status, EvalStatus::FuelExhausted);
}

TEST(Generate, BudgetZeroGivesNil) {
    Signature sig = append_x();
    for (std::uint64_t seed : {0u, 1u, 7u, 12345u})
        EXPECT_EQ(gen_ground(Type::con("List", {Type::con("X")}), 0, seed, sig), Term::sym("[]"));
}

TEST(Generate, Singleton) {
    Signature sig = signature_of("data U = U\n");
    for (int budget : {0, 3, 10}) EXPECT_EQ(gen_ground(Type::con("U"), budget, 99, sig), Term::sym("U"));
}

TEST(Generate, Deterministic) {
    Signature sig = append_x();
    Type lx = Type::con("List", {Type::con("X")});
    EXPECT_EQ(gen_ground(lx, 3, 42, sig), gen_ground(lx, 3, 42, sig));
}

TEST(Generate, HeightBoundedByBudget) {
    Signature sig = signature_of(fixture("lists/lists.cthy"));
    std::mt19937_64 rng(3);
    for (const Type& ty : {Type::con("List", {Type::con("X")}), Type::con("Tree", {Type::con("Bool")}),
                           Type::con("Nat")})
        for (int i = 0; i < 300; ++i) {
            int budget = static_cast<int>(rng() % 4);
            EXPECT_LE(height(gen_ground(ty, budget, rng, sig)), budget + 1 + (ty.args.empty() ? 0 : 1));
        }
}

TEST(Generate, CoversEveryLength) {
    Signature sig = append_x();
    std::mt19937_64 rng(11);
    std::map<std::size_t, int> lengths;
    for (int i = 0; i < 2000; ++i) {
        Term v = gen_ground(Type::con("List", {Type::con("X")}), 3, rng, sig);
        std::size_t n = 0;
        for (const Term* p = &v; p->is_app(); p = &p->arg()) ++n;
        ++lengths[n];
    }
    for (std::size_t n = 0; n <= 3; ++n) EXPECT_GT(lengths[n], 10) << n;
    EXPECT_EQ(lengths.size(), 4u);
}

TEST(Generate, NoFiniteValue) {
    Signature sig = signature_of("data Inf = More Inf\n");
    try {
        gen_ground(Type::con("Inf"), 2, 1, sig);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Code::NoBaseConstructor);
    }
}
