#include <gtest/gtest.h>

#include "support/fixtures.hpp"

using namespace cyp;
using namespace cyp::test;

namespace {
const std::string list_decl = "data List a = [] | a : List a\n";
const std::string bool_decl = "data Bool = True | False\n";
}  // namespace

TEST(Coverage, AppendDefinition) {
    Signature sig = signature_of(append_theory);
    EXPECT_FALSE(check_exhaustive("++", sig));
    EXPECT_FALSE(check_disjoint("++", sig));
    EXPECT_TRUE(check_totality(sig).empty());
}

TEST(Coverage, HeadMissesNil) {
    Signature sig = signature_of(list_decl + "head (x : xs) = x\n");
    auto gap = check_exhaustive("head", sig);
    ASSERT_TRUE(gap);
    EXPECT_EQ(pretty_tuple(gap->witness), "[]");
}

TEST(Coverage, BoolPair) {
    Signature sig = signature_of(bool_decl + "f True True = True\nf False y = False\n");
    auto gap = check_exhaustive("f", sig);
    ASSERT_TRUE(gap);
    EXPECT_EQ(pretty_tuple(gap->witness), "True, False");
}

TEST(Coverage, WildcardsInWitness) {
    Signature sig = signature_of("data Nat = Z | S Nat\ndata Tree a = Leaf | Node (Tree a) a (Tree a)\nsize Leaf = Z\n");
    auto gap = check_exhaustive("size", sig);
    ASSERT_TRUE(gap);
    EXPECT_EQ(pretty_tuple(gap->witness), "Node _ _ _");
}

TEST(Coverage, NestedGap) {
    Signature sig = signature_of(list_decl + "f [] = []\nf (x : []) = []\n");
    auto gap = check_exhaustive("f", sig);
    ASSERT_TRUE(gap);
    EXPECT_EQ(pretty_tuple(gap->witness), "_ : (_ : _)");
}

TEST(Overlap, VariableFirst) {
    Signature sig = signature_of(list_decl + "f x = x\nf [] = []\n");
    auto ov = check_disjoint("f", sig);
    ASSERT_TRUE(ov);
    EXPECT_EQ(ov->first, 1u);
    EXPECT_EQ(ov->second, 2u);
    EXPECT_EQ(pretty_tuple(ov->witness), "[]");
}

TEST(Overlap, DiagnosticPointsAtSecondEquation) {
    Signature sig = signature_of(list_decl + "f x = x\nf [] = []\n");
    auto ds = check_totality(sig);
    ASSERT_EQ(ds.size(), 1u);
    EXPECT_EQ(ds[0].code, Code::Overlap);
    EXPECT_EQ(ds[0].span.line_start, 3);
    ASSERT_EQ(ds[0].related.size(), 1u);
    EXPECT_EQ(ds[0].related[0].line_start, 2);
}

TEST(Totality, ReportedThroughChecker) {
    CheckReport r = check_text(list_decl + "head (x : xs) = x\n", "");
    EXPECT_FALSE(r.theory_ok);
    ASSERT_EQ(r.theory_diagnostics.size(), 1u);
    EXPECT_EQ(r.theory_diagnostics[0].code, Code::CoverageGap);
}
