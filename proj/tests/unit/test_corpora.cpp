#include <gtest/gtest.h>

#include <unistd.h>

#include "support/criteria.hpp"

using namespace cyp;
using namespace cyp::test;

TEST(TotalityCorpus, MatchesGoldenFiles) {
    auto cases = totality_corpus();
    ASSERT_EQ(cases.size(), 10u);
    for (const auto& c : cases) EXPECT_EQ(c.actual, c.expected) << c.name;
}

TEST(TotalityCorpus, CoversEveryRejectionKind) {
    std::set<std::string> kinds;
    for (const auto& c : totality_corpus()) {
        std::string f = fixture("totality/" + c.name);
        try {
            Signature sig = infer_signature(parse_theory(f, c.name));
            for (const auto& d : check_totality(sig)) kinds.insert(d.kind);
        } catch (const Error& e) {
            kinds.insert(e.kind());
        }
    }
    for (const char* k : {"CoverageGap", "Overlap", "NonlinearPattern", "UnboundRhsVariable"})
        EXPECT_TRUE(kinds.count(k)) << k;
}

TEST(JUnitGoldens, MatchAfterTimeNormalization) {
    for (const auto& g : junit_goldens()) {
        std::string xml = junit_for(g);
        EXPECT_EQ(normalize_times(xml), normalize_times(slurp(golden_path(g.name + ".xml")))) << g.name;
        XmlDoc d = parse_xml(xml);
        EXPECT_TRUE(d.ok) << d.error;
        EXPECT_TRUE(junit_consistency(d).empty()) << g.name;
    }
}

TEST(JUnitGoldens, GoldensAreWellFormed) {
    for (const auto& g : junit_goldens()) {
        XmlDoc d = parse_xml(slurp(golden_path(g.name + ".xml")));
        EXPECT_TRUE(d.ok) << g.name << ": " << d.error;
    }
}

TEST(Mutation, EveryMutantRejected) {
    for (const auto& [th, pr] : proven_fixtures()) {
        MutationTally t = run_mutations(fixture(th), fixture(pr));
        EXPECT_GE(t.mutants, 5u) << pr;
        EXPECT_EQ(t.rejected, t.mutants) << pr;
        EXPECT_GE(t.designated_ratio(), 0.9) << pr;
        for (Mutation m : all_mutations) EXPECT_GT(t.per_class[m], 0u) << pr << " " << to_string(m);
        for (const auto& s : t.misses) ADD_FAILURE() << pr << ": " << s;
    }
}

TEST(Mutation, SitesOfTheAppendProof) {
    ProofDoc doc = parse_proof(fixture("append/append.cprf"), "p");
    Signature sig = signature_of(append_theory);
    std::map<Mutation, std::size_t> n;
    for (const auto& m : mutants(doc, 0, sig)) ++n[m.kind];
    EXPECT_EQ(n[Mutation::DropIH], 1u);
    EXPECT_EQ(n[Mutation::SwapJustification], 6u);
    EXPECT_EQ(n[Mutation::AlterChainTerm], 6u);
    EXPECT_EQ(n[Mutation::DeleteCase], 2u);
    EXPECT_EQ(n[Mutation::RenameIntoClash], 1u);
}

TEST(Corpus, RenamingPreservesVerdicts) {
    auto corpus = throughput_corpus(fixture("lists/lists.cthy"), fixture("lists/lists.cprf"), 3);
    std::set<std::string> texts;
    for (const auto& c : corpus) {
        texts.insert(c.proof);
        CheckReport r = check_document(c.theory, "lists.cthy", c.proof, c.name);
        EXPECT_TRUE(r.accepted()) << c.name;
        EXPECT_EQ(r.count(Verdict::Proven), r.lemmas.size());
    }
    EXPECT_EQ(texts.size(), 3u);
}

TEST(Corpus, Throughput) {
    auto dir = std::filesystem::temp_directory_path() / ("cyp_corpus_" + std::to_string(::getpid()));
    ThroughputResult r = run_throughput(dir);
    std::filesystem::remove_all(dir);
    EXPECT_EQ(r.files, 50u);
    EXPECT_GE(r.steps, 300u);
    EXPECT_EQ(r.accepted, r.files);
    EXPECT_LT(r.seconds, 2.0);
}
