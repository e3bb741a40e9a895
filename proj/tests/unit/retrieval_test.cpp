#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "brute_force.hpp"
#include "predsim/errors.hpp"
#include "predsim/retrieval.hpp"
#include "random_fixtures.hpp"
#include "test_support.hpp"

namespace predsim {
namespace {

using testing::hierarchy;
using testing::pred;
using testing::StubSource;

SimConfig subject_only() {
    SimConfig cfg;
    cfg.weights = SimWeights(1, 0, 0);
    return cfg;
}

void expect_well_formed(const std::vector<RankedDocument>& results) {
    for (std::size_t i = 0; i < results.size(); ++i) {
        EXPECT_EQ(results[i].rank, i + 1);
        if (i > 0) EXPECT_LE(results[i].score, results[i - 1].score);
    }
}

TEST(RelatedDocuments, VerbatimCopyRanksFirst) {
    const auto ch = hierarchy({{"Aspirin", "NSAID"}, {"Headache", "Pain"}});
    const auto rh = hierarchy({{"TREATS", "AFFECTS"}});
    const auto corpus = testing::corpus({
        {"seed", {{"Aspirin", "TREATS", "Headache"}, {"NSAID", "AFFECTS", "Pain"}}},
        {"copy", {{"NSAID", "AFFECTS", "Pain"}, {"Aspirin", "TREATS", "Headache"}}},
        {"other", {{"Pain", "TREATS", "NSAID"}}},
    });
    const OntologySimilarity source(ch, rh);
    const Scorer scorer(source, SimConfig{});
    const auto results = related_documents(corpus, DocumentId("seed"), 5, scorer);
    ASSERT_EQ(results.size(), 2u);
    EXPECT_EQ(results[0].id.value(), "copy");
    EXPECT_EQ(results[0].score, 1.0);
    expect_well_formed(results);
}

TEST(RelatedDocuments, HandScoredOrder) {
    StubSource source;
    source.concepts("S", "B", 0.9).concepts("S", "C", 0.6).concepts("S", "D", 0.2);
    const auto corpus = testing::corpus({
        {"a", {{"S", "r", "o"}}},
        {"b", {{"B", "r", "o"}}},
        {"c", {{"C", "r", "o"}}},
        {"d", {{"D", "r", "o"}}},
    });
    const Scorer scorer(source, subject_only());
    const auto results = related_documents(corpus, DocumentId("a"), 10, scorer);
    ASSERT_EQ(results.size(), 3u);
    EXPECT_EQ(results[0].id.value(), "b");
    EXPECT_EQ(results[1].id.value(), "c");
    EXPECT_EQ(results[2].id.value(), "d");
    EXPECT_DOUBLE_EQ(results[0].score, 0.9);
    EXPECT_DOUBLE_EQ(results[1].score, 0.6);
    EXPECT_DOUBLE_EQ(results[2].score, 0.2);
}

TEST(RelatedDocuments, TiesBreakOnDocumentId) {
    StubSource source;
    source.concepts("S", "X", 0.5);
    const auto corpus = testing::corpus({
        {"seed", {{"S", "r", "o"}}},
        {"d9", {{"X", "r", "o"}}},
        {"d2", {{"X", "r", "o"}}},
    });
    const Scorer scorer(source, subject_only());
    const auto results = related_documents(corpus, DocumentId("seed"), 2, scorer);
    ASSERT_EQ(results.size(), 2u);
    EXPECT_EQ(results[0].id.value(), "d2");
    EXPECT_EQ(results[1].id.value(), "d9");
    EXPECT_EQ(results[0].score, 0.5);
    EXPECT_EQ(results[1].score, 0.5);
}

TEST(RelatedDocuments, Errors) {
    StubSource source;
    std::vector<std::pair<DocumentId, std::vector<Predication>>> docs;
    docs.emplace_back(DocumentId("a"), std::vector<Predication>{pred("x", "r", "y")});
    docs.emplace_back(DocumentId("hollow"), std::vector<Predication>{});
    const auto corpus = Corpus::from_documents(std::move(docs));
    const Scorer scorer(source, SimConfig{});
    EXPECT_THROW(related_documents(corpus, DocumentId("zzz"), 5, scorer), UnknownDocument);
    EXPECT_THROW(related_documents(corpus, DocumentId("hollow"), 5, scorer), DegenerateInput);
    EXPECT_THROW(related_documents(corpus, DocumentId("a"), 0, scorer), std::invalid_argument);
    EXPECT_TRUE(related_documents(corpus, DocumentId("a"), 5, scorer).empty());
}

TEST(QueryDocuments, FullSetMatchScoresOne) {
    const auto ch = hierarchy({{"a", "b"}});
    const auto rh = hierarchy({});
    const OntologySimilarity source(ch, rh);
    const auto corpus = testing::corpus({
        {"d1", {{"a", "r", "b"}, {"b", "r", "a"}}},
        {"d2", {{"a", "r", "b"}}},
    });
    const Scorer scorer(source, SimConfig{});
    const PredicationSet query{pred("b", "r", "a"), pred("a", "r", "b")};
    const auto results = query_documents(corpus, query, 5, scorer);
    ASSERT_EQ(results.size(), 2u);
    EXPECT_EQ(results[0].id.value(), "d1");
    EXPECT_EQ(results[0].score, 1.0);
    expect_well_formed(results);
}

TEST(QueryDocuments, HandScoredSinglePredication) {
    StubSource source;
    source.concepts("Q", "A", 0.3).concepts("Q", "B", 0.9).concepts("Q", "C", 0.1);
    const auto corpus = testing::corpus({
        {"x", {{"A", "r", "o"}}},
        {"y", {{"B", "r", "o"}, {"C", "r", "o"}}},
    });
    const Scorer scorer(source, subject_only());
    const auto results = query_documents(corpus, PredicationSet{pred("Q", "r", "o")}, 5, scorer);
    ASSERT_EQ(results.size(), 2u);
    EXPECT_EQ(results[0].id.value(), "y");
    EXPECT_NEAR(results[0].score, (0.9 + 0.9 + 0.1) / 3, 1e-15);
    EXPECT_EQ(results[1].id.value(), "x");
    EXPECT_NEAR(results[1].score, 0.3, 1e-15);
}

TEST(QueryDocuments, UnknownConceptsFallBackToIdOrder) {
    const auto ch = hierarchy({{"a", "b"}});
    const auto rh = hierarchy({{"r", "s"}});
    const OntologySimilarity source(ch, rh);
    const auto corpus = testing::corpus({
        {"d3", {{"a", "r", "b"}}},
        {"d1", {{"b", "s", "a"}}},
        {"d2", {{"a", "s", "a"}}},
    });
    const Scorer scorer(source, SimConfig{});
    const auto results = query_documents(corpus, PredicationSet{pred("NOPE", "NONE", "NADA")}, 5, scorer);
    ASSERT_EQ(results.size(), 3u);
    for (const auto& r : results) EXPECT_EQ(r.score, 0.0);
    EXPECT_EQ(results[0].id.value(), "d1");
    EXPECT_EQ(results[1].id.value(), "d2");
    EXPECT_EQ(results[2].id.value(), "d3");
}

TEST(QueryDocuments, EmptyQueryRejected) {
    StubSource source;
    const auto corpus = testing::corpus({{"d1", {{"a", "r", "b"}}}});
    const Scorer scorer(source, SimConfig{});
    EXPECT_THROW(query_documents(corpus, PredicationSet{}, 5, scorer), DegenerateInput);
}

TEST(RelatedPredications, ExactMatchRanksFirst) {
    StubSource source;
    const auto corpus = testing::corpus({
        {"d1", {{"ASPIRIN", "TREATS", "HEADACHE"}, {"X", "Y", "Z"}}},
        {"d2", {{"ASPIRIN", "TREATS", "HEADACHE"}}},
    });
    const Scorer scorer(source, SimConfig{});
    const auto results = related_predications(
        corpus, PredicationPattern::parse("ASPIRIN|TREATS|HEADACHE"), 5, scorer);
    ASSERT_EQ(results.size(), 2u);
    EXPECT_EQ(results[0].predication, pred("ASPIRIN", "TREATS", "HEADACHE"));
    EXPECT_EQ(results[0].score, 1.0);
    EXPECT_EQ(results[0].documents, (std::vector<DocumentId>{DocumentId("d1"), DocumentId("d2")}));
}

TEST(RelatedPredications, WildcardSubject) {
    StubSource source;
    source.relations("TREATS", "PREVENTS", 0.2);
    const auto corpus = testing::corpus({
        {"d1", {{"X", "PREVENTS", "HEADACHE"}}},
        {"d2", {{"ASPIRIN", "TREATS", "HEADACHE"}, {"Q", "CAUSES", "FEVER"}}},
    });
    const Scorer scorer(source, SimConfig{});
    const auto results =
        related_predications(corpus, PredicationPattern::parse("?|TREATS|HEADACHE"), 10, scorer);
    ASSERT_EQ(results.size(), 3u);
    EXPECT_EQ(results[0].predication.literal(), "ASPIRIN|TREATS|HEADACHE");
    EXPECT_EQ(results[0].score, 1.0);
    EXPECT_EQ(results[1].predication.literal(), "X|PREVENTS|HEADACHE");
    EXPECT_DOUBLE_EQ(results[1].score, 0.6);
    EXPECT_EQ(results[2].score, 0.0);
}

TEST(RelatedPredications, TiesBreakOnLiteral) {
    StubSource source;
    source.concepts("HEADACHE", "MIGRAINE", 0.5);
    const auto corpus = testing::corpus({
        {"d1", {{"B", "TREATS", "MIGRAINE"}}},
        {"d2", {{"A", "TREATS", "MIGRAINE"}}},
    });
    const Scorer scorer(source, SimConfig{});
    const auto results =
        related_predications(corpus, PredicationPattern::parse("?|TREATS|HEADACHE"), 2, scorer);
    ASSERT_EQ(results.size(), 2u);
    EXPECT_EQ(results[0].score, 0.75);
    EXPECT_EQ(results[1].score, 0.75);
    EXPECT_EQ(results[0].predication.literal(), "A|TREATS|MIGRAINE");
    EXPECT_EQ(results[1].predication.literal(), "B|TREATS|MIGRAINE");
}

TEST(WriteRanked, SixDecimals) {
    std::ostringstream out;
    write_ranked(out, std::vector<RankedDocument>{{DocumentId("d1"), 2.0 / 3.0, 1}});
    EXPECT_EQ(out.str(), "1\td1\t0.666667\n");

    std::ostringstream preds;
    write_ranked(preds, std::vector<RankedPredication>{
                            {pred("a", "r", "b"), 0.5, 1, {DocumentId("d1"), DocumentId("d2")}}});
    EXPECT_EQ(preds.str(), "1\ta|r|b\t0.500000\td1,d2\n");
}

TEST(RelatedDocuments, MatchesBruteForceAndInvariants) {
    std::mt19937_64 rng(8080);
    for (int trial = 0; trial < 60; ++trial) {
        const auto cg = oracle::random_dag(rng, 12, 20, "c");
        const auto rg = oracle::random_dag(rng, 4, 5, "r");
        const auto ch = hierarchy(cg.edges);
        const auto rh = hierarchy(rg.edges);
        const OntologySimilarity source(ch, rh);
        const auto docs = oracle::random_docs(rng, 10, 5, cg.nodes, rg.nodes);
        const auto corpus = testing::corpus(docs);
        SimConfig cfg;
        cfg.pair_threshold = (trial % 4) * 0.2;
        const Scorer scorer(source, cfg);
        const Scorer parallel(source, cfg, 8);

        for (const auto& [seed, triples] : docs) {
            const auto expected = oracle::rank_related(cg.edges, rg.edges, docs, seed,
                                                       testing::weights(cfg.weights),
                                                       cfg.pair_threshold);
            const auto got = related_documents(corpus, DocumentId(seed), docs.size(), scorer);
            ASSERT_EQ(got.size(), expected.size());
            for (std::size_t i = 0; i < got.size(); ++i) {
                ASSERT_EQ(got[i].id.value(), expected[i].first);
                ASSERT_NEAR(got[i].score, expected[i].second, 1e-12);
                ASSERT_NE(got[i].id.value(), seed);
            }
            expect_well_formed(got);
            ASSERT_EQ(related_documents(corpus, DocumentId(seed), docs.size(), parallel), got);
            for (std::size_t n = 1; n < got.size(); ++n) {
                const auto shorter = related_documents(corpus, DocumentId(seed), n, scorer);
                ASSERT_TRUE(std::equal(shorter.begin(), shorter.end(), got.begin()));
            }
        }
    }
}

} // namespace
} // namespace predsim
