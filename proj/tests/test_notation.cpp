#include <gtest/gtest.h>

#include <cstdint>
#include <fstream>

#include "vknots/braid.hpp"
#include "vknots/corpus.hpp"
#include "vknots/pd_code.hpp"

using namespace vknots;

TEST(ParsePD, StandardTrefoil) {
    PDCode pd = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    EXPECT_EQ(pd.crossings.size(), 3u);
    EXPECT_EQ(pd.arc_count, 6);
}

TEST(ParsePD, EmptyIsUnknot) {
    PDCode pd = parse_pd("");
    EXPECT_TRUE(pd.empty());
    EXPECT_EQ(components(pd), 1);
    EXPECT_EQ(writhe(pd), 0);
}

TEST(ParsePD, InvariantViolations) {
    EXPECT_THROW(parse_pd("X(1,1,1,1)"), std::invalid_argument);           // label 4 times
    EXPECT_THROW(parse_pd("X(1,2,3,4)"), std::invalid_argument);           // labels once
    EXPECT_THROW(parse_pd("X(1,2,3)"), std::invalid_argument);             // malformed
    EXPECT_THROW(parse_pd("Y(1,2,3,4)"), std::invalid_argument);           // bad head
    EXPECT_THROW(parse_pd("X(0,1,0,1)"), std::invalid_argument);           // label 0
    // double diagram parses (labels twice each) but cannot be oriented
    PDCode pd = parse_pd("X(1,2,3,4) X(1,2,3,4)");
    EXPECT_EQ(pd.crossings.size(), 2u);
    EXPECT_THROW(orient_pd(pd), std::invalid_argument);
}

TEST(ParseBraid, Basic) {
    BraidWord b = parse_braid("2; 1 1 1");
    EXPECT_EQ(b.strands, 2);
    EXPECT_EQ(b.word, (std::vector<int>{1, 1, 1}));

    BraidWord f8 = parse_braid("3; 1 -2 1 -2");
    EXPECT_EQ(f8.strands, 3);
    EXPECT_EQ(f8.word, (std::vector<int>{1, -2, 1, -2}));

    BraidWord empty = parse_braid("1;");
    EXPECT_TRUE(empty.word.empty());
}

TEST(ParseBraid, Errors) {
    EXPECT_THROW(parse_braid("2; 2"), std::invalid_argument);   // index out of range
    EXPECT_THROW(parse_braid("2; 0"), std::invalid_argument);   // zero letter
    EXPECT_THROW(parse_braid("2 1 1"), std::invalid_argument);  // missing ';'
    EXPECT_THROW(parse_braid("; 1"), std::invalid_argument);    // missing strands
}

TEST(Components, BraidClosures) {
    EXPECT_EQ(components(parse_braid("2; 1 1 1")), 1);
    EXPECT_EQ(components(parse_braid("2; 1 1")), 2);
    EXPECT_EQ(components(parse_braid("1;")), 1);
    EXPECT_EQ(components(parse_braid("3; 1 -2 1 -2")), 1);
    EXPECT_EQ(components(parse_braid("3;")), 3);
}

TEST(Components, PDMatchesBraidOnCorpus) {
    for (const auto& e : bundled_corpus()) {
        if (e.braid) EXPECT_EQ(components(*e.braid), e.components) << e.name;
        if (e.pd) EXPECT_EQ(components(*e.pd), e.components) << e.name;
    }
}

TEST(Writhe, TrefoilAndMirror) {
    PDCode right = parse_pd("X(1,3,4,2) X(3,5,6,4) X(5,1,2,6)");
    EXPECT_EQ(writhe(right), 3);
    EXPECT_EQ(components(right), 1);

    PDCode left = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    EXPECT_EQ(writhe(left), -3);

    EXPECT_EQ(writhe(mirror(right)), -3);
    EXPECT_EQ(writhe(mirror(left)), 3);
}

TEST(Writhe, MirrorNegatesOnCorpus) {
    for (const auto& e : bundled_corpus()) {
        if (!e.pd || e.pd->empty()) continue;
        EXPECT_EQ(writhe(mirror(*e.pd)), -writhe(*e.pd)) << e.name;
    }
}

TEST(TorusBraid, Basics) {
    EXPECT_EQ(serialize_braid(torus_braid(1)), "2; 1 1 1");
    EXPECT_EQ(torus_braid(2).word.size(), 5u);
    EXPECT_THROW(torus_braid(0), std::invalid_argument);
    for (int m = 1; m <= 6; ++m) EXPECT_EQ(components(torus_braid(m)), 1);
}

TEST(RoundTrip, SerializeParse) {
    for (const auto& e : bundled_corpus()) {
        if (e.pd) EXPECT_EQ(parse_pd(serialize_pd(*e.pd)), *e.pd) << e.name;
        if (e.braid) EXPECT_EQ(parse_braid(serialize_braid(*e.braid)), *e.braid) << e.name;
    }
}

TEST(BraidToPD, TrefoilStructure) {
    ClosedBraidDiagram d = braid_to_pd(parse_braid("2; 1 1 1"));
    EXPECT_EQ(d.free_loops, 0);
    EXPECT_EQ(d.pd.crossings.size(), 3u);
    EXPECT_EQ(d.pd.arc_count, 6);
    EXPECT_EQ(components(d.pd), 1);
    EXPECT_EQ(writhe(d.pd), 3);
}

TEST(BraidToPD, FreeLoops) {
    ClosedBraidDiagram empty1 = braid_to_pd(parse_braid("1;"));
    EXPECT_TRUE(empty1.pd.empty());
    EXPECT_EQ(empty1.free_loops, 0);  // the empty PD already stands for one unknot

    ClosedBraidDiagram empty2 = braid_to_pd(parse_braid("2;"));
    EXPECT_TRUE(empty2.pd.empty());
    EXPECT_EQ(empty2.free_loops, 1);

    ClosedBraidDiagram mixed = braid_to_pd(parse_braid("3; 1 1"));
    EXPECT_EQ(mixed.free_loops, 1);
    EXPECT_EQ(mixed.pd.crossings.size(), 2u);
}

TEST(Corpus, BundledContent) {
    const auto& corpus = bundled_corpus();
    EXPECT_GE(corpus.size(), 10u);
    for (const char* name :
         {"unknot", "trefoil", "trefoil_mirror", "4_1", "5_1", "5_2", "6_1", "hopf", "t1", "t2",
          "t3", "t4", "t5", "t6"}) {
        EXPECT_NO_THROW(find_entry(corpus, name)) << name;
    }
    // every knot entry carries ingested Kauffman data
    for (const auto& e : corpus) {
        if (e.components == 1) EXPECT_TRUE(e.kauffman_F.has_value()) << e.name;
    }
    EXPECT_THROW(find_entry(corpus, "nosuchknot"), std::invalid_argument);
}

TEST(Corpus, SchemaErrors) {
    EXPECT_THROW(parse_corpus_text("[{\"name\":\"x\",\"components\":1}]"), std::invalid_argument);
    EXPECT_THROW(parse_corpus_text("[{\"name\":\"x\",\"braid\":\"1;\",\"components\":1},"
                                   "{\"name\":\"x\",\"braid\":\"1;\",\"components\":1}]"),
                 std::invalid_argument);
    EXPECT_THROW(parse_corpus_text("not json"), std::invalid_argument);
    EXPECT_THROW(parse_corpus_text("[{\"name\":\"x\",\"braid\":\"1;\",\"components\":0}]"),
                 std::invalid_argument);
}

TEST(Corpus, KauffmanRoundTripsBitExactly) {
    for (const auto& e : bundled_corpus()) {
        if (!e.kauffman_F) continue;
        EXPECT_EQ(TwoVarLaurent::from_json(e.kauffman_F->to_json()), *e.kauffman_F) << e.name;
    }
}

TEST(Corpus, LoadFromFileMatchesBundled) {
    // write the embedded text to a temp file and load it back
    std::string path = testing::TempDir() + "vknots_corpus_roundtrip.json";
    {
        std::ofstream out(path);
        out << kBundledCorpusJson;
    }
    auto loaded = load_corpus(path);
    EXPECT_EQ(loaded.size(), bundled_corpus().size());
    EXPECT_THROW(load_corpus(path + ".does_not_exist"), std::runtime_error);
}
