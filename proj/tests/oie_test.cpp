#include <gtest/gtest.h>

#include <random>
#include <regex>

#include "evex/reverb.hpp"
#include "evex/triple.hpp"

using namespace evex;
using namespace evex::oie;

namespace {

std::vector<TripleExtraction> extract(const std::string& sentence) {
  auto toks = tag(sentence);
  return extract_triples(sentence, toks);
}

// One letter per tag so the relation pattern can be checked with a regex.
char tag_letter(Tag t) {
  switch (t) {
    case Tag::Verb: return 'v';
    case Tag::Aux: return 'x';
    case Tag::Adv: return 'a';
    case Tag::Adp: return 'p';
    case Tag::Noun: return 'n';
    case Tag::Propn: return 'q';
    case Tag::Adj: return 'j';
    case Tag::Det: return 'd';
    case Tag::Pron: return 'r';
    default: return '?';
  }
}

bool matches_relation_pattern(const std::vector<Token>& toks, TokenSpan rel) {
  static const std::regex kPattern("^([xv]|[xv][xav]*[xv])([nqjadr]*p)?$");
  std::string letters;
  for (std::size_t i = rel.begin; i < rel.end; ++i) letters += tag_letter(toks[i].tag);
  return std::regex_match(letters, kPattern);
}

const std::vector<std::string> kSentences = {
    "QNB appoints Mark as a president.",
    "Nadine the CEO has left the company.",
    "The Obama administration is offering only modest greenhouse gas reduction targets at the conference.",
    "Barclays named Sarah Jones as chief executive.",
    "John Smith resigned as chairman of HSBC.",
    "Google hired Peter Walsh as vice president in 2015.",
    "Tom Baker left Microsoft in May 2014.",
    "The board quickly elected a new chairman at the annual meeting.",
    "Anna Lee will join Siemens as chief financial officer on March 3, 2016.",
    "The festival is scheduled for May 25th.",
    "He said that the bank would close several branches.",
    "Apple and Samsung signed a deal.",
};

}  // namespace

TEST(Extract, PhraseOneLongestMatch) {
  auto ts = extract("QNB appoints Mark as a president");
  ASSERT_EQ(ts.size(), 1u);
  EXPECT_EQ(ts[0].arg1, "QNB");
  EXPECT_EQ(ts[0].rel, "appoints Mark as");
  EXPECT_EQ(ts[0].arg2, "a president");
  EXPECT_EQ(format_triple(ts[0]), "0.6: (QNB; appoints Mark as; a president)");
}

TEST(Extract, PhraseTwo) {
  auto ts = extract("Nadine the CEO has left the company.");
  ASSERT_EQ(ts.size(), 1u);
  EXPECT_EQ(ts[0].arg1, "Nadine the CEO");
  EXPECT_EQ(ts[0].rel, "has left");
  EXPECT_EQ(ts[0].arg2, "the company");
}

TEST(Extract, ObamaRelationPhrase) {
  auto ts = extract(kSentences[2]);
  ASSERT_EQ(ts.size(), 1u);
  EXPECT_EQ(ts[0].rel, "is offering only modest greenhouse gas reduction targets at");
  EXPECT_EQ(ts[0].arg1, "The Obama administration");
  EXPECT_EQ(ts[0].arg2, "the conference");
}

TEST(Extract, OfAttachmentExtendsArg2) {
  auto ts = extract("John Smith resigned as chairman of HSBC.");
  ASSERT_EQ(ts.size(), 1u);
  EXPECT_EQ(ts[0].rel, "resigned as");
  EXPECT_EQ(ts[0].arg2, "chairman of HSBC");
}

TEST(Extract, NoVerbOrNoArgument) {
  EXPECT_TRUE(extract("The big red house").empty());
  EXPECT_TRUE(extract("").empty());
  EXPECT_TRUE(extract("Resigned.").empty());
}

TEST(Extract, ConfidenceWeights) {
  auto ts = extract("QNB hired Mark");
  ASSERT_EQ(ts.size(), 1u);
  // Sentence-initial "QNB" is not a proper noun: 0.5 + PROPN arg2 + simple V + adjacent.
  EXPECT_DOUBLE_EQ(ts[0].confidence, 0.9);
  auto full = extract("Yesterday the Bank hired Mark");
  ASSERT_EQ(full.size(), 1u);
  EXPECT_DOUBLE_EQ(full[0].confidence, 1.0);
}

TEST(Extract, Invariants) {
  for (const auto& s : kSentences) {
    auto toks = tag(s);
    auto ts = extract_triples(s, toks);
    std::vector<bool> used(toks.size(), false);
    for (std::size_t k = 0; k < ts.size(); ++k) {
      const auto& t = ts[k];
      ASSERT_TRUE(t.rel_span && t.arg1_span && t.arg2_span);
      EXPECT_TRUE(matches_relation_pattern(toks, *t.rel_span)) << s << " / " << t.rel;
      EXPECT_GE(t.confidence, 0.0);
      EXPECT_LE(t.confidence, 1.0);
      if (k) {
        EXPECT_GE(ts[k - 1].confidence, t.confidence);
      }
      EXPECT_LE(t.arg1_span->end, t.rel_span->begin);
      EXPECT_GE(t.arg2_span->begin, t.rel_span->end);
      for (std::size_t i = t.rel_span->begin; i < t.rel_span->end; ++i) {
        if (toks[i].tag != Tag::Verb) continue;
        EXPECT_FALSE(used[i]) << "verb shared: " << s;
        used[i] = true;
      }
    }
  }
}

TEST(RelationKey, NormalizesInflections) {
  EXPECT_EQ(relation_key("has appointed"), relation_key("appoints"));
  EXPECT_EQ(relation_key("has left"), "leave");
  EXPECT_EQ(relation_key("resigned as"), "resign as");
}

TEST(LexicalFilter, Thresholds) {
  auto ts = extract(kSentences[2]);
  ASSERT_EQ(ts.size(), 1u);
  RelationTable table = parse_relation_table(
      "is offering only modest greenhouse gas reduction targets at\t19\n");
  EXPECT_EQ(lexical_filter(ts, &table, 20).size(), 0u);
  EXPECT_EQ(lexical_filter(ts, &table, 19).size(), 1u);
  EXPECT_EQ(lexical_filter(ts, nullptr, 20), ts);
  RelationTable other = {{"appoint", 100}};
  EXPECT_TRUE(lexical_filter(ts, &other, 1).empty());
}

TEST(LexicalFilter, KeysMatchAcrossInflections) {
  auto table = parse_relation_table("appoints\t30\n");
  TripleExtraction t;
  t.arg1 = "QNB";
  t.rel = "has appointed";
  t.arg2 = "Mark";
  EXPECT_EQ(lexical_filter({t}, &table, 20).size(), 1u);
}

TEST(LexicalFilter, BadTable) {
  EXPECT_THROW(parse_relation_table("appoints 30\n"), Error);
  EXPECT_THROW(parse_relation_table("appoints\tmany\n"), Error);
}

TEST(TripleFormat, ParseWithAttribution) {
  auto t = parse_triple("(Barack Obama; was not born in; the United States)[attrib=Some people say]");
  EXPECT_EQ(t.arg1, "Barack Obama");
  EXPECT_EQ(t.rel, "was not born in");
  EXPECT_EQ(t.arg2, "the United States");
  ASSERT_TRUE(t.context);
  EXPECT_EQ(t.context->kind, ContextKind::Attribution);
  EXPECT_EQ(t.context->text, "Some people say");
  EXPECT_DOUBLE_EQ(t.confidence, 1.0);
}

TEST(TripleFormat, MinimalAndEnabler) {
  auto t = parse_triple("(a; b; c)");
  EXPECT_EQ(t.arg1, "a");
  EXPECT_EQ(t.rel, "b");
  EXPECT_EQ(t.arg2, "c");
  EXPECT_EQ(format_triple(t), "1: (a; b; c)");
  auto e = parse_triple("0.5: (x; y; z)[enabler=If it rains]");
  EXPECT_EQ(e.context->kind, ContextKind::Condition);
  EXPECT_DOUBLE_EQ(e.confidence, 0.5);
}

TEST(TripleFormat, Malformed) {
  for (const char* bad : {"(a; b)", "(a; b; c; d)", "a; b; c", "(a; ; c)", "1.5: (a; b; c)", "x: (a; b; c)",
                          "(a; b; c) trailing", "(a; b; c)[foo=bar]", "(a; b; c"}) {
    try {
      parse_triple(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::MalformedTriple) << bad;
    }
  }
}

TEST(TripleFormat, NaryExpansion) {
  auto ts = parse_triple_line("0.8: (the festival; is scheduled; [for May 25th; to May 28th])");
  ASSERT_EQ(ts.size(), 2u);
  EXPECT_EQ(ts[0].rel, "is scheduled for");
  EXPECT_EQ(ts[0].arg2, "May 25th");
  EXPECT_EQ(ts[1].rel, "is scheduled to");
  EXPECT_EQ(ts[1].arg2, "May 28th");
}

TEST(TripleFormat, FileGroupsSentences) {
  auto ts = parse_triple_file("# header\n(a; b; c)\n(d; e; f)\n\n\n(g; h; i)\n");
  ASSERT_EQ(ts.size(), 3u);
  EXPECT_EQ(ts[0].sentence, 0u);
  EXPECT_EQ(ts[1].sentence, 0u);
  EXPECT_EQ(ts[2].sentence, 1u);
  try {
    parse_triple_file("(a; b; c)\n(a; b)\n", "t.triples");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.where().line, 2u);
    EXPECT_EQ(std::string(e.what()).rfind("t.triples:2:1: MalformedTriple: ", 0), 0u);
  }
}

TEST(TripleFormat, RoundTripProperty) {
  std::mt19937 rng(99);
  const std::vector<std::string> words = {"QNB", "Mark", "the", "president", "of", "has", "left", "May",
                                          "25th", "non-executive", "U.S.", "company's", "3.5", "Hang"};
  auto pick = [&](std::size_t max_words) {
    std::size_t n = 1 + rng() % max_words;
    std::string s;
    for (std::size_t i = 0; i < n; ++i) s += (i ? " " : "") + words[rng() % words.size()];
    return s;
  };
  for (int i = 0; i < 1000; ++i) {
    TripleExtraction t;
    t.arg1 = pick(4);
    t.rel = pick(3);
    t.arg2 = pick(5);
    t.confidence = (rng() % 1001) / 1000.0;
    if (rng() % 3 == 0) t.context = TripleContext{rng() % 2 ? ContextKind::Attribution : ContextKind::Condition, pick(3)};
    std::string text = format_triple(t);
    auto back = parse_triple(text);
    EXPECT_EQ(back, t) << text;
    EXPECT_EQ(format_triple(back), text);
  }
}

TEST(Chunk, NounPhrases) {
  auto toks = tag("The new chief executive of QNB met 3 analysts");
  auto nps = chunk_noun_phrases(toks);
  ASSERT_EQ(nps.size(), 3u);
  EXPECT_EQ(nps[0], (TokenSpan{0, 4}));
  EXPECT_EQ(nps[1], (TokenSpan{5, 6}));
  EXPECT_EQ(nps[2], (TokenSpan{7, 9}));
}

TEST(Segment, PartsAndHead) {
  auto t = parse_triple("(Nadine the CEO; has left; the company)[attrib=Reuters reported]");
  auto seg = segment_triple(t);
  EXPECT_EQ(seg.arg1, (TokenSpan{0, 3}));
  EXPECT_EQ(seg.rel, (TokenSpan{3, 5}));
  EXPECT_EQ(seg.arg2, (TokenSpan{5, 7}));
  EXPECT_EQ(seg.context, (TokenSpan{7, 9}));
  EXPECT_EQ(seg.tokens[relation_head(seg)].text, "left");
}
