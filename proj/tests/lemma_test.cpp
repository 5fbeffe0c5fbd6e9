#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <random>

#include "evex/lemma.hpp"
#include "evex/text.hpp"

using namespace evex;
using namespace evex::lemma;

TEST(Lemma, Words) {
  EXPECT_EQ(lemmatize_word("appoints"), "appoint");
  EXPECT_EQ(lemmatize_word("appointed"), "appoint");
  EXPECT_EQ(lemmatize_word("left"), "leave");
  EXPECT_EQ(lemmatize_word("resigned"), "resign");
  EXPECT_EQ(lemmatize_word("retired"), "retire");
  EXPECT_EQ(lemmatize_word("named"), "name");
  EXPECT_EQ(lemmatize_word("joining"), "join");
  EXPECT_EQ(lemmatize_word("stepped"), "step");
  EXPECT_EQ(lemmatize_word("hires"), "hire");
  EXPECT_EQ(lemmatize_word("was"), "be");
  EXPECT_EQ(lemmatize_word("Succeeded"), "succeed");
}

TEST(Lemma, Phrases) {
  EXPECT_EQ(lemmatize_verb_phrase("has left"), "leave");
  EXPECT_EQ(lemmatize_verb_phrase("appoints"), "appoint");
  EXPECT_EQ(lemmatize_verb_phrase("is scheduled for"), "schedule for");
  EXPECT_EQ(lemmatize_verb_phrase("has quickly resigned as"), "resign as");
  EXPECT_EQ(lemmatize_verb_phrase("  Has   Left "), "leave");
}

TEST(Lemma, AuxiliaryOnlyPhraseThrows) {
  try {
    lemmatize_verb_phrase("has been");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EmptyAfterNormalization);
  }
  EXPECT_THROW(lemmatize_verb_phrase(""), Error);
}

TEST(Lemma, TaggedPhraseUsesFirstVerbAsHead) {
  std::vector<TaggedWord> words = {{"has", Tag::Aux}, {"appointed", Tag::Verb}, {"Mark", Tag::Propn}, {"as", Tag::Adp}};
  EXPECT_EQ(lemmatize_verb_phrase(std::span<const TaggedWord>(words)), "appoint mark as");
}

TEST(Lemma, DefaultTableIsAFixpoint) { EXPECT_TRUE(lemma_fixpoint_check(default_rules()).empty()); }

TEST(Lemma, FixpointCheckFindsBadEntry) {
  auto rules = default_rules();
  rules.irregulars["left"] = "leaved";
  auto v = lemma_fixpoint_check(rules);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_NE(v[0].find("left -> leaved"), std::string::npos);
}

TEST(Lemma, LoadIrregularsOverrides) {
  auto path = (std::filesystem::temp_directory_path() / "evex_irregulars.tsv").string();
  text::write_file(path, "# extra\nstrove\tstrive\n");
  auto rules = default_rules();
  rules.load_irregulars(path);
  EXPECT_EQ(lemmatize_word("strove", rules), "strive");
  std::remove(path.c_str());
}

namespace {

const std::vector<std::string> kAux = {"", "has", "had", "is", "was", "will", "has been", "would have"};
const std::vector<std::string> kAdv = {"", "quickly", "recently", "also"};
const std::vector<std::string> kVerbs = {
    "appointed", "appoints", "left",   "leaves",    "resigned", "resigning", "named",     "hired",
    "joined",    "joins",    "quit",   "retired",   "elected",  "promoted",  "replaced",  "succeeded",
    "nominated", "stepped",  "became", "took",      "went",     "offered",   "scheduled", "announced",
    "said",      "ran",      "made",   "stopping",  "planned",  "studies",   "carried",   "moved"};
const std::vector<std::string> kAdp = {"", "as", "to", "from", "of", "at", "for", "with"};

}  // namespace

TEST(LemmaProperty, IdempotentAndLowercase) {
  std::mt19937 rng(1234);
  auto pick = [&](const std::vector<std::string>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  };
  for (int i = 0; i < 500; ++i) {
    std::string phrase = pick(kAux) + " " + pick(kAdv) + " " + pick(kVerbs) + " " + pick(kAdp);
    if (i % 3 == 0) phrase[phrase.find_first_not_of(' ')] = static_cast<char>(std::toupper(phrase[phrase.find_first_not_of(' ')]));
    std::string once = lemmatize_verb_phrase(phrase);
    EXPECT_EQ(lemmatize_verb_phrase(once), once) << phrase;
    EXPECT_TRUE(text::has_lowercase_only(once)) << phrase;
    EXPECT_EQ(once, text::squeeze(once));
  }
}
