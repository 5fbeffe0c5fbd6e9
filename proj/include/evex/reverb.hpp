#ifndef EVEX_REVERB_HPP_
#define EVEX_REVERB_HPP_

// Native relation extractor. A relation phrase is
//
//   V | V ADP | V W* ADP      V = (AUX|ADV)* VERB+ (or a bare AUX run)
//                             W = NOUN | PROPN | ADJ | ADV | DET | PRON
//
// and only the longest match per verb group is kept. Arguments are the
// nearest noun phrases on either side.

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "evex/lemma.hpp"
#include "evex/text.hpp"
#include "evex/tokenize.hpp"
#include "evex/triple.hpp"

namespace evex::oie {

/// Maximal DET? ADJ* (NOUN|PROPN|NUM)+ runs, left to right.
inline std::vector<TokenSpan> chunk_noun_phrases(std::span<const Token> tokens) {
  std::vector<TokenSpan> out;
  auto is_head = [](Tag t) { return t == Tag::Noun || t == Tag::Propn || t == Tag::Num; };
  std::size_t i = 0;
  const std::size_t n = tokens.size();
  while (i < n) {
    std::size_t j = i;
    if (tokens[j].tag == Tag::Det) ++j;
    while (j < n && tokens[j].tag == Tag::Adj) ++j;
    std::size_t k = j;
    while (k < n && is_head(tokens[k].tag)) ++k;
    if (k > j) {
      out.push_back({i, k});
      i = k;
    } else {
      ++i;
    }
  }
  return out;
}

namespace detail {

inline bool is_w(Tag t) {
  return t == Tag::Noun || t == Tag::Propn || t == Tag::Adj || t == Tag::Adv || t == Tag::Det ||
         t == Tag::Pron;
}

inline bool is_verbal(Tag t) { return t == Tag::Aux || t == Tag::Adv || t == Tag::Verb; }

// Text covered by tokens [b, e), taken from the original sentence.
inline std::string span_text(std::string_view sentence, std::span<const Token> tokens, TokenSpan s) {
  if (s.begin >= s.end) return {};
  return std::string(sentence.substr(tokens[s.begin].begin, tokens[s.end - 1].end - tokens[s.begin].begin));
}

// Verb groups: [begin, end) with leading adverbs and trailing adverbs
// removed. Groups without a verb are kept only if they contain an AUX.
inline std::vector<TokenSpan> verb_groups(std::span<const Token> tokens) {
  std::vector<TokenSpan> out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (!is_verbal(tokens[i].tag)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < tokens.size() && is_verbal(tokens[j].tag)) ++j;
    std::size_t b = i, e = j;
    while (b < e && tokens[b].tag == Tag::Adv) ++b;
    while (e > b && tokens[e - 1].tag == Tag::Adv) --e;
    if (e > b) out.push_back({b, e});
    i = j;
  }
  return out;
}

}  // namespace detail

/// Additive confidence score in [0, 1]; see the header comment of
/// extract_triples for the weights.
inline double triple_confidence(std::span<const Token> tokens, TokenSpan arg1, TokenSpan rel, TokenSpan arg2) {
  int tenths = 5;
  if (tokens[arg1.end - 1].tag == Tag::Propn) tenths += 1;
  if (tokens[arg2.end - 1].tag == Tag::Propn) tenths += 1;
  bool simple = true;
  for (std::size_t i = rel.begin; i < rel.end; ++i) {
    Tag t = tokens[i].tag;
    if (!(detail::is_verbal(t) || (t == Tag::Adp && i + 1 == rel.end))) simple = false;
  }
  if (simple) tenths += 2;
  if (arg1.end == rel.begin) tenths += 1;
  return std::clamp(tenths / 10.0, 0.0, 1.0);
}

/// Triples of one tagged sentence, sorted by descending confidence.
///
/// d = 0.5 + 0.1 [arg1 head is PROPN] + 0.1 [arg2 head is PROPN]
///         + 0.2 [relation is V or V ADP] + 0.1 [arg1 directly precedes rel]
///
/// arg1 absorbs a directly preceding noun phrase ("Nadine the CEO") or an
/// appositive set off by commas ("Nadine, the CEO,"); arg2 extends over
/// "of NP" attachments.
inline std::vector<TripleExtraction> extract_triples(std::string_view sentence, std::span<const Token> tokens,
                                                     std::size_t sentence_index = 0) {
  std::vector<TripleExtraction> out;
  const auto nps = chunk_noun_phrases(tokens);
  const std::size_t n = tokens.size();
  for (const auto& v : detail::verb_groups(tokens)) {
    TokenSpan rel = v;
    std::size_t k = v.end;
    while (k < n && detail::is_w(tokens[k].tag)) ++k;
    if (k < n && tokens[k].tag == Tag::Adp) rel.end = k + 1;

    const TokenSpan* left = nullptr;
    const TokenSpan* right = nullptr;
    for (const auto& np : nps) {
      if (np.end <= rel.begin) left = &np;
      if (!right && np.begin >= rel.end) right = &np;
    }
    if (!left || !right) continue;
    TokenSpan arg1 = *left;
    TokenSpan arg2 = *right;
    auto idx = static_cast<std::size_t>(left - nps.data());
    if (idx > 0) {
      const TokenSpan& prev = nps[idx - 1];
      const bool adjacent = prev.end == arg1.begin && tokens[arg1.begin].tag == Tag::Det;
      const bool commas = prev.end + 1 == arg1.begin && tokens[prev.end].text == "," &&
                          arg1.end < n && tokens[arg1.end].text == "," && arg1.end + 1 == rel.begin;
      if (adjacent || commas) arg1.begin = prev.begin;
    }
    // "chairman of HSBC": arg2 keeps its "of" attachments.
    for (auto it = nps.begin() + (right - nps.data()) + 1; it != nps.end(); ++it) {
      if (it->begin != arg2.end + 1 || !text::iequals(tokens[arg2.end].text, "of")) break;
      arg2.end = it->end;
    }

    TripleExtraction t;
    t.arg1 = detail::span_text(sentence, tokens, arg1);
    t.rel = detail::span_text(sentence, tokens, rel);
    t.arg2 = detail::span_text(sentence, tokens, arg2);
    t.arg1_span = arg1;
    t.rel_span = rel;
    t.arg2_span = arg2;
    t.confidence = triple_confidence(tokens, *left, rel, *right);
    t.sentence = sentence_index;
    out.push_back(std::move(t));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const TripleExtraction& a, const TripleExtraction& b) { return a.confidence > b.confidence; });
  return out;
}

/// Normalized relation: auxiliaries, adjectives and adverbs dropped, the
/// head verb lemmatized, lowercase. Falls back to the lowercased phrase when
/// nothing would remain.
inline std::string relation_key(std::string_view rel, const Lexicon& lex = default_lexicon(),
                                const lemma::LemmaRules& rules = lemma::default_rules()) {
  auto tokens = tag(rel, lex, rules);
  std::vector<lemma::TaggedWord> words;
  for (const auto& t : tokens) {
    Tag tg = t.tag;
    if (tg == Tag::Propn || tg == Tag::Noun) {
      if (auto lt = lex.lookup(t.text); lt && (*lt == Tag::Adj || *lt == Tag::Adv)) tg = *lt;
    }
    words.push_back({t.text, tg});
  }
  try {
    return lemma::lemmatize_verb_phrase(std::span<const lemma::TaggedWord>(words), rules);
  } catch (const Error&) {
    return text::lower(text::squeeze(rel));
  }
}

/// Normalized relation phrase -> number of distinct argument pairs.
using RelationTable = std::map<std::string, long>;

/// `relation<TAB>count` lines; relation keys are normalized on load.
inline RelationTable parse_relation_table(std::string_view content, const std::string& source = "") {
  RelationTable table;
  auto ls = text::lines(content);
  for (std::size_t i = 0; i < ls.size(); ++i) {
    std::string_view line = text::trim(ls[i]);
    if (line.empty() || line.front() == '#') continue;
    auto cols = text::split(line, '\t');
    if (cols.size() != 2) throw Error(Errc::Syntax, "expected 'relation<TAB>count'", SourceLocation{source, i + 1, 1});
    std::string_view num = text::trim(cols[1]);
    long count = 0;
    auto res = std::from_chars(num.data(), num.data() + num.size(), count);
    if (res.ec != std::errc() || res.ptr != num.data() + num.size() || count < 0)
      throw Error(Errc::Syntax, "bad count '" + std::string(num) + "'", SourceLocation{source, i + 1, 1});
    table[relation_key(cols[0])] = count;
  }
  return table;
}

inline RelationTable load_relation_table(const std::string& path) {
  return parse_relation_table(text::read_file(path), path);
}

/// Keeps triples whose normalized relation has count >= threshold. With no
/// table, the input is returned unchanged.
inline std::vector<TripleExtraction> lexical_filter(std::vector<TripleExtraction> triples,
                                                    const RelationTable* table, long threshold = 1) {
  if (!table) return triples;
  std::vector<TripleExtraction> out;
  for (auto& t : triples) {
    auto it = table->find(relation_key(t.rel));
    long count = it == table->end() ? 0 : it->second;
    if (count >= threshold) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace evex::oie

#endif  // EVEX_REVERB_HPP_
