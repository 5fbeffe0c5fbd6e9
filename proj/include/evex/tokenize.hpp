#ifndef EVEX_TOKENIZE_HPP_
#define EVEX_TOKENIZE_HPP_

// Sentence splitting, tokenization and lexicon-driven part-of-speech
// tagging over the coarse tag set in lexicon.hpp.

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "evex/lemma.hpp"
#include "evex/lexicon.hpp"
#include "evex/text.hpp"

namespace evex::oie {

struct Token {
  std::string text;
  Tag tag = Tag::Other;
  std::size_t begin = 0;  // byte offsets into the analyzed text
  std::size_t end = 0;

  bool operator==(const Token&) const = default;
};

/// Half-open byte range [begin, end).
struct CharSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const CharSpan&) const = default;
};

inline const std::set<std::string>& default_abbreviations() {
  static const std::set<std::string> kAbbrev = {
      "mr.",   "mrs.", "ms.",   "dr.",   "prof.", "sr.",   "jr.",  "st.",  "inc.", "ltd.",
      "co.",   "corp.", "plc.", "llc.",  "gen.",  "gov.",  "sen.", "rep.", "vs.",  "etc.",
      "e.g.",  "i.e.", "u.s.",  "u.k.",  "no.",   "jan.",  "feb.", "mar.", "apr.", "jun.",
      "jul.",  "aug.", "sep.",  "sept.", "oct.",  "nov.",  "dec.", "dept.", "est.", "approx."};
  return kAbbrev;
}

namespace detail {

inline bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

inline bool is_closer(char c) { return c == '"' || c == '\'' || c == ')' || c == ']'; }

inline bool is_punct_byte(char c) {
  return !text::is_word_byte(c) && !text::is_space(c) && c != '-' && c != '_' && c != '&' &&
         c != '/' && c != '@' && c != '%';
}

inline bool is_abbreviation(std::string_view word, const std::set<std::string>& abbrev) {
  std::string lw = text::lower(word);
  if (abbrev.count(lw)) return true;
  // Single-letter initials ("J.") and dotted acronyms ("U.S.").
  if (word.size() == 2 && text::is_upper(word[0]) && word[1] == '.') return true;
  return false;
}

}  // namespace detail

/// Splits at '.', '!' or '?' (plus closing quotes/brackets) followed by
/// whitespace and an uppercase letter, unless the word ending at the
/// period is a known abbreviation. Spans are trimmed.
inline std::vector<CharSpan> split_sentences(std::string_view s,
                                             const std::set<std::string>& abbrev = default_abbreviations()) {
  std::vector<CharSpan> out;
  auto push = [&](std::size_t b, std::size_t e) {
    while (b < e && text::is_space(s[b])) ++b;
    while (e > b && text::is_space(s[e - 1])) --e;
    if (e > b) out.push_back({b, e});
  };
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < s.size()) {
    if (!detail::is_terminator(s[i])) {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < s.size() && detail::is_terminator(s[end])) ++end;
    while (end < s.size() && detail::is_closer(s[end])) ++end;
    std::size_t k = end;
    while (k < s.size() && text::is_space(s[k])) ++k;
    bool boundary = k > end && k < s.size() &&
                    (text::is_upper(s[k]) || ((s[k] == '"' || s[k] == '(') && k + 1 < s.size() &&
                                              text::is_upper(s[k + 1])));
    if (boundary && s[i] == '.' && end == i + 1) {
      std::size_t w = i;
      while (w > start && !text::is_space(s[w - 1])) --w;
      if (detail::is_abbreviation(s.substr(w, i + 1 - w), abbrev)) boundary = false;
    }
    if (boundary) {
      push(start, end);
      start = k;
    }
    i = end;
  }
  push(start, s.size());
  return out;
}

/// Whitespace and punctuation splitting. Contractions split at the
/// apostrophe ("I'd" -> "I", "'d"; "don't" -> "do", "n't"); abbreviations
/// keep their period; word-internal hyphens and periods are kept.
inline std::vector<Token> tokenize(std::string_view s,
                                   const std::set<std::string>& abbrev = default_abbreviations()) {
  static const std::set<std::string> kClitics = {"'s", "'d", "'ll", "'re", "'ve", "'m"};
  std::vector<Token> out;
  auto emit = [&](std::size_t b, std::size_t e) {
    if (e > b) out.push_back(Token{std::string(s.substr(b, e - b)), Tag::Other, b, e});
  };
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && text::is_space(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !text::is_space(s[j])) ++j;
    if (j == i) break;
    std::size_t b = i, e = j;
    i = j;

    // Bare clitic chunk, e.g. the relation "'d be late for".
    if (s[b] == '\'' && kClitics.count(text::lower(s.substr(b, e - b)))) {
      emit(b, e);
      continue;
    }
    std::vector<std::pair<std::size_t, std::size_t>> tail;
    while (b < e && detail::is_punct_byte(s[b])) {
      emit(b, b + 1);
      ++b;
    }
    while (e > b && detail::is_punct_byte(s[e - 1])) {
      if (s[e - 1] == '.') {
        std::string_view word = s.substr(b, e - b);
        if (detail::is_abbreviation(word, abbrev)) break;
        // Dotted acronym such as "U.S." keeps its final period.
        if (word.size() >= 4 && word.substr(0, e - b - 1).find('.') != std::string_view::npos &&
            text::is_all_caps(word))
          break;
      }
      tail.push_back({e - 1, e});
      --e;
    }
    if (e > b) {
      std::string_view core = s.substr(b, e - b);
      std::string lc = text::lower(core);
      std::size_t split = std::string::npos;
      if (lc.size() > 3 && text::ends_with(lc, "n't")) {
        split = core.size() - 3;
      } else {
        std::size_t apos = core.rfind('\'');
        if (apos != std::string_view::npos && apos > 0 && kClitics.count(lc.substr(apos))) split = apos;
      }
      if (split != std::string::npos) {
        emit(b, b + split);
        emit(b + split, e);
      } else {
        emit(b, e);
      }
    }
    for (auto it = tail.rbegin(); it != tail.rend(); ++it) emit(it->first, it->second);
  }
  return out;
}

namespace detail {

inline bool is_number(std::string_view w) {
  if (w.empty() || !text::is_digit(w.front())) return false;
  for (char c : w)
    if (!text::is_digit(c) && c != ',' && c != '.' && c != '%' && c != '-' && c != '/') return false;
  return true;
}

inline bool all_punct(std::string_view w) {
  for (char c : w)
    if (text::is_word_byte(c)) return false;
  return !w.empty();
}

inline bool is_month(std::string_view lw) {
  static const std::set<std::string_view> kMonths = {
      "january", "february", "march",     "april",   "may",      "june",
      "july",    "august",   "september", "october", "november", "december"};
  return kMonths.count(lw) != 0;
}

inline bool is_open_class(Tag t) {
  return t == Tag::Noun || t == Tag::Verb || t == Tag::Adj || t == Tag::Adv;
}

}  // namespace detail

/// Assigns tags in place. Order: punctuation and numbers, lexicon,
/// irregular verb forms, capitalization, suffix heuristics, NOUN.
inline void pos_tag(std::span<Token> tokens, const Lexicon& lex = default_lexicon(),
                    const lemma::LemmaRules& rules = lemma::default_rules()) {
  const std::size_t n = tokens.size();
  std::vector<bool> from_lexicon(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    Token& t = tokens[i];
    const std::string lw = text::lower(t.text);
    const bool initial = i == 0;
    const bool caps = text::is_capitalized(t.text);
    if (detail::all_punct(t.text)) {
      t.tag = Tag::Punct;
    } else if (detail::is_number(t.text)) {
      t.tag = Tag::Num;
    } else if (auto lt = lex.lookup(lw)) {
      t.tag = *lt;
      from_lexicon[i] = true;
      if (!initial && caps && (detail::is_open_class(*lt) || detail::is_month(lw))) t.tag = Tag::Propn;
      if (!initial && text::is_all_caps(t.text)) t.tag = Tag::Propn;
    } else if (rules.irregulars.count(lw) && !rules.auxiliaries.count(lw)) {
      t.tag = Tag::Verb;
    } else if (!initial && caps) {
      t.tag = Tag::Propn;
    } else if (text::ends_with(lw, "ly") && lw.size() > 4) {
      t.tag = Tag::Adv;
    } else if ((text::ends_with(lw, "s") || text::ends_with(lw, "ed") || text::ends_with(lw, "ing")) &&
               lemma::lemmatize_word(lw, rules) != lw &&
               rules.known_bases.count(lemma::lemmatize_word(lw, rules))) {
      t.tag = Tag::Verb;
    } else {
      t.tag = Tag::Noun;
    }
  }

  // Contextual corrections.
  if (n >= 2 && text::is_capitalized(tokens[0].text) && detail::is_open_class(tokens[0].tag)) {
    const Token& next = tokens[1];
    const bool next_unknown_name = text::is_capitalized(next.text) && !lex.contains(next.text) &&
                                   !text::is_all_caps(next.text);
    const bool base_verb_then_verb = tokens[0].tag == Tag::Verb && from_lexicon[0] &&
                                     (next.tag == Tag::Aux || next.tag == Tag::Verb);
    if (next_unknown_name || base_verb_then_verb) tokens[0].tag = Tag::Propn;
  }
  for (std::size_t i = 1; i < n; ++i) {
    Token& t = tokens[i];
    if (t.tag != Tag::Verb) continue;
    Tag prev = tokens[i - 1].tag;
    if (prev != Tag::Det && prev != Tag::Adj) continue;
    const std::string lw = text::lower(t.text);
    t.tag = (text::ends_with(lw, "ed") || text::ends_with(lw, "ing")) ? Tag::Adj : Tag::Noun;
  }
}

inline std::vector<Token> tag(std::string_view sentence, const Lexicon& lex = default_lexicon(),
                              const lemma::LemmaRules& rules = lemma::default_rules()) {
  auto tokens = tokenize(sentence);
  pos_tag(tokens, lex, rules);
  return tokens;
}

}  // namespace evex::oie

#endif  // EVEX_TOKENIZE_HPP_
