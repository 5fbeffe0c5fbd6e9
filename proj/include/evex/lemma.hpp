#ifndef EVEX_LEMMA_HPP_
#define EVEX_LEMMA_HPP_

// English verb lemmatization: conjugated relation phrases ("has left",
// "appoints") are reduced to infinitive heads ("leave", "appoint").

#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "evex/error.hpp"
#include "evex/lexicon.hpp"
#include "evex/text.hpp"

namespace evex::lemma {

/// One suffix rewrite. Each entry of `rewrites` is appended to the stem;
/// the special value "=" undoubles a final doubled consonant.
struct SuffixRule {
  std::string suffix;
  std::vector<std::string> rewrites;
};

struct LemmaRules {
  std::set<std::string> auxiliaries;
  std::map<std::string, std::string> irregulars;
  std::vector<SuffixRule> suffix_rules;
  std::unordered_set<std::string> known_bases;

  static LemmaRules defaults();

  /// Merges an `inflected<TAB>lemma` file over the irregular table.
  void load_irregulars(const std::string& path);
};

namespace detail {

inline const char* kIrregulars = R"IRR(
am be|is be|are be|was be|were be|been be|being be|'s be|'re be|'m be
has have|had have|having have|'ve have
does do|did do|done do
left leave|went go|gone go|goes go|took take|taken take|made make|became become|came come
got get|gotten get|gave give|given give|held hold|led lead|ran run|said say|says say|told tell
thought think|brought bring|bought buy|caught catch|taught teach|fought fight|sought seek
found find|kept keep|met meet|sent send|spent spend|built build|lost lose|won win|began begin
begun begin|chose choose|chosen choose|knew know|known know|saw see|seen see|stood stand
understood understand|wrote write|written write|spoke speak|spoken speak|rose rise|risen rise
fell fall|fallen fall|grew grow|grown grow|drove drive|driven drive|flew fly|flown fly
broke break|broken break|ate eat|eaten eat|drank drink|drunk drink|sang sing|sung sing
swung swing|hung hang|rang ring|rung ring|sat sit|paid pay|laid lay|sold sell|heard hear
felt feel|dealt deal|meant mean|slept sleep|fled flee|forgot forget|forgotten forget
hid hide|hidden hide|struck strike|stole steal|stolen steal|shook shake|shaken shake
undertook undertake|undertaken undertake|oversaw oversee|overseen oversee|withdrew withdraw
withdrawn withdraw|born bear|bore bear|wore wear|worn wear|threw throw|thrown throw|drew draw
drawn draw|shot shoot|fed feed|woke wake|woken wake|froze freeze|frozen freeze|forgave forgive
forgiven forgive|dug dig|stuck stick|spun spin|bound bind|slid slide|rode ride|ridden ride
)IRR";

inline bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

inline bool has_vowel(std::string_view s) {
  for (char c : s)
    if (is_vowel(c) || c == 'y') return true;
  return false;
}

inline bool doubled_final(std::string_view s) {
  return s.size() >= 2 && s[s.size() - 1] == s[s.size() - 2] && !is_vowel(s.back());
}

inline std::string apply_rewrite(const std::string& stem, const std::string& rewrite) {
  if (rewrite == "=") return doubled_final(stem) ? stem.substr(0, stem.size() - 1) : stem;
  return stem + rewrite;
}

// Guess used when no candidate is a known base.
inline std::string guess(const SuffixRule& rule, const std::string& word, const std::string& stem) {
  const std::string& suffix = rule.suffix;
  if (suffix == "ies" || suffix == "ied") return stem + "y";
  if (suffix == "es") {
    for (std::string_view end : {"s", "x", "z", "ch", "sh", "o"})
      if (text::ends_with(stem, end)) return stem;
    return stem + "e";
  }
  if (suffix == "s") return stem;
  // -ed / -ing
  if (stem.size() <= 3) return word;
  if (doubled_final(stem) && !text::ends_with(stem, "ll") && !text::ends_with(stem, "ss") &&
      !text::ends_with(stem, "zz") && !text::ends_with(stem, "ff"))
    return stem.substr(0, stem.size() - 1);
  for (std::string_view end : {"c", "g", "v", "z", "u", "at", "bl", "dl", "tl", "pl", "gl", "kl", "iz"})
    if (text::ends_with(stem, end)) return stem + "e";
  return stem;
}

}  // namespace detail

inline LemmaRules LemmaRules::defaults() {
  LemmaRules r;
  r.auxiliaries = {"has", "have", "had", "is",   "are",  "was", "were", "be",
                   "been", "being", "will", "would", "do",  "does", "did",
                   // contracted and modal forms
                   "am", "'s", "'re", "'ve", "'d", "'ll", "'m", "shall", "should", "can", "could",
                   "may", "might", "must", "having", "ca", "wo"};
  for (const auto& line : text::lines(detail::kIrregulars)) {
    for (const auto& pair : text::split(line, '|')) {
      auto kv = text::split_ws(pair);
      if (kv.size() == 2) r.irregulars[kv[0]] = kv[1];
    }
  }
  r.suffix_rules = {
      {"ies", {"y"}},          {"ied", {"y"}},           {"es", {"e", ""}},
      {"s", {""}},             {"ed", {"", "e", "="}},   {"ing", {"", "e", "="}},
  };
  r.known_bases = default_lexicon().verb_bases();
  return r;
}

inline void LemmaRules::load_irregulars(const std::string& path) {
  auto content = text::read_file(path);
  auto ls = text::lines(content);
  for (std::size_t i = 0; i < ls.size(); ++i) {
    std::string_view line = text::strip_comment(ls[i]);
    if (text::trim(line).empty()) continue;
    auto cols = text::split(line, '\t');
    if (cols.size() != 2)
      throw Error(Errc::Syntax, "expected 'inflected<TAB>lemma'", SourceLocation{path, i + 1, 1});
    irregulars[text::lower(text::trim(cols[0]))] = text::lower(text::trim(cols[1]));
  }
}

inline const LemmaRules& default_rules() {
  static const LemmaRules rules = LemmaRules::defaults();
  return rules;
}

/// Lemma of a single verb token, lowercase.
inline std::string lemmatize_word(std::string_view word, const LemmaRules& rules = default_rules()) {
  const std::string w = text::lower(word);
  if (auto it = rules.irregulars.find(w); it != rules.irregulars.end()) return it->second;
  if (rules.known_bases.count(w)) return w;
  for (const auto& rule : rules.suffix_rules) {
    if (!text::ends_with(w, rule.suffix) || w.size() < rule.suffix.size() + 2) continue;
    const std::string stem = w.substr(0, w.size() - rule.suffix.size());
    if (rule.suffix == "s") {
      for (std::string_view keep : {"ss", "us", "is", "as", "os"})
        if (text::ends_with(w, keep)) return w;
    }
    if ((rule.suffix == "ed" || rule.suffix == "ing") && !detail::has_vowel(stem)) return w;
    for (const auto& rw : rule.rewrites) {
      std::string candidate = detail::apply_rewrite(stem, rw);
      if (rules.known_bases.count(candidate)) return candidate;
    }
    if (rule.suffix == "ed" && text::ends_with(w, "eed")) return w;
    return detail::guess(rule, w, stem);
  }
  return w;
}

struct TaggedWord {
  std::string_view text;
  Tag tag;
};

/// Normalizes a tagged relation phrase: auxiliaries, adverbs and
/// adjectives are dropped, the head verb is lemmatized, everything else is
/// kept lowercase in order.
inline std::string lemmatize_verb_phrase(std::span<const TaggedWord> words,
                                         const LemmaRules& rules = default_rules()) {
  std::vector<std::pair<std::string, Tag>> kept;
  for (const auto& w : words) {
    std::string lw = text::lower(w.text);
    if (w.tag == Tag::Aux || w.tag == Tag::Adv || w.tag == Tag::Adj || w.tag == Tag::Punct) continue;
    if (rules.auxiliaries.count(lw)) continue;
    kept.emplace_back(std::move(lw), w.tag);
  }
  if (kept.empty()) throw Error(Errc::EmptyAfterNormalization, "relation phrase has no content word");
  std::size_t head = 0;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (kept[i].second == Tag::Verb) {
      head = i;
      break;
    }
  }
  kept[head].first = lemmatize_word(kept[head].first, rules);
  std::string out;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (i) out += ' ';
    out += kept[i].first;
  }
  return out;
}

/// Untagged variant: tags come from a context-free lexicon lookup; unknown
/// words ending in "-ly" are adverbs, other unknown words count as verbs.
inline std::string lemmatize_verb_phrase(std::string_view phrase,
                                         const LemmaRules& rules = default_rules(),
                                         const Lexicon& lexicon = default_lexicon()) {
  auto words = text::split_ws(phrase);
  std::vector<TaggedWord> tagged;
  for (const auto& w : words) {
    std::string lw = text::lower(w);
    Tag t = Tag::Verb;
    if (rules.auxiliaries.count(lw)) {
      t = Tag::Aux;
    } else if (auto lt = lexicon.lookup(lw)) {
      t = *lt;
      if (t != Tag::Adv && t != Tag::Adj && t != Tag::Adp) t = Tag::Verb;
      // Words listed under two tags (e.g. "present") stay content words when
      // they are also verb bases.
      if ((t == Tag::Adj || t == Tag::Adv) && rules.known_bases.count(lw)) t = Tag::Verb;
    } else if (lw.size() > 3 && text::ends_with(lw, "ly")) {
      t = Tag::Adv;
    }
    tagged.push_back({w, t});
  }
  return lemmatize_verb_phrase(std::span<const TaggedWord>(tagged), rules);
}

/// Irregular targets that do not lemmatize to themselves.
inline std::vector<std::string> lemma_fixpoint_check(const LemmaRules& rules) {
  std::vector<std::string> violations;
  for (const auto& [inflected, target] : rules.irregulars) {
    std::string again = lemmatize_word(target, rules);
    if (again != target)
      violations.push_back(inflected + " -> " + target + " (lemmatizes to " + again + ")");
  }
  return violations;
}

}  // namespace evex::lemma

#endif  // EVEX_LEMMA_HPP_
