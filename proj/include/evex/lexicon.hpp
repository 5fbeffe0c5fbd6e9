#ifndef EVEX_LEXICON_HPP_
#define EVEX_LEXICON_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "evex/error.hpp"
#include "evex/lexicon_data.hpp"
#include "evex/text.hpp"

namespace evex {

/// Coarse universal-style part-of-speech tags. ADP covers prepositions and
/// particles; OTHER covers conjunctions and anything unclassified.
enum class Tag { Noun, Propn, Verb, Aux, Adp, Det, Adj, Adv, Num, Punct, Pron, Other };

inline const char* tag_name(Tag t) {
  switch (t) {
    case Tag::Noun: return "NOUN";
    case Tag::Propn: return "PROPN";
    case Tag::Verb: return "VERB";
    case Tag::Aux: return "AUX";
    case Tag::Adp: return "ADP";
    case Tag::Det: return "DET";
    case Tag::Adj: return "ADJ";
    case Tag::Adv: return "ADV";
    case Tag::Num: return "NUM";
    case Tag::Punct: return "PUNCT";
    case Tag::Pron: return "PRON";
    case Tag::Other: return "OTHER";
  }
  return "OTHER";
}

inline std::optional<Tag> parse_tag(std::string_view s) {
  static const std::unordered_map<std::string_view, Tag> kTags = {
      {"NOUN", Tag::Noun}, {"PROPN", Tag::Propn}, {"VERB", Tag::Verb}, {"AUX", Tag::Aux},
      {"ADP", Tag::Adp},   {"DET", Tag::Det},     {"ADJ", Tag::Adj},   {"ADV", Tag::Adv},
      {"NUM", Tag::Num},   {"PUNCT", Tag::Punct}, {"PRON", Tag::Pron}, {"OTHER", Tag::Other}};
  auto it = kTags.find(s);
  if (it == kTags.end()) return std::nullopt;
  return it->second;
}

inline bool is_closed_class(Tag t) {
  return t == Tag::Det || t == Tag::Adp || t == Tag::Aux || t == Tag::Pron || t == Tag::Other ||
         t == Tag::Num || t == Tag::Punct;
}

/// Word -> tag table plus the set of known verb base forms.
class Lexicon {
 public:
  static Lexicon parse(std::string_view content) {
    Lexicon lex;
    for (const auto& line : text::lines(content)) {
      auto words = text::split_ws(text::strip_comment(line));
      if (words.empty()) continue;
      auto tag = parse_tag(words[0]);
      if (!tag) throw Error(Errc::Syntax, "unknown tag '" + words[0] + "' in lexicon");
      for (std::size_t i = 1; i < words.size(); ++i) {
        std::string w = text::lower(words[i]);
        lex.tags_.emplace(w, *tag);
        if (*tag == Tag::Verb) lex.verbs_.insert(w);
      }
    }
    return lex;
  }

  std::optional<Tag> lookup(std::string_view word) const {
    auto it = tags_.find(text::lower(word));
    if (it == tags_.end()) return std::nullopt;
    return it->second;
  }

  bool contains(std::string_view word) const { return tags_.count(text::lower(word)) != 0; }
  bool is_verb_base(std::string_view word) const { return verbs_.count(std::string(word)) != 0; }
  const std::unordered_set<std::string>& verb_bases() const noexcept { return verbs_; }
  std::size_t size() const noexcept { return tags_.size(); }

 private:
  std::unordered_map<std::string, Tag> tags_;
  std::unordered_set<std::string> verbs_;
};

inline const Lexicon& default_lexicon() {
  static const Lexicon lex = Lexicon::parse(data::kLexicon);
  return lex;
}

}  // namespace evex

#endif  // EVEX_LEXICON_HPP_
