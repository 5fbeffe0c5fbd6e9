#ifndef EVEX_NER_HPP_
#define EVEX_NER_HPP_

// Typed entity mentions over tagged tokens: gazetteer lookup, date
// patterns, then capitalization shape.

#include <algorithm>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "evex/error.hpp"
#include "evex/lexicon.hpp"
#include "evex/text.hpp"
#include "evex/tokenize.hpp"
#include "evex/triple.hpp"

namespace evex::ner {

enum class EntityType { Person, Organization, Position, Date, Location };

inline const char* entity_type_name(EntityType t) {
  switch (t) {
    case EntityType::Person: return "PERSON";
    case EntityType::Organization: return "ORGANIZATION";
    case EntityType::Position: return "POSITION";
    case EntityType::Date: return "DATE";
    case EntityType::Location: return "LOCATION";
  }
  return "PERSON";
}

inline std::optional<EntityType> parse_entity_type(std::string_view s) {
  std::string u;
  for (char c : s) u += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (u == "PERSON") return EntityType::Person;
  if (u == "ORGANIZATION" || u == "ORGANISATION") return EntityType::Organization;
  if (u == "POSITION") return EntityType::Position;
  if (u == "DATE") return EntityType::Date;
  if (u == "LOCATION") return EntityType::Location;
  return std::nullopt;
}

/// Ontology class for an entity type; LOCATION has none.
inline std::optional<std::string> class_for(EntityType t) {
  switch (t) {
    case EntityType::Person: return "Person";
    case EntityType::Organization: return "Organization";
    case EntityType::Position: return "Position";
    case EntityType::Date: return "Date";
    case EntityType::Location: return std::nullopt;
  }
  return std::nullopt;
}

inline std::vector<EntityType> default_priority() {
  return {EntityType::Position, EntityType::Person, EntityType::Organization, EntityType::Location,
          EntityType::Date};
}

/// Parses "POSITION,PERSON,..." into a priority order; types not listed
/// keep their default relative order after the listed ones.
inline std::vector<EntityType> parse_priority(std::string_view list) {
  std::vector<EntityType> out;
  for (const auto& item : text::split(list, ',')) {
    auto t = parse_entity_type(text::trim(item));
    if (!t) throw Error(Errc::Config, "unknown entity type '" + std::string(text::trim(item)) + "'");
    if (std::find(out.begin(), out.end(), *t) == out.end()) out.push_back(*t);
  }
  for (auto t : default_priority())
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  return out;
}

enum class MentionSource { Gazetteer, DatePattern, ShapeHeuristic };

inline const char* mention_source_name(MentionSource s) {
  switch (s) {
    case MentionSource::Gazetteer: return "gazetteer";
    case MentionSource::DatePattern: return "date-pattern";
    case MentionSource::ShapeHeuristic: return "shape-heuristic";
  }
  return "gazetteer";
}

struct EntityMention {
  std::string surface;    // covered token texts joined by single spaces
  std::string canonical;  // stored gazetteer casing, else the surface
  EntityType type = EntityType::Person;
  oie::TokenSpan span;
  MentionSource source = MentionSource::Gazetteer;

  bool operator==(const EntityMention&) const = default;
};

/// Surface forms per entity type. Keys are lowercase token sequences joined
/// by single spaces; values keep the stored casing.
class Gazetteer {
 public:
  void add(EntityType type, std::string_view surface) {
    auto toks = oie::tokenize(surface);
    if (toks.empty()) return;
    std::vector<std::string> words;
    for (const auto& t : toks) words.push_back(t.text);
    std::string stored = text::join(words, " ");
    std::string key = text::lower(stored);
    entries_[key].emplace(type, stored);
    max_len_ = std::max(max_len_, words.size());
  }

  /// Entry types for a lowercase key, with their stored casing.
  const std::map<EntityType, std::string>* lookup(const std::string& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
  }

  std::size_t max_length() const noexcept { return max_len_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  std::vector<EntityType> priority = default_priority();

 private:
  std::map<std::string, std::map<EntityType, std::string>> entries_;
  std::size_t max_len_ = 0;
};

/// Reads `<type>.txt` files (person, organization, position, location,
/// date); other files are ignored. Files are read in name order.
inline Gazetteer load_gazetteers(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw Error(Errc::Io, "gazetteer directory '" + dir + "' not found");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir, ec))
    if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
  if (ec) throw Error(Errc::Io, "cannot list '" + dir + "': " + ec.message());
  std::sort(files.begin(), files.end());
  Gazetteer g;
  for (const auto& path : files) {
    auto type = parse_entity_type(path.stem().string());
    if (!type) continue;
    for (const auto& line : text::lines(text::read_file(path.string()))) {
      std::string_view entry = text::trim(line);
      if (entry.empty() || entry.front() == '#') continue;
      g.add(*type, entry);
    }
  }
  return g;
}

namespace detail {

inline bool is_year(std::string_view w) {
  if (w.size() != 4) return false;
  for (char c : w)
    if (!text::is_digit(c)) return false;
  int y = std::stoi(std::string(w));
  return y >= 1900 && y <= 2099;
}

inline bool is_day(std::string_view w) {
  if (w.empty() || w.size() > 2) return false;
  for (char c : w)
    if (!text::is_digit(c)) return false;
  int d = std::stoi(std::string(w));
  return d >= 1 && d <= 31;
}

inline bool is_corporate_suffix(std::string_view w) {
  static const std::set<std::string> kSuffixes = {"inc", "inc.", "ltd", "ltd.", "bank", "university",
                                                  "corp", "corp.", "plc", "llc", "co.", "group"};
  return kSuffixes.count(text::lower(w)) != 0;
}

// Length of a date starting at i, or 0.
inline std::size_t date_at(std::span<const oie::Token> tokens, std::size_t i, const std::vector<bool>& covered) {
  auto text_at = [&](std::size_t k) -> std::string_view {
    return k < tokens.size() && !covered[k] ? std::string_view(tokens[k].text) : std::string_view();
  };
  auto month = [&](std::size_t k) { return oie::detail::is_month(text::lower(text_at(k))); };
  std::string_view w = text_at(i);
  if (w.empty()) return 0;
  if (month(i)) {
    if (is_day(text_at(i + 1))) {
      if (text_at(i + 2) == "," && is_year(text_at(i + 3))) return 4;
      if (is_year(text_at(i + 2))) return 3;
      return 2;
    }
    if (is_year(text_at(i + 1))) return 2;
    return 0;
  }
  if (is_day(w) && month(i + 1) && is_year(text_at(i + 2))) return 3;
  if (is_year(w)) return 1;
  return 0;
}

inline std::string joined(std::span<const oie::Token> tokens, std::size_t b, std::size_t e) {
  std::string out;
  for (std::size_t i = b; i < e; ++i) {
    if (i > b) out += ' ';
    out += tokens[i].text;
  }
  return out;
}

}  // namespace detail

/// Mentions in token order. Passes: longest-match gazetteer (a trailing
/// plural "s" on the last word is tolerated), dates, capitalized runs.
/// Mentions never overlap.
inline std::vector<EntityMention> recognize(std::span<const oie::Token> tokens, const Gazetteer& g,
                                            const Lexicon& lex = default_lexicon()) {
  const std::size_t n = tokens.size();
  std::vector<bool> covered(n, false);
  std::vector<EntityMention> out;
  auto emit = [&](std::size_t b, std::size_t e, EntityType type, MentionSource src, std::string canonical) {
    for (std::size_t k = b; k < e; ++k) covered[k] = true;
    EntityMention m;
    m.surface = detail::joined(tokens, b, e);
    m.canonical = canonical.empty() ? m.surface : std::move(canonical);
    m.type = type;
    m.span = {b, e};
    m.source = src;
    out.push_back(std::move(m));
  };
  auto pick = [&](const std::map<EntityType, std::string>& hits) {
    for (auto t : g.priority)
      if (auto it = hits.find(t); it != hits.end()) return *it;
    return *hits.begin();
  };

  for (std::size_t i = 0; i < n;) {
    bool hit = false;
    for (std::size_t len = std::min(g.max_length(), n - i); len >= 1 && !hit; --len) {
      std::string key = text::lower(detail::joined(tokens, i, i + len));
      const auto* hits = g.lookup(key);
      if (!hits && key.size() > 1 && key.back() == 's') hits = g.lookup(key.substr(0, key.size() - 1));
      if (hits) {
        auto [type, stored] = pick(*hits);
        emit(i, i + len, type, MentionSource::Gazetteer, stored);
        i += len;
        hit = true;
      }
    }
    if (!hit) ++i;
  }

  for (std::size_t i = 0; i < n;) {
    std::size_t len = covered[i] ? 0 : detail::date_at(tokens, i, covered);
    if (len) {
      emit(i, i + len, EntityType::Date, MentionSource::DatePattern, "");
      i += len;
    } else {
      ++i;
    }
  }

  auto eligible = [&](std::size_t k) {
    const auto& t = tokens[k];
    if (covered[k] || !text::is_capitalized(t.text) || is_closed_class(t.tag)) return false;
    if (t.tag == Tag::Propn || !lex.contains(t.text) || detail::is_corporate_suffix(t.text)) return true;
    // Sentence-initial dictionary word ("Hang") followed by a name.
    return k == 0 && k + 1 < n && !covered[k + 1] && text::is_capitalized(tokens[k + 1].text) &&
           !lex.contains(tokens[k + 1].text) && !text::is_all_caps(tokens[k + 1].text);
  };
  for (std::size_t i = 0; i < n;) {
    if (!eligible(i)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && eligible(j)) ++j;
    bool org = false;
    for (std::size_t k = i; k < j; ++k)
      if (text::is_all_caps(tokens[k].text) || detail::is_corporate_suffix(tokens[k].text)) org = true;
    if (org) {
      emit(i, j, EntityType::Organization, MentionSource::ShapeHeuristic, "");
    } else if (j - i <= 2) {
      emit(i, j, EntityType::Person, MentionSource::ShapeHeuristic, "");
    }
    i = j;
  }

  std::sort(out.begin(), out.end(),
            [](const EntityMention& a, const EntityMention& b) { return a.span.begin < b.span.begin; });
  return out;
}

}  // namespace evex::ner

#endif  // EVEX_NER_HPP_
