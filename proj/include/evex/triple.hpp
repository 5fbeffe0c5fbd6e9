#ifndef EVEX_TRIPLE_HPP_
#define EVEX_TRIPLE_HPP_

// Relation triples and their `;`-delimited text form:
//
//   0.93: (Hang Zhihua; resigned as; non-executive directors)[attrib=the Bank said]
//
// The confidence prefix is optional (defaults to 1) and the bracketed
// suffix carries an attribution (`attrib=`) or condition (`enabler=`).

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "evex/error.hpp"
#include "evex/text.hpp"
#include "evex/tokenize.hpp"

namespace evex::oie {

enum class ContextKind { Attribution, Condition };

struct TripleContext {
  ContextKind kind = ContextKind::Attribution;
  std::string text;

  bool operator==(const TripleContext&) const = default;
};

/// Half-open token index range into the sentence's token list.
struct TokenSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const TokenSpan&) const = default;
};

struct TripleExtraction {
  std::string arg1;
  std::string rel;
  std::string arg2;
  std::optional<TripleContext> context;
  double confidence = 1.0;

  // Set by the native extractor only.
  std::optional<TokenSpan> arg1_span;
  std::optional<TokenSpan> rel_span;
  std::optional<TokenSpan> arg2_span;

  std::size_t sentence = 0;  // sentence index within its document

  bool operator==(const TripleExtraction&) const = default;
};

/// Shortest decimal text that parses back to the same double.
inline std::string format_confidence(double d) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, d);
  return std::string(buf, res.ptr);
}

inline std::string format_triple(const TripleExtraction& t) {
  std::string out = format_confidence(t.confidence) + ": (" + t.arg1 + "; " + t.rel + "; " + t.arg2 + ")";
  if (t.context) {
    out += t.context->kind == ContextKind::Attribution ? "[attrib=" : "[enabler=";
    out += t.context->text + "]";
  }
  return out;
}

namespace detail {

[[noreturn]] inline void malformed(std::string_view line, const std::string& why) {
  throw Error(Errc::MalformedTriple, why + " in '" + std::string(line) + "'");
}

struct RawTriple {
  double confidence = 1.0;
  std::vector<std::string> parts;  // top-level ';' fields
  std::optional<TripleContext> context;
};

// Splits `d: ( ... )[ctx]` into its pieces; `;` inside [...] is not a
// top-level delimiter.
inline RawTriple split_raw(std::string_view line) {
  RawTriple raw;
  std::string_view s = text::trim(line);
  if (!s.empty() && s.back() == '.') s = text::trim(s.substr(0, s.size() - 1));
  std::size_t open = s.find('(');
  if (open == std::string_view::npos) malformed(line, "missing '('");
  std::string_view prefix = text::trim(s.substr(0, open));
  if (!prefix.empty()) {
    if (prefix.back() != ':') malformed(line, "expected 'd:' before '('");
    prefix = text::trim(prefix.substr(0, prefix.size() - 1));
    double d = 0;
    auto res = std::from_chars(prefix.data(), prefix.data() + prefix.size(), d);
    if (res.ec != std::errc() || res.ptr != prefix.data() + prefix.size())
      malformed(line, "bad confidence '" + std::string(prefix) + "'");
    if (!(d >= 0.0 && d <= 1.0)) malformed(line, "confidence outside [0, 1]");
    raw.confidence = d;
  }
  std::size_t depth = 0, close = std::string_view::npos;
  std::size_t field_start = open + 1;
  for (std::size_t i = open + 1; i < s.size(); ++i) {
    char c = s[i];
    if (c == '[') ++depth;
    if (c == ']' && depth > 0) --depth;
    if (depth == 0 && c == ';') {
      raw.parts.push_back(text::squeeze(s.substr(field_start, i - field_start)));
      field_start = i + 1;
    }
    if (depth == 0 && c == ')') {
      close = i;
      break;
    }
  }
  if (close == std::string_view::npos) malformed(line, "missing ')'");
  raw.parts.push_back(text::squeeze(s.substr(field_start, close - field_start)));

  std::string_view rest = text::trim(s.substr(close + 1));
  if (!rest.empty()) {
    if (rest.front() != '[' || rest.back() != ']') malformed(line, "unexpected text after ')'");
    std::string_view inner = rest.substr(1, rest.size() - 2);
    std::size_t eq = inner.find('=');
    if (eq == std::string_view::npos) malformed(line, "context needs 'attrib=' or 'enabler='");
    std::string key = text::lower(text::trim(inner.substr(0, eq)));
    TripleContext ctx;
    if (key == "attrib" || key == "attribution") {
      ctx.kind = ContextKind::Attribution;
    } else if (key == "enabler" || key == "condition") {
      ctx.kind = ContextKind::Condition;
    } else {
      malformed(line, "unknown context kind '" + key + "'");
    }
    ctx.text = text::squeeze(inner.substr(eq + 1));
    if (ctx.text.empty()) malformed(line, "empty context");
    raw.context = std::move(ctx);
  }
  return raw;
}

}  // namespace detail

/// Parses one binary triple. Throws MalformedTriple unless there are
/// exactly two top-level ';' delimiters.
inline TripleExtraction parse_triple(std::string_view line) {
  auto raw = detail::split_raw(line);
  if (raw.parts.size() != 3)
    detail::malformed(line, "expected 2 ';' delimiters, found " + std::to_string(raw.parts.size() - 1));
  TripleExtraction t;
  t.arg1 = raw.parts[0];
  t.rel = raw.parts[1];
  t.arg2 = raw.parts[2];
  if (t.arg1.empty() || t.rel.empty() || t.arg2.empty()) detail::malformed(line, "empty field");
  t.confidence = raw.confidence;
  t.context = raw.context;
  return t;
}

/// Like parse_triple, but also accepts an N-ary extraction
/// `(arg1; rel; [p1 x; p2 y])`, which becomes one binary triple per bracket
/// entry with the entry's leading preposition moved into the relation.
inline std::vector<TripleExtraction> parse_triple_line(std::string_view line,
                                                       const Lexicon& lex = default_lexicon()) {
  auto raw = detail::split_raw(line);
  if (raw.parts.size() == 3 && raw.parts[2].size() >= 2 && raw.parts[2].front() == '[' &&
      raw.parts[2].back() == ']') {
    std::vector<TripleExtraction> out;
    for (const auto& piece : text::split(std::string_view(raw.parts[2]).substr(1, raw.parts[2].size() - 2), ';')) {
      auto words = text::split_ws(piece);
      if (words.empty()) detail::malformed(line, "empty N-ary argument");
      TripleExtraction t;
      t.arg1 = raw.parts[0];
      t.rel = raw.parts[1];
      std::size_t first = 0;
      if (words.size() > 1 && lex.lookup(words[0]) == Tag::Adp) {
        t.rel += " " + words[0];
        first = 1;
      }
      t.arg2 = text::join(std::vector<std::string>(words.begin() + static_cast<long>(first), words.end()), " ");
      t.confidence = raw.confidence;
      t.context = raw.context;
      if (t.arg1.empty() || t.rel.empty()) detail::malformed(line, "empty field");
      out.push_back(std::move(t));
    }
    return out;
  }
  return {parse_triple(line)};
}

/// One document's worth of ingested triples. Blank lines separate
/// sentences; '#' lines are comments.
inline std::vector<TripleExtraction> parse_triple_file(std::string_view content, const std::string& source = "") {
  std::vector<TripleExtraction> out;
  std::size_t sentence = 0;
  bool pending = false;
  auto ls = text::lines(content);
  for (std::size_t i = 0; i < ls.size(); ++i) {
    std::string_view line = text::trim(ls[i]);
    if (line.empty()) {
      if (pending) ++sentence;
      pending = false;
      continue;
    }
    if (line.front() == '#') continue;
    try {
      for (auto& t : parse_triple_line(line)) {
        t.sentence = sentence;
        out.push_back(std::move(t));
      }
    } catch (const Error& e) {
      std::string msg = e.what();
      std::string prefix = std::string(errc_name(e.code())) + ": ";
      if (text::starts_with(msg, prefix)) msg.erase(0, prefix.size());
      throw Error(e.code(), msg, SourceLocation{source, i + 1, 1});
    }
    pending = true;
  }
  return out;
}

/// A triple's text re-tokenized as one sequence (arg1, rel, arg2) followed
/// by the context tokens, with the index range of each part.
struct SegmentedTriple {
  std::vector<Token> tokens;
  TokenSpan arg1, rel, arg2, context;
};

inline SegmentedTriple segment_triple(const TripleExtraction& t, const Lexicon& lex = default_lexicon(),
                                      const lemma::LemmaRules& rules = lemma::default_rules()) {
  SegmentedTriple seg;
  std::size_t base = 0;
  auto append = [&](const std::string& part) {
    TokenSpan span{seg.tokens.size(), seg.tokens.size()};
    for (auto tok : tokenize(part)) {
      tok.begin += base;
      tok.end += base;
      seg.tokens.push_back(std::move(tok));
    }
    span.end = seg.tokens.size();
    base += part.size() + 1;
    return span;
  };
  seg.arg1 = append(t.arg1);
  seg.rel = append(t.rel);
  seg.arg2 = append(t.arg2);
  pos_tag(std::span<Token>(seg.tokens.data(), seg.arg2.end), lex, rules);
  seg.context = append(t.context ? t.context->text : std::string());
  pos_tag(std::span<Token>(seg.tokens.data() + seg.context.begin, seg.context.end - seg.context.begin), lex,
          rules);
  return seg;
}

/// Index of the relation's head verb: first VERB in the relation, else
/// its last AUX (copula), else its first token.
inline std::size_t relation_head(const SegmentedTriple& seg) {
  for (std::size_t i = seg.rel.begin; i < seg.rel.end; ++i)
    if (seg.tokens[i].tag == Tag::Verb) return i;
  for (std::size_t i = seg.rel.end; i > seg.rel.begin; --i)
    if (seg.tokens[i - 1].tag == Tag::Aux) return i - 1;
  return seg.rel.begin;
}

}  // namespace evex::oie

#endif  // EVEX_TRIPLE_HPP_
