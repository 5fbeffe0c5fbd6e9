#ifndef EVEX_RULES_HPP_
#define EVEX_RULES_HPP_

// Horn rules in a SWRL-like surface syntax and a forward-chaining engine
// that assigns event roles to the individuals of an InstanceStore.
//
//   rule coming: Person(?x) ^ appoint(?o, ?x) ^ Organization(?o) -> IN_ORG(?o) ^ Coming_person(?x)
//
// Head atoms are role memberships only. A head atom fires only on an
// individual whose class is the role's parent class.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "evex/error.hpp"
#include "evex/ontology.hpp"
#include "evex/text.hpp"

namespace evex::rules {

enum class AtomKind { Unresolved, Class, Role, Relation };

inline const char* atom_kind_name(AtomKind k) {
  switch (k) {
    case AtomKind::Unresolved: return "unresolved";
    case AtomKind::Class: return "class";
    case AtomKind::Role: return "role";
    case AtomKind::Relation: return "relation";
  }
  return "?";
}

struct Term {
  bool variable = true;
  std::string name;      // variable name without '?', or the constant surface
  std::size_t slot = 0;  // variable index within the rule

  bool operator==(const Term&) const = default;
};

struct Atom {
  std::string predicate;
  AtomKind kind = AtomKind::Unresolved;
  std::vector<Term> args;

  bool operator==(const Atom&) const = default;
};

struct Rule {
  std::string id;
  std::vector<Atom> body;
  std::vector<Atom> head;
  std::vector<std::string> variables;  // slot -> name, in order of first use

  bool operator==(const Rule&) const = default;
};

namespace detail {

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t lineno, const std::string& source)
      : s_(line), lineno_(lineno), source_(source) {}

  Rule parse(std::size_t ordinal) {
    Rule rule;
    skip_ws();
    // Optional "rule <id>:" prefix.
    std::size_t save = pos_;
    if (match_word("rule")) {
      skip_ws();
      std::string id = identifier();
      if (id.empty()) fail("expected rule id after 'rule'");
      skip_ws();
      if (!consume(":")) fail("expected ':' after rule id");
      rule.id = id;
    } else {
      pos_ = save;
      rule.id = "r" + std::to_string(ordinal);
    }

    skip_ws();
    if (!at_arrow()) {
      rule.body.push_back(atom(rule));
      skip_ws();
      while (at_conj()) {
        consume_conj();
        skip_ws();
        rule.body.push_back(atom(rule));
        skip_ws();
      }
    }
    if (!at_arrow()) fail("expected '->'");
    consume_arrow();
    skip_ws();
    std::size_t body_vars = rule.variables.size();
    std::size_t head_col = pos_ + 1;
    rule.head.push_back(atom(rule));
    skip_ws();
    while (at_conj()) {
      consume_conj();
      skip_ws();
      rule.head.push_back(atom(rule));
      skip_ws();
    }
    if (pos_ != s_.size()) fail("unexpected trailing text");

    if (rule.variables.size() > body_vars) {
      throw Error(Errc::UnsafeRule,
                  "rule '" + rule.id + "': head variable ?" + rule.variables[body_vars] +
                      " is not bound in the body",
                  SourceLocation{source_, lineno_, head_col});
    }
    for (const auto& a : rule.head) {
      if (a.args.size() != 1)
        throw Error(Errc::HeadNotRole,
                    "rule '" + rule.id + "': head atom " + a.predicate + " must take one argument",
                    SourceLocation{source_, lineno_, head_col});
    }
    return rule;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::Syntax, msg, SourceLocation{source_, lineno_, pos_ + 1});
  }

  void skip_ws() {
    while (pos_ < s_.size() && text::is_space(s_[pos_])) ++pos_;
  }

  bool consume(std::string_view tok) {
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  bool match_word(std::string_view w) {
    if (s_.substr(pos_, w.size()) != w) return false;
    std::size_t end = pos_ + w.size();
    if (end < s_.size() && !text::is_space(s_[end])) return false;
    pos_ = end;
    return true;
  }

  static constexpr std::string_view kWedge = "\xE2\x88\xA7";  // U+2227
  static constexpr std::string_view kArrow = "\xE2\x86\x92";  // U+2192

  bool at_conj() const { return s_.substr(pos_, 1) == "^" || s_.substr(pos_, kWedge.size()) == kWedge; }
  void consume_conj() {
    if (!consume("^")) consume(kWedge);
  }
  bool at_arrow() const { return s_.substr(pos_, 2) == "->" || s_.substr(pos_, kArrow.size()) == kArrow; }
  void consume_arrow() {
    if (!consume("->")) consume(kArrow);
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (text::is_word_byte(s_[pos_]) || s_[pos_] == '_' || s_[pos_] == '-') &&
           s_.substr(pos_, kWedge.size()) != kWedge && s_.substr(pos_, kArrow.size()) != kArrow &&
           !(s_[pos_] == '-' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '>'))
      ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  Term term(Rule& rule) {
    skip_ws();
    Term t;
    if (consume("?")) {
      t.variable = true;
      t.name = identifier();
      if (t.name.empty()) fail("expected variable name after '?'");
      auto it = std::find(rule.variables.begin(), rule.variables.end(), t.name);
      t.slot = static_cast<std::size_t>(it - rule.variables.begin());
      if (it == rule.variables.end()) rule.variables.push_back(t.name);
    } else if (consume("\"")) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && s_[pos_] != '"') ++pos_;
      if (pos_ == s_.size()) fail("unterminated string constant");
      t.variable = false;
      t.name = std::string(s_.substr(start, pos_ - start));
      ++pos_;
    } else {
      fail("expected '?variable' or \"constant\"");
    }
    skip_ws();
    return t;
  }

  Atom atom(Rule& rule) {
    Atom a;
    a.predicate = identifier();
    if (a.predicate.empty()) fail("expected predicate name");
    skip_ws();
    if (!consume("(")) fail("expected '(' after " + a.predicate);
    a.args.push_back(term(rule));
    while (consume(",")) a.args.push_back(term(rule));
    if (!consume(")")) fail("expected ')'");
    if (a.args.size() > 2) fail("atom " + a.predicate + " takes at most two arguments");
    if (a.args.size() == 2) a.kind = AtomKind::Relation;
    return a;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t lineno_;
  const std::string& source_;
};

}  // namespace detail

/// One rule per non-blank line; '#' starts a comment. Rules without an
/// explicit "rule <id>:" prefix are named r1, r2, ... by position.
inline std::vector<Rule> parse_rules(std::string_view content, const std::string& source = "") {
  std::vector<Rule> out;
  std::set<std::string> ids;
  auto lines = text::lines(content);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = text::strip_comment(lines[i]);
    if (text::trim(line).empty()) continue;
    Rule r = detail::LineParser(line, i + 1, source).parse(out.size() + 1);
    if (!ids.insert(r.id).second)
      throw Error(Errc::DuplicateName, "rule id '" + r.id + "'", SourceLocation{source, i + 1, 1});
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<Rule> load_rules(const std::string& path) {
  return parse_rules(text::read_file(path), path);
}

inline std::string format_atom(const Atom& a) {
  std::string out = a.predicate + "(";
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) out += ", ";
    out += a.args[i].variable ? "?" + a.args[i].name : "\"" + a.args[i].name + "\"";
  }
  return out + ")";
}

inline std::string format_rule(const Rule& r) {
  std::string out = "rule " + r.id + ": ";
  for (std::size_t i = 0; i < r.body.size(); ++i) out += (i ? " ^ " : "") + format_atom(r.body[i]);
  out += r.body.empty() ? "-> " : " -> ";
  for (std::size_t i = 0; i < r.head.size(); ++i) out += (i ? " ^ " : "") + format_atom(r.head[i]);
  return out;
}

/// Resolves every predicate against the schema (role, class, relation
/// namespaces) and checks arity. Throws UnknownPredicate,
/// AmbiguousPredicate, ArityMismatch or HeadNotRole.
inline std::vector<Rule> resolve(const ontology::OntologySchema& schema, std::vector<Rule> rules) {
  auto resolve_atom = [&](const Rule& r, Atom& a, bool in_head) {
    std::vector<AtomKind> hits;
    if (schema.has_role(a.predicate)) hits.push_back(AtomKind::Role);
    if (schema.has_class(a.predicate)) hits.push_back(AtomKind::Class);
    if (schema.has_relation(a.predicate)) hits.push_back(AtomKind::Relation);
    const std::string where = "rule '" + r.id + "': ";
    if (hits.empty()) throw Error(Errc::UnknownPredicate, where + "'" + a.predicate + "'");
    if (hits.size() > 1)
      throw Error(Errc::AmbiguousPredicate,
                  where + "'" + a.predicate + "' names both a " + atom_kind_name(hits[0]) + " and a " +
                      atom_kind_name(hits[1]));
    AtomKind kind = hits.front();
    std::size_t want = kind == AtomKind::Relation ? 2 : 1;
    if (a.args.size() != want)
      throw Error(Errc::ArityMismatch, where + a.predicate + " is a " + atom_kind_name(kind) +
                                           " and takes " + std::to_string(want) + " argument(s)");
    if (in_head && kind != AtomKind::Role)
      throw Error(Errc::HeadNotRole, where + "head atom '" + a.predicate + "' is not a role");
    a.kind = kind;
    if (kind == AtomKind::Relation) a.predicate = text::lower(a.predicate);
  };
  for (auto& r : rules) {
    for (auto& a : r.body) resolve_atom(r, a, false);
    for (auto& a : r.head) resolve_atom(r, a, true);
  }
  return rules;
}

using Chain = std::vector<std::string>;

struct InferenceResult {
  ontology::InstanceStore store;
  /// (instance id, role) -> derivation chains (rule ids, premises first).
  std::map<std::pair<std::string, std::string>, std::vector<Chain>> derivations;
  std::size_t passes = 0;
  std::size_t derived = 0;
};

namespace detail {

using RoleFact = std::pair<std::size_t, std::string>;  // (instance index, role)

struct Matcher {
  const ontology::InstanceStore& store;
  const std::set<RoleFact>& roles;
  std::vector<std::size_t> subjects, objects;  // assertion endpoints as indices
  std::map<std::string, std::size_t> index_of;

  Matcher(const ontology::InstanceStore& s, const std::set<RoleFact>& r) : store(s), roles(r) {
    for (std::size_t i = 0; i < s.instances().size(); ++i) index_of[s.instances()[i].id] = i;
    for (const auto& a : s.assertions()) {
      subjects.push_back(index_of.at(a.subject));
      objects.push_back(index_of.at(a.object));
    }
  }

  // Candidate individuals for a term under the current binding.
  template <typename F>
  void candidates(const Term& t, const std::vector<std::optional<std::size_t>>& binding, F&& f) const {
    if (t.variable && binding[t.slot]) {
      f(*binding[t.slot]);
      return;
    }
    for (std::size_t i = 0; i < store.instances().size(); ++i) {
      if (!t.variable && store.instances()[i].surface != t.name) continue;
      f(i);
    }
  }

  template <typename F>
  void match(const Rule& rule, std::size_t k, std::vector<std::optional<std::size_t>>& binding,
             F&& emit) const {
    if (k == rule.body.size()) {
      emit(binding);
      return;
    }
    const Atom& a = rule.body[k];
    auto bind = [&](const Term& t, std::size_t value, auto&& next) {
      if (!t.variable || binding[t.slot]) {
        next();
        return;
      }
      binding[t.slot] = value;
      next();
      binding[t.slot].reset();
    };
    switch (a.kind) {
      case AtomKind::Class:
        candidates(a.args[0], binding, [&](std::size_t i) {
          if (store.instances()[i].class_name != a.predicate) return;
          bind(a.args[0], i, [&] { match(rule, k + 1, binding, emit); });
        });
        break;
      case AtomKind::Role:
        candidates(a.args[0], binding, [&](std::size_t i) {
          if (!roles.count({i, a.predicate})) return;
          bind(a.args[0], i, [&] { match(rule, k + 1, binding, emit); });
        });
        break;
      case AtomKind::Relation: {
        const auto& asserts = store.assertions();
        for (std::size_t n = 0; n < asserts.size(); ++n) {
          if (asserts[n].relation != a.predicate) continue;
          std::size_t s = subjects[n], o = objects[n];
          if (!fits(a.args[0], s, binding)) continue;
          // The same variable may appear in both positions.
          bind(a.args[0], s, [&] {
            if (!fits(a.args[1], o, binding)) return;
            bind(a.args[1], o, [&] { match(rule, k + 1, binding, emit); });
          });
        }
        break;
      }
      case AtomKind::Unresolved:
        throw std::logic_error("unresolved atom in inference");
    }
  }

  bool fits(const Term& t, std::size_t i, const std::vector<std::optional<std::size_t>>& binding) const {
    if (!t.variable) return store.instances()[i].surface == t.name;
    return !binding[t.slot] || *binding[t.slot] == i;
  }
};

}  // namespace detail

/// Forward chaining to the least fixpoint. Each pass evaluates all rules
/// against the facts known at the start of the pass, so the resulting fact
/// set does not depend on rule order. Relation assertions are never added.
inline InferenceResult infer(const ontology::InstanceStore& input, const std::vector<Rule>& unresolved) {
  const auto rules = resolve(input.schema(), unresolved);
  InferenceResult result{input, {}, 0, 0};
  ontology::InstanceStore& store = result.store;
  const auto& schema = store.schema();
  const auto& insts = input.instances();

  std::set<detail::RoleFact> facts;
  for (std::size_t i = 0; i < insts.size(); ++i)
    for (const auto& role : insts[i].roles) facts.insert({i, role});

  std::map<detail::RoleFact, Chain> primary;  // first chain of each derived fact
  auto chain_for = [&](const Rule& rule, const std::vector<std::optional<std::size_t>>& binding) {
    Chain chain;
    for (const auto& a : rule.body) {
      if (a.kind != AtomKind::Role) continue;
      std::size_t i = a.args[0].variable ? *binding[a.args[0].slot] : 0;
      if (!a.args[0].variable) {
        for (std::size_t n = 0; n < insts.size(); ++n)
          if (insts[n].surface == a.args[0].name && facts.count({n, a.predicate})) i = n;
      }
      auto it = primary.find({i, a.predicate});
      if (it == primary.end()) continue;
      for (const auto& id : it->second)
        if (std::find(chain.begin(), chain.end(), id) == chain.end()) chain.push_back(id);
    }
    chain.push_back(rule.id);
    return chain;
  };

  // Ground head atoms of one binding, honoring the parent-class guard.
  auto heads = [&](const Rule& rule, const std::vector<std::optional<std::size_t>>& binding,
                   auto&& f) {
    for (const auto& h : rule.head) {
      const std::string& parent = *schema.parent_of(h.predicate);
      auto visit = [&](std::size_t i) {
        if (insts[i].class_name == parent) f(detail::RoleFact{i, h.predicate});
      };
      if (h.args[0].variable) {
        visit(*binding[h.args[0].slot]);
      } else {
        for (std::size_t i = 0; i < insts.size(); ++i)
          if (insts[i].surface == h.args[0].name) visit(i);
      }
    }
  };

  const std::size_t bound = insts.size() * schema.roles().size() + 1;
  for (;;) {
    ++result.passes;
    if (result.passes > bound) throw std::logic_error("inference exceeded its pass bound");
    std::map<detail::RoleFact, Chain> fresh;
    detail::Matcher m(store, facts);
    for (const auto& rule : rules) {
      std::vector<std::optional<std::size_t>> binding(rule.variables.size());
      m.match(rule, 0, binding, [&](const auto& b) {
        heads(rule, b, [&](const detail::RoleFact& f) {
          if (!facts.count(f) && !fresh.count(f)) fresh.emplace(f, chain_for(rule, b));
        });
      });
    }
    if (fresh.empty()) break;
    for (auto& [f, chain] : fresh) {
      facts.insert(f);
      store.assign_role(insts[f.first].id, f.second);
      primary.emplace(f, std::move(chain));
      ++result.derived;
    }
  }

  // Record every rule that derives each inferred fact, for explain().
  detail::Matcher m(store, facts);
  for (const auto& rule : rules) {
    std::vector<std::optional<std::size_t>> binding(rule.variables.size());
    m.match(rule, 0, binding, [&](const auto& b) {
      heads(rule, b, [&](const detail::RoleFact& f) {
        if (!primary.count(f)) return;  // held before inference
        auto& chains = result.derivations[{insts[f.first].id, f.second}];
        Chain c = chain_for(rule, b);
        if (std::find(chains.begin(), chains.end(), c) == chains.end()) chains.push_back(std::move(c));
      });
    });
  }
  for (auto& [key, chains] : result.derivations) {
    const Chain& first = primary.at({std::stoul(key.first.substr(5)) - 1, key.second});
    auto it = std::find(chains.begin(), chains.end(), first);
    if (it != chains.end()) std::rotate(chains.begin(), it, it + 1);
  }
  return result;
}

inline const std::vector<Chain>& explain(const InferenceResult& r, std::string_view id, std::string_view role) {
  auto it = r.derivations.find({std::string(id), std::string(role)});
  if (it == r.derivations.end() || it->second.empty())
    throw Error(Errc::NotDerived, std::string(id) + " / " + std::string(role) + " was not inferred");
  return it->second;
}

}  // namespace evex::rules

#endif  // EVEX_RULES_HPP_
