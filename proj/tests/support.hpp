#ifndef EVEX_TESTS_SUPPORT_HPP_
#define EVEX_TESTS_SUPPORT_HPP_

// Shared fixtures, generators and the brute-force inference oracle.

#include <algorithm>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "evex/evex.hpp"

namespace evex::fixture {

inline std::string data_path(const std::string& rel) { return std::string(EVEX_DATA_DIR) + "/" + rel; }

inline std::shared_ptr<const ontology::OntologySchema> bundled_schema() {
  static const auto schema =
      std::make_shared<const ontology::OntologySchema>(ontology::load_schema(data_path("management_change.schema")));
  return schema;
}

inline const std::vector<rules::Rule>& bundled_rules() {
  static const auto rules = rules::load_rules(data_path("management_change.rules"));
  return rules;
}

inline const ner::Gazetteer& bundled_gazetteer() {
  static const auto g = ner::load_gazetteers(data_path("gazetteers"));
  return g;
}

using Facts = std::set<std::pair<std::string, std::string>>;  // (instance id, role)

inline Facts facts_of(const ontology::InstanceStore& store) {
  Facts out;
  for (const auto& inst : store.instances())
    for (const auto& r : inst.roles) out.insert({inst.id, r});
  return out;
}

/// Naive fixpoint: every rule against every total assignment of its
/// variables to individuals, repeated until nothing changes.
inline Facts oracle_fixpoint(const ontology::InstanceStore& store, const std::vector<rules::Rule>& unresolved) {
  const auto rs = rules::resolve(store.schema(), unresolved);
  const auto& insts = store.instances();
  const std::size_t n = insts.size();
  std::set<std::pair<std::size_t, std::string>> facts;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& r : insts[i].roles) facts.insert({i, r});
  std::set<std::tuple<std::size_t, std::string, std::size_t>> links;
  for (const auto& a : store.assertions()) {
    std::size_t s = 0, o = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (insts[i].id == a.subject) s = i;
      if (insts[i].id == a.object) o = i;
    }
    links.insert({s, a.relation, o});
  }
  // Individuals a term may denote under an assignment.
  auto denote = [&](const rules::Term& t, const std::vector<std::size_t>& asg) {
    std::vector<std::size_t> out;
    if (t.variable) {
      out.push_back(asg[t.slot]);
    } else {
      for (std::size_t i = 0; i < n; ++i)
        if (insts[i].surface == t.name) out.push_back(i);
    }
    return out;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& rule : rs) {
      const std::size_t k = rule.variables.size();
      if (n == 0 && k > 0) continue;
      std::size_t total = 1;
      for (std::size_t v = 0; v < k; ++v) total *= n;
      std::vector<std::size_t> asg(k, 0);
      for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (std::size_t v = 0; v < k; ++v) {
          asg[v] = c % n;
          c /= n;
        }
        bool holds = true;
        for (const auto& a : rule.body) {
          bool any = false;
          if (a.kind == rules::AtomKind::Relation) {
            for (auto s : denote(a.args[0], asg))
              for (auto o : denote(a.args[1], asg))
                if (links.count({s, a.predicate, o})) any = true;
          } else {
            for (auto i : denote(a.args[0], asg)) {
              if (a.kind == rules::AtomKind::Class && insts[i].class_name == a.predicate) any = true;
              if (a.kind == rules::AtomKind::Role && facts.count({i, a.predicate})) any = true;
            }
          }
          if (!any) {
            holds = false;
            break;
          }
        }
        if (!holds) continue;
        for (const auto& h : rule.head) {
          for (auto i : denote(h.args[0], asg)) {
            if (insts[i].class_name != *store.schema().parent_of(h.predicate)) continue;
            if (facts.insert({i, h.predicate}).second) changed = true;
          }
        }
      }
    }
  }
  Facts out;
  for (const auto& [i, r] : facts) out.insert({insts[i].id, r});
  return out;
}

/// Random stores and safe rules over a schema, from a fixed seed.
class Generator {
 public:
  explicit Generator(std::uint32_t seed, std::shared_ptr<const ontology::OntologySchema> schema = bundled_schema())
      : rng_(seed), schema_(std::move(schema)) {
    for (const auto& r : schema_->relations()) relations_.push_back(r);
    // A small relation pool keeps joins non-trivial.
    if (relations_.size() > 5) relations_.resize(5);
  }

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

  ontology::InstanceStore store(std::size_t max_instances = 5) {
    ontology::InstanceStore s(schema_);
    std::size_t n = 1 + below(max_instances);
    for (std::size_t i = 0; i < n; ++i) s.add_instance("e" + std::to_string(i), pick(schema_->classes()));
    std::size_t m = below(2 * n + 1);
    for (std::size_t k = 0; k < m; ++k)
      s.link_instances(s.instances()[below(n)].id, pick(relations_), s.instances()[below(n)].id);
    for (const auto& inst : std::vector<ontology::Instance>(s.instances())) {
      if (!coin(0.25)) continue;
      std::vector<std::string> fitting;
      for (const auto& r : schema_->roles())
        if (r.parent == inst.class_name) fitting.push_back(r.name);
      if (!fitting.empty()) s.assign_role(inst.id, pick(fitting));
    }
    return s;
  }

  std::string atom_text(const std::vector<std::string>& vars, bool allow_constant) {
    auto term = [&]() -> std::string {
      if (allow_constant && coin(0.1)) return "\"e" + std::to_string(below(5)) + "\"";
      return "?" + pick(vars);
    };
    switch (below(3)) {
      case 0: return pick(schema_->classes()) + "(" + term() + ")";
      case 1: return pick(schema_->roles()).name + "(" + term() + ")";
      default: return pick(relations_) + "(" + term() + ", " + term() + ")";
    }
  }

  std::vector<rules::Rule> rules(std::size_t max_rules = 4) {
    static const std::vector<std::string> kVars = {"x", "y", "z"};
    std::size_t count = 1 + below(max_rules);
    std::string text;
    for (std::size_t r = 0; r < count; ++r) {
      std::vector<std::string> body;
      std::size_t len = 1 + below(3);
      for (std::size_t k = 0; k < len; ++k) body.push_back(atom_text(kVars, true));
      std::string line = "rule g" + std::to_string(r) + ": ";
      for (std::size_t k = 0; k < body.size(); ++k) line += (k ? " ^ " : "") + body[k];
      // Head variables must be bound in the body.
      std::vector<std::string> bound;
      for (const auto& v : kVars)
        if (line.find("?" + v) != std::string::npos) bound.push_back(v);
      line += " -> ";
      std::size_t heads = 1 + below(2);
      for (std::size_t k = 0; k < heads; ++k) {
        std::string arg = bound.empty() ? "\"e0\"" : "?" + pick(bound);
        line += (k ? " ^ " : "") + pick(schema_->roles()).name + "(" + arg + ")";
      }
      text += line + "\n";
    }
    return rules::parse_rules(text);
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
  std::shared_ptr<const ontology::OntologySchema> schema_;
  std::vector<std::string> relations_;
};

/// Bundled text documents of the mini-corpus.
inline std::vector<std::string> corpus_files() {
  std::vector<std::string> out;
  for (int i = 1; i <= 5; ++i) out.push_back(data_path("corpus/news" + std::to_string(i) + ".txt"));
  return out;
}

}  // namespace evex::fixture

#endif  // EVEX_TESTS_SUPPORT_HPP_
