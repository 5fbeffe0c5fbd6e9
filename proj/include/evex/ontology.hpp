#ifndef EVEX_ONTOLOGY_HPP_
#define EVEX_ONTOLOGY_HPP_

// Event schema (classes, role subclasses, relation vocabulary) and the
// per-document instance store that extraction populates.

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "evex/error.hpp"
#include "evex/text.hpp"

namespace evex::ontology {

struct RoleDecl {
  std::string name;
  std::string parent;

  bool operator==(const RoleDecl&) const = default;
};

namespace detail {

inline bool is_identifier(std::string_view s) {
  if (s.empty() || text::is_digit(s.front())) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return text::is_word_byte(c) || c == '_' || c == '-'; });
}

inline bool is_relation_lemma(std::string_view s) {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(),
                      [](char c) { return text::is_space(c) || text::is_upper(c); });
}

}  // namespace detail

class OntologySchema {
 public:
  OntologySchema() = default;

  const std::vector<std::string>& classes() const noexcept { return classes_; }
  const std::vector<RoleDecl>& roles() const noexcept { return roles_; }
  const std::vector<std::string>& relations() const noexcept { return relations_; }

  bool has_class(std::string_view name) const { return class_set_.count(std::string(name)) != 0; }
  bool has_role(std::string_view name) const { return role_parent_.count(std::string(name)) != 0; }

  /// Parent class of a role, or nullptr when the role is not declared.
  const std::string* parent_of(std::string_view role) const {
    auto it = role_parent_.find(std::string(role));
    return it == role_parent_.end() ? nullptr : &it->second;
  }

  /// Relation lookup lowercases the probe; stored lemmas are lowercase.
  bool has_relation(std::string_view probe) const {
    return relation_set_.count(text::lower(probe)) != 0;
  }

  bool empty() const noexcept { return classes_.empty() && roles_.empty() && relations_.empty(); }

  bool operator==(const OntologySchema& o) const {
    return classes_ == o.classes_ && roles_ == o.roles_ && relations_ == o.relations_;
  }

 private:
  friend OntologySchema build_schema(std::vector<std::string>, std::vector<RoleDecl>,
                                     std::vector<std::string>);

  std::vector<std::string> classes_;
  std::vector<RoleDecl> roles_;
  std::vector<std::string> relations_;
  std::set<std::string> class_set_;
  std::map<std::string, std::string> role_parent_;
  std::set<std::string> relation_set_;
};

/// Validates and assembles a schema. Input order is kept so serialization
/// is deterministic.
inline OntologySchema build_schema(std::vector<std::string> entities, std::vector<RoleDecl> roles,
                                   std::vector<std::string> relations) {
  OntologySchema s;
  for (auto& c : entities) {
    if (!detail::is_identifier(c)) throw Error(Errc::InvalidName, "bad class name '" + c + "'");
    if (!s.class_set_.insert(c).second) throw Error(Errc::DuplicateName, "class '" + c + "'");
    s.classes_.push_back(std::move(c));
  }
  for (auto& r : roles) {
    if (!detail::is_identifier(r.name))
      throw Error(Errc::InvalidName, "bad role name '" + r.name + "'");
    if (s.class_set_.count(r.name) || s.role_parent_.count(r.name))
      throw Error(Errc::DuplicateName, "role '" + r.name + "'");
    if (!s.class_set_.count(r.parent))
      throw Error(Errc::UnknownParentClass,
                  "role '" + r.name + "' references unknown class '" + r.parent + "'");
    s.role_parent_.emplace(r.name, r.parent);
    s.roles_.push_back(std::move(r));
  }
  for (auto& rel : relations) {
    if (!detail::is_relation_lemma(rel))
      throw Error(Errc::InvalidName,
                  "relation lemma '" + rel + "' must be non-empty lowercase without spaces");
    if (!s.relation_set_.insert(rel).second)
      throw Error(Errc::DuplicateName, "relation '" + rel + "'");
    s.relations_.push_back(std::move(rel));
  }
  return s;
}

/// Canonical schema file text: classes, then roles, then relations.
inline std::string format_schema(const OntologySchema& s) {
  std::string out;
  for (const auto& c : s.classes()) out += "class " + c + "\n";
  for (const auto& r : s.roles()) out += "role " + r.name + " of " + r.parent + "\n";
  for (const auto& r : s.relations()) out += "relation " + r + "\n";
  return out;
}

/// Parses the line-oriented schema format:
///   class <Name> | role <Name> of <Class> | relation <lemma>
/// Roles may reference classes declared later in the file.
inline OntologySchema parse_schema(std::string_view content, const std::string& source = "") {
  struct Located {
    std::string value;
    std::size_t line;
    std::size_t column;
  };
  std::vector<Located> classes;
  std::vector<std::pair<RoleDecl, Located>> roles;
  std::vector<Located> relations;

  auto lines = text::lines(content);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    std::string_view raw = text::strip_comment(lines[i]);
    auto words = text::split_ws(raw);
    if (words.empty()) continue;
    const std::size_t col = raw.find_first_not_of(" \t") + 1;
    auto fail = [&](Errc code, const std::string& msg) {
      throw Error(code, msg, SourceLocation{source, lineno, col});
    };
    const std::string& kw = words[0];
    if (kw == "class") {
      if (words.size() != 2) fail(Errc::Syntax, "expected 'class <Name>'");
      classes.push_back({words[1], lineno, col});
    } else if (kw == "role") {
      if (words.size() != 4 || words[2] != "of") fail(Errc::Syntax, "expected 'role <Name> of <Class>'");
      roles.push_back({RoleDecl{words[1], words[3]}, Located{words[1], lineno, col}});
    } else if (kw == "relation") {
      if (words.size() != 2) fail(Errc::Syntax, "expected 'relation <lemma>'");
      relations.push_back({words[1], lineno, col});
    } else {
      fail(Errc::Syntax, "unknown statement '" + kw + "'");
    }
  }

  // Re-run the builder's checks here so errors point at the offending line.
  std::set<std::string> class_names, role_names, relation_names;
  for (const auto& c : classes) {
    auto at = SourceLocation{source, c.line, c.column};
    if (!detail::is_identifier(c.value)) throw Error(Errc::InvalidName, "bad class name '" + c.value + "'", at);
    if (!class_names.insert(c.value).second) throw Error(Errc::DuplicateName, "class '" + c.value + "'", at);
  }
  for (const auto& [decl, loc] : roles) {
    auto at = SourceLocation{source, loc.line, loc.column};
    if (!detail::is_identifier(decl.name)) throw Error(Errc::InvalidName, "bad role name '" + decl.name + "'", at);
    if (class_names.count(decl.name) || !role_names.insert(decl.name).second)
      throw Error(Errc::DuplicateName, "role '" + decl.name + "'", at);
    if (!class_names.count(decl.parent))
      throw Error(Errc::UnknownParentClass,
                  "role '" + decl.name + "' references unknown class '" + decl.parent + "'", at);
  }
  for (const auto& r : relations) {
    auto at = SourceLocation{source, r.line, r.column};
    if (!detail::is_relation_lemma(r.value))
      throw Error(Errc::InvalidName, "relation lemma '" + r.value + "' must be lowercase", at);
    if (!relation_names.insert(r.value).second) throw Error(Errc::DuplicateName, "relation '" + r.value + "'", at);
  }

  std::vector<std::string> cls, rels;
  std::vector<RoleDecl> rls;
  for (auto& c : classes) cls.push_back(std::move(c.value));
  for (auto& r : roles) rls.push_back(std::move(r.first));
  for (auto& r : relations) rels.push_back(std::move(r.value));
  return build_schema(std::move(cls), std::move(rls), std::move(rels));
}

inline OntologySchema load_schema(const std::string& path) {
  return parse_schema(text::read_file(path), path);
}

inline void save_schema(const OntologySchema& s, const std::string& path) {
  text::write_file(path, format_schema(s));
}

struct Instance {
  std::string id;
  std::string surface;
  std::string class_name;
  std::set<std::string> roles;

  bool operator==(const Instance&) const = default;
};

struct Assertion {
  std::string subject;
  std::string relation;
  std::string object;

  auto operator<=>(const Assertion&) const = default;
};

/// Individuals, relation assertions and assigned roles for one document.
/// Ids are `input1`, `input2`, ... in insertion order.
class InstanceStore {
 public:
  explicit InstanceStore(std::shared_ptr<const OntologySchema> schema) : schema_(std::move(schema)) {
    if (!schema_) throw Error(Errc::Config, "instance store requires a schema");
  }

  const OntologySchema& schema() const noexcept { return *schema_; }
  const std::shared_ptr<const OntologySchema>& schema_ptr() const noexcept { return schema_; }

  const std::vector<Instance>& instances() const noexcept { return instances_; }
  const std::vector<Assertion>& assertions() const noexcept { return assertions_; }
  bool empty() const noexcept { return instances_.empty() && assertions_.empty(); }

  const Instance* find(std::string_view id) const {
    auto it = by_id_.find(std::string(id));
    return it == by_id_.end() ? nullptr : &instances_[it->second];
  }

  /// Adds an individual, or returns the existing id for an identical
  /// (surface, class) pair.
  std::string add_instance(std::string_view surface, std::string_view class_name) {
    if (!schema_->has_class(class_name))
      throw Error(Errc::UnknownClass, "class '" + std::string(class_name) + "'");
    auto key = std::make_pair(std::string(surface), std::string(class_name));
    if (auto it = by_key_.find(key); it != by_key_.end()) return instances_[it->second].id;
    Instance inst;
    inst.id = "input" + std::to_string(instances_.size() + 1);
    inst.surface = key.first;
    inst.class_name = key.second;
    by_key_.emplace(std::move(key), instances_.size());
    by_id_.emplace(inst.id, instances_.size());
    instances_.push_back(std::move(inst));
    return instances_.back().id;
  }

  /// Appends (subject, relation, object) unless already present.
  const Assertion& link_instances(std::string_view subject, std::string_view relation,
                                  std::string_view object) {
    require_instance(subject);
    require_instance(object);
    if (!schema_->has_relation(relation))
      throw Error(Errc::UnknownRelation, "relation '" + std::string(relation) + "'");
    Assertion a{std::string(subject), text::lower(relation), std::string(object)};
    if (auto it = std::find(assertions_.begin(), assertions_.end(), a); it != assertions_.end())
      return *it;
    assertions_.push_back(std::move(a));
    return assertions_.back();
  }

  /// Returns true when the role was not held before.
  bool assign_role(std::string_view id, std::string_view role) {
    Instance& inst = instances_[require_instance(id)];
    const std::string* parent = schema_->parent_of(role);
    if (!parent) throw Error(Errc::UnknownRole, "role '" + std::string(role) + "'");
    if (*parent != inst.class_name)
      throw Error(Errc::RoleClassMismatch, "role '" + std::string(role) + "' belongs to class '" +
                                               *parent + "' but " + inst.id + " is a '" +
                                               inst.class_name + "'");
    return inst.roles.insert(std::string(role)).second;
  }

  /// Re-checks every store invariant against the schema.
  void validate() const {
    for (const auto& inst : instances_) {
      if (!schema_->has_class(inst.class_name))
        throw Error(Errc::UnknownClass, inst.id + " has class '" + inst.class_name + "'");
      for (const auto& role : inst.roles) {
        const std::string* parent = schema_->parent_of(role);
        if (!parent) throw Error(Errc::UnknownRole, inst.id + " holds role '" + role + "'");
        if (*parent != inst.class_name)
          throw Error(Errc::RoleClassMismatch, inst.id + " holds role '" + role + "'");
      }
    }
    for (const auto& a : assertions_) {
      if (!schema_->has_relation(a.relation) || a.relation != text::lower(a.relation))
        throw Error(Errc::UnknownRelation, "assertion uses '" + a.relation + "'");
      if (!find(a.subject) || !find(a.object))
        throw Error(Errc::UnknownInstance, "assertion " + a.subject + " " + a.relation + " " + a.object);
    }
  }

  /// Instances holding more than one role; the reason a participant may
  /// look contradictory (e.g. both coming and leaving).
  std::vector<std::string> multi_role_instances() const {
    std::vector<std::string> out;
    for (const auto& inst : instances_)
      if (inst.roles.size() > 1) out.push_back(inst.id);
    return out;
  }

  nlohmann::json to_json() const {
    nlohmann::json inst = nlohmann::json::object();
    for (const auto& i : instances_) {
      inst[i.id] = {{"surface", i.surface},
                    {"class", i.class_name},
                    {"roles", std::vector<std::string>(i.roles.begin(), i.roles.end())}};
    }
    nlohmann::json asserts = nlohmann::json::array();
    for (const auto& a : assertions_) asserts.push_back({a.subject, a.relation, a.object});
    return {{"instances", std::move(inst)}, {"assertions", std::move(asserts)}};
  }

  /// Keys sorted, two-space indent, trailing newline.
  std::string snapshot() const { return to_json().dump(2) + "\n"; }

  static InstanceStore from_json(std::shared_ptr<const OntologySchema> schema, const nlohmann::json& j) {
    InstanceStore store(std::move(schema));
    if (!j.is_object() || !j.contains("instances") || !j.contains("assertions"))
      throw Error(Errc::Syntax, "store snapshot needs 'instances' and 'assertions'");
    // JSON object keys come back sorted as strings, so restore numeric order.
    std::vector<std::pair<std::size_t, const nlohmann::json*>> ordered;
    for (auto it = j.at("instances").begin(); it != j.at("instances").end(); ++it) {
      const std::string& id = it.key();
      if (!text::starts_with(id, "input") || id.size() == 5)
        throw Error(Errc::Syntax, "bad instance id '" + id + "'");
      ordered.emplace_back(std::stoul(id.substr(5)), &it.value());
    }
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t k = 0; k < ordered.size(); ++k) {
      if (ordered[k].first != k + 1) throw Error(Errc::Syntax, "instance ids are not dense");
      const auto& v = *ordered[k].second;
      std::string id = store.add_instance(v.at("surface").get<std::string>(),
                                          v.at("class").get<std::string>());
      if (id != "input" + std::to_string(k + 1))
        throw Error(Errc::Syntax, "duplicate (surface, class) pair in snapshot");
      for (const auto& role : v.at("roles")) store.assign_role(id, role.get<std::string>());
    }
    for (const auto& a : j.at("assertions")) {
      if (!a.is_array() || a.size() != 3) throw Error(Errc::Syntax, "assertion must be [s, r, o]");
      store.link_instances(a[0].get<std::string>(), a[1].get<std::string>(), a[2].get<std::string>());
    }
    return store;
  }

  bool operator==(const InstanceStore& o) const {
    return instances_ == o.instances_ && assertions_ == o.assertions_;
  }

 private:
  std::size_t require_instance(std::string_view id) const {
    auto it = by_id_.find(std::string(id));
    if (it == by_id_.end()) throw Error(Errc::UnknownInstance, "instance '" + std::string(id) + "'");
    return it->second;
  }

  std::shared_ptr<const OntologySchema> schema_;
  std::vector<Instance> instances_;
  std::vector<Assertion> assertions_;
  std::map<std::string, std::size_t> by_id_;
  std::map<std::pair<std::string, std::string>, std::size_t> by_key_;
};

inline void save_store(const InstanceStore& store, const std::string& path) {
  text::write_file(path, store.snapshot());
}

inline InstanceStore load_store(std::shared_ptr<const OntologySchema> schema, const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text::read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::Syntax, e.what(), SourceLocation{path, 0, 0});
  }
  return InstanceStore::from_json(std::move(schema), j);
}

}  // namespace evex::ontology

#endif  // EVEX_ONTOLOGY_HPP_
