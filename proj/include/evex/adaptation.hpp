#ifndef EVEX_ADAPTATION_HPP_
#define EVEX_ADAPTATION_HPP_

// Admission of a triple's entities into the instance store. A triple is
// admitted when it carries at least two entity mentions (context included)
// and every relation word (lemmatized verb head plus each preposition of
// the relation phrase) is in the schema's relation vocabulary.
//
// Links follow textual order over the mentions of arg1, rel and arg2: the
// first linkable pair is joined by the verb lemma, every later pair by the
// last schema preposition between them. Dates are only ever joined by a
// preposition. Context mentions are stored but not linked.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "evex/lemma.hpp"
#include "evex/ner.hpp"
#include "evex/ontology.hpp"
#include "evex/tokenize.hpp"
#include "evex/triple.hpp"

namespace evex::adaptation {

enum class Reason { Ok, TooFewEntities, RelationNotInOntology, Unlinkable };

inline const char* reason_name(Reason r) {
  switch (r) {
    case Reason::Ok: return "OK";
    case Reason::TooFewEntities: return "TooFewEntities";
    case Reason::RelationNotInOntology: return "RelationNotInOntology";
    case Reason::Unlinkable: return "Unlinkable";
  }
  return "OK";
}

/// A triple with its tokens, mentions and relation words.
struct AnalyzedTriple {
  oie::TripleExtraction triple;
  oie::SegmentedTriple seg;
  std::vector<ner::EntityMention> mentions;  // spans index seg.tokens
  std::string verb_lemma;
  std::vector<std::string> relation_words;  // verb lemma first, then prepositions
};

struct Analyzer {
  const ner::Gazetteer* gazetteer = nullptr;
  const Lexicon* lexicon = &default_lexicon();
  const lemma::LemmaRules* rules = &lemma::default_rules();

  std::string verb_key(const oie::SegmentedTriple& seg) const {
    if (seg.rel.begin == seg.rel.end) return {};
    return lemma::lemmatize_word(seg.tokens[oie::relation_head(seg)].text, *rules);
  }

  AnalyzedTriple analyze(const oie::TripleExtraction& t) const {
    AnalyzedTriple a;
    a.triple = t;
    a.seg = oie::segment_triple(t, *lexicon, *rules);
    a.verb_lemma = verb_key(a.seg);
    a.relation_words.push_back(a.verb_lemma);
    for (std::size_t i = a.seg.rel.begin; i < a.seg.rel.end; ++i)
      if (a.seg.tokens[i].tag == Tag::Adp) a.relation_words.push_back(text::lower(a.seg.tokens[i].text));
    static const ner::Gazetteer kEmpty;
    const ner::Gazetteer& g = gazetteer ? *gazetteer : kEmpty;
    // Mentions are recognized per part so none straddles a boundary.
    for (oie::TokenSpan part : {a.seg.arg1, a.seg.rel, a.seg.arg2, a.seg.context}) {
      std::span<const oie::Token> sub(a.seg.tokens.data() + part.begin, part.end - part.begin);
      for (auto m : ner::recognize(sub, g, *lexicon)) {
        m.span.begin += part.begin;
        m.span.end += part.begin;
        a.mentions.push_back(std::move(m));
      }
    }
    return a;
  }
};

/// Keeps the highest-confidence triple among those of one sentence that
/// share a lemmatized verb. Ties go to the earlier arg1, then to input
/// order. Survivors keep their input order.
inline std::vector<oie::TripleExtraction> select_best(const std::vector<oie::TripleExtraction>& triples,
                                                      const Analyzer& analyzer = {}) {
  std::map<std::pair<std::size_t, std::string>, std::size_t> best;
  auto arg1_begin = [](const oie::TripleExtraction& t) {
    return t.arg1_span ? t.arg1_span->begin : std::size_t(0);
  };
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const auto& t = triples[i];
    auto key = std::make_pair(t.sentence, analyzer.verb_key(oie::segment_triple(t, *analyzer.lexicon, *analyzer.rules)));
    auto [it, inserted] = best.emplace(key, i);
    if (inserted) continue;
    const auto& cur = triples[it->second];
    if (t.confidence > cur.confidence ||
        (t.confidence == cur.confidence && arg1_begin(t) < arg1_begin(cur)))
      it->second = i;
  }
  std::vector<std::size_t> keep;
  for (const auto& [key, idx] : best) keep.push_back(idx);
  std::sort(keep.begin(), keep.end());
  std::vector<oie::TripleExtraction> out;
  for (auto i : keep) out.push_back(triples[i]);
  return out;
}

struct InstanceRef {
  std::string id;
  ner::EntityMention mention;
};

struct AdaptationResult {
  bool accepted = false;
  Reason reason = Reason::TooFewEntities;
  std::vector<InstanceRef> instances;
  std::vector<ontology::Assertion> links;
  std::size_t triple_index = 0;
  std::string triple_text;
  std::vector<std::string> relation_words;
  std::vector<std::string> missing_relations;
  std::size_t mention_count = 0;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["accepted"] = accepted;
    j["reason"] = reason_name(reason);
    j["triple"] = triple_text;
    j["triple_index"] = triple_index;
    j["mentions"] = mention_count;
    j["relation_words"] = relation_words;
    if (!missing_relations.empty()) j["missing_relations"] = missing_relations;
    j["instances"] = nlohmann::json::array();
    for (const auto& r : instances)
      j["instances"].push_back({{"id", r.id}, {"surface", r.mention.surface},
                                {"type", ner::entity_type_name(r.mention.type)}});
    j["links"] = nlohmann::json::array();
    for (const auto& l : links) j["links"].push_back({l.subject, l.relation, l.object});
    return j;
  }
};

namespace detail {

struct PlannedLink {
  std::size_t from, to;  // indices into the mention list
  std::string relation;
};

inline std::vector<PlannedLink> plan_links(const AnalyzedTriple& a, const ontology::OntologySchema& schema) {
  std::vector<std::size_t> chain;
  for (std::size_t i = 0; i < a.mentions.size(); ++i) {
    const auto& m = a.mentions[i];
    auto cls = ner::class_for(m.type);
    if (!cls || !schema.has_class(*cls)) continue;
    if (m.span.begin >= a.seg.arg2.end) continue;  // context
    chain.push_back(i);
  }
  std::vector<PlannedLink> out;
  bool verb_used = false;
  for (std::size_t k = 1; k < chain.size(); ++k) {
    const auto& x = a.mentions[chain[k - 1]];
    const auto& y = a.mentions[chain[k]];
    if (text::iequals(x.surface, y.surface) && x.type == y.type) continue;
    std::optional<std::string> adp;
    for (std::size_t t = x.span.end; t < y.span.begin; ++t) {
      const auto& tok = a.seg.tokens[t];
      if (tok.tag == Tag::Adp && schema.has_relation(tok.text)) adp = text::lower(tok.text);
    }
    const bool date = x.type == ner::EntityType::Date || y.type == ner::EntityType::Date;
    if (date) {
      if (adp) out.push_back({chain[k - 1], chain[k], *adp});
    } else if (!verb_used && schema.has_relation(a.verb_lemma)) {
      out.push_back({chain[k - 1], chain[k], a.verb_lemma});
      verb_used = true;
    } else if (adp) {
      out.push_back({chain[k - 1], chain[k], *adp});
    }
  }
  return out;
}

}  // namespace detail

/// Applies both gates and, on success, adds the mentions and links to
/// `store`. A rejected triple leaves the store untouched.
inline AdaptationResult adapt(const AnalyzedTriple& a, ontology::InstanceStore& store) {
  const auto& schema = store.schema();
  AdaptationResult r;
  r.triple_text = oie::format_triple(a.triple);
  r.relation_words = a.relation_words;
  r.mention_count = a.mentions.size();
  if (a.mentions.size() < 2) {
    r.reason = Reason::TooFewEntities;
    return r;
  }
  for (const auto& w : a.relation_words)
    if (w.empty() || !schema.has_relation(w)) r.missing_relations.push_back(w);
  if (!r.missing_relations.empty()) {
    r.reason = Reason::RelationNotInOntology;
    return r;
  }
  auto planned = detail::plan_links(a, schema);
  if (planned.empty()) {
    r.reason = Reason::Unlinkable;
    return r;
  }
  std::vector<std::optional<std::string>> ids(a.mentions.size());
  for (std::size_t i = 0; i < a.mentions.size(); ++i) {
    const auto& m = a.mentions[i];
    auto cls = ner::class_for(m.type);
    if (!cls || !schema.has_class(*cls)) continue;
    ids[i] = store.add_instance(m.surface, *cls);
    r.instances.push_back({*ids[i], m});
  }
  for (const auto& p : planned) r.links.push_back(store.link_instances(*ids[p.from], p.relation, *ids[p.to]));
  r.accepted = true;
  r.reason = Reason::Ok;
  return r;
}

struct DocumentAdaptation {
  ontology::InstanceStore store;
  std::vector<AnalyzedTriple> triples;  // after select_best, processing order
  std::vector<AdaptationResult> results;
};

/// select_best per sentence, then adapt each survivor into one store.
inline DocumentAdaptation adapt_document(const std::vector<oie::TripleExtraction>& triples,
                                         std::shared_ptr<const ontology::OntologySchema> schema,
                                         const Analyzer& analyzer = {}) {
  DocumentAdaptation doc{ontology::InstanceStore(std::move(schema)), {}, {}};
  auto kept = select_best(triples, analyzer);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    doc.triples.push_back(analyzer.analyze(kept[i]));
    auto r = adapt(doc.triples.back(), doc.store);
    r.triple_index = i;
    doc.results.push_back(std::move(r));
  }
  return doc;
}

}  // namespace evex::adaptation

#endif  // EVEX_ADAPTATION_HPP_
