#ifndef EVEX_PIPELINE_HPP_
#define EVEX_PIPELINE_HPP_

// End-to-end extraction: text (or pre-extracted triples) -> triples ->
// entity mentions -> instance store -> inferred roles -> event records.

#include <filesystem>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "evex/adaptation.hpp"
#include "evex/error.hpp"
#include "evex/eval.hpp"
#include "evex/ner.hpp"
#include "evex/ontology.hpp"
#include "evex/reverb.hpp"
#include "evex/rules.hpp"
#include "evex/text.hpp"
#include "evex/tokenize.hpp"
#include "evex/triple.hpp"

namespace evex::pipeline {

enum class OutputFormat { Json, Tsv };

struct RunConfig {
  std::string schema_path;
  std::string rules_path;
  std::string gazetteer_dir;
  std::vector<std::string> inputs;   // raw text, one document per file
  std::vector<std::string> triples;  // pre-extracted triples, one document per file
  std::string output_path;
  OutputFormat format = OutputFormat::Json;
  bool trace_adaptation = false;
  std::string lexical_filter_path;
  long threshold = 1;
  std::string ner_priority;
  std::string store_dir;
};

/// Immutable inputs shared by every document.
struct Resources {
  std::shared_ptr<const ontology::OntologySchema> schema;
  std::vector<rules::Rule> rules;
  ner::Gazetteer gazetteer;
  std::optional<oie::RelationTable> relation_table;
  long threshold = 1;

  adaptation::Analyzer analyzer() const { return adaptation::Analyzer{&gazetteer}; }
};

inline Resources load_resources(const RunConfig& cfg) {
  if (cfg.schema_path.empty()) throw Error(Errc::Config, "--schema is required");
  if (cfg.rules_path.empty()) throw Error(Errc::Config, "--rules is required");
  Resources r;
  r.schema = std::make_shared<const ontology::OntologySchema>(ontology::load_schema(cfg.schema_path));
  r.rules = rules::resolve(*r.schema, rules::load_rules(cfg.rules_path));
  if (!cfg.gazetteer_dir.empty()) r.gazetteer = ner::load_gazetteers(cfg.gazetteer_dir);
  if (!cfg.ner_priority.empty()) r.gazetteer.priority = ner::parse_priority(cfg.ner_priority);
  if (!cfg.lexical_filter_path.empty()) r.relation_table = oie::load_relation_table(cfg.lexical_filter_path);
  r.threshold = cfg.threshold;
  return r;
}

enum class Provenance { NativeOie, Ingested };

inline const char* provenance_name(Provenance p) {
  return p == Provenance::NativeOie ? "native-oie" : "ingested";
}

struct Participant {
  std::string id;
  std::string surface;
  std::string class_name;
  std::vector<std::string> roles;
};

struct Link {
  std::string subject;
  std::string relation;
  std::string object;
};

/// One accepted triple together with the inferred roles of its entities.
struct EventRecord {
  std::string doc;
  std::size_t sentence = 0;
  std::string sentence_text;  // empty for ingested triples
  std::size_t begin = 0;      // byte offsets of the sentence in its document
  std::size_t end = 0;
  std::vector<Participant> participants;
  std::vector<Link> links;
  double confidence = 1.0;
  Provenance provenance = Provenance::NativeOie;
  std::string triple;
  std::vector<std::string> warnings;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["doc"] = doc;
    j["sentence"] = {{"index", sentence}, {"text", sentence_text}, {"begin", begin}, {"end", end}};
    j["participants"] = nlohmann::json::array();
    for (const auto& p : participants)
      j["participants"].push_back({{"id", p.id}, {"surface", p.surface}, {"class", p.class_name}, {"roles", p.roles}});
    j["links"] = nlohmann::json::array();
    for (const auto& l : links)
      j["links"].push_back({{"subject", l.subject}, {"relation", l.relation}, {"object", l.object}});
    j["confidence"] = confidence;
    j["provenance"] = provenance_name(provenance);
    j["triple"] = triple;
    j["warnings"] = warnings;
    return j;
  }
};

struct Document {
  std::string id;
  std::string path;
  Provenance provenance = Provenance::NativeOie;
};

struct SentenceInfo {
  std::string text;
  std::size_t begin = 0, end = 0;
};

struct DocumentOutput {
  std::vector<EventRecord> records;
  std::vector<adaptation::AdaptationResult> results;
  std::optional<rules::InferenceResult> inference;
};

/// Native extraction over raw text: sentences, tagging, triples.
inline std::vector<oie::TripleExtraction> extract_text(std::string_view content, std::vector<SentenceInfo>* info = nullptr) {
  std::vector<oie::TripleExtraction> out;
  auto spans = oie::split_sentences(content);
  for (std::size_t s = 0; s < spans.size(); ++s) {
    std::string_view sentence = content.substr(spans[s].begin, spans[s].end - spans[s].begin);
    if (info) info->push_back({std::string(sentence), spans[s].begin, spans[s].end});
    auto tokens = oie::tag(sentence);
    for (auto& t : oie::extract_triples(sentence, tokens, s)) out.push_back(std::move(t));
  }
  return out;
}

/// Runs one document through the whole pipeline.
inline DocumentOutput process_document(const Resources& res, const std::string& doc_id, std::string_view content,
                                       Provenance provenance, const std::string& source = "") {
  std::vector<SentenceInfo> sentences;
  std::vector<oie::TripleExtraction> triples = provenance == Provenance::NativeOie
                                                   ? extract_text(content, &sentences)
                                                   : oie::parse_triple_file(content, source);
  triples = oie::lexical_filter(std::move(triples), res.relation_table ? &*res.relation_table : nullptr,
                                res.threshold);
  auto doc = adaptation::adapt_document(triples, res.schema, res.analyzer());
  DocumentOutput out;
  out.inference = rules::infer(doc.store, res.rules);
  const auto& store = out.inference->store;
  for (std::size_t i = 0; i < doc.results.size(); ++i) {
    const auto& r = doc.results[i];
    if (!r.accepted) continue;
    const auto& t = doc.triples[i].triple;
    EventRecord rec;
    rec.doc = doc_id;
    rec.sentence = t.sentence;
    if (t.sentence < sentences.size()) {
      rec.sentence_text = sentences[t.sentence].text;
      rec.begin = sentences[t.sentence].begin;
      rec.end = sentences[t.sentence].end;
    }
    rec.confidence = t.confidence;
    rec.provenance = provenance;
    rec.triple = oie::format_triple(t);
    std::set<std::string> seen;
    for (const auto& ref : r.instances) {
      if (!seen.insert(ref.id).second) continue;
      const auto* inst = store.find(ref.id);
      if (!inst || inst->roles.empty()) continue;
      rec.participants.push_back({inst->id, inst->surface, inst->class_name,
                                  std::vector<std::string>(inst->roles.begin(), inst->roles.end())});
      if (inst->roles.size() > 1)
        rec.warnings.push_back(inst->id + " (" + inst->surface + ") holds " + std::to_string(inst->roles.size()) +
                               " roles");
    }
    for (const auto& l : r.links)
      rec.links.push_back({store.find(l.subject)->surface, l.relation, store.find(l.object)->surface});
    if (!rec.participants.empty()) out.records.push_back(std::move(rec));
  }
  out.results = std::move(doc.results);
  return out;
}

inline std::string format_records_jsonl(const std::vector<EventRecord>& records) {
  std::string out;
  for (const auto& r : records) out += r.to_json().dump() + "\n";
  return out;
}

inline std::string format_records_tsv(const std::vector<EventRecord>& records) {
  std::string out = "doc\tsentence\tsurface\tclass\troles\tconfidence\tprovenance\n";
  for (const auto& r : records) {
    for (const auto& p : r.participants) {
      out += r.doc + "\t" + std::to_string(r.sentence) + "\t" + p.surface + "\t" + p.class_name + "\t" +
             text::join(p.roles, ",") + "\t" + oie::format_confidence(r.confidence) + "\t" +
             provenance_name(r.provenance) + "\n";
    }
  }
  return out;
}

/// (doc, surface, role) items from an output file in either format.
inline std::set<eval::Item> parse_predictions(std::string_view content, const std::string& source = "") {
  std::set<eval::Item> out;
  auto ls = text::lines(content);
  bool tsv = !ls.empty() && text::starts_with(ls[0], "doc\t");
  for (std::size_t i = tsv ? 1 : 0; i < ls.size(); ++i) {
    std::string_view line = text::trim(ls[i]);
    if (line.empty()) continue;
    if (tsv) {
      auto cols = text::split(ls[i], '\t');
      if (cols.size() != 7) throw Error(Errc::Syntax, "expected 7 columns", SourceLocation{source, i + 1, 1});
      for (const auto& role : text::split(cols[4], ','))
        if (!role.empty()) out.insert(eval::make_item(cols[0], cols[2], role));
      continue;
    }
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
      for (const auto& p : j.at("participants"))
        for (const auto& role : p.at("roles"))
          out.insert(eval::make_item(j.at("doc").get<std::string>(), p.at("surface").get<std::string>(),
                                     role.get<std::string>()));
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::Syntax, std::string("bad record: ") + e.what(), SourceLocation{source, i + 1, 1});
    }
  }
  return out;
}

inline std::set<eval::Item> record_items(const std::vector<EventRecord>& records) {
  std::set<eval::Item> out;
  for (const auto& r : records)
    for (const auto& p : r.participants)
      for (const auto& role : p.roles) out.insert(eval::make_item(r.doc, p.surface, role));
  return out;
}

inline std::string document_id(const std::string& path) { return std::filesystem::path(path).stem().string(); }

struct ExtractSummary {
  std::vector<EventRecord> records;
  std::vector<std::pair<std::string, std::string>> failures;  // (document, message)
  std::size_t documents = 0;
};

/// Runs every document of the configuration and writes the output file.
/// Configuration problems throw; a failing document is reported in the
/// summary (and on `log`) and skipped.
inline ExtractSummary run_extract(const RunConfig& cfg, std::ostream* log = nullptr, std::ostream* trace = nullptr) {
  if (cfg.inputs.empty() == cfg.triples.empty())
    throw Error(Errc::Config, "exactly one of --input or --triples is required");
  if (cfg.output_path.empty()) throw Error(Errc::Config, "--output is required");
  const Resources res = load_resources(cfg);
  if (!cfg.store_dir.empty()) std::filesystem::create_directories(cfg.store_dir);

  std::vector<Document> docs;
  for (const auto& p : cfg.inputs) docs.push_back({document_id(p), p, Provenance::NativeOie});
  for (const auto& p : cfg.triples) docs.push_back({document_id(p), p, Provenance::Ingested});

  ExtractSummary summary;
  for (const auto& d : docs) {
    ++summary.documents;
    try {
      auto out = process_document(res, d.id, text::read_file(d.path), d.provenance, d.path);
      if (trace && cfg.trace_adaptation) {
        for (const auto& r : out.results) {
          auto j = r.to_json();
          j["doc"] = d.id;
          *trace << j.dump() << "\n";
        }
      }
      if (!cfg.store_dir.empty())
        ontology::save_store(out.inference->store,
                             (std::filesystem::path(cfg.store_dir) / (d.id + ".json")).string());
      for (auto& r : out.records) summary.records.push_back(std::move(r));
    } catch (const std::exception& e) {
      summary.failures.emplace_back(d.id, e.what());
      if (log) *log << "skipping " << d.path << ": " << e.what() << "\n";
    }
  }
  text::write_file(cfg.output_path, cfg.format == OutputFormat::Json ? format_records_jsonl(summary.records)
                                                                     : format_records_tsv(summary.records));
  return summary;
}

/// Scores an output file against a gold file; writes the CSV report when
/// `report_path` is set and returns the report.
inline eval::Report run_eval(const std::string& pred_path, const std::string& gold_path,
                             const std::string& report_path = "", const ontology::OntologySchema* schema = nullptr) {
  auto gold = eval::load_gold(gold_path);
  auto pred = parse_predictions(text::read_file(pred_path), pred_path);
  std::vector<std::string> roles;
  if (schema)
    for (const auto& r : schema->roles()) roles.push_back(r.name);
  auto report = eval::score(pred, gold, roles);
  if (!report_path.empty()) text::write_file(report_path, eval::report_csv(report));
  return report;
}

}  // namespace evex::pipeline

#endif  // EVEX_PIPELINE_HPP_
