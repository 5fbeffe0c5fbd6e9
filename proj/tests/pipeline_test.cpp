#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "evex/pipeline.hpp"
#include "support.hpp"

using namespace evex;
using namespace evex::pipeline;
namespace fs = std::filesystem;

namespace {

RunConfig base_config() {
  RunConfig cfg;
  cfg.schema_path = fixture::data_path("management_change.schema");
  cfg.rules_path = fixture::data_path("management_change.rules");
  cfg.gazetteer_dir = fixture::data_path("gazetteers");
  return cfg;
}

const Resources& resources() {
  static const Resources res = load_resources(base_config());
  return res;
}

using RoleMap = std::map<std::string, std::set<std::string>>;

RoleMap roles_of(const DocumentOutput& out) {
  RoleMap m;
  for (const auto& r : out.records)
    for (const auto& p : r.participants) m[p.surface].insert(p.roles.begin(), p.roles.end());
  return m;
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST(Pipeline, PhraseOne) {
  auto out = process_document(resources(), "p1", "QNB appoints Mark as a president.", Provenance::NativeOie);
  EXPECT_EQ(roles_of(out), (RoleMap{{"QNB", {"IN_ORG"}}, {"Mark", {"Coming_person"}}, {"president", {"CP_new_position"}}}));
  ASSERT_EQ(out.records.size(), 1u);
  const auto& rec = out.records[0];
  ASSERT_EQ(rec.links.size(), 2u);
  EXPECT_EQ(rec.links[0].subject, "QNB");
  EXPECT_EQ(rec.links[0].relation, "appoint");
  EXPECT_EQ(rec.links[1].relation, "as");
  EXPECT_EQ(rec.sentence_text, "QNB appoints Mark as a president.");
  EXPECT_EQ(rec.provenance, Provenance::NativeOie);
}

TEST(Pipeline, PhraseTwo) {
  auto out = process_document(resources(), "p2", "Nadine the CEO has left the company.", Provenance::NativeOie);
  EXPECT_EQ(roles_of(out), (RoleMap{{"Nadine", {"Leaving_person"}}, {"CEO", {"LP_previous_position"}}}));
  EXPECT_EQ(out.records[0].links[0].relation, "leave");
}

TEST(Pipeline, PhraseThreeIngested) {
  auto content = text::read_file(fixture::data_path("phrase3.triples"));
  auto out = process_document(resources(), "phrase3", content, Provenance::Ingested);
  EXPECT_EQ(roles_of(out), (RoleMap{{"Hang Zhihua", {"Leaving_person"}},
                                    {"non-executive directors", {"LP_previous_position"}},
                                    {"Bank", {"OUT_ORG"}}}));
  ASSERT_EQ(out.records.size(), 1u);
  EXPECT_DOUBLE_EQ(out.records[0].confidence, 0.93);
  EXPECT_TRUE(out.records[0].sentence_text.empty());
}

TEST(Pipeline, EmptyInputGivesNoRecords) {
  EXPECT_TRUE(process_document(resources(), "e", "", Provenance::NativeOie).records.empty());
  EXPECT_TRUE(process_document(resources(), "e", "", Provenance::Ingested).records.empty());
}

TEST(Pipeline, LexicalFilterDropsRareRelation) {
  Resources res = load_resources(base_config());
  res.relation_table = oie::RelationTable{{"leave", 5}};
  res.threshold = 20;
  EXPECT_TRUE(process_document(res, "p2", "Nadine the CEO has left the company.", Provenance::NativeOie).records.empty());
  res.threshold = 5;
  EXPECT_EQ(process_document(res, "p2", "Nadine the CEO has left the company.", Provenance::NativeOie).records.size(), 1u);
}

TEST(Pipeline, MultiRoleWarning) {
  auto out = process_document(resources(), "m", "Barclays named Sarah Jones as chief executive. Sarah Jones left Barclays.",
                              Provenance::NativeOie);
  bool warned = false;
  for (const auto& r : out.records) warned = warned || !r.warnings.empty();
  EXPECT_TRUE(warned);
}

TEST(Pipeline, TsvAndJsonlParseToSameItems) {
  std::vector<EventRecord> all;
  for (const auto& path : fixture::corpus_files()) {
    auto out = process_document(resources(), document_id(path), text::read_file(path), Provenance::NativeOie);
    for (auto& r : out.records) all.push_back(std::move(r));
  }
  auto items = record_items(all);
  EXPECT_FALSE(items.empty());
  EXPECT_EQ(parse_predictions(format_records_jsonl(all)), items);
  EXPECT_EQ(parse_predictions(format_records_tsv(all)), items);
  EXPECT_THROW(parse_predictions("{not json}\n"), Error);
}

TEST(Pipeline, RunExtractIsDeterministic) {
  TempDir dir("evex_pipeline_run");
  auto cfg = base_config();
  cfg.inputs = fixture::corpus_files();
  cfg.output_path = dir.file("a.jsonl");
  auto first = run_extract(cfg);
  cfg.output_path = dir.file("b.jsonl");
  run_extract(cfg);
  EXPECT_EQ(first.documents, 5u);
  EXPECT_TRUE(first.failures.empty());
  EXPECT_EQ(text::read_file(dir.file("a.jsonl")), text::read_file(dir.file("b.jsonl")));
}

TEST(Pipeline, RunExtractConfigErrors) {
  auto cfg = base_config();
  cfg.output_path = "/tmp/evex_unused.jsonl";
  EXPECT_THROW(run_extract(cfg), Error);
  cfg.inputs = {"a.txt"};
  cfg.triples = {"b.triples"};
  EXPECT_THROW(run_extract(cfg), Error);
  cfg.triples.clear();
  cfg.schema_path = "/nonexistent.schema";
  EXPECT_THROW(run_extract(cfg), Error);
}

TEST(Pipeline, MissingDocumentIsSkipped) {
  TempDir dir("evex_pipeline_skip");
  auto cfg = base_config();
  cfg.inputs = {fixture::corpus_files()[0], dir.file("missing.txt")};
  cfg.output_path = dir.file("out.jsonl");
  std::ostringstream log;
  auto s = run_extract(cfg, &log);
  EXPECT_EQ(s.failures.size(), 1u);
  EXPECT_FALSE(s.records.empty());
  EXPECT_NE(log.str().find("missing.txt"), std::string::npos);
}

TEST(Pipeline, TraceAndStoreDir) {
  TempDir dir("evex_pipeline_trace");
  auto cfg = base_config();
  cfg.triples = {fixture::data_path("phrase3.triples")};
  cfg.output_path = dir.file("out.tsv");
  cfg.format = OutputFormat::Tsv;
  cfg.trace_adaptation = true;
  cfg.store_dir = dir.file("stores");
  std::ostringstream trace;
  run_extract(cfg, nullptr, &trace);
  auto j = nlohmann::json::parse(trace.str().substr(0, trace.str().find('\n')));
  EXPECT_EQ(j["doc"], "phrase3");
  EXPECT_EQ(j["accepted"], true);
  auto store = ontology::load_store(fixture::bundled_schema(), dir.file("stores/phrase3.json"));
  EXPECT_EQ(store.instances().size(), 3u);
  EXPECT_EQ(text::lines(text::read_file(dir.file("out.tsv"))).size(), 4u);
}

TEST(Pipeline, EvalIdenticalAndEmpty) {
  TempDir dir("evex_pipeline_eval");
  auto gold_path = dir.file("gold.tsv");
  text::write_file(gold_path, "d\tQNB\tIN_ORG\nd\tMark\tComing_person\n");
  auto pred_path = dir.file("pred.tsv");
  text::write_file(pred_path,
                   "doc\tsentence\tsurface\tclass\troles\tconfidence\tprovenance\n"
                   "d\t0\tQNB\tOrganization\tIN_ORG\t0.6\tnative-oie\n"
                   "d\t0\tmark\tPerson\tComing_person\t0.6\tnative-oie\n");
  auto r = run_eval(pred_path, gold_path, dir.file("report.csv"));
  EXPECT_EQ(eval::percent(eval::f_measure(r.total)), "100");
  EXPECT_EQ(text::lines(text::read_file(dir.file("report.csv"))).back(), "TOTAL,2,0,0,1.0000,1.0000,1.0000");

  text::write_file(pred_path, "");
  auto empty = run_eval(pred_path, gold_path);
  EXPECT_EQ(empty.total, (eval::Counts{0, 0, 2, 0}));
  EXPECT_EQ(eval::percent(eval::precision(empty.total)), "0");
  EXPECT_EQ(eval::percent(eval::recall(empty.total)), "0");
}

TEST(Pipeline, MiniCorpusScores) {
  std::vector<EventRecord> all;
  for (const auto& path : fixture::corpus_files()) {
    auto out = process_document(resources(), document_id(path), text::read_file(path), Provenance::NativeOie);
    for (auto& r : out.records) all.push_back(std::move(r));
  }
  auto report = eval::score(record_items(all), eval::load_gold(fixture::data_path("corpus/gold.tsv")));
  EXPECT_GE(eval::precision(report.total), 0.90);
  EXPECT_GE(eval::recall(report.total), 0.80);
}
