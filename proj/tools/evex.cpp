// evex: event extraction from text with an ontology and role rules.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "evex/evex.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kConfigError = 1;
constexpr int kParseError = 2;

int cmd_extract(const evex::pipeline::RunConfig& cfg) {
  try {
    auto summary = evex::pipeline::run_extract(cfg, &std::cerr, &std::cerr);
    std::cerr << summary.documents << " document(s), " << summary.records.size() << " record(s)";
    if (!summary.failures.empty()) std::cerr << ", " << summary.failures.size() << " skipped";
    std::cerr << "\n";
    return kOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  }
}

int cmd_eval(const std::string& pred, const std::string& gold, const std::string& report,
             const std::string& schema_path, int decimals) {
  std::optional<evex::ontology::OntologySchema> schema;
  try {
    if (!schema_path.empty()) schema = evex::ontology::load_schema(schema_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  }
  try {
    auto r = evex::pipeline::run_eval(pred, gold, report, schema ? &*schema : nullptr);
    std::cout << evex::eval::report_text(r, decimals);
    return kOk;
  } catch (const evex::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == evex::Errc::Io ? kConfigError : kParseError;
  }
}

int cmd_validate(const std::string& schema_path, const std::string& rules_path) {
  try {
    auto schema = evex::ontology::load_schema(schema_path);
    auto rules = evex::rules::resolve(schema, evex::rules::load_rules(rules_path));
    std::cout << schema.classes().size() << " classes, " << schema.roles().size() << " roles, "
              << schema.relations().size() << " relations, " << rules.size() << " rules: ok\n";
    return kOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ontology-driven event extraction"};
  app.require_subcommand(1);

  evex::pipeline::RunConfig cfg;
  std::string format = "json";
  auto* extract = app.add_subcommand("extract", "Extract event records from text or triple files");
  extract->add_option("--schema", cfg.schema_path, "Ontology schema file")->required();
  extract->add_option("--rules", cfg.rules_path, "Role rules file")->required();
  extract->add_option("--gazetteers", cfg.gazetteer_dir, "Directory of <type>.txt gazetteers");
  auto* in = extract->add_option("--input", cfg.inputs, "Text documents");
  auto* tr = extract->add_option("--triples", cfg.triples, "Pre-extracted triple files");
  in->excludes(tr);
  extract->add_option("--output", cfg.output_path, "Output file")->required();
  extract->add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  extract->add_flag("--trace-adaptation", cfg.trace_adaptation, "Print one JSON line per adaptation decision");
  auto* lf = extract->add_option("--lexical-filter", cfg.lexical_filter_path, "relation<TAB>count table");
  extract->add_option("--threshold", cfg.threshold, "Minimum count for the lexical filter")->needs(lf);
  extract->add_option("--ner-priority", cfg.ner_priority, "Entity type priority, comma separated");
  extract->add_option("--store-dir", cfg.store_dir, "Write each document's instance store here");

  std::string pred, gold, report, eval_schema;
  int decimals = 0;
  auto* ev = app.add_subcommand("eval", "Score extracted records against gold annotations");
  ev->add_option("--pred", pred, "Records written by extract")->required();
  ev->add_option("--gold", gold, "docid<TAB>surface<TAB>role file")->required();
  ev->add_option("--report", report, "CSV report path");
  ev->add_option("--schema", eval_schema, "List every schema role in the per-role table");
  ev->add_option("--decimals", decimals, "Decimals in percentages")->check(CLI::Range(0, 6));

  std::string v_schema, v_rules;
  auto* validate = app.add_subcommand("validate", "Check rules against a schema");
  validate->add_option("--schema", v_schema)->required();
  validate->add_option("--rules", v_rules)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  if (*extract) {
    cfg.format = format == "tsv" ? evex::pipeline::OutputFormat::Tsv : evex::pipeline::OutputFormat::Json;
    return cmd_extract(cfg);
  }
  if (*ev) return cmd_eval(pred, gold, report, eval_schema, decimals);
  return cmd_validate(v_schema, v_rules);
}
