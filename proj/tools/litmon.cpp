// litmon command-line interface.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "litmon/api.hpp"
#include "litmon/corpus_io.hpp"
#include "litmon/curation.hpp"
#include "litmon/dedupe.hpp"
#include "litmon/export.hpp"
#include "litmon/filter.hpp"
#include "litmon/fixtures.hpp"
#include "litmon/ingest.hpp"
#include "litmon/metadata_client.hpp"
#include "litmon/reports.hpp"

namespace fs = std::filesystem;
using namespace litmon;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_issue(std::ostream& out, const ValidationIssue& i) {
  out << (i.record_id.empty() ? "-" : i.record_id) << '\t' << to_string(i.severity) << '\t' << i.code << '\t'
      << i.message << '\n';
}

/// Where a command reads its corpus from: a file or a named fixture.
struct Source {
  std::string corpus;
  std::string fixture;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--corpus", corpus, "Corpus file (line-delimited JSON)");
    cmd->add_option("--fixture", fixture, "Use a built-in synthetic corpus instead")
        ->check(CLI::IsMember(fixtures::names()));
  }

  Corpus load() const {
    if (!fixture.empty()) return fixtures::by_name(fixture);
    if (corpus.empty()) throw Error(ErrorCode::InvalidArgument, "give --corpus or --fixture");
    auto loaded = load_corpus_file(corpus);
    for (const auto& i : loaded.issues) print_issue(std::cerr, i);
    return std::move(loaded.corpus);
  }
};

/// Loads the corpus a command writes to, or starts an empty one.
Corpus load_or_create(const std::string& path) {
  if (!fs::exists(path)) return Corpus{};
  auto loaded = load_corpus_file(path);
  for (const auto& i : loaded.issues) print_issue(std::cerr, i);
  return std::move(loaded.corpus);
}

void write_output(const std::string& path, const std::string& bytes) {
  if (path.empty() || path == "-") {
    std::cout << bytes;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoFailure, "cannot write " + path);
  out << bytes;
  if (!out.flush()) throw Error(ErrorCode::IoFailure, "write failed for " + path);
}

int ingest_files(const std::vector<std::string>& files, const std::string& corpus_path, bool ris) {
  Corpus corpus = load_or_create(corpus_path);
  std::size_t parsed = 0, errors = 0;
  std::set<std::string> ids;
  for (const auto& file : files) {
    auto result = ris ? parse_ris(read_file(file)) : parse_bibtex(read_file(file));
    for (const auto& e : result.errors) {
      std::cerr << file << ':' << e.line << ": " << e.code << ": " << e.reason << '\n';
      ++errors;
    }
    for (const auto& record : result.records) {
      ++parsed;
      try {
        auto outcome = ingest_record(corpus, record);
        ids.insert(outcome.record_id);
        for (const auto& i : outcome.issues) print_issue(std::cerr, i);
      } catch (const Error& e) {
        std::cerr << file << ": " << to_string(e.code()) << ": " << e.what() << '\n';
        ++errors;
      }
    }
  }
  save_corpus_file(corpus_path, corpus);
  std::cout << "parsed " << parsed << " entries, " << ids.size() << " records in corpus update, " << errors
            << " errors; corpus has " << corpus.records().size() << " records\n";
  return errors ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Software-centric literature monitoring"};
  app.require_subcommand(1);
  int status = 0;

  // --- corpus ---------------------------------------------------------------------
  auto* corpus_cmd = app.add_subcommand("corpus", "Inspect corpus files");
  corpus_cmd->require_subcommand(1);

  std::string validate_path;
  auto* validate = corpus_cmd->add_subcommand("validate", "Load a corpus file and run the quality checks");
  validate->add_option("file", validate_path)->required();
  validate->callback([&] {
    auto loaded = load_corpus_file(validate_path);
    auto issues = quality_check(loaded.corpus);
    issues.insert(issues.begin(), loaded.issues.begin(), loaded.issues.end());
    for (const auto& i : issues) print_issue(std::cout, i);
    const bool failed = std::any_of(issues.begin(), issues.end(), [](auto& i) { return i.severity == Severity::Error; });
    std::cout << loaded.corpus.records().size() << " records, " << issues.size() << " issues\n";
    status = failed ? 1 : 0;
  });

  Source stats_source;
  auto* stats = corpus_cmd->add_subcommand("stats", "Record and entity counts");
  stats_source.add_to(stats);
  stats->callback([&] {
    auto corpus = stats_source.load();
    std::map<std::string, int> by_status;
    for (const auto& [id, r] : corpus.records()) ++by_status[std::string(to_string(r.curation_status))];
    std::map<std::string, int> by_kind;
    for (const auto& [id, e] : corpus.entities()) ++by_kind[std::string(to_string(e.kind))];
    std::cout << "records\t" << corpus.records().size() << '\n';
    for (const auto& [k, n] : by_status) std::cout << "status." << k << '\t' << n << '\n';
    std::cout << "entities\t" << corpus.entities().size() << '\n';
    for (const auto& [k, n] : by_kind) std::cout << "entity." << k << '\t' << n << '\n';
    std::cout << "audit\t" << corpus.audit().size() << '\n';
  });

  std::string fixture_name, fixture_out;
  auto* fixture = corpus_cmd->add_subcommand("fixture", "Write a built-in synthetic corpus to a file");
  fixture->add_option("name", fixture_name)->required()->check(CLI::IsMember(fixtures::names()));
  fixture->add_option("-o,--output", fixture_out)->required();
  fixture->callback([&] { save_corpus_file(fixture_out, fixtures::by_name(fixture_name)); });

  // --- ingest ---------------------------------------------------------------------
  auto* ingest = app.add_subcommand("ingest", "Acquire bibliographic metadata");
  ingest->require_subcommand(1);
  std::string ingest_corpus;
  std::vector<std::string> ingest_files_arg;

  auto* bib = ingest->add_subcommand("bib", "Parse BibTeX files into the corpus");
  bib->add_option("files", ingest_files_arg)->required()->check(CLI::ExistingFile);
  bib->add_option("--corpus", ingest_corpus)->required();
  bib->callback([&] { status = ingest_files(ingest_files_arg, ingest_corpus, false); });

  auto* ris = ingest->add_subcommand("ris", "Parse RIS files into the corpus");
  ris->add_option("files", ingest_files_arg)->required()->check(CLI::ExistingFile);
  ris->add_option("--corpus", ingest_corpus)->required();
  ris->callback([&] { status = ingest_files(ingest_files_arg, ingest_corpus, true); });

  std::vector<std::string> dois;
  std::string offline_dir;
  auto* doi = ingest->add_subcommand("doi", "Resolve DOIs through the metadata service");
  doi->add_option("dois", dois)->required();
  doi->add_option("--corpus", ingest_corpus)->required();
  doi->add_option("--offline", offline_dir, "Directory of recorded responses")->check(CLI::ExistingDirectory);
  doi->callback([&] {
    auto client = offline_dir.empty() ? MetadataClient::live() : MetadataClient::offline(offline_dir);
    Corpus corpus = load_or_create(ingest_corpus);
    int failures = 0;
    for (const auto& r : client.resolve_all(dois)) {
      if (!r.resolved) {
        std::cerr << r.doi << ": " << to_string(*r.error) << ": " << r.message << '\n';
        ++failures;
        continue;
      }
      auto outcome = ingest_record(corpus, r.resolved->record);
      for (const auto& i : r.resolved->issues) print_issue(std::cerr, {outcome.record_id, i.severity, i.code, i.message});
      for (const auto& i : outcome.issues) print_issue(std::cerr, i);
      std::cout << r.doi << '\t' << outcome.record_id << '\n';
    }
    save_corpus_file(ingest_corpus, corpus);
    status = failures ? 1 : 0;
  });

  double threshold = kDefaultFuzzyThreshold;
  auto* dedupe = ingest->add_subcommand("dedupe", "Report duplicate clusters");
  Source dedupe_source;
  dedupe_source.add_to(dedupe);
  dedupe->add_option("--threshold", threshold, "Title similarity threshold")->check(CLI::Range(0.0, 1.0));
  dedupe->callback([&] {
    auto corpus = dedupe_source.load();
    auto clusters = dedupe_corpus(corpus, threshold);
    for (const auto& c : clusters) {
      std::cout << to_string(c.match_kind) << '\t' << c.score;
      for (const auto& m : c.members) std::cout << '\t' << m;
      std::cout << '\n';
    }
  });

  // --- curate ---------------------------------------------------------------------
  auto* curate = app.add_subcommand("curate", "Annotate, gate and check records");
  curate->require_subcommand(1);
  std::string record_id, annotation_file, curator;

  auto* annotate = curate->add_subcommand("annotate", "Apply an annotation document to a record");
  annotate->add_option("record", record_id)->required();
  annotate->add_option("--file", annotation_file, "Annotation JSON")->required()->check(CLI::ExistingFile);
  annotate->add_option("--corpus", ingest_corpus)->required()->check(CLI::ExistingFile);
  annotate->add_option("--curator", curator);
  annotate->callback([&] {
    auto corpus = load_or_create(ingest_corpus);
    auto a = parse_annotation(std::string_view(read_file(annotation_file)));
    if (!curator.empty()) a.curator = curator;
    if (a.curator.empty()) a.curator = "cli";
    auto record = apply_annotation(corpus, record_id, a.usage, a.context, a.curator);
    save_corpus_file(ingest_corpus, corpus);
    std::cout << record.record_id << '\t' << to_string(record.curation_status) << '\n';
  });

  auto* gate = curate->add_subcommand("gate", "Run the inclusion gate on an annotated record");
  gate->add_option("record", record_id)->required();
  gate->add_option("--corpus", ingest_corpus)->required()->check(CLI::ExistingFile);
  gate->callback([&] {
    auto corpus = load_or_create(ingest_corpus);
    auto outcome = apply_gate(corpus, record_id);
    save_corpus_file(ingest_corpus, corpus);
    std::cout << record_id << '\t' << to_string(outcome.decision.verdict) << '\t' << to_string(outcome.status);
    if (!outcome.decision.reason.empty()) std::cout << '\t' << outcome.decision.reason;
    std::cout << '\n';
    for (const auto& i : outcome.issues) print_issue(std::cerr, i);
  });

  Source qc_source;
  std::string severity = "info";
  auto* qc = curate->add_subcommand("qc", "Quality checks");
  qc_source.add_to(qc);
  qc->add_option("--severity", severity, "Minimum severity")
      ->check(CLI::IsMember({"error", "warning", "info"}, CLI::ignore_case));
  qc->callback([&] {
    auto corpus = qc_source.load();
    auto issues = filter_severity(quality_check(corpus), parse_enum<Severity>(severity));
    for (const auto& i : issues) print_issue(std::cout, i);
    status = std::any_of(issues.begin(), issues.end(), [](auto& i) { return i.severity == Severity::Error; }) ? 1 : 0;
  });

  // --- report ---------------------------------------------------------------------
  auto* report = app.add_subcommand("report", "Analytic reports");
  report->require_subcommand(1);
  Source report_source;
  std::string report_out, report_format, report_filter;
  std::map<std::string, std::string> values;
  bool normalized = false;

  auto add_report = [&](const std::string& name, const std::string& help) {
    auto* cmd = report->add_subcommand(name, help);
    report_source.add_to(cmd);
    cmd->add_option("-o,--output", report_out, "Output file (default stdout)");
    cmd->add_option("--format", report_format, "json, csv, or for graphs nodes/edges");
    cmd->add_option("--filter", report_filter, "Record filter, e.g. \"year=2015..2020;product=EduPack\"");
    return cmd;
  };
  // Options map onto report parameters; only options given on the command
  // line are passed, so defaults live in one place.
  auto param = [&](CLI::App* cmd, const std::string& flag, const std::string& key, const std::string& help) {
    cmd->add_option(flag, values[key], help);
  };

  auto* years = add_report("years", "Publications per year");
  param(years, "--start", "start", "First year");
  param(years, "--end", "end", "Last year");
  auto* dist = add_report("dist", "Distribution over a dimension");
  param(dist, "--dim", "dim", "resource-type, country, institution, product or fos");
  param(dist, "--counting", "counting", "all or first-author");
  auto* usage = add_report("usage", "Usage flag shares");
  auto* coauthors = add_report("coauthors", "Co-authorship network");
  param(coauthors, "--min-docs", "min_docs", "Minimum documents per author");
  auto* terms = add_report("terms", "Term frequencies of titles and keywords");
  param(terms, "--top", "top", "Number of terms (0 = all)");
  auto* cooccur = add_report("cooccur", "Term co-occurrence network");
  param(cooccur, "--min-occ", "min_occ", "Minimum records per term");
  auto* sankey = add_report("sankey", "Flows between two dimensions");
  param(sankey, "--from", "source", "Source dimension");
  param(sankey, "--to", "target", "Target dimension");
  sankey->add_flag("--normalized", normalized, "Percent of each source");
  auto* coupled = add_report("coupled", "Coupled CAD/CAE tools");
  auto* field_time = add_report("field-time", "FOS field shares per year");
  param(field_time, "--start", "start", "First year");
  param(field_time, "--end", "end", "Last year");
  (void)usage;
  (void)coupled;

  report->final_callback([&] {
    auto* cmd = report->get_subcommands().front();
    ReportParams params;
    for (const auto& [key, value] : values) {
      if (!value.empty()) params[key] = value;
    }
    if (normalized) params["normalized"] = "true";
    if (!report_format.empty()) params["format"] = report_format;
    if (!report_filter.empty()) params["filter"] = report_filter;
    auto corpus = report_source.load();
    write_output(report_out, render_report(corpus, cmd->get_name(), params).body);
  });

  // --- export ---------------------------------------------------------------------
  Source export_source;
  std::string export_format = "jsonl", export_out;
  auto* exp = app.add_subcommand("export", "Write the corpus as line-delimited JSON or CSV");
  export_source.add_to(exp);
  exp->add_option("--format", export_format)->check(CLI::IsMember({"jsonl", "csv"}));
  exp->add_option("-o,--output", export_out)->required();
  exp->callback([&] { export_corpus(export_source.load(), export_out, *parse_export_format(export_format)); });

  // --- serve ----------------------------------------------------------------------
  std::string bind = "127.0.0.1:8080", serve_corpus, serve_fixture;
  auto* serve = app.add_subcommand("serve", "HTTP API over a corpus");
  serve->add_option("--bind", bind, "host:port (LITMON_PORT overrides the port)");
  serve->add_option("--corpus", serve_corpus, "Corpus file; written back on every change");
  serve->add_option("--fixture", serve_fixture, "Serve a built-in synthetic corpus (LITMON_FIXTURE)")
      ->check(CLI::IsMember(fixtures::names()));
  serve->callback([&] {
    auto options = parse_bind_address(bind);
    if (const char* port = std::getenv("LITMON_PORT"); port && *port) {
      options.port = parse_bind_address(port).port;
    }
    if (const char* f = std::getenv("LITMON_FIXTURE"); f && *f && serve_corpus.empty() && serve_fixture.empty()) {
      serve_fixture = f;
    }
    Corpus corpus;
    std::optional<fs::path> path;
    if (!serve_fixture.empty()) {
      corpus = fixtures::by_name(serve_fixture);
    } else if (!serve_corpus.empty()) {
      corpus = load_or_create(serve_corpus);
      path = serve_corpus;
    } else {
      throw Error(ErrorCode::InvalidArgument, "give --corpus or --fixture");
    }
    auto store = std::make_shared<CorpusStore>(std::move(corpus));
    auto service = std::make_shared<ApiService>(store, path);
    ApiServer server(service);
    const int port = server.bind(options);
    std::cout << "listening on " << options.host << ':' << port << std::endl;
    server.run();
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return 1;
  }
  return status;
}
