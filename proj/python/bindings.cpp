// Python module over the litmon core. Structured results cross the boundary
// as JSON text; the litmon package decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "litmon/corpus_io.hpp"
#include "litmon/curation.hpp"
#include "litmon/dedupe.hpp"
#include "litmon/export.hpp"
#include "litmon/filter.hpp"
#include "litmon/fixtures.hpp"
#include "litmon/ingest.hpp"
#include "litmon/metadata_client.hpp"
#include "litmon/reports.hpp"

namespace py = pybind11;
using namespace litmon;

namespace {

Json parse_result_json(const ParseResult& result) {
  Json records = Json::array();
  for (const auto& r : result.records) records.push_back(to_json(r));
  Json errors = Json::array();
  for (const auto& e : result.errors) errors.push_back({{"line", e.line}, {"code", e.code}, {"reason", e.reason}});
  return {{"records", std::move(records)}, {"errors", std::move(errors)}};
}

Json issues_json(const std::vector<ValidationIssue>& issues) {
  Json out = Json::array();
  for (const auto& i : issues) out.push_back(to_json(i));
  return out;
}

std::string ingest_text(Corpus& corpus, const std::string& text, bool ris) {
  auto parsed = ris ? parse_ris(text) : parse_bibtex(text);
  Json ids = Json::array();
  std::vector<ValidationIssue> issues;
  for (const auto& r : parsed.records) {
    auto outcome = ingest_record(corpus, r);
    ids.push_back(outcome.record_id);
    issues.insert(issues.end(), outcome.issues.begin(), outcome.issues.end());
  }
  Json doc = parse_result_json(parsed);
  doc.erase("records");
  doc["record_ids"] = std::move(ids);
  doc["issues"] = issues_json(issues);
  return doc.dump();
}

}  // namespace

PYBIND11_MODULE(_litmon, m) {
  m.doc() = "litmon core";

  py::register_exception<Error>(m, "LitmonError");

  m.def("parse_bibtex", [](const std::string& text) { return parse_result_json(parse_bibtex(text)).dump(); });
  m.def("parse_ris", [](const std::string& text) { return parse_result_json(parse_ris(text)).dump(); });
  m.def("normalize_doi", [](const std::string& doi) { return normalize_doi(doi); });
  m.def("title_similarity", &title_similarity);
  m.def("fixture_names", [] {
    std::vector<std::string> out;
    for (auto n : fixtures::names()) out.emplace_back(n);
    return out;
  });
  m.def("report_names", [] {
    std::vector<std::string> out;
    for (auto n : report_names()) out.emplace_back(n);
    return out;
  });

  py::class_<Corpus>(m, "Corpus")
      .def(py::init<>())
      .def_static("fixture", [](const std::string& name) { return fixtures::by_name(name); })
      .def_static("load",
                  [](const std::filesystem::path& path) {
                    auto loaded = load_corpus_file(path);
                    return std::pair{std::move(loaded.corpus), issues_json(loaded.issues).dump()};
                  })
      .def_static("from_text",
                  [](const std::string& text) {
                    auto loaded = read_corpus(text);
                    return std::pair{std::move(loaded.corpus), issues_json(loaded.issues).dump()};
                  })
      .def("save", [](const Corpus& c, const std::filesystem::path& path) { save_corpus_file(path, c); })
      .def("to_text", [](const Corpus& c) { return write_corpus(c); })
      .def("__len__", [](const Corpus& c) { return c.records().size(); })
      .def("__eq__", [](const Corpus& a, const Corpus& b) { return a == b; })
      .def("record_ids",
           [](const Corpus& c) {
             std::vector<std::string> ids;
             for (const auto* r : c.ordered_records()) ids.push_back(r->record_id);
             return ids;
           })
      .def("record",
           [](const Corpus& c, const std::string& id) {
             const auto* r = c.find_record(id);
             if (!r) throw Error(ErrorCode::UnknownRecord, "unknown record '" + id + "'");
             return to_json(*r).dump();
           })
      .def("query",
           [](const Corpus& c, const std::string& filter) {
             std::vector<std::string> ids;
             for (const auto* r : query(c, FilterExpr::parse(filter))) ids.push_back(r->record_id);
             return ids;
           })
      .def("neighborhood",
           [](const Corpus& c, const std::string& id, int depth) { return to_json(c.neighborhood(id, depth)).dump(); },
           py::arg("entity_id"), py::arg("depth") = 1)
      .def("ingest_bibtex", [](Corpus& c, const std::string& text) { return ingest_text(c, text, false); })
      .def("ingest_ris", [](Corpus& c, const std::string& text) { return ingest_text(c, text, true); })
      .def("ingest_doi",
           [](Corpus& c, const std::string& doi, const std::filesystem::path& offline_dir) {
             auto resolved = MetadataClient::offline(offline_dir).resolve(doi);
             auto outcome = ingest_record(c, resolved.record);
             auto issues = resolved.issues;
             issues.insert(issues.end(), outcome.issues.begin(), outcome.issues.end());
             for (auto& i : issues) i.record_id = outcome.record_id;
             return Json{{"record_id", outcome.record_id}, {"issues", issues_json(issues)}}.dump();
           })
      .def("annotate",
           [](Corpus& c, const std::string& id, const std::string& annotation, const std::string& curator) {
             auto a = parse_annotation(std::string_view(annotation));
             if (!curator.empty()) a.curator = curator;
             return to_json(apply_annotation(c, id, a.usage, a.context, a.curator.empty() ? "python" : a.curator))
                 .dump();
           },
           py::arg("record_id"), py::arg("annotation"), py::arg("curator") = "")
      .def("gate",
           [](Corpus& c, const std::string& id) {
             auto outcome = apply_gate(c, id);
             Json criteria = Json::array();
             for (auto k : outcome.decision.satisfied_criteria) criteria.push_back(to_string(k));
             return Json{{"verdict", to_string(outcome.decision.verdict)},
                         {"satisfied_criteria", std::move(criteria)},
                         {"reason", outcome.decision.reason},
                         {"curation_status", to_string(outcome.status)},
                         {"issues", issues_json(outcome.issues)}}
                 .dump();
           })
      .def("quality_check",
           [](const Corpus& c, const std::string& minimum) {
             return issues_json(filter_severity(quality_check(c), parse_enum<Severity>(minimum))).dump();
           },
           py::arg("minimum") = "Info")
      .def("duplicates",
           [](const Corpus& c, double threshold) {
             Json out = Json::array();
             for (const auto& cl : dedupe_corpus(c, threshold)) {
               out.push_back({{"members", cl.members}, {"match_kind", to_string(cl.match_kind)}, {"score", cl.score}});
             }
             return out.dump();
           },
           py::arg("threshold") = kDefaultFuzzyThreshold)
      .def("report",
           [](const Corpus& c, const std::string& name, const std::map<std::string, std::string>& params) {
             return render_report(c, name, params).body;
           },
           py::arg("name"), py::arg("params") = std::map<std::string, std::string>{})
      .def("export",
           [](const Corpus& c, const std::filesystem::path& path, const std::string& format) {
             auto f = parse_export_format(format);
             if (!f) throw Error(ErrorCode::InvalidArgument, "unknown export format '" + format + "'");
             export_corpus(c, path, *f);
           },
           py::arg("path"), py::arg("format") = "jsonl");
}
