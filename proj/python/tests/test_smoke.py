import json
import os
from pathlib import Path

import pytest

import litmon

DATA = Path(os.environ.get("LITMON_TEST_DATA", Path(__file__).resolve().parents[2] / "tests" / "data"))

BIB = """@article{ashby1999,
  author = {Ashby, Michael F. and Cebon, David},
  title = {Materials selection in mechanical design},
  journal = {Materials \\& Design},
  year = {1999},
  doi = {10.1016/S0261-3069(99)00001-1},
  keywords = {material selection, ashby charts}
}
"""

ANNOTATION = {
    "curator": "smoke",
    "usage": {
        "principal_product": "CES EduPack",
        "usage_context": "Education",
        "flags": {"data_source": True, "materials_selection": True},
    },
    "context": {"raw_field_labels": ["materials engineering"], "research_segment": "Academia"},
}


def test_table1_distribution():
    corpus = litmon.Corpus.fixture("table1")
    assert len(corpus) == 1113
    doc = json.loads(corpus.report("dist", dim="resource-type"))
    counts = {e["label"]: e["count"] for e in doc["data"]["entries"]}
    assert counts == {
        "ReviewedPaper": 596,
        "ConferenceProceedings": 219,
        "Thesis": 163,
        "TechnicalReportWhitePaper": 88,
        "StandardPatent": 47,
    }


def test_ingest_annotate_gate_roundtrip(tmp_path):
    corpus = litmon.Corpus()
    result = corpus.ingest_bibtex(BIB)
    assert result["errors"] == []
    (record_id,) = result["record_ids"]
    record = corpus.record(record_id)
    assert record["doi"] == "10.1016/s0261-3069(99)00001-1"

    annotated = corpus.annotate(record_id, ANNOTATION)
    assert annotated["curation_status"] == "Annotated"
    gate = corpus.gate(record_id)
    assert gate["verdict"] == "Include"
    assert gate["curation_status"] == "Validated"

    path = tmp_path / "corpus.jsonl"
    corpus.save(path)
    assert litmon.Corpus.load(path) == corpus


def test_parse_errors_are_positioned():
    parsed = litmon.parse_bibtex(BIB + "\n@article{broken,\n  title = {Unclosed\n")
    assert len(parsed["records"]) == 1
    assert parsed["errors"] and parsed["errors"][0]["line"] > 1


def test_unknown_record_raises():
    with pytest.raises(litmon.LitmonError):
        litmon.Corpus.fixture("ashby").record("nope")


def test_reports_are_deterministic():
    corpus = litmon.Corpus.fixture("collaboration")
    first = corpus.report("coauthors", min_docs=3)
    assert first == litmon.Corpus.fixture("collaboration").report("coauthors", min_docs=3)
    nodes = {n["label"]: n for n in json.loads(first)["data"]["nodes"]}
    assert nodes["Bontempi, E."]["doc_count"] == 12
    assert nodes["Bontempi, E."]["total_link_strength"] == 27


def test_offline_doi(tmp_path):
    corpus = litmon.Corpus()
    out = corpus.ingest_doi("10.0000/example", DATA / "doi")
    assert corpus.record(out["record_id"])["title"]


def test_csv_export(tmp_path):
    corpus = litmon.Corpus.fixture("two-cliques")
    path = tmp_path / "out.csv"
    corpus.export(path, "csv")
    assert len(path.read_text().splitlines()) == 11
