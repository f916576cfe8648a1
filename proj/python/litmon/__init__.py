"""Software-centric literature monitoring: corpus, ingest, curation and reports."""

import json

from . import _litmon
from ._litmon import LitmonError, fixture_names, normalize_doi, report_names, title_similarity

__all__ = [
    "Corpus",
    "LitmonError",
    "fixture_names",
    "normalize_doi",
    "parse_bibtex",
    "parse_ris",
    "report_names",
    "title_similarity",
]


def parse_bibtex(text):
    return json.loads(_litmon.parse_bibtex(text))


def parse_ris(text):
    return json.loads(_litmon.parse_ris(text))


class Corpus:
    """A corpus of document records with their entities and links."""

    def __init__(self, core=None):
        self._core = core if core is not None else _litmon.Corpus()
        self.load_issues = []

    @classmethod
    def fixture(cls, name):
        return cls(_litmon.Corpus.fixture(name))

    @classmethod
    def load(cls, path):
        core, issues = _litmon.Corpus.load(str(path))
        corpus = cls(core)
        corpus.load_issues = json.loads(issues)
        return corpus

    @classmethod
    def from_text(cls, text):
        core, issues = _litmon.Corpus.from_text(text)
        corpus = cls(core)
        corpus.load_issues = json.loads(issues)
        return corpus

    def save(self, path):
        self._core.save(str(path))

    def to_text(self):
        return self._core.to_text()

    def __len__(self):
        return len(self._core)

    def __eq__(self, other):
        return isinstance(other, Corpus) and self._core == other._core

    def record_ids(self):
        return self._core.record_ids()

    def record(self, record_id):
        return json.loads(self._core.record(record_id))

    def query(self, filter_expr=""):
        return self._core.query(filter_expr)

    def neighborhood(self, entity_id, depth=1):
        return json.loads(self._core.neighborhood(entity_id, depth))

    def ingest_bibtex(self, text):
        return json.loads(self._core.ingest_bibtex(text))

    def ingest_ris(self, text):
        return json.loads(self._core.ingest_ris(text))

    def ingest_doi(self, doi, offline_dir):
        return json.loads(self._core.ingest_doi(doi, str(offline_dir)))

    def annotate(self, record_id, annotation, curator=""):
        if not isinstance(annotation, str):
            annotation = json.dumps(annotation)
        return json.loads(self._core.annotate(record_id, annotation, curator))

    def gate(self, record_id):
        return json.loads(self._core.gate(record_id))

    def quality_check(self, minimum="Info"):
        return json.loads(self._core.quality_check(minimum))

    def duplicates(self, threshold=0.90):
        return json.loads(self._core.duplicates(threshold))

    def report(self, name, **params):
        """Report bytes as text; JSON reports can be decoded with json.loads."""
        return self._core.report(name, {k: _param(v) for k, v in params.items()})

    def export(self, path, fmt="jsonl"):
        self._core.export(str(path), fmt)


def _param(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)
