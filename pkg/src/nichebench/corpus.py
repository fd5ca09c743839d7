"""CSV ingestion into an immutable, referentially closed in-memory corpus.

Five comma-delimited UTF-8 files (RFC-4180 quoting) make up a corpus:

    publications.csv  pub_id,institution_id,journal_id,year,citations,title
    journals.csv      journal_id,title,asjc_codes        (codes ;-separated)
    institutions.csv  institution_id,name,region
    snip.csv          journal_id,snip_2010               (blank = absent)
    taxonomy.csv      code,name,level,parent_code        (parent blank = root)

Structural problems (missing files, malformed rows, duplicate ids, dangling
references) raise during loading. Softer data issues — journals without a
SNIP value, publications outside the declared year window, institutions
with zero publications — are retained and surfaced by validate_corpus().
"""

from __future__ import annotations

import csv
import hashlib
import json
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from types import MappingProxyType
from typing import Iterator, Mapping, Sequence

from .errors import (
    DanglingReference,
    DuplicateId,
    InvalidQuery,
    MalformedRow,
    MissingFile,
    UnknownInstitution,
    UnknownRegion,
)
from .taxonomy import SubjectTaxonomy, load_taxonomy

DEFAULT_YEAR_MIN = 2008
DEFAULT_YEAR_MAX = 2013

ALL_REGIONS = "ALL"

FILE_NAMES = {
    "publications": "publications.csv",
    "journals": "journals.csv",
    "institutions": "institutions.csv",
    "snip": "snip.csv",
    "taxonomy": "taxonomy.csv",
}


@dataclass(frozen=True)
class PublicationRecord:
    pub_id: str
    institution_id: str
    journal_id: str
    year: int
    citations: int  # snapshot total from the source extract
    title: str


@dataclass(frozen=True)
class JournalRecord:
    journal_id: str
    title: str
    asjc_codes: frozenset[int]  # level-3 codes only
    snip_2010: float | None  # None = absent in snip.csv


@dataclass(frozen=True)
class InstitutionRecord:
    institution_id: str
    name: str
    region: str


@dataclass(frozen=True)
class Corpus:
    """Immutable snapshot of the five input files, safe for concurrent reads."""

    publications: tuple[PublicationRecord, ...]
    journals: Mapping[str, JournalRecord]
    institutions: Mapping[str, InstitutionRecord]
    taxonomy: SubjectTaxonomy
    year_min: int
    year_max: int

    def __post_init__(self):
        object.__setattr__(self, "publications", tuple(self.publications))
        object.__setattr__(self, "journals", MappingProxyType(dict(self.journals)))
        object.__setattr__(self, "institutions", MappingProxyType(dict(self.institutions)))

    # -- derived, lazily cached indexes (pure functions of the frozen state) --

    @cached_property
    def publications_by_institution(self) -> Mapping[str, tuple[PublicationRecord, ...]]:
        index: dict[str, list[PublicationRecord]] = {i: [] for i in self.institutions}
        for pub in self.publications:
            index[pub.institution_id].append(pub)
        return MappingProxyType({k: tuple(v) for k, v in index.items()})

    @cached_property
    def regions(self) -> frozenset[str]:
        return frozenset(inst.region for inst in self.institutions.values())

    def journal_subjects(self, level: int) -> Mapping[str, frozenset[int]]:
        """journal_id -> de-duplicated subject memberships at ``level``."""
        cache = self._journal_subject_cache
        if level not in cache:
            cache[level] = MappingProxyType(
                {
                    jid: self.taxonomy.subjects_of_codes(j.asjc_codes, level)
                    for jid, j in self.journals.items()
                }
            )
        return cache[level]

    @cached_property
    def _journal_subject_cache(self) -> dict:
        return {}

    def institution(self, institution_id: str) -> InstitutionRecord:
        try:
            return self.institutions[institution_id]
        except KeyError:
            raise UnknownInstitution(institution_id) from None

    def institutions_in_region(self, region: str) -> list[InstitutionRecord]:
        if region != ALL_REGIONS and region not in self.regions:
            raise UnknownRegion(region)
        out = [
            inst
            for inst in self.institutions.values()
            if region == ALL_REGIONS or inst.region == region
        ]
        return sorted(out, key=lambda i: i.institution_id)

    def check_window(self, start: int, end: int) -> None:
        if start > end:
            raise InvalidQuery(f"year window start {start} is after end {end}")
        if start < self.year_min or end > self.year_max:
            raise InvalidQuery(
                f"year window {start}:{end} outside corpus window "
                f"{self.year_min}:{self.year_max}"
            )

    def pubs_in_window(self, pubs: Sequence[PublicationRecord], start: int, end: int) -> Iterator[PublicationRecord]:
        return (p for p in pubs if start <= p.year <= end)

    def summary(self) -> dict:
        """Row counts plus a content digest; byte-identical for identical inputs."""
        digest = hashlib.sha256()
        for pub in sorted(self.publications, key=lambda p: p.pub_id):
            digest.update(
                f"P|{pub.pub_id}|{pub.institution_id}|{pub.journal_id}|{pub.year}|{pub.citations}\n".encode()
            )
        for jid in sorted(self.journals):
            j = self.journals[jid]
            codes = ";".join(str(c) for c in sorted(j.asjc_codes))
            digest.update(f"J|{jid}|{codes}|{j.snip_2010}\n".encode())
        for iid in sorted(self.institutions):
            inst = self.institutions[iid]
            digest.update(f"I|{iid}|{inst.region}\n".encode())
        for code in sorted(self.taxonomy.nodes):
            node = self.taxonomy.nodes[code]
            digest.update(f"S|{code}|{node.level}|{node.parent_code}\n".encode())
        return {
            "publications": len(self.publications),
            "journals": len(self.journals),
            "institutions": len(self.institutions),
            "subjects": len(self.taxonomy),
            "year_min": self.year_min,
            "year_max": self.year_max,
            "digest": digest.hexdigest(),
        }


@dataclass(frozen=True)
class ValidationReport:
    errors: tuple[str, ...]
    warnings: tuple[str, ...]
    counts: Mapping[str, int]

    @property
    def ok(self) -> bool:
        return not self.errors

    def to_dict(self) -> dict:
        return {
            "errors": list(self.errors),
            "warnings": list(self.warnings),
            "counts": dict(self.counts),
        }


def _open_csv(path: Path, expected_header: list[str]) -> Iterator[tuple[int, dict]]:
    if not path.is_file():
        raise MissingFile(path)
    with path.open(newline="", encoding="utf-8-sig") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != expected_header:
            raise MalformedRow(str(path), 1, f"header must be {','.join(expected_header)}")
        for lineno, row in enumerate(reader, start=2):
            if None in row or any(v is None for v in row.values()):
                raise MalformedRow(str(path), lineno, "wrong number of fields")
            yield lineno, row


def _parse_int(path: Path, lineno: int, field: str, raw: str, minimum: int | None = None) -> int:
    try:
        value = int(raw)
    except (TypeError, ValueError):
        raise MalformedRow(str(path), lineno, f"{field} must be an integer, got {raw!r}") from None
    if minimum is not None and value < minimum:
        raise MalformedRow(str(path), lineno, f"{field} must be >= {minimum}, got {value}")
    return value


def load_corpus(
    publications_path: str | Path,
    journals_path: str | Path,
    institutions_path: str | Path,
    taxonomy_path: str | Path,
    snip_path: str | Path,
    year_min: int = DEFAULT_YEAR_MIN,
    year_max: int = DEFAULT_YEAR_MAX,
) -> Corpus:
    """Parse the five CSV files into a referentially closed Corpus.

    Raises MissingFile, MalformedRow, DuplicateId or DanglingReference on the
    first structural problem. Publications dated outside [year_min, year_max]
    are kept (queries filter by window); validate_corpus flags them.
    """
    taxonomy = load_taxonomy(taxonomy_path)

    institutions: dict[str, InstitutionRecord] = {}
    inst_path = Path(institutions_path)
    for lineno, row in _open_csv(inst_path, ["institution_id", "name", "region"]):
        iid = row["institution_id"].strip()
        if not iid:
            raise MalformedRow(str(inst_path), lineno, "empty institution_id")
        if iid in institutions:
            raise DuplicateId("institution", iid)
        region = row["region"].strip()
        if not region or region == ALL_REGIONS:
            raise MalformedRow(str(inst_path), lineno, f"invalid region {row['region']!r}")
        institutions[iid] = InstitutionRecord(iid, row["name"].strip(), region)

    snip: dict[str, float] = {}
    sp = Path(snip_path)
    for lineno, row in _open_csv(sp, ["journal_id", "snip_2010"]):
        jid = row["journal_id"].strip()
        if jid in snip:
            raise DuplicateId("snip", jid)
        raw = row["snip_2010"].strip()
        if raw == "":
            continue  # absent SNIP: journal stays in the corpus, flagged later
        try:
            value = float(raw)
        except ValueError:
            raise MalformedRow(str(sp), lineno, f"snip_2010 must be a number, got {raw!r}") from None
        if value < 0:
            raise MalformedRow(str(sp), lineno, f"snip_2010 must be >= 0, got {value}")
        snip[jid] = value

    journals: dict[str, JournalRecord] = {}
    jp = Path(journals_path)
    for lineno, row in _open_csv(jp, ["journal_id", "title", "asjc_codes"]):
        jid = row["journal_id"].strip()
        if not jid:
            raise MalformedRow(str(jp), lineno, "empty journal_id")
        if jid in journals:
            raise DuplicateId("journal", jid)
        raw_codes = [c.strip() for c in row["asjc_codes"].split(";") if c.strip()]
        if not raw_codes:
            raise MalformedRow(str(jp), lineno, "journal must carry at least one subject code")
        codes = set()
        for raw in raw_codes:
            code = _parse_int(jp, lineno, "asjc code", raw)
            if code not in taxonomy.nodes:
                raise DanglingReference("subject", str(code), f"journal {jid}")
            if taxonomy.nodes[code].level != 3:
                raise MalformedRow(
                    str(jp), lineno, f"journal codes must be level 3, {code} is level {taxonomy.nodes[code].level}"
                )
            codes.add(code)
        journals[jid] = JournalRecord(jid, row["title"].strip(), frozenset(codes), snip.get(jid))

    for jid in snip:
        if jid not in journals:
            raise DanglingReference("journal", jid, "snip.csv")

    publications: list[PublicationRecord] = []
    seen_pub_ids: set[str] = set()
    pp = Path(publications_path)
    header = ["pub_id", "institution_id", "journal_id", "year", "citations", "title"]
    for lineno, row in _open_csv(pp, header):
        pid = row["pub_id"].strip()
        if not pid:
            raise MalformedRow(str(pp), lineno, "empty pub_id")
        if pid in seen_pub_ids:
            raise DuplicateId("publication", pid)
        seen_pub_ids.add(pid)
        iid = row["institution_id"].strip()
        if iid not in institutions:
            raise DanglingReference("institution", iid, f"publication {pid}")
        jid = row["journal_id"].strip()
        if jid not in journals:
            raise DanglingReference("journal", jid, f"publication {pid}")
        year = _parse_int(pp, lineno, "year", row["year"])
        citations = _parse_int(pp, lineno, "citations", row["citations"], minimum=0)
        publications.append(PublicationRecord(pid, iid, jid, year, citations, row["title"].strip()))

    return Corpus(
        publications=tuple(publications),
        journals=journals,
        institutions=institutions,
        taxonomy=taxonomy,
        year_min=year_min,
        year_max=year_max,
    )


def load_corpus_dir(data_dir: str | Path, year_min: int = DEFAULT_YEAR_MIN, year_max: int = DEFAULT_YEAR_MAX) -> Corpus:
    """load_corpus over the canonical file names inside ``data_dir``."""
    d = Path(data_dir)
    return load_corpus(
        d / FILE_NAMES["publications"],
        d / FILE_NAMES["journals"],
        d / FILE_NAMES["institutions"],
        d / FILE_NAMES["taxonomy"],
        d / FILE_NAMES["snip"],
        year_min=year_min,
        year_max=year_max,
    )


def validate_corpus(corpus: Corpus) -> ValidationReport:
    """Report-only sweep over a loaded corpus; never mutates anything.

    Warnings cover journals without SNIP, publications outside the declared
    window, and institutions with zero publications. Errors would indicate a
    broken loader invariant and are re-checked defensively.
    """
    errors: list[str] = []
    warnings: list[str] = []

    for pub in corpus.publications:
        if pub.journal_id not in corpus.journals:
            errors.append(f"publication {pub.pub_id} references unknown journal {pub.journal_id}")
        if pub.institution_id not in corpus.institutions:
            errors.append(
                f"publication {pub.pub_id} references unknown institution {pub.institution_id}"
            )
        if pub.citations < 0:
            errors.append(f"publication {pub.pub_id} has negative citations")

    no_snip = sorted(jid for jid, j in corpus.journals.items() if j.snip_2010 is None)
    warnings.extend(f"journal {jid} has no SNIP value" for jid in no_snip)

    out_of_window = sorted(
        pub.pub_id
        for pub in corpus.publications
        if not (corpus.year_min <= pub.year <= corpus.year_max)
    )
    warnings.extend(
        f"publication {pid} dated outside window {corpus.year_min}-{corpus.year_max}"
        for pid in out_of_window
    )

    idle = sorted(
        iid for iid, pubs in corpus.publications_by_institution.items() if not pubs
    )
    warnings.extend(f"institution {iid} has no publications" for iid in idle)

    return ValidationReport(
        errors=tuple(errors),
        warnings=tuple(warnings),
        counts=MappingProxyType(
            {
                "publications": len(corpus.publications),
                "journals": len(corpus.journals),
                "institutions": len(corpus.institutions),
                "subjects": len(corpus.taxonomy),
                "journals_without_snip": len(no_snip),
                "publications_out_of_window": len(out_of_window),
                "institutions_without_publications": len(idle),
            }
        ),
    )
