"""The five per-cell bibliometric indicators.

A cell is one (institution, subject, level, year-window) aggregation unit.
Indicators: publication count, total citations, h-index, share of
publications in top-quartile journals by 2010 SNIP, and citations per
paper. All functions are pure over the immutable Corpus.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .corpus import Corpus, PublicationRecord
from .errors import LevelMismatch

# canonical indicator order used by every table, profile and wire format
INDICATORS = ("pubs", "cites", "h", "pct_top_snip", "cpp")


@dataclass(frozen=True)
class IndicatorVector:
    total_pubs: int
    total_cites: int
    h_index: int
    pct_top_snip: float  # in [0, 100]
    cpp: float

    def as_tuple(self) -> tuple[float, float, float, float, float]:
        """Values in canonical INDICATORS order."""
        return (self.total_pubs, self.total_cites, self.h_index, self.pct_top_snip, self.cpp)


ZERO_VECTOR = IndicatorVector(0, 0, 0, 0.0, 0.0)


def h_index(citation_counts: Iterable[int]) -> int:
    """Largest h such that at least h papers have >= h citations each."""
    ranked = sorted(citation_counts, reverse=True)
    h = 0
    for i, cites in enumerate(ranked):
        if cites >= i + 1:
            h = i + 1
        else:
            break
    return h


def cpp(total_cites: float, total_pubs: int) -> float:
    """Citations per paper; defined as 0 for an empty cell."""
    if total_pubs == 0:
        return 0.0
    return total_cites / total_pubs


@dataclass(frozen=True)
class SnipQuartileTable:
    """Per level-3 subject: journal ids in the top 25% by 2010 SNIP.

    Journals without a SNIP value never rank. Ties at the quartile cutoff
    are all admitted, so a set may exceed ceil(0.25 * n).
    """

    top_by_subject: Mapping[int, frozenset[str]]

    def __post_init__(self):
        object.__setattr__(self, "top_by_subject", MappingProxyType(dict(self.top_by_subject)))

    def top(self, leaf_code: int) -> frozenset[str]:
        return self.top_by_subject.get(leaf_code, frozenset())

    def journals_in_scope(self, leaf_codes: Iterable[int]) -> frozenset[str]:
        """Union of the top sets across the given level-3 codes."""
        out: set[str] = set()
        for code in leaf_codes:
            out |= self.top(code)
        return frozenset(out)


def build_snip_quartiles(corpus: Corpus) -> SnipQuartileTable:
    """Rank each level-3 subject's SNIP-bearing journals and keep the top 25%.

    The slot count is ceil(0.25 * n); every journal tied with the value at
    the cutoff is included. Cached on the corpus: the result is a pure
    function of its contents.
    """
    cached = corpus.__dict__.get("_snip_quartile_table")
    if cached is not None:
        return cached

    by_subject: dict[int, list[tuple[float, str]]] = {}
    for jid, journal in corpus.journals.items():
        if journal.snip_2010 is None:
            continue
        for code in journal.asjc_codes:
            by_subject.setdefault(code, []).append((journal.snip_2010, jid))

    table: dict[int, frozenset[str]] = {}
    for code in corpus.taxonomy.level_codes(3):
        ranked = sorted(by_subject.get(code, ()), key=lambda pair: (-pair[0], pair[1]))
        if not ranked:
            table[code] = frozenset()
            continue
        slots = math.ceil(0.25 * len(ranked))
        cutoff = ranked[slots - 1][0]
        table[code] = frozenset(jid for snip, jid in ranked if snip >= cutoff)

    result = SnipQuartileTable(table)
    corpus.__dict__["_snip_quartile_table"] = result
    return result


def pct_top_snip(
    publications_in_cell: Sequence[PublicationRecord],
    quartile_table: SnipQuartileTable,
    subject_scope: Iterable[int],
) -> float:
    """Share (0-100) of a cell's publications appearing in top-quartile journals.

    A publication qualifies when its journal is in the top set of any
    level-3 subject within ``subject_scope``. Publications in SNIP-less
    journals still count toward the denominator.
    """
    total = len(publications_in_cell)
    if total == 0:
        return 0.0
    top_journals = quartile_table.journals_in_scope(subject_scope)
    qualifying = sum(1 for pub in publications_in_cell if pub.journal_id in top_journals)
    return 100.0 * qualifying / total


def cell_publications(
    corpus: Corpus,
    institution_id: str,
    subject_code: int,
    level: int,
    year_window: tuple[int, int],
) -> list[PublicationRecord]:
    """The institution's publications inside the window that belong to the
    subject at the stated level (set semantics: one journal with several
    leaf codes under the same ancestor still counts each paper once)."""
    corpus.institution(institution_id)
    node = corpus.taxonomy.node(subject_code)
    if node.level != level:
        raise LevelMismatch(subject_code, level, node.level)
    start, end = year_window
    corpus.check_window(start, end)
    memberships = corpus.journal_subjects(level)
    return [
        pub
        for pub in corpus.publications_by_institution[institution_id]
        if start <= pub.year <= end and subject_code in memberships[pub.journal_id]
    ]


def indicator_vector(
    corpus: Corpus,
    institution_id: str,
    subject_code: int,
    level: int,
    year_window: tuple[int, int],
) -> IndicatorVector:
    """All five indicators for one cell; an empty cell is all zeros."""
    pubs = cell_publications(corpus, institution_id, subject_code, level, year_window)
    if not pubs:
        return ZERO_VECTOR
    total_pubs = len(pubs)
    total_cites = sum(pub.citations for pub in pubs)
    scope = corpus.taxonomy.descendants(subject_code)
    return IndicatorVector(
        total_pubs=total_pubs,
        total_cites=total_cites,
        h_index=h_index(pub.citations for pub in pubs),
        pct_top_snip=pct_top_snip(pubs, build_snip_quartiles(corpus), scope),
        cpp=cpp(total_cites, total_pubs),
    )


__all__ = [
    "INDICATORS",
    "IndicatorVector",
    "ZERO_VECTOR",
    "SnipQuartileTable",
    "h_index",
    "cpp",
    "build_snip_quartiles",
    "pct_top_snip",
    "cell_publications",
    "indicator_vector",
]
