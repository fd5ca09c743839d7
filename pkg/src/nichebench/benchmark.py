"""Cross-institution comparison profiles for radar-style charts.

Up to five chosen institutions are compared per indicator: each indicator
column is rescaled so the best of the chosen set sits at 100, and actual
values ride along for labels. No publication threshold applies here; the
user compares whoever they picked. Chart rendering is the client's job.
"""

from __future__ import annotations

from dataclasses import dataclass

from .corpus import Corpus
from .errors import InvalidQuery, TooManyInstitutions
from .indicators import indicator_vector

MAX_INSTITUTIONS = 5


@dataclass(frozen=True)
class BenchmarkEntry:
    institution_id: str
    name: str
    actual: tuple[float, float, float, float, float]
    pct: tuple[float, float, float, float, float]


@dataclass(frozen=True)
class BenchmarkProfile:
    subject_code: int
    level: int
    year_window: tuple[int, int]
    entries: tuple[BenchmarkEntry, ...]  # in the caller's institution order
    degenerate: tuple[bool, bool, bool, bool, bool]  # per indicator: column all zero


def benchmark(
    corpus: Corpus,
    institution_ids: list[str],
    subject_code: int,
    level: int,
    year_window: tuple[int, int],
) -> BenchmarkProfile:
    """Per-indicator max-normalized profile of 1-5 distinct institutions.

    A degenerate (all-zero) indicator column yields 0 everywhere and is
    flagged so chart consumers can tell "all zero" from "all tied at max".
    """
    if not institution_ids:
        raise InvalidQuery("benchmark needs at least one institution")
    if len(institution_ids) > MAX_INSTITUTIONS:
        raise TooManyInstitutions(len(institution_ids), MAX_INSTITUTIONS)
    if len(set(institution_ids)) != len(institution_ids):
        raise InvalidQuery(f"duplicate institution ids: {institution_ids}")

    vectors = [
        (
            corpus.institution(iid),
            indicator_vector(corpus, iid, subject_code, level, year_window),
        )
        for iid in institution_ids
    ]

    columns = list(zip(*(vec.as_tuple() for _, vec in vectors)))
    maxima = [max(col) for col in columns]
    degenerate = tuple(peak == 0 for peak in maxima)

    entries = []
    for inst, vec in vectors:
        actual = vec.as_tuple()
        pct = tuple(
            0.0 if maxima[i] == 0 else 100.0 * (actual[i] / maxima[i]) for i in range(5)
        )
        entries.append(
            BenchmarkEntry(
                institution_id=inst.institution_id,
                name=inst.name,
                actual=actual,
                pct=pct,
            )
        )

    return BenchmarkProfile(
        subject_code=subject_code,
        level=level,
        year_window=year_window,
        entries=tuple(entries),
        degenerate=degenerate,
    )


def benchmark_multi(
    corpus: Corpus,
    institution_ids: list[str],
    subject_specs: list[tuple[int, int]],
    year_window: tuple[int, int],
) -> list[BenchmarkProfile]:
    """One independently normalized profile per (subject_code, level) spec."""
    return [
        benchmark(corpus, institution_ids, code, level, year_window)
        for code, level in subject_specs
    ]
