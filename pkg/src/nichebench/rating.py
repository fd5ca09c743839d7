"""Normalize -> weight -> score -> band rating pipeline.

For a chosen scope (region, subject, window) every institution clearing the
minimum-publication threshold gets its five indicators normalized against
the scope maxima, weighted, summed into a grand total, rescaled to a 0-100
percentage against the best total, and bucketed into bands 1 (best) to 10.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .corpus import ALL_REGIONS, Corpus, InstitutionRecord
from .errors import EmptyScope, InsufficientTaxonomy, InvalidQuery, OutOfRange
from .indicators import IndicatorVector, indicator_vector

DEFAULT_MIN_PUBS = 40
OVERALL_SUBJECT_COUNT = 15


@dataclass(frozen=True)
class WeightScheme:
    """Per-indicator weights in canonical order (pubs, cites, h, snip, cpp).

    The engine only requires non-negative weights with at least one positive:
    scoring is invariant under scaling all weights by any c > 0, so the 0-100
    slider range is enforced at the input boundaries (CLI, HTTP), not here.
    """

    w_pubs: float
    w_cites: float
    w_h: float
    w_snip: float
    w_cpp: float

    def as_tuple(self) -> tuple[float, float, float, float, float]:
        return (self.w_pubs, self.w_cites, self.w_h, self.w_snip, self.w_cpp)

    def validate(self) -> "WeightScheme":
        values = self.as_tuple()
        if any(not math.isfinite(w) or w < 0 for w in values):
            raise InvalidQuery(f"weights must be finite and >= 0, got {values}")
        if not any(w > 0 for w in values):
            raise InvalidQuery("at least one weight must be positive")
        return self

    def scaled(self, factor: float) -> "WeightScheme":
        return WeightScheme(*(w * factor for w in self.as_tuple()))


PRESETS: Mapping[str, WeightScheme] = {
    "volume": WeightScheme(100, 100, 100, 0, 0),
    "quality": WeightScheme(0, 0, 0, 100, 100),
    "equal": WeightScheme(50, 50, 50, 50, 50),
}


def resolve_weights(value) -> WeightScheme:
    """Accept a WeightScheme, a preset name, or five numbers."""
    if isinstance(value, WeightScheme):
        return value.validate()
    if isinstance(value, str):
        try:
            return PRESETS[value.lower()]
        except KeyError:
            raise InvalidQuery(f"unknown weight preset: {value!r}") from None
    try:
        numbers = [float(v) for v in value]
    except (TypeError, ValueError):
        raise InvalidQuery(f"weights must be a preset name or five numbers, got {value!r}") from None
    if len(numbers) != 5:
        raise InvalidQuery(f"expected five weights, got {len(numbers)}")
    return WeightScheme(*numbers).validate()


@dataclass(frozen=True)
class RatingQuery:
    subject_code: int
    level: int
    year_window: tuple[int, int]
    region: str = ALL_REGIONS
    weights: WeightScheme = PRESETS["equal"]
    min_pubs: int = DEFAULT_MIN_PUBS

    def validate(self) -> "RatingQuery":
        start, end = self.year_window
        if start > end:
            raise InvalidQuery(f"year window start {start} is after end {end}")
        if self.min_pubs < 0:
            raise InvalidQuery(f"min_pubs must be >= 0, got {self.min_pubs}")
        self.weights.validate()
        return self


@dataclass(frozen=True)
class RatingRow:
    institution_id: str
    name: str
    vector: IndicatorVector
    grand_total: float
    percentage: float
    band: int


def normalize(values: Sequence[float]) -> list[float]:
    """Divide by the column maximum; an all-zero column maps to all zeros."""
    peak = max(values, default=0.0)
    if peak == 0:
        return [0.0 for _ in values]
    return [v / peak for v in values]


def weighted_total(normalized: Sequence[float], weights: WeightScheme) -> float:
    return sum(w * n for w, n in zip(weights.as_tuple(), normalized))


def percentage_scores(grand_totals: Sequence[float]) -> list[float]:
    """Totals rescaled so the best becomes 100; all-zero stays all-zero."""
    if not grand_totals:
        raise EmptyScope("no grand totals to score")
    peak = max(grand_totals)
    if peak == 0:
        return [0.0 for _ in grand_totals]
    # divide before scaling: t == peak must land on exactly 100.0
    return [100.0 * (t / peak) for t in grand_totals]


def band(percentage: float) -> int:
    """Decile band 1..10 for a percentage score.

    Bands are half-open on multiples of ten, (100-10k, 110-10k], matching
    the integer ranges 91-100 -> 1 down to 1-10 -> 10; a score of exactly 0
    falls into band 10.
    """
    if not (0 <= percentage <= 100):
        raise OutOfRange("percentage", percentage)
    if percentage == 0:
        return 10
    return 11 - math.ceil(percentage / 10)


def score_table(
    entries: Sequence[tuple[InstitutionRecord, IndicatorVector]],
    weights: WeightScheme,
) -> list[RatingRow]:
    """Run the scoring pipeline over precomputed (institution, vector) pairs.

    Normalization happens per indicator across exactly these entries, so the
    caller decides who is in scope (thresholds are applied before this point
    and excluded institutions cannot influence the maxima).
    """
    weights.validate()
    if not entries:
        raise EmptyScope()
    columns = list(zip(*(vec.as_tuple() for _, vec in entries)))
    normalized_columns = [normalize(col) for col in columns]
    totals = [
        weighted_total([col[i] for col in normalized_columns], weights)
        for i in range(len(entries))
    ]
    percentages = percentage_scores(totals)
    rows = [
        RatingRow(
            institution_id=inst.institution_id,
            name=inst.name,
            vector=vec,
            grand_total=total,
            percentage=pct,
            band=band(pct),
        )
        for (inst, vec), total, pct in zip(entries, totals, percentages)
    ]
    rows.sort(key=lambda r: (-r.percentage, -r.vector.total_pubs, r.name))
    return rows


def rate_subject(corpus: Corpus, query: RatingQuery) -> list[RatingRow]:
    """Banded rating table for one subject cell.

    Sorted by percentage descending, ties by publication count descending,
    then institution name ascending.
    """
    query.validate()
    corpus.check_window(*query.year_window)
    entries = []
    for inst in corpus.institutions_in_region(query.region):
        vec = indicator_vector(
            corpus, inst.institution_id, query.subject_code, query.level, query.year_window
        )
        if vec.total_pubs >= query.min_pubs:
            entries.append((inst, vec))
    if not entries:
        raise EmptyScope(
            f"no institution in region {query.region} has >= {query.min_pubs} publications "
            f"in subject {query.subject_code}"
        )
    return score_table(entries, query.weights)


@dataclass(frozen=True)
class OverallMatrix:
    """Band per (institution, level-1 subject) for the busiest subjects."""

    region: str
    preset: str
    min_pubs: int
    year_window: tuple[int, int]
    subject_codes: tuple[int, ...]
    subject_names: tuple[str, ...]
    institution_ids: tuple[str, ...]
    institution_names: tuple[str, ...]
    bands: tuple[tuple[int | None, ...], ...] = field(repr=False)  # rows follow institution_ids


def top_level1_subjects(corpus: Corpus, count: int = OVERALL_SUBJECT_COUNT) -> list[int]:
    """The ``count`` level-1 subjects with the most in-window publications."""
    level1 = corpus.taxonomy.level_codes(1)
    if len(level1) < count:
        raise InsufficientTaxonomy(len(level1), count)
    memberships = corpus.journal_subjects(1)
    tallies = {code: 0 for code in level1}
    for pub in corpus.publications:
        if corpus.year_min <= pub.year <= corpus.year_max:
            for code in memberships[pub.journal_id]:
                tallies[code] += 1
    ranked = sorted(level1, key=lambda code: (-tallies[code], code))
    return ranked[:count]


def rate_overall(
    corpus: Corpus,
    region: str = ALL_REGIONS,
    preset: str = "equal",
    min_pubs: int = DEFAULT_MIN_PUBS,
) -> OverallMatrix:
    """Band matrix over the top level-1 subjects for one weight preset.

    An institution below the threshold in some subject (or a subject where
    nobody passes it) gets None there.
    """
    if preset.lower() not in PRESETS:
        raise InvalidQuery(f"preset must be one of {sorted(PRESETS)}, got {preset!r}")
    preset = preset.lower()
    subjects = top_level1_subjects(corpus)
    window = (corpus.year_min, corpus.year_max)
    institutions = corpus.institutions_in_region(region)

    columns: list[dict[str, int]] = []
    for code in subjects:
        query = RatingQuery(
            subject_code=code,
            level=1,
            year_window=window,
            region=region,
            weights=PRESETS[preset],
            min_pubs=min_pubs,
        )
        try:
            table = rate_subject(corpus, query)
        except EmptyScope:
            columns.append({})
            continue
        columns.append({row.institution_id: row.band for row in table})

    return OverallMatrix(
        region=region,
        preset=preset,
        min_pubs=min_pubs,
        year_window=window,
        subject_codes=tuple(subjects),
        subject_names=tuple(corpus.taxonomy.nodes[c].name for c in subjects),
        institution_ids=tuple(inst.institution_id for inst in institutions),
        institution_names=tuple(inst.name for inst in institutions),
        bands=tuple(
            tuple(col.get(inst.institution_id) for col in columns) for inst in institutions
        ),
    )
