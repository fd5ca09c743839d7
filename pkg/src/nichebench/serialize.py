"""Deterministic JSON and CSV output contracts.

The HTTP service and the CLI both emit exactly these bytes, so differential
tests can compare bodies to direct engine serialization. JSON carries full
float precision (display rounding is the client's job); the CSV mirrors the
seven-column table layout and rounds the two decimal indicators.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Sequence

from .benchmark import BenchmarkProfile
from .corpus import ValidationReport
from .indicators import INDICATORS
from .rating import OverallMatrix, RatingRow

CSV_HEADER = [
    "University",
    "Publication",
    "Citation",
    "H-index",
    "% Pubs in top 25% SNIP",
    "CPP",
    "Band",
]


def to_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def rating_rows_to_obj(rows: Sequence[RatingRow]) -> list[dict]:
    return [
        {
            "institution": row.institution_id,
            "name": row.name,
            "pubs": row.vector.total_pubs,
            "cites": row.vector.total_cites,
            "h": row.vector.h_index,
            "pct_top_snip": row.vector.pct_top_snip,
            "cpp": row.vector.cpp,
            "percentage": row.percentage,
            "band": row.band,
        }
        for row in rows
    ]


def rating_rows_json(rows: Sequence[RatingRow]) -> str:
    return to_json(rating_rows_to_obj(rows))


def rating_rows_csv(rows: Sequence[RatingRow]) -> str:
    """Seven columns in published-table order; pct/CPP at two decimals."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        v = row.vector
        writer.writerow(
            [
                row.name,
                v.total_pubs,
                v.total_cites,
                v.h_index,
                f"{v.pct_top_snip:.2f}",
                f"{v.cpp:.2f}",
                row.band,
            ]
        )
    return buf.getvalue()


def profile_to_obj(profile: BenchmarkProfile) -> dict:
    return {
        "subject": profile.subject_code,
        "level": profile.level,
        "window": list(profile.year_window),
        "indicators": list(INDICATORS),
        "entries": [
            {
                "institution": entry.institution_id,
                "name": entry.name,
                "actual": list(entry.actual),
                "pct": list(entry.pct),
            }
            for entry in profile.entries
        ],
        "degenerate": list(profile.degenerate),
    }


def profile_json(profile: BenchmarkProfile) -> str:
    return to_json(profile_to_obj(profile))


def overall_to_obj(matrix: OverallMatrix) -> dict:
    return {
        "region": matrix.region,
        "preset": matrix.preset,
        "min_pubs": matrix.min_pubs,
        "window": list(matrix.year_window),
        "subjects": [
            {"code": code, "name": name}
            for code, name in zip(matrix.subject_codes, matrix.subject_names)
        ],
        "institutions": [
            {"institution": iid, "name": name}
            for iid, name in zip(matrix.institution_ids, matrix.institution_names)
        ],
        "bands": [list(row) for row in matrix.bands],
    }


def overall_json(matrix: OverallMatrix) -> str:
    return to_json(overall_to_obj(matrix))


def report_to_obj(report: ValidationReport) -> dict:
    return report.to_dict()
