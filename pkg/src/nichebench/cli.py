"""Batch command-line interface.

    nichebench validate  --data DIR
    nichebench rate      --data DIR --subject CODE --level N [--years A:B]
                         [--weights equal|volume|quality|w1,w2,w3,w4,w5]
                         [--min-pubs N] [--region R] [--out FILE] [--format json|csv]
    nichebench benchmark --data DIR --institutions a,b,c --subject CODE --level N
                         [--years A:B] [--out FILE]
    nichebench serve     --data DIR [--port P] [--host H] [--config FILE] [--no-cors]

Exit codes: 0 success, 1 data or engine errors, 2 usage errors and missing
input files. Output files are byte-stable across runs on identical inputs.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import serialize
from .benchmark import benchmark
from .corpus import (
    ALL_REGIONS,
    DEFAULT_YEAR_MAX,
    DEFAULT_YEAR_MIN,
    load_corpus_dir,
    validate_corpus,
)
from .errors import MissingFile, NichebenchError
from .rating import DEFAULT_MIN_PUBS, PRESETS, RatingQuery, WeightScheme, rate_subject

EXIT_OK = 0
EXIT_DATA_ERROR = 1
EXIT_USAGE = 2


def _parse_years(raw: str) -> tuple[int, int]:
    try:
        start_s, end_s = raw.split(":")
        start, end = int(start_s), int(end_s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected START:END, got {raw!r}") from None
    if start > end:
        raise argparse.ArgumentTypeError(f"start year {start} is after end year {end}")
    return start, end


def _parse_weights(raw: str) -> WeightScheme:
    if raw.lower() in PRESETS:
        return PRESETS[raw.lower()]
    parts = raw.split(",")
    if len(parts) != 5:
        raise argparse.ArgumentTypeError(
            f"expected a preset ({'|'.join(sorted(PRESETS))}) or five comma-separated "
            f"weights in indicator order (pubs,cites,h,snip,cpp), got {raw!r}"
        )
    try:
        values = [float(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"non-numeric weight in {raw!r}") from None
    if any(w < 0 or w > 100 for w in values):
        raise argparse.ArgumentTypeError("weights must be within 0-100")
    if not any(values):
        raise argparse.ArgumentTypeError("at least one weight must be positive")
    return WeightScheme(*values)


def _parse_institutions(raw: str) -> list[str]:
    ids = [part.strip() for part in raw.split(",") if part.strip()]
    if not ids:
        raise argparse.ArgumentTypeError("expected at least one institution id")
    if len(ids) > 5:
        raise argparse.ArgumentTypeError(f"at most 5 institutions, got {len(ids)}")
    if len(set(ids)) != len(ids):
        raise argparse.ArgumentTypeError("duplicate institution ids")
    return ids


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nichebench", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--data", required=True, help="directory with the five corpus CSV files")
        p.add_argument(
            "--years",
            type=_parse_years,
            default=(DEFAULT_YEAR_MIN, DEFAULT_YEAR_MAX),
            metavar="START:END",
            help="inclusive year window (default %(default)s)",
        )

    p = sub.add_parser("validate", help="load the corpus and print a validation report")
    add_common(p)

    p = sub.add_parser("rate", help="write a banded rating table for one subject")
    add_common(p)
    p.add_argument("--subject", type=int, required=True, help="subject code")
    p.add_argument("--level", type=int, required=True, choices=(1, 2, 3))
    p.add_argument("--weights", type=_parse_weights, default=PRESETS["equal"])
    p.add_argument("--min-pubs", type=int, default=DEFAULT_MIN_PUBS)
    p.add_argument("--region", default=ALL_REGIONS)
    p.add_argument("--out", help="output path (stdout when omitted)")
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("benchmark", help="write a radar-ready comparison profile")
    add_common(p)
    p.add_argument(
        "--institutions", type=_parse_institutions, required=True, metavar="ID[,ID...]"
    )
    p.add_argument("--subject", type=int, required=True)
    p.add_argument("--level", type=int, required=True, choices=(1, 2, 3))
    p.add_argument("--out", help="output path (stdout when omitted)")

    p = sub.add_parser("serve", help="run the read-only HTTP API")
    p.add_argument("--data", help="directory with the five corpus CSV files")
    p.add_argument("--config", help="JSON config file")
    p.add_argument("--host")
    p.add_argument("--port", type=int)
    p.add_argument("--no-cors", action="store_true")
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text + ("" if text.endswith("\n") else "\n"))


def cmd_validate(args) -> int:
    corpus = load_corpus_dir(args.data, *args.years)
    report = validate_corpus(corpus)
    for key, value in report.counts.items():
        print(f"{key}: {value}")
    print(f"errors ({len(report.errors)}):")
    for line in report.errors:
        print(f"  {line}")
    print(f"warnings ({len(report.warnings)}):")
    for line in report.warnings:
        print(f"  {line}")
    print("OK" if report.ok else "FAILED")
    return EXIT_OK if report.ok else EXIT_DATA_ERROR


def cmd_rate(args) -> int:
    corpus = load_corpus_dir(args.data, *args.years)
    query = RatingQuery(
        subject_code=args.subject,
        level=args.level,
        year_window=args.years,
        region=args.region,
        weights=args.weights,
        min_pubs=args.min_pubs,
    )
    rows = rate_subject(corpus, query)
    if args.format == "csv":
        _emit(serialize.rating_rows_csv(rows), args.out)
    else:
        _emit(serialize.rating_rows_json(rows), args.out)
    return EXIT_OK


def cmd_benchmark(args) -> int:
    corpus = load_corpus_dir(args.data, *args.years)
    profile = benchmark(corpus, args.institutions, args.subject, args.level, args.years)
    _emit(serialize.profile_json(profile), args.out)
    return EXIT_OK


def cmd_serve(args) -> int:
    # imports here keep the batch commands free of the web stack
    from dataclasses import replace

    import uvicorn

    from .service import ServiceConfig, create_app

    if args.config:
        config = ServiceConfig.from_file(args.config)
    elif args.data:
        config = ServiceConfig(data_dir=args.data)
    else:
        print("serve needs --data or --config", file=sys.stderr)
        return EXIT_USAGE
    config = config.with_env_overrides()
    if args.data:
        config = replace(config, data_dir=args.data)
    if args.host:
        config = replace(config, host=args.host)
    if args.port:
        config = replace(config, port=args.port)
    if args.no_cors:
        config = replace(config, cors=False)

    app = create_app(config)  # loads the corpus; bad data exits before binding
    try:
        uvicorn.run(app, host=config.host, port=config.port, log_level="warning")
    except (OSError, SystemExit) as exc:
        print(f"serve failed: {exc}", file=sys.stderr)
        return EXIT_DATA_ERROR
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "validate": cmd_validate,
        "rate": cmd_rate,
        "benchmark": cmd_benchmark,
        "serve": cmd_serve,
    }
    try:
        return handlers[args.command](args)
    except MissingFile as exc:
        print(f"MissingFile: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NichebenchError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DATA_ERROR


if __name__ == "__main__":
    sys.exit(main())
