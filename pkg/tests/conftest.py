import csv
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import CsvOracle

from nichebench import load_corpus_dir

FIXTURE_DIR = Path(__file__).parent.parent / "data" / "fixture"

FULL_WINDOW = (2008, 2013)


@pytest.fixture(scope="session")
def fixture_dir() -> Path:
    return FIXTURE_DIR


@pytest.fixture(scope="session")
def corpus():
    return load_corpus_dir(FIXTURE_DIR)


@pytest.fixture(scope="session")
def oracle():
    return CsvOracle(FIXTURE_DIR)


# minimal taxonomy shared by synthetic-corpus tests: two disciplines, one
# with two sub-disciplines of two leaves each, one with a single chain
MINI_TAXONOMY = [
    (100, "Alpha Sciences (all)", 1, ""),
    (110, "Alpha Theory", 2, 100),
    (111, "Alpha Theory Leaf A", 3, 110),
    (112, "Alpha Theory Leaf B", 3, 110),
    (120, "Alpha Practice", 2, 100),
    (121, "Alpha Practice Leaf", 3, 120),
    (200, "Beta Studies (all)", 1, ""),
    (210, "Beta Methods", 2, 200),
    (211, "Beta Methods Leaf", 3, 210),
]


def write_rows(path: Path, header: list[str], rows) -> None:
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


@pytest.fixture
def corpus_factory(tmp_path):
    """Write a small corpus directory from row lists and return its path.

    Row shapes mirror the CSV column orders; taxonomy defaults to
    MINI_TAXONOMY and snip defaults to one row per journal with no value.
    """

    def build(
        publications,
        journals,
        institutions,
        taxonomy=None,
        snip=None,
        name="corpus",
    ) -> Path:
        d = tmp_path / name
        d.mkdir(parents=True, exist_ok=True)
        write_rows(
            d / "taxonomy.csv",
            ["code", "name", "level", "parent_code"],
            taxonomy if taxonomy is not None else MINI_TAXONOMY,
        )
        write_rows(d / "institutions.csv", ["institution_id", "name", "region"], institutions)
        write_rows(d / "journals.csv", ["journal_id", "title", "asjc_codes"], journals)
        if snip is None:
            snip = [(row[0], "") for row in journals]
        write_rows(d / "snip.csv", ["journal_id", "snip_2010"], snip)
        write_rows(
            d / "publications.csv",
            ["pub_id", "institution_id", "journal_id", "year", "citations", "title"],
            publications,
        )
        return d

    return build
