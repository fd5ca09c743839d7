import csv

import pytest

from nichebench import (
    DanglingReference,
    DuplicateId,
    MalformedRow,
    MissingFile,
    load_corpus_dir,
    validate_corpus,
)

INSTS = [("U1", "First University", "PB"), ("U2", "Second University", "SD")]
JOURNALS = [("J1", "Alpha Journal", "111"), ("J2", "Beta Journal", "211")]


def count_rows(path):
    with path.open(newline="", encoding="utf-8") as fh:
        return sum(1 for _ in csv.DictReader(fh))


def test_fixture_loads_with_counts_matching_files(corpus, fixture_dir):
    summary = corpus.summary()
    assert summary["publications"] == count_rows(fixture_dir / "publications.csv") == 500
    assert summary["journals"] == count_rows(fixture_dir / "journals.csv")
    assert summary["institutions"] == count_rows(fixture_dir / "institutions.csv")
    assert summary["subjects"] == count_rows(fixture_dir / "taxonomy.csv")


def test_load_is_deterministic(fixture_dir, corpus):
    again = load_corpus_dir(fixture_dir)
    assert again.summary() == corpus.summary()


def test_empty_publications_file_is_fine(corpus_factory):
    d = corpus_factory([], JOURNALS, INSTS)
    corpus = load_corpus_dir(d)
    assert len(corpus.publications) == 0


def test_unknown_journal_reference_rejected(corpus_factory):
    d = corpus_factory(
        [("P1", "U1", "J999", 2010, 3, "t")], JOURNALS, INSTS
    )
    with pytest.raises(DanglingReference) as exc:
        load_corpus_dir(d)
    assert "J999" in str(exc.value)


def test_unknown_institution_reference_rejected(corpus_factory):
    d = corpus_factory([("P1", "U9", "J1", 2010, 3, "t")], JOURNALS, INSTS)
    with pytest.raises(DanglingReference):
        load_corpus_dir(d)


def test_duplicate_pub_id_rejected(corpus_factory):
    d = corpus_factory(
        [("P1", "U1", "J1", 2010, 3, "t"), ("P1", "U2", "J2", 2011, 0, "t")],
        JOURNALS,
        INSTS,
    )
    with pytest.raises(DuplicateId):
        load_corpus_dir(d)


def test_missing_file_raises(corpus_factory):
    d = corpus_factory([], JOURNALS, INSTS)
    (d / "snip.csv").unlink()
    with pytest.raises(MissingFile):
        load_corpus_dir(d)


def test_negative_citations_rejected_with_location(corpus_factory):
    d = corpus_factory([("P1", "U1", "J1", 2010, -2, "t")], JOURNALS, INSTS)
    with pytest.raises(MalformedRow) as exc:
        load_corpus_dir(d)
    assert "publications.csv:2" in str(exc.value)


def test_non_integer_year_rejected(corpus_factory):
    d = corpus_factory([("P1", "U1", "J1", "soon", 2, "t")], JOURNALS, INSTS)
    with pytest.raises(MalformedRow):
        load_corpus_dir(d)


def test_wrong_header_rejected(corpus_factory):
    d = corpus_factory([], JOURNALS, INSTS)
    (d / "publications.csv").write_text("id,who,where\n", encoding="utf-8")
    with pytest.raises(MalformedRow):
        load_corpus_dir(d)


def test_journal_with_non_leaf_code_rejected(corpus_factory):
    d = corpus_factory([], [("J1", "Alpha Journal", "110")], INSTS)
    with pytest.raises(MalformedRow):
        load_corpus_dir(d)


def test_snip_for_unknown_journal_rejected(corpus_factory):
    d = corpus_factory([], JOURNALS, INSTS, snip=[("J1", "1.0"), ("J9", "2.0")])
    with pytest.raises(DanglingReference):
        load_corpus_dir(d)


def test_fixture_validation_warnings_are_exactly_snipless_journals(corpus, oracle):
    report = validate_corpus(corpus)
    assert report.ok
    assert report.errors == ()
    # only SNIP-less journals warn: no out-of-window pubs, no idle institutions
    assert len(report.warnings) == len(oracle.snipless)
    assert report.counts["journals_without_snip"] == len(oracle.snipless)
    assert report.counts["publications_out_of_window"] == 0
    assert report.counts["institutions_without_publications"] == 0


def test_all_snip_present_means_no_snip_warnings(corpus_factory):
    d = corpus_factory(
        [("P1", "U1", "J1", 2010, 3, "t")],
        JOURNALS,
        INSTS,
        snip=[("J1", "1.5"), ("J2", "0.4")],
    )
    report = validate_corpus(load_corpus_dir(d))
    assert report.counts["journals_without_snip"] == 0


def test_out_of_window_publication_flagged_not_rejected(corpus_factory):
    d = corpus_factory(
        [("P1", "U1", "J1", 2005, 3, "t"), ("P2", "U2", "J2", 2010, 1, "t")],
        JOURNALS,
        INSTS,
    )
    corpus = load_corpus_dir(d)  # window defaults to 2008-2013
    assert len(corpus.publications) == 2
    report = validate_corpus(corpus)
    assert report.counts["publications_out_of_window"] == 1
    assert any("P1" in w for w in report.warnings)


def test_idle_institution_flagged(corpus_factory):
    d = corpus_factory([("P1", "U1", "J1", 2010, 3, "t")], JOURNALS, INSTS)
    report = validate_corpus(load_corpus_dir(d))
    assert report.counts["institutions_without_publications"] == 1
    assert any("U2" in w for w in report.warnings)


def test_corpus_is_immutable(corpus):
    with pytest.raises(Exception):
        corpus.publications[0].citations = 99
    with pytest.raises(TypeError):
        corpus.journals["JX"] = None
    with pytest.raises((TypeError, AttributeError)):
        corpus.institutions.clear()
    with pytest.raises(Exception):
        corpus.year_min = 1999


def test_validate_does_not_mutate(corpus):
    before = corpus.summary()
    validate_corpus(corpus)
    assert corpus.summary() == before


def test_quoted_fields_round_trip(corpus_factory):
    d = corpus_factory(
        [("P1", "U1", "J1", 2010, 3, 'A title, with "quotes" and, commas')],
        JOURNALS,
        INSTS,
    )
    corpus = load_corpus_dir(d)
    assert corpus.publications[0].title == 'A title, with "quotes" and, commas'
