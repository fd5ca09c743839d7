import random

import pytest

from oracles import CsvOracle, brute_force_h

from nichebench import (
    LevelMismatch,
    UnknownCode,
    UnknownInstitution,
    build_snip_quartiles,
    cpp,
    h_index,
    indicator_vector,
    load_corpus_dir,
    pct_top_snip,
)

WINDOW = (2008, 2013)


class TestHIndex:
    def test_empty(self):
        assert h_index([]) == 0

    def test_known_values(self):
        # frozen from brute_force_h
        assert brute_force_h([10, 8, 5, 4, 3]) == 4
        assert h_index([10, 8, 5, 4, 3]) == 4
        assert brute_force_h([3, 3, 3, 3, 3, 3]) == 3
        assert h_index([3, 3, 3, 3, 3, 3]) == 3

    def test_order_does_not_matter(self):
        assert h_index([3, 10, 4, 8, 5]) == 4

    def test_matches_brute_force_on_1000_random_multisets(self):
        rnd = random.Random(424242)
        for _ in range(1000):
            counts = [rnd.randint(0, 100) for _ in range(rnd.randint(0, 50))]
            assert h_index(counts) == brute_force_h(counts), counts


class TestCpp:
    @pytest.mark.parametrize(
        "cites,pubs,printed",
        [(6224, 905, 6.88), (1853, 722, 2.57), (2123, 173, 12.27), (3029, 725, 4.18)],
    )
    def test_published_values(self, cites, pubs, printed):
        assert round(cpp(cites, pubs), 2) == pytest.approx(printed, abs=0.01)

    def test_zero_cites(self):
        assert cpp(0, 5) == 0.0

    def test_empty_cell_is_zero_not_error(self):
        assert cpp(0, 0) == 0.0


class TestSnipQuartiles:
    def make(self, corpus_factory, snips, name="q"):
        journals = [(f"J{i}", f"Journal {i}", "111") for i in range(len(snips))]
        snip_rows = [(f"J{i}", s if s is not None else "") for i, s in enumerate(snips)]
        pubs = [("P1", "U1", "J0", 2010, 1, "t")]
        d = corpus_factory(pubs, journals, [("U1", "Uni", "PB")], snip=snip_rows, name=name)
        return load_corpus_dir(d)

    def test_eight_distinct_snips_top_two(self, corpus_factory):
        corpus = self.make(corpus_factory, [8.0, 7.0, 6.0, 5.0, 4.0, 3.0, 2.0, 1.0])
        assert build_snip_quartiles(corpus).top(111) == {"J0", "J1"}

    def test_tie_at_cutoff_admits_all(self, corpus_factory):
        # ceil(0.25 * 5) = 2 slots; the 2.0 tie admits a third journal
        corpus = self.make(corpus_factory, [3.0, 2.0, 2.0, 1.0, 0.5])
        assert build_snip_quartiles(corpus).top(111) == {"J0", "J1", "J2"}

    def test_no_snip_bearing_journals_empty_set(self, corpus_factory):
        corpus = self.make(corpus_factory, [None, None, None])
        assert build_snip_quartiles(corpus).top(111) == frozenset()

    def test_snipless_journals_never_rank(self, corpus_factory):
        corpus = self.make(corpus_factory, [None, 1.0, None, 0.5])
        # two SNIP-bearing journals -> ceil(0.5) = 1 slot
        assert build_snip_quartiles(corpus).top(111) == {"J1"}

    def test_matches_oracle_on_fixture(self, corpus, oracle):
        table = build_snip_quartiles(corpus)
        for leaf in corpus.taxonomy.level_codes(3):
            assert table.top(leaf) == oracle.quartile_set(leaf), leaf


class TestPctTopSnip:
    def test_four_of_ten(self, corpus_factory):
        journals = [("JA", "Top Journal", "111"), ("JB", "Other Journal", "111")]
        snip = [("JA", "5.0"), ("JB", "1.0")]
        pubs = [(f"P{i}", "U1", "JA" if i < 4 else "JB", 2010, 0, "t") for i in range(10)]
        d = corpus_factory(pubs, journals, [("U1", "Uni", "PB")], snip=snip)
        corpus = load_corpus_dir(d)
        table = build_snip_quartiles(corpus)
        assert table.top(111) == {"JA"}
        assert pct_top_snip(corpus.publications, table, [111]) == 40.0

    def test_empty_cell_is_zero(self, corpus):
        assert pct_top_snip([], build_snip_quartiles(corpus), [4201]) == 0.0

    def test_three_of_five_fixture_cell(self, corpus_factory):
        # derived by brute-force membership check below
        journals = [
            ("JA", "Quartile A", "111"),
            ("JB", "Quartile B", "112"),
            ("JC", "Bulk C", "111"),
            ("JD", "Bulk D", "111"),
            ("JE", "Bulk E", "112"),
            ("JF", "Bulk F", "112"),
            ("JG", "Bulk G", "111"),
            ("JH", "Bulk H", "112"),
        ]
        snip = [
            ("JA", "4.0"), ("JB", "3.5"), ("JC", "1.0"), ("JD", "0.9"),
            ("JE", "0.8"), ("JF", "0.7"), ("JG", "0.6"), ("JH", ""),
        ]
        pubs = [
            ("P1", "U1", "JA", 2010, 2, "t"),
            ("P2", "U1", "JA", 2011, 0, "t"),
            ("P3", "U1", "JB", 2012, 5, "t"),
            ("P4", "U1", "JC", 2010, 1, "t"),
            ("P5", "U1", "JH", 2013, 0, "t"),
        ]
        d = corpus_factory(pubs, journals, [("U1", "Uni", "PB")], snip=snip)
        corpus = load_corpus_dir(d)
        oracle = CsvOracle(d)
        top = oracle.quartile_set(111) | oracle.quartile_set(112)
        qualifying = sum(1 for p in corpus.publications if p.journal_id in top)
        assert qualifying == 3
        vec = indicator_vector(corpus, "U1", 110, 2, WINDOW)
        assert vec.pct_top_snip == 60.0


class TestIndicatorVector:
    def test_empty_cell_all_zero(self, corpus):
        # U009 (agriculture) has nothing in Computer Science
        vec = indicator_vector(corpus, "U009", 4000, 1, WINDOW)
        assert vec.as_tuple() == (0, 0, 0, 0.0, 0.0)

    def test_matches_full_scan_oracle_on_fixture_cells(self, corpus, oracle):
        cells = [
            ("U001", 4000, 1), ("U002", 4000, 1), ("U003", 4000, 1),
            ("U001", 4200, 2), ("U001", 4201, 3),
            ("U004", 5000, 1), ("U004", 5201, 3), ("U004", 5200, 2),
            ("U008", 6201, 3), ("U011", 6201, 3), ("U010", 10000, 1),
            ("U010", 10201, 3), ("U009", 1000, 1), ("U005", 11000, 1),
            ("U012", 11301, 3), ("U006", 13000, 1),
        ]
        for iid, subject, level in cells:
            got = indicator_vector(corpus, iid, subject, level, WINDOW)
            want = oracle.vector(iid, subject, level, WINDOW)
            assert got.as_tuple() == pytest.approx(want), (iid, subject, level)

    def test_windowing_matches_oracle(self, corpus, oracle):
        for window in [(2008, 2010), (2011, 2013), (2010, 2010)]:
            got = indicator_vector(corpus, "U001", 4000, 1, window)
            want = oracle.vector("U001", 4000, 1, window)
            assert got.as_tuple() == pytest.approx(want), window

    def test_dual_membership_journal_counts_once(self, corpus_factory):
        # one paper in a journal with two leaves under the same root
        journals = [("JX", "Dual", "111;112")]
        pubs = [("P1", "U1", "JX", 2010, 7, "t")]
        d = corpus_factory(pubs, journals, [("U1", "Uni", "PB")])
        corpus = load_corpus_dir(d)
        assert indicator_vector(corpus, "U1", 100, 1, WINDOW).total_pubs == 1
        assert indicator_vector(corpus, "U1", 110, 2, WINDOW).total_pubs == 1
        assert indicator_vector(corpus, "U1", 111, 3, WINDOW).total_pubs == 1

    def test_unknown_institution(self, corpus):
        with pytest.raises(UnknownInstitution):
            indicator_vector(corpus, "U999", 4000, 1, WINDOW)

    def test_unknown_code(self, corpus):
        with pytest.raises(UnknownCode):
            indicator_vector(corpus, "U001", 424242, 1, WINDOW)

    def test_level_mismatch_is_unknown_code(self, corpus):
        with pytest.raises(LevelMismatch):
            indicator_vector(corpus, "U001", 4000, 3, WINDOW)
        assert issubclass(LevelMismatch, UnknownCode)

    def test_invariants_hold_across_fixture(self, corpus):
        for iid in corpus.institutions:
            for level in (1, 2, 3):
                for code in corpus.taxonomy.level_codes(level):
                    vec = indicator_vector(corpus, iid, code, level, WINDOW)
                    assert vec.h_index <= vec.total_pubs
                    assert vec.h_index**2 <= vec.total_cites
                    assert 0 <= vec.pct_top_snip <= 100
                    assert vec.cpp * vec.total_pubs == pytest.approx(
                        vec.total_cites, rel=1e-9
                    )
                    if vec.total_pubs == 0:
                        assert vec.as_tuple() == (0, 0, 0, 0.0, 0.0)

    def test_adding_a_publication_never_decreases_core_indicators(self, corpus_factory):
        journals = [("J1", "Alpha Journal", "111")]
        insts = [("U1", "Uni", "PB")]
        base_pubs = [(f"P{i}", "U1", "J1", 2010, i % 7, "t") for i in range(12)]
        prev = None
        for n in range(1, 13):
            d = corpus_factory(base_pubs[:n], journals, insts, name=f"grow{n}")
            vec = indicator_vector(load_corpus_dir(d), "U1", 111, 3, WINDOW)
            if prev is not None:
                assert vec.total_pubs >= prev.total_pubs
                assert vec.total_cites >= prev.total_cites
                assert vec.h_index >= prev.h_index
            prev = vec

    def test_level1_np_at_most_sum_of_level2_children(self, corpus):
        for root in corpus.taxonomy.level_codes(1):
            kids = corpus.taxonomy.children.get(root, frozenset())
            for iid in corpus.institutions:
                top = indicator_vector(corpus, iid, root, 1, WINDOW).total_pubs
                parts = sum(
                    indicator_vector(corpus, iid, k, 2, WINDOW).total_pubs for k in kids
                )
                assert top <= parts or (top == 0 and parts == 0)
