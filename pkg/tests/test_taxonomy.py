import csv

import pytest

from nichebench import (
    DanglingReference,
    DuplicateId,
    MalformedRow,
    UnknownCode,
    load_taxonomy,
    subjects_of_journal,
)


def taxonomy_rows(fixture_dir):
    with (fixture_dir / "taxonomy.csv").open(newline="", encoding="utf-8") as fh:
        return list(csv.DictReader(fh))


def test_loads_fixture_with_expected_node_count(corpus, fixture_dir):
    assert len(corpus.taxonomy) == len(taxonomy_rows(fixture_dir))
    assert len(corpus.taxonomy.level_codes(1)) == 15


def test_ancestor_chain_matches_fixture_rows(corpus, oracle):
    # every level-3 node: the chain read straight from the CSV
    for code in corpus.taxonomy.level_codes(3):
        l3, l2, l1 = corpus.taxonomy.ancestors(code)
        assert l3 == code
        assert l2 == oracle.ancestor_at(code, 2)
        assert l1 == oracle.ancestor_at(code, 1)


def test_level_one_ancestor_is_itself(corpus):
    root = corpus.taxonomy.level_codes(1)[0]
    assert corpus.taxonomy.ancestors(root) == (None, None, root)


def test_level_two_ancestors(corpus):
    for code in corpus.taxonomy.level_codes(2):
        l3, l2, l1 = corpus.taxonomy.ancestors(code)
        assert l3 is None
        assert l2 == code
        assert corpus.taxonomy.nodes[l1].level == 1


def test_unknown_code_raises(corpus):
    with pytest.raises(UnknownCode):
        corpus.taxonomy.ancestors(999999)
    with pytest.raises(UnknownCode):
        corpus.taxonomy.descendants(999999)


def test_descendants_of_leaf_is_itself(corpus):
    leaf = corpus.taxonomy.level_codes(3)[0]
    assert corpus.taxonomy.descendants(leaf) == frozenset({leaf})


def test_descendants_of_engineering_root_match_fixture(corpus, oracle):
    engineering = next(
        code
        for code, node in corpus.taxonomy.nodes.items()
        if node.name == "Engineering (all)" and node.level == 1
    )
    assert corpus.taxonomy.descendants(engineering) == oracle.leaves_under(engineering)


def test_descendants_ancestors_round_trip(corpus):
    for root in corpus.taxonomy.level_codes(1):
        for leaf in corpus.taxonomy.descendants(root):
            assert corpus.taxonomy.ancestors(leaf)[2] == root


def test_vision_research_has_two_leaf_memberships_one_root(corpus):
    journal = corpus.journals["J052"]
    assert journal.title == "Vision Research"
    level3 = subjects_of_journal(corpus.taxonomy, journal, 3)
    assert len(level3) == 2
    names = {corpus.taxonomy.nodes[c].name for c in level3}
    assert names == {"Ophthalmology", "Sensory Systems"}
    # both leaves sit under Medicine: one membership at level 1, not two
    assert len(subjects_of_journal(corpus.taxonomy, journal, 1)) == 1


def test_single_code_journal_is_singleton_at_every_level(corpus):
    journal = corpus.journals["J001"]
    for level in (1, 2, 3):
        assert len(subjects_of_journal(corpus.taxonomy, journal, level)) == 1


def test_memberships_shrink_going_up(corpus):
    for journal in corpus.journals.values():
        n3 = len(subjects_of_journal(corpus.taxonomy, journal, 3))
        n2 = len(subjects_of_journal(corpus.taxonomy, journal, 2))
        n1 = len(subjects_of_journal(corpus.taxonomy, journal, 1))
        assert n1 <= n2 <= n3


def write_taxonomy(tmp_path, rows):
    path = tmp_path / "taxonomy.csv"
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["code", "name", "level", "parent_code"])
        writer.writerows(rows)
    return path


def test_orphan_node_rejected(tmp_path):
    path = write_taxonomy(tmp_path, [(1, "Root", 1, ""), (31, "Leafish", 3, 99)])
    with pytest.raises(DanglingReference):
        load_taxonomy(path)


def test_level_skip_rejected(tmp_path):
    # level-3 node hanging directly off a level-1 root
    path = write_taxonomy(tmp_path, [(1, "Root", 1, ""), (31, "Leaf", 3, 1)])
    with pytest.raises(MalformedRow):
        load_taxonomy(path)


def test_self_parent_cycle_rejected(tmp_path):
    path = write_taxonomy(tmp_path, [(2, "Loop", 2, 2)])
    with pytest.raises((MalformedRow, DanglingReference)):
        load_taxonomy(path)


def test_duplicate_code_rejected(tmp_path):
    path = write_taxonomy(tmp_path, [(1, "Root", 1, ""), (1, "Root again", 1, "")])
    with pytest.raises(DuplicateId):
        load_taxonomy(path)


def test_level_one_with_parent_rejected(tmp_path):
    path = write_taxonomy(tmp_path, [(1, "Root", 1, ""), (2, "Bad root", 1, 1)])
    with pytest.raises(MalformedRow):
        load_taxonomy(path)
