"""Three-level subject hierarchy (discipline / sub-discipline / niche area).

The hierarchy is plain input data (``taxonomy.csv``), never hardcoded:
subject classification listings are licensed and versioned, so each corpus
ships its own. Journals attach to level-3 leaves only; memberships at
levels 1 and 2 are resolved by walking parent chains.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import DanglingReference, DuplicateId, MalformedRow, MissingFile, UnknownCode

LEVELS = (1, 2, 3)


@dataclass(frozen=True)
class SubjectNode:
    code: int
    name: str
    level: int
    parent_code: int | None  # None only for level-1 roots


@dataclass(frozen=True)
class SubjectTaxonomy:
    """Immutable forest of SubjectNodes with strict level-1/2/3 edges."""

    nodes: Mapping[int, SubjectNode]
    children: Mapping[int, frozenset[int]]
    _leaf_cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "nodes", MappingProxyType(dict(self.nodes)))
        object.__setattr__(
            self, "children", MappingProxyType({c: frozenset(k) for c, k in self.children.items()})
        )

    def __len__(self) -> int:
        return len(self.nodes)

    def node(self, code: int) -> SubjectNode:
        try:
            return self.nodes[code]
        except KeyError:
            raise UnknownCode(code) from None

    def level_codes(self, level: int) -> list[int]:
        return sorted(c for c, n in self.nodes.items() if n.level == level)

    def ancestors(self, code: int) -> tuple[int | None, int | None, int]:
        """Chain from ``code`` up to its level-1 root as (level3, level2, level1).

        Slots above the input's level are None; a level-1 input returns
        (None, None, itself).
        """
        node = self.node(code)
        chain: list[int | None] = [None, None, None]  # indexed by level-1
        while True:
            chain[node.level - 1] = node.code
            if node.parent_code is None:
                break
            node = self.node(node.parent_code)
        l1, l2, l3 = chain
        assert l1 is not None
        return (l3, l2, l1)

    def descendants(self, code: int) -> frozenset[int]:
        """All level-3 leaf codes under ``code``; a leaf returns itself."""
        cached = self._leaf_cache.get(code)
        if cached is not None:
            return cached
        node = self.node(code)
        if node.level == 3:
            leaves = frozenset((code,))
        else:
            leaves = frozenset(
                leaf for child in self.children.get(code, ()) for leaf in self.descendants(child)
            )
        self._leaf_cache[code] = leaves
        return leaves

    def subjects_of_codes(self, codes: Iterable[int], level: int) -> frozenset[int]:
        """De-duplicated ancestors of the given leaf codes at ``level``."""
        if level not in LEVELS:
            raise ValueError(f"level must be 1, 2 or 3, got {level}")
        out = set()
        for code in codes:
            chain = self.ancestors(code)
            member = chain[3 - level]
            if member is None:
                raise UnknownCode(code, f"code {code} has no ancestor at level {level}")
            out.add(member)
        return frozenset(out)


def subjects_of_journal(taxonomy: SubjectTaxonomy, journal, level: int) -> frozenset[int]:
    """Subject memberships of one journal at ``level``.

    ``journal`` is anything with an ``asjc_codes`` attribute (level-3 codes).
    At level 3 this is the journal's own codes; at levels 2 and 1 the
    de-duplicated ancestor set, so two leaves under one root yield a single
    membership.
    """
    return taxonomy.subjects_of_codes(journal.asjc_codes, level)


def load_taxonomy(path: str | Path) -> SubjectTaxonomy:
    """Parse and validate ``taxonomy.csv`` (code,name,level,parent_code).

    Rejects duplicate codes, bad levels, orphan nodes, and parent links
    that skip a level; the strict one-level-up parent rule makes cycles
    impossible by construction.
    """
    path = Path(path)
    if not path.is_file():
        raise MissingFile(path)

    rows: list[tuple[int, SubjectNode]] = []
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        expected = ["code", "name", "level", "parent_code"]
        if reader.fieldnames != expected:
            raise MalformedRow(str(path), 1, f"header must be {','.join(expected)}")
        for lineno, row in enumerate(reader, start=2):
            try:
                code = int(row["code"])
                level = int(row["level"])
            except (TypeError, ValueError):
                raise MalformedRow(str(path), lineno, f"non-integer code/level: {row}") from None
            if level not in LEVELS:
                raise MalformedRow(str(path), lineno, f"level must be 1, 2 or 3, got {level}")
            raw_parent = (row["parent_code"] or "").strip()
            if level == 1:
                if raw_parent:
                    raise MalformedRow(str(path), lineno, "level-1 node must not have a parent")
                parent = None
            else:
                if not raw_parent:
                    raise MalformedRow(str(path), lineno, f"level-{level} node needs a parent")
                try:
                    parent = int(raw_parent)
                except ValueError:
                    raise MalformedRow(str(path), lineno, f"non-integer parent: {raw_parent}") from None
            name = (row["name"] or "").strip()
            if not name:
                raise MalformedRow(str(path), lineno, "empty subject name")
            rows.append((lineno, SubjectNode(code, name, level, parent)))

    nodes: dict[int, SubjectNode] = {}
    for lineno, node in rows:
        if node.code in nodes:
            raise DuplicateId("subject", str(node.code))
        nodes[node.code] = node

    children: dict[int, set[int]] = {}
    for lineno, node in rows:
        if node.parent_code is None:
            continue
        parent = nodes.get(node.parent_code)
        if parent is None:
            raise DanglingReference("subject", str(node.parent_code), f"parent of {node.code}")
        if parent.level != node.level - 1:
            raise MalformedRow(
                str(path),
                lineno,
                f"node {node.code} (level {node.level}) must hang off a level-{node.level - 1} "
                f"parent, but {parent.code} is level {parent.level}",
            )
        children.setdefault(parent.code, set()).add(node.code)

    return SubjectTaxonomy(nodes=nodes, children={c: frozenset(k) for c, k in children.items()})
