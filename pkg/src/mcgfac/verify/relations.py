"""Relations between twists that the derivations are allowed to use.

These identities are taken as axioms; nothing here checks them geometrically.
Letters of one family are drawn as disjoint parallel curves and commute; braid
relations are listed only for the pairs some derivation needs, so an unexpected
pair shows up as a failed step rather than as a silently accepted rewrite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from ..core import Word, free_reduce, parse_word, project_base
from .sl2 import sl2_image

LIFT, COMMUTE, BRAID, BASE = "lift", "commute", "braid", "base"


@dataclass(frozen=True)
class Relation:
    """``lhs == rhs`` in the pure mapping class group."""

    id: str
    lhs: Word
    rhs: Word
    kind: str = LIFT

    def side(self, direction: str) -> tuple[Word, Word]:
        """(source, target) for ``LR`` (replace lhs by rhs) or ``RL``."""
        if direction == "LR":
            return self.lhs, self.rhs
        if direction == "RL":
            return self.rhs, self.lhs
        raise ValueError(f"direction must be LR or RL, got {direction!r}")

    def __str__(self) -> str:
        return f"{self.id}: {self.lhs or '1'} = {self.rhs or '1'}"


@dataclass(frozen=True)
class RelationSet:
    d: int
    relations: tuple[Relation, ...]
    commuting: frozenset = field(default_factory=frozenset)   # frozensets of two letter keys
    braiding: frozenset = field(default_factory=frozenset)

    def __getitem__(self, rel_id: str) -> Relation:
        for r in self.relations:
            if r.id == rel_id:
                return r
        raise KeyError(f"no relation {rel_id!r} for d={self.d}")

    def ids(self) -> list[str]:
        return [r.id for r in self.relations]

    def commute(self, x, y) -> bool:
        return frozenset((x.key, y.key)) in self.commuting


def _rel(rel_id: str, lhs: str, rhs: str, d: int, kind: str = LIFT) -> Relation:
    return Relation(rel_id, free_reduce(parse_word(lhs, d)), free_reduce(parse_word(rhs, d)), kind)


def _commutation(x: str, y: str, d: int) -> Relation:
    return _rel(f"comm_{x}_{y}", f"{x} {y}", f"{y} {x}", d, COMMUTE)


def _braid(a: str, b: str, d: int) -> Relation:
    # b^-1 a b = a b a^-1, equivalent to a b a = b a b
    return _rel(f"braid_{a}_{b}", f"{b}' {a} {b}", f"{a} {b} {a}'", d, BRAID)


def _parallel(*families: str) -> list[tuple[str, str]]:
    """All pairs within each family: the a-curves are mutually disjoint, as are the b-curves."""
    out = []
    for fam in families:
        out += list(itertools.combinations(fam.split(), 2))
    return out


def _assemble(d: int, lifts, commuting, braiding, bases) -> RelationSet:
    rels = [_rel(i, l, r, d) for i, l, r in lifts]
    rels += [_commutation(x, y, d) for x, y in commuting]
    rels += [_braid(a, b, d) for a, b in braiding]
    rels += [_rel(i, w, "", d, BASE) for i, w in bases]
    pairs = lambda ps: frozenset(frozenset(parse_word(f"{x} {y}", d)[i].key for i in (0, 1)) for x, y in ps)
    return RelationSet(d, tuple(rels), pairs(commuting), pairs(braiding))


@lru_cache(maxsize=None)
def relation_set(d: int) -> RelationSet:
    if d == 1:
        return _assemble(
            1,
            lifts=[
                ("b1_from_b2", "b1", "a2 a1' b2 a1 a2'"),
                ("b2_from_b1", "b2", "a1 a2' b1 a2 a1'"),  # the same identity, solved for b2
                ("b2_from_b3", "b2", "a2 a1' b3 a1 a2'"),
                ("a1_from_a2", "a1", "b2' b1 a2 b1' b2"),
                ("a2_from_a3", "a2", "b2' b1 a3 b1' b2"),
            ],
            commuting=_parallel("a1 a2 a3", "b1 b2 b3"),
            braiding=[("a2", "b1"), ("a1", "b1"), ("a2", "b2"), ("a1", "b2")],
            bases=[("base_1", "a1 a2 a2 b1 " * 3), ("base_1*", "a2 a1 a1 b1 " * 3)],
        )
    if d == 2:
        return _assemble(
            2,
            lifts=[
                ("b1_from_b2", "b1", "a3 a2' b2 a2 a3'"),
                ("a1_from_a1c", "a1", "b1' b2 a1c b2' b1"),
                ("a2_from_a2c", "a2", "b1' b2 a2c b2' b1"),
                ("a3_from_a2", "a3", "b1' b2 a2 b2' b1"),
                ("b2_from_b1_via_a2c", "b2", "a2' a2c b1 a2c' a2"),
            ],
            commuting=_parallel("a1 a1c a2 a3 a2c", "b1 b2"),
            braiding=[],
            bases=[("star", "a1 a2 a3 b1 " * 3)],
        )
    if d == 3:
        return _assemble(
            3,
            lifts=[
                ("b1_from_b2_via_a2h", "b1", "a2h a2' b2 a2 a2h'"),
                ("b1_from_b2_via_a3h", "b1", "a3h a3' b2 a3 a3h'"),
                ("b2_from_b1_via_a2c", "b2", "a2' a2c b1 a2c' a2"),
                ("a1_from_a1c", "a1", "b2 b1' a1c b1 b2'"),
                ("a2_from_a2c", "a2", "b2 b1' a2c b1 b2'"),
                ("a2h_from_a2", "a2h", "b2 b1' a2 b1 b2'"),
                ("a3h_from_a3", "a3h", "b2 b1' a3 b1 b2'"),
            ],
            commuting=_parallel("a1 a1c a2 a2c a2h a3 a3h", "b1 b2"),
            braiding=[],
            bases=[("base_ko", "a1 a2 a3h b1 a1 a2 a3h b1 a1 a2h a3 b1")],
        )
    raise ValueError(f"no relation set for d={d}")


def is_sl2_consistent(rel: Relation) -> bool:
    return sl2_image(rel.lhs) == sl2_image(rel.rhs)


def projects_consistently(rel: Relation, d: int) -> bool:
    """Lift relations reduce to the same word after forgetting the last point."""
    return free_reduce(project_base(rel.lhs, d)) == free_reduce(project_base(rel.rhs, d))
