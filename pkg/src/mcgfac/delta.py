"""Delta-sequences: cyclic difference sequences of the letter subsequences.

Each entry is the intersection number of the added section with the matching
cycle over the edge joining two consecutive vertices of a subsequence.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Sequence

from .core import CHECK, HAT, PLAIN, CurveLetter
from .tables import Factorization

# 1-based positions of each subsequence, in the order the tables print them.
SPLITS: dict[int, tuple[tuple[str, tuple[int, ...]], ...]] = {
    1: (("a", (1, 2, 3, 5, 6, 7, 9, 10, 11)), ("b", (4, 8, 12))),
    2: (("a1", (1, 5, 9)), ("b", (4, 8, 12)), ("a2", (2, 3, 6, 7, 10, 11))),
    3: (("b", (4, 8, 12)), ("a1", (1, 5, 9)), ("a2", (2, 6, 10)), ("a3", (3, 7, 11))),
}


class DeltaError(ValueError):
    """A consecutive pair of letters is not covered by the difference rules."""


@dataclass(frozen=True)
class SubsequenceSplit:
    d: int
    positions: tuple[tuple[str, tuple[int, ...]], ...]
    letters: tuple[tuple[str, tuple[CurveLetter, ...]], ...]

    def __getitem__(self, name: str) -> tuple[CurveLetter, ...]:
        return dict(self.letters)[name]


@dataclass(frozen=True)
class DeltaProfile:
    """Named difference sequences; names are ``a``/``b`` for d=1, else ``a1``... and ``b``."""

    d: int
    sequences: tuple[tuple[str, tuple[int, ...]], ...]

    def __getitem__(self, name: str) -> tuple[int, ...]:
        return dict(self.sequences)[name]

    def names(self) -> list[str]:
        return [n for n, _ in self.sequences]

    def flat(self) -> tuple[int, ...]:
        return tuple(x for _, seq in self.sequences for x in seq)

    def to_json(self) -> dict:
        return {f"delta_{name}": list(seq) for name, seq in self.sequences}

    def render(self) -> str:
        return " ".join("".join(str(x) for x in seq) for _, seq in self.sequences)


def split_sequences(f: Factorization) -> SubsequenceSplit:
    parts = SPLITS[f.d]
    letters = tuple((name, tuple(f.letters[p - 1] for p in pos)) for name, pos in parts)
    return SubsequenceSplit(f.d, parts, letters)


def _index_diff(x: CurveLetter, y: CurveLetter) -> int:
    return x.index - y.index


def _pair_table(pairs: dict[str, int]) -> Callable[[CurveLetter, CurveLetter], int]:
    table = {}
    for spec, value in pairs.items():
        x, y = spec.split()
        table[(_key(x), _key(y))] = value

    def rule(x: CurveLetter, y: CurveLetter) -> int:
        if x.key == y.key:
            return 0
        try:
            return table[(x.key, y.key)]
        except KeyError:
            raise DeltaError(f"no difference rule for the pair {x}{y}") from None

    return rule


def _key(token: str) -> tuple:
    dec = {"": PLAIN, "c": CHECK, "h": HAT}[token[2:]]
    return (token[0], int(token[1]), dec)


_A1_RULE = _pair_table({"a1 a1c": 1, "a1c a1": -1})
_D2_A2_RULE = _pair_table({"a3 a2": 1, "a2 a2c": 1, "a2 a3": -1, "a2c a2": -1})
_D3_A_RULE = _pair_table({
    "a1 a1c": 1, "a2 a2c": 1, "a3h a3": 1, "a2h a2": 1,
    "a1c a1": -1, "a2c a2": -1, "a3 a3h": -1, "a2 a2h": -1,
})


def _rule(d: int, name: str) -> Callable[[CurveLetter, CurveLetter], int]:
    if d == 1 or name == "b":
        return _index_diff
    if name == "a1" and d == 2:
        return _A1_RULE
    if d == 2:
        return _D2_A2_RULE
    return _D3_A_RULE


def cyclic_differences(seq: Sequence, rule: Callable) -> tuple[int, ...]:
    n = len(seq)
    return tuple(rule(seq[k], seq[(k + 1) % n]) for k in range(n))


def delta_profile(f: Factorization) -> DeltaProfile:
    split = split_sequences(f)
    return DeltaProfile(
        f.d,
        tuple((name, cyclic_differences(seq, _rule(f.d, name))) for name, seq in split.letters),
    )


@dataclass(frozen=True)
class DistinctnessReport:
    total: int
    distinct: int
    collisions: tuple[tuple[Hashable, tuple[int, ...]], ...]  # key, indices sharing it

    @property
    def ok(self) -> bool:
        return not self.collisions


def default_key(profile: DeltaProfile) -> Hashable:
    """Delta-a alone for d=1, the full profile otherwise."""
    return profile["a"] if profile.d == 1 else profile.sequences


def assert_all_distinct(profiles: Iterable[DeltaProfile], key: Callable = default_key) -> DistinctnessReport:
    groups: dict[Hashable, list[int]] = defaultdict(list)
    n = 0
    for i, p in enumerate(profiles):
        groups[key(p)].append(i)
        n += 1
    collisions = tuple((k, tuple(v)) for k, v in groups.items() if len(v) > 1)
    return DistinctnessReport(n, len(groups), collisions)


def profile_record(type_id: str, f: Factorization) -> dict:
    """JSON-ready record in the fixed field order."""
    rec = {"d": f.d, "type": type_id, "word": str(f)}
    rec.update(delta_profile(f).to_json())
    return rec
