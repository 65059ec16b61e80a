"""Ordered sequences of conjugated twists and the Hurwitz action on them."""

from __future__ import annotations

from dataclasses import dataclass

from ..core import CurveLetter, Word, free_reduce


@dataclass(frozen=True)
class Factor:
    """The element ``u t_c u^-1`` (``u`` = conjugator, ``c`` = base letter)."""

    conjugator: Word
    base: CurveLetter

    @property
    def word(self) -> Word:
        return free_reduce(self.conjugator + Word([self.base]) + self.conjugator.inverse())

    def conjugated(self, g: Word) -> Factor:
        return Factor(free_reduce(Word(g) + self.conjugator), self.base)

    def __str__(self) -> str:
        return str(self.word)


@dataclass(frozen=True)
class FactorSeq:
    factors: tuple[Factor, ...]

    @classmethod
    def from_word(cls, w: Word) -> FactorSeq:
        return cls(tuple(Factor(Word(), x) for x in w))

    def product(self) -> Word:
        out = Word()
        for f in self.factors:
            out = out + f.word
        return free_reduce(out)

    def words(self) -> list[Word]:
        return [f.word for f in self.factors]

    def __len__(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        return " | ".join(str(f) for f in self.factors)


def hurwitz_move(s: FactorSeq, i: int, direction: str) -> FactorSeq:
    """Act on the pair at 1-based positions i, i+1.

    ``L``: (x, y) -> (y, y^-1 x y);  ``R``: (x, y) -> (x y x^-1, x).
    """
    if not 1 <= i < len(s):
        raise IndexError(f"Hurwitz index {i} out of range for {len(s)} factors")
    fs = list(s.factors)
    x, y = fs[i - 1], fs[i]
    if direction == "L":
        fs[i - 1], fs[i] = y, x.conjugated(y.word.inverse())
    elif direction == "R":
        fs[i - 1], fs[i] = y.conjugated(x.word), x
    else:
        raise ValueError(f"direction must be L or R, got {direction!r}")
    return FactorSeq(tuple(fs))
