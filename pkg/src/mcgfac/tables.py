"""Sample lifts of the base factorization for d = 1, 2, 3 and their variations."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterable, Iterator

from .core import CurveLetter, Word, WordError, parse_word, project_base

BASE_WORDS = {
    1: "a a a b a a a b a a a b",
    2: "a1 a2 a2 b1 a1 a2 a2 b1 a1 a2 a2 b1",
    3: "a1 a2 a3 b1 a1 a2 a3 b1 a1 a2 a3 b1",
}

EXPECTED_TOTALS = {1: 240, 2: 56, 3: 27}

# (type, declared count, sample word) exactly as printed.
_SAMPLES = {
    1: [
        ("1", 27, "a1 a2 a2 b1 a1 a2 a2 b1 a1 a2 a2 b1"),
        ("2", 27, "a1 a1 a2 b1 a1 a2 a2 b1 a2 a2 a2 b2"),
        ("3", 27, "a1 a2 a2 b2 a1 a1 a2 b1 a2 a2 a2 b2"),
        ("4", 3, "a1 a1 a1 b1 a2 a2 a2 b2 a2 a2 a2 b3"),
        ("1*", 27, "a2 a1 a1 b1 a2 a1 a1 b1 a2 a1 a1 b1"),
        ("2*", 27, "a2 a2 a1 b2 a2 a1 a1 b2 a1 a1 a1 b1"),
        ("3*", 27, "a2 a1 a1 b1 a2 a2 a1 b2 a1 a1 a1 b1"),
        ("4*", 3, "a2 a2 a2 b3 a1 a1 a1 b2 a1 a1 a1 b1"),
        ("5", 27, "a2 a2 a2 b1 a3 a2 a2 b2 a1 a2 a2 b1"),
        ("5*", 27, "a2 a2 a2 b2 a1 a2 a2 b1 a3 a2 a2 b2"),
        ("6", 9, "a2 a2 a2 b1 a2 a2 a2 b1 a3 a2 a1 b1"),
        ("6*", 9, "a2 a2 a2 b2 a2 a2 a2 b2 a1 a2 a3 b2"),
    ],
    2: [
        ("1", 8, "a1 a2 a3 b1 a1 a2 a3 b1 a1 a2 a3 b1"),
        ("2", 6, "a1 a2 a2 b1 a1 a2 a3 b1 a1 a3 a3 b2"),
        ("3", 6, "a1 a2 a3 b2 a1 a2 a2 b1 a1 a3 a3 b2"),
        ("4", 6, "a1 a2 a2 b1 a1 a2 a3 b2 a1c a2 a2 b1"),
        ("5", 6, "a1 a2 a3 b2 a1 a2 a2 b2 a1c a2 a2 b1"),
        ("6", 6, "a1 a2 a2 b2 a1 a2 a2 b2 a1c a2 a3 b2"),
        ("7", 6, "a1c a2c a2 b1 a1 a2 a2 b2 a1c a2 a2 b2"),
        ("8", 6, "a1c a2 a2 b1 a1 a2 a2 b2 a1c a2c a2 b1"),
        ("9", 6, "a1c a2 a2 b1 a1 a2 a2c b1 a1c a2 a2 b1"),
    ],
    3: [
        ("1", 3, "a1 a2 a3h b1 a1 a2 a3h b1 a1 a2h a3 b1"),
        ("2", 3, "a1 a2 a3h b1 a1 a2h a3h b2 a1 a2 a3 b1"),
        ("3", 3, "a1 a2h a3h b2 a1 a2 a3h b2 a1 a2 a3 b1"),
        ("4", 3, "a1 a2 a3h b2 a1c a2 a3 b1 a1 a2 a3 b1"),
        ("5", 3, "a1 a2 a3 b2 a1c a2 a3 b1 a1 a2 a3h b2"),
        ("6", 3, "a1 a2 a3 b2 a1c a2 a3h b2 a1 a2 a3 b2"),
        ("7", 3, "a1 a2 a3 b2 a1c a2 a3 b2 a1c a2c a3 b1"),
        ("8", 3, "a1 a2 a3 b2 a1c a2c a3 b1 a1c a2 a3 b1"),
        ("9", 3, "a1 a2c a3 b1 a1c a2 a3 b1 a1c a2 a3 b1"),
    ],
}

B_POSITIONS = (3, 7, 11)  # 0-based


class TableError(ValueError):
    """Sample data or variation rules do not reproduce the declared counts."""


def base_word(d: int) -> Word:
    return parse_word(BASE_WORDS[d], d - 1)


@dataclass(frozen=True)
class Factorization:
    """A positive 12-letter lift of the base word, made of three 4-letter blocks."""

    d: int
    letters: Word

    def __post_init__(self):
        if len(self.letters) != 12:
            raise TableError(f"expected 12 letters, got {len(self.letters)}")
        if not self.letters.is_positive():
            raise TableError(f"factorization must be positive: {self.letters}")
        for i, x in enumerate(self.letters):
            want = "b" if i in B_POSITIONS else "a"
            if x.family != want:
                raise TableError(f"position {i + 1} must hold a {want}-letter, found {x}")
        try:
            projected = project_base(self.letters, self.d)
        except WordError as exc:
            raise TableError(str(exc)) from None
        if projected != base_word(self.d):
            raise TableError(f"{self.letters} does not project to {BASE_WORDS[self.d]}")

    @classmethod
    def parse(cls, text: str, d: int) -> Factorization:
        return cls(d, parse_word(text, d))

    @property
    def blocks(self) -> tuple[Word, Word, Word]:
        w = self.letters
        return (w[0:4], w[4:8], w[8:12])

    def shifted(self, s: int) -> Factorization:
        """Cyclically permute the blocks, moving the first ``s`` blocks to the end."""
        s %= 3
        return Factorization(self.d, self.letters[4 * s:] + self.letters[:4 * s])

    def __str__(self) -> str:
        return str(self.letters)


@dataclass(frozen=True)
class SampleRow:
    d: int
    type_id: str
    word: Factorization
    declared_count: int


@dataclass(frozen=True)
class TaggedFactorization:
    """An expanded factorization with the recipe that produced it.

    ``variation`` holds one block-operation index per sample block: the cyclic
    rotation amount of its a-letters (d=1) or whether its two a2-covering
    letters are swapped (d=2); always zeros for d=3.
    """

    type_id: str
    shift: int
    variation: tuple[int, int, int]
    word: Factorization

    @property
    def d(self) -> int:
        return self.word.d


def samples(d: int) -> list[SampleRow]:
    if d not in _SAMPLES:
        raise TableError(f"d must be 1, 2 or 3, got {d}")
    return [SampleRow(d, t, Factorization.parse(w, d), n) for t, n, w in _SAMPLES[d]]


def sample(d: int, type_id: str) -> SampleRow:
    for row in samples(d):
        if row.type_id == type_id:
            return row
    raise KeyError(f"no type {type_id!r} for d={d}")


def _block_variants(block: Word, d: int) -> list[Word]:
    a, b = list(block[:3]), block[3]
    if d == 1:
        return [Word(a[r:] + a[:r] + [b]) for r in range(3)]
    if d == 2:
        return [block, Word([a[0], a[2], a[1], b])]
    return [block]


def _candidates(row: SampleRow) -> Iterator[TaggedFactorization]:
    per_block = [_block_variants(blk, row.d) for blk in row.word.blocks]
    for shift in range(3):
        for choice in itertools.product(*(range(len(v)) for v in per_block)):
            letters = Word()
            for blk, k in zip(per_block, choice):
                letters = letters + blk[k]
            f = Factorization(row.d, letters).shifted(shift)
            yield TaggedFactorization(row.type_id, shift, tuple(choice), f)


def expand_tagged(row: SampleRow) -> list[TaggedFactorization]:
    seen: set[Word] = set()
    out = []
    for tagged in _candidates(row):
        if tagged.word.letters not in seen:
            seen.add(tagged.word.letters)
            out.append(tagged)
    if len(out) != row.declared_count:
        raise TableError(
            f"d={row.d} type {row.type_id}: {len(out)} variations, table declares {row.declared_count}"
        )
    return out


def expand_variations(row: SampleRow) -> list[Factorization]:
    return [t.word for t in expand_tagged(row)]


@lru_cache(maxsize=None)
def _expand_all(d: int) -> tuple[TaggedFactorization, ...]:
    owner: dict[Word, str] = {}
    out = []
    for row in samples(d):
        for tagged in expand_tagged(row):
            w = tagged.word.letters
            if w in owner:
                raise TableError(f"d={d}: {w} produced by types {owner[w]} and {row.type_id}")
            owner[w] = row.type_id
            out.append(tagged)
    return tuple(out)


def expand_all(d: int) -> list[TaggedFactorization]:
    """All distinct factorizations for ``d``: 240, 56 or 27 of them."""
    return list(_expand_all(d))


def lookup(word: Word, d: int) -> TaggedFactorization | None:
    for t in _expand_all(d):
        if t.word.letters == word:
            return t
    return None


# -- reversion (d=1) ------------------------------------------------------

_A_UP = parse_word("b1' b2", 1)   # conjugating by this raises every a-index by one
_B_UP = parse_word("a1 a2'", 1)   # ... and this raises every b-index by one


@dataclass(frozen=True)
class Reversion:
    """Result of the reversion symmetry on a d=1 factorization.

    ``swapped`` is the plain index swap 1<->2 (index 3 untouched).  ``partner``
    is the table factorization obtained from the reflected word (index i -> 3-i
    on both families) after translating indices back into 1..3; the translation
    is the conjugation by ``conjugator`` (a power of b1'b2 times a power of a1a2').
    """

    swapped: Word
    partner: TaggedFactorization | None
    conjugator: Word
    a_shift: int
    b_shift: int


def swap_indices(w: Word) -> Word:
    swap = {1: 2, 2: 1, 3: 3}
    return Word(CurveLetter(x.family, swap[x.index], x.decoration, x.sign) for x in w)


def _power(g: Word, k: int) -> Word:
    return g * k if k >= 0 else g.inverse() * (-k)


def reversion(f: Factorization) -> Reversion:
    if f.d != 1:
        raise TableError("reversion is defined for d=1 only")
    swapped = swap_indices(f.letters)
    reflected = [(x.family, 3 - x.index) for x in f.letters]
    for a_shift, b_shift in sorted(itertools.product(range(-1, 3), repeat=2), key=lambda p: (abs(p[0]) + abs(p[1]), p)):
        moved = []
        for fam, idx in reflected:
            idx += a_shift if fam == "a" else b_shift
            if not 1 <= idx <= 3:
                break
            moved.append(CurveLetter(fam, idx))
        else:
            hit = lookup(Word(moved), 1)
            if hit is not None:
                g = _power(_A_UP, a_shift) + _power(_B_UP, b_shift)
                return Reversion(swapped, hit, g, a_shift, b_shift)
    return Reversion(swapped, None, Word(), 0, 0)


# -- corpus file ----------------------------------------------------------

def format_corpus(entries: Iterable[TaggedFactorization]) -> str:
    lines = ["# <d> <type> <12 letters>; one factorization per line"]
    for t in entries:
        lines.append(f"{t.d} {t.type_id} {t.word}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class CorpusLine:
    lineno: int
    text: str
    d: int
    type_id: str
    word: Factorization


def parse_corpus(text: str) -> list[CorpusLine]:
    """Parse corpus text; raises TableError naming the offending line."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            d = int(parts[0])
            if len(parts) != 14:
                raise TableError(f"expected d, type and 12 letters, got {len(parts)} fields")
            f = Factorization.parse(" ".join(parts[2:]), d)
        except (ValueError, IndexError) as exc:
            raise TableError(f"line {lineno}: {raw.strip()!r}: {exc}") from None
        out.append(CorpusLine(lineno, raw.strip(), d, parts[1], f))
    return out


def default_corpus_text() -> str:
    return resources.files("mcgfac").joinpath("data/corpus.txt").read_text()
