"""Twist letters on the marked torus, words over them, and the forgetful projection.

Words are read left to right in the order the factors are listed in the tables
(c1 c2 ... c12).  Composition of mapping classes runs the other way, but every
operation in this package works on the written order, so the distinction never
matters here.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

PLAIN, CHECK, HAT = "plain", "check", "hat"

_DECORATION_SUFFIX = {PLAIN: "", CHECK: "c", HAT: "h"}
_SUFFIX_DECORATION = {v: k for k, v in _DECORATION_SUFFIX.items()}
_UNICODE_MARK = {PLAIN: "", CHECK: "̌", HAT: "̂"}

_TOKEN = re.compile(r"^([ab])([1-3]?)([ch]?)('?)$")


class WordError(ValueError):
    """Raised for malformed tokens or letters outside an alphabet."""


@dataclass(frozen=True, order=True)
class CurveLetter:
    """A right-handed Dehn twist (sign +1) or its inverse (sign -1).

    ``index`` is 0 only for the two letters ``a``, ``b`` of the unmarked torus.
    """

    family: str
    index: int
    decoration: str = PLAIN
    sign: int = 1

    def __post_init__(self):
        if self.family not in ("a", "b"):
            raise WordError(f"bad family {self.family!r}")
        if self.index not in (0, 1, 2, 3):
            raise WordError(f"bad index {self.index!r}")
        if self.sign not in (1, -1):
            raise WordError(f"bad sign {self.sign!r}")
        if self.decoration == CHECK and (self.family != "a" or self.index not in (1, 2)):
            raise WordError(f"check decoration not allowed on {self.family}{self.index}")
        if self.decoration == HAT and (self.family != "a" or self.index not in (2, 3)):
            raise WordError(f"hat decoration not allowed on {self.family}{self.index}")
        if self.decoration not in _DECORATION_SUFFIX:
            raise WordError(f"bad decoration {self.decoration!r}")
        if self.index == 0 and self.decoration != PLAIN:
            raise WordError("base torus letters carry no decoration")

    @property
    def key(self) -> tuple[str, int, str]:
        """The (family, index, decoration) triple, i.e. the curve without its sign."""
        return (self.family, self.index, self.decoration)

    @property
    def inverse(self) -> CurveLetter:
        return CurveLetter(self.family, self.index, self.decoration, -self.sign)

    @property
    def positive(self) -> CurveLetter:
        return self if self.sign == 1 else self.inverse

    def __str__(self) -> str:
        idx = str(self.index) if self.index else ""
        return f"{self.family}{idx}{_DECORATION_SUFFIX[self.decoration]}{'' if self.sign == 1 else chr(39)}"

    def __repr__(self) -> str:
        return f"CurveLetter({self})"

    def pretty(self) -> str:
        """Unicode rendering, e.g. ``ǎ1`` or ``b2⁻¹``."""
        idx = str(self.index) if self.index else ""
        s = f"{self.family}{_UNICODE_MARK[self.decoration]}{idx}"
        return s if self.sign == 1 else s + "⁻¹"


def letter(token: str) -> CurveLetter:
    """Parse a single token such as ``a2c`` or ``b1'``."""
    m = _TOKEN.match(token)
    if not m:
        raise WordError(f"unknown token {token!r}")
    fam, idx, suffix, prime = m.groups()
    return CurveLetter(fam, int(idx) if idx else 0, _SUFFIX_DECORATION[suffix], -1 if prime else 1)


class Word(tuple):
    """An immutable sequence of :class:`CurveLetter`."""

    def __new__(cls, letters: Iterable[CurveLetter] = ()):
        return super().__new__(cls, letters)

    def __add__(self, other):
        return Word(tuple.__add__(self, tuple(other)))

    def __radd__(self, other):
        return Word(tuple(other) + tuple(self))

    def __getitem__(self, item):
        got = tuple.__getitem__(self, item)
        return Word(got) if isinstance(item, slice) else got

    def __mul__(self, n):
        return Word(tuple.__mul__(self, n))

    def inverse(self) -> Word:
        return Word(x.inverse for x in reversed(self))

    def is_positive(self) -> bool:
        return all(x.sign == 1 for x in self)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def pretty(self) -> str:
        return "".join(x.pretty() for x in self)


@dataclass(frozen=True)
class Alphabet:
    """Curve names available on the torus with ``d`` marked points.

    ``base_map`` sends each curve to its image under the forgetful map to the
    torus with ``d - 1`` marked points (for d=1: to the unmarked torus letters
    ``a``, ``b``).
    """

    d: int
    letters: frozenset
    base_map: Mapping[tuple, tuple]

    def __contains__(self, item) -> bool:
        key = item.key if isinstance(item, CurveLetter) else item
        return key in self.letters

    def base_letter(self, x: CurveLetter) -> CurveLetter:
        if x.key not in self.letters:
            raise WordError(f"letter {x} not in alphabet d={self.d}")
        fam, idx, dec = self.base_map[x.key]
        return CurveLetter(fam, idx, dec, x.sign)


def _alphabet(d: int, table: dict[str, str]) -> Alphabet:
    base = {letter(k).key: letter(v).key for k, v in table.items()}
    return Alphabet(d, frozenset(base), base)


ALPHABETS: dict[int, Alphabet] = {
    0: _alphabet(0, {"a": "a", "b": "b"}),
    1: _alphabet(1, {"a1": "a", "a2": "a", "a3": "a", "b1": "b", "b2": "b", "b3": "b"}),
    2: _alphabet(2, {"a1": "a1", "a1c": "a1", "a2": "a2", "a3": "a2", "a2c": "a2",
                     "b1": "b1", "b2": "b1"}),
    3: _alphabet(3, {"a1": "a1", "a1c": "a1", "a2": "a2", "a2c": "a2", "a2h": "a2",
                     "a3": "a3", "a3h": "a3", "b1": "b1", "b2": "b1"}),
}


def alphabet(d: int) -> Alphabet:
    try:
        return ALPHABETS[d]
    except KeyError:
        raise WordError(f"no alphabet for d={d}") from None


def parse_word(text: str, d: int) -> Word:
    """Parse whitespace-separated tokens into an (unreduced) word over Alphabet(d).

    Grammar per token: ``[ab][1-3][ch]?'?`` where ``c`` marks a check, ``h`` a
    hat and a trailing apostrophe the inverse twist.  ``d=0`` accepts the bare
    letters ``a``, ``b`` of the unmarked torus.
    """
    alpha = alphabet(d)
    out = []
    for tok in text.split():
        x = letter(tok)
        if x not in alpha:
            raise WordError(f"letter {tok!r} not in alphabet d={d}")
        out.append(x)
    return Word(out)


def free_reduce(w: Iterable[CurveLetter]) -> Word:
    stack: list[CurveLetter] = []
    for x in w:
        if stack and stack[-1] == x.inverse:
            stack.pop()
        else:
            stack.append(x)
    return Word(stack)


def conjugate(w: Word, g: Word) -> Word:
    """Return the reduced form of ``g w g^-1``."""
    return free_reduce(Word(g) + w + Word(g).inverse())


def project_base(w: Word, d: int) -> Word:
    """Apply the forgetful map letterwise, keeping order and signs."""
    alpha = alphabet(d)
    return Word(alpha.base_letter(x) for x in w)
