"""Replayable derivations: relation substitutions, shifts, commutations,
conjugations and Hurwitz moves applied to a factorization.

State is a sequence of factors, each a reduced word.  A factor of one letter is
*simple*; steps that act on letters (substitution across simple factors,
commutation, cyclic shift) treat runs of simple factors as a plain word, while
Hurwitz moves and conjugation act on whole factors.  After every step each
factor is freely reduced, empty factors vanish and adjacent simple factors
``x``, ``x^-1`` cancel, so the product word never changes except through the
relations themselves.

Script text, one step per line::

    NAME d1_1_to_2
    D 1
    START a1 a2 a2 b1 a1 a2 a2 b1 a1 a2 a2 b1
    END   a1 a1 a2 b1 a1 a2 a2 b1 a2 a2 a2 b2
    SUB b1_from_b2 occ=3 dir=LR
    SHIFT -2
    COMMUTE 2
    CONJ a2 a1'
    HURWITZ 7 L
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from typing import Sequence

from ..core import Word, WordError, free_reduce, parse_word
from .relations import RelationSet, relation_set


class DerivationError(ValueError):
    """A step cannot be applied where the script says."""


@dataclass(frozen=True)
class Substitute:
    relation: str
    occurrence: int
    direction: str = "LR"

    def __str__(self) -> str:
        return f"SUB {self.relation} occ={self.occurrence} dir={self.direction}"


@dataclass(frozen=True)
class CyclicShift:
    k: int

    def __str__(self) -> str:
        return f"SHIFT {self.k}"


@dataclass(frozen=True)
class Commute:
    position: int

    def __str__(self) -> str:
        return f"COMMUTE {self.position}"


@dataclass(frozen=True)
class ConjugateAll:
    g: Word

    def __str__(self) -> str:
        return f"CONJ {self.g}"


@dataclass(frozen=True)
class Hurwitz:
    index: int
    direction: str

    def __str__(self) -> str:
        return f"HURWITZ {self.index} {self.direction}"


Step = Substitute | CyclicShift | Commute | ConjugateAll | Hurwitz


@dataclass(frozen=True)
class DerivationScript:
    d: int
    start: Word
    end: Word
    steps: tuple = ()
    name: str = ""
    comments: tuple[str, ...] = field(default=(), compare=False)

    def to_text(self) -> str:
        lines = [f"# {c}" for c in self.comments]
        if self.name:
            lines.append(f"NAME {self.name}")
        lines += [f"D {self.d}", f"START {self.start}", f"END {self.end}"]
        lines += [str(s) for s in self.steps]
        return "\n".join(lines) + "\n"


State = tuple[Word, ...]


@dataclass(frozen=True)
class TraceEntry:
    step: Step | None
    state: State

    @property
    def word(self) -> Word:
        return flatten(self.state)


def flatten(state: State) -> Word:
    out = Word()
    for f in state:
        out = out + f
    return out


def normalize(state: Sequence[Word]) -> State:
    out: list[Word] = []
    for f in state:
        f = free_reduce(f)
        if not f:
            continue
        if len(f) == 1 and out and len(out[-1]) == 1 and out[-1][0] == f[0].inverse:
            out.pop()
            continue
        out.append(f)
    return tuple(out)


def _positions(state: State) -> list[tuple[int, int]]:
    """(factor index, offset) of every flat letter position."""
    return [(i, k) for i, f in enumerate(state) for k in range(len(f))]


def _occurrences(state: State, pattern: Word) -> list[tuple[int, int]]:
    """Start positions (flat) of matches that stay inside one factor or cross only simple factors."""
    flat = flatten(state)
    where = _positions(state)
    n, m = len(flat), len(pattern)
    hits = []
    for s in range(n - m + 1):
        if tuple(flat[s:s + m]) != tuple(pattern):
            continue
        owners = {where[p][0] for p in range(s, s + m)}
        if len(owners) == 1 or all(len(state[o]) == 1 for o in owners):
            hits.append((s, s + m))
    return hits


def _substitute(state: State, step: Substitute, rels: RelationSet) -> State:
    try:
        rel = rels[step.relation]
    except KeyError as exc:
        raise DerivationError(str(exc)) from None
    source, target = rel.side(step.direction)
    hits = _occurrences(state, source)
    if not 1 <= step.occurrence <= len(hits):
        raise DerivationError(f"{step}: {len(hits)} occurrence(s) of {source or '1'} available")
    s, e = hits[step.occurrence - 1]
    where = _positions(state)
    if not source:
        # insert a relator; must land between factors
        fi = where[s][0] if s < len(where) else len(state)
        return normalize(state[:fi] + tuple(Word([x]) for x in target) + state[fi:])
    fi, off = where[s]
    if len(state[fi]) > 1:
        f = state[fi]
        new = f[:off] + target + f[off + len(source):]
        return normalize(state[:fi] + (new,) + state[fi + 1:])
    last = where[e - 1][0]
    return normalize(state[:fi] + tuple(Word([x]) for x in target) + state[last + 1:])


def _shift(state: State, step: CyclicShift) -> State:
    flat = flatten(state)
    if not flat:
        return state
    k = step.k % len(flat)
    return normalize(tuple(Word([x]) for x in flat[k:] + flat[:k]))


def _commute(state: State, step: Commute, rels: RelationSet) -> State:
    where = _positions(state)
    i = step.position - 1
    if not 0 <= i < len(where) - 1:
        raise DerivationError(f"{step}: position out of range")
    (fa, oa), (fb, ob) = where[i], where[i + 1]
    x, y = state[fa][oa], state[fb][ob]
    if not rels.commute(x, y):
        raise DerivationError(f"{step}: {x} and {y} are not a commuting pair")
    if fa == fb:
        f = list(state[fa])
        f[oa], f[ob] = f[ob], f[oa]
        return normalize(state[:fa] + (Word(f),) + state[fa + 1:])
    if len(state[fa]) == 1 and len(state[fb]) == 1:
        return normalize(state[:fa] + (state[fb], state[fa]) + state[fb + 1:])
    raise DerivationError(f"{step}: letters {x}, {y} sit in different compound factors")


def _conjugate_all(state: State, step: ConjugateAll) -> State:
    g, gi = step.g, step.g.inverse()
    return normalize(tuple(free_reduce(g + f + gi) for f in state))


def _hurwitz(state: State, step: Hurwitz) -> State:
    i = step.index - 1
    if not 0 <= i < len(state) - 1:
        raise DerivationError(f"{step}: factor index out of range for {len(state)} factors")
    x, y = state[i], state[i + 1]
    if step.direction == "L":
        pair = (y, free_reduce(y.inverse() + x + y))
    elif step.direction == "R":
        pair = (free_reduce(x + y + x.inverse()), x)
    else:
        raise DerivationError(f"{step}: direction must be L or R")
    # keep the pair as compound factors even when a conjugate collapses to one letter
    return state[:i] + tuple(free_reduce(p) for p in pair) + state[i + 2:]


def apply_step(state: State, step: Step, rels: RelationSet) -> State:
    if isinstance(step, Substitute):
        return _substitute(state, step, rels)
    if isinstance(step, CyclicShift):
        return _shift(state, step)
    if isinstance(step, Commute):
        return _commute(state, step, rels)
    if isinstance(step, ConjugateAll):
        return _conjugate_all(state, step)
    if isinstance(step, Hurwitz):
        return _hurwitz(state, step)
    raise TypeError(f"unknown step {step!r}")


def initial_state(w: Word) -> State:
    return normalize(tuple(Word([x]) for x in w))


def run_script(start: Word, script: DerivationScript,
               rels: RelationSet | None = None) -> tuple[Word, list[TraceEntry]]:
    """Replay ``script`` from ``start``; returns the final word and the full trace.

    Raises DerivationError at the first step that does not apply.
    """
    rels = rels or relation_set(script.d)
    state = initial_state(start)
    trace = [TraceEntry(None, state)]
    for n, step in enumerate(script.steps, 1):
        try:
            state = apply_step(state, step, rels)
        except DerivationError as exc:
            raise DerivationError(f"step {n} ({step}) on [{flatten(state)}]: {exc}") from None
        trace.append(TraceEntry(step, state))
    return free_reduce(flatten(state)), trace


def apply_relation(w: Word, relation: str, occurrence: int, direction: str = "LR",
                   rels: RelationSet | None = None, d: int | None = None) -> Word:
    """Replace the ``occurrence``-th match of one side of a relation in a plain word.

    Without ``rels`` or ``d`` the relation set is guessed from decorations, so
    an undecorated word counts as d=1; pass ``d`` for anything else.
    """
    if rels is None:
        rels = relation_set(d if d is not None else _guess_d(w))
    state = initial_state(w)
    return flatten(_substitute(state, Substitute(relation, occurrence, direction), rels))


def _guess_d(w: Word) -> int:
    if any(x.decoration == "hat" for x in w):
        return 3
    if any(x.decoration == "check" for x in w):
        return 2
    return 1


# -- text format ------------------------------------------------------------

_SUB = re.compile(r"^SUB\s+(\S+)\s+occ=(\d+)\s+dir=(LR|RL)$")


def parse_step(line: str, d: int) -> Step:
    line = line.strip()
    m = _SUB.match(line)
    if m:
        return Substitute(m.group(1), int(m.group(2)), m.group(3))
    head, _, rest = line.partition(" ")
    rest = rest.strip()
    try:
        if head == "SHIFT":
            return CyclicShift(int(rest))
        if head == "COMMUTE":
            return Commute(int(rest))
        if head == "CONJ":
            return ConjugateAll(parse_word(rest, d))
        if head == "HURWITZ":
            idx, direction = rest.split()
            if direction not in ("L", "R"):
                raise ValueError(direction)
            return Hurwitz(int(idx), direction)
    except (ValueError, WordError) as exc:
        raise DerivationError(f"bad step {line!r}: {exc}") from None
    raise DerivationError(f"unknown step {line!r}")


def parse_script(text: str) -> DerivationScript:
    header: dict[str, str] = {}
    body: list[str] = []
    comments: list[str] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comments.append(line[1:].strip())
            continue
        key, _, rest = line.partition(" ")
        if key in ("NAME", "D", "START", "END"):
            header[key] = rest.strip()
        else:
            body.append(line)
    try:
        d = int(header["D"])
        start = parse_word(header["START"], d)
        end = parse_word(header["END"], d)
    except KeyError as exc:
        raise DerivationError(f"script header lacks {exc}") from None
    steps = tuple(parse_step(line, d) for line in body)
    return DerivationScript(d, start, end, steps, header.get("NAME", ""), tuple(comments))


def script_names() -> list[str]:
    root = resources.files("mcgfac").joinpath("data/scripts")
    return sorted(p.name[:-4] for p in root.iterdir() if p.name.endswith(".txt"))


def load_script(name: str) -> DerivationScript:
    path = resources.files("mcgfac").joinpath(f"data/scripts/{name}.txt")
    if not path.is_file():
        raise DerivationError(f"no shipped script {name!r}")
    return parse_script(path.read_text())


def check_script(script: DerivationScript) -> list[TraceEntry]:
    """Replay from the declared start and insist on reaching the declared end."""
    final, trace = run_script(script.start, script)
    if final != script.end:
        raise DerivationError(f"{script.name or 'script'} ends at [{final}], expected [{script.end}]")
    return trace


# -- shipped chains ---------------------------------------------------------

CHAINS = {
    1: [("1", "2"), ("2", "3"), ("3", "4"), ("1*", "2*"), ("2*", "3*"), ("3*", "4*"),
        ("2", "5"), ("3", "5*"), ("5", "6"), ("5*", "6*")],
    2: [("1", "2"), ("2", "3"), ("2", "4"), ("4", "5"), ("5", "6"), ("5", "7"), ("7", "8"), ("8", "9")],
    3: [("1", "2"), ("2", "3"), ("2", "4"), ("4", "5"), ("5", "6"), ("5", "7"), ("7", "8"), ("8", "9")],
}


def chain_script_name(d: int, source: str, target: str) -> str:
    return f"d{d}_{source}_to_{target}".replace("*", "s")


def convert_to_ab6(f) -> Word:
    """Run the shipped conversion of a d=1 factorization to a lift of (ab)^6."""
    letters = getattr(f, "letters", f)
    for name in script_names():
        if not name.endswith("_to_ab6"):
            continue
        script = load_script(name)
        if script.start == letters:
            final, _ = run_script(letters, script)
            return final
    raise DerivationError(f"no (ab)^6 conversion script starts at [{letters}]")
