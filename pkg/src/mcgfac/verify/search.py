"""Bounded search for a derivation between two words.

Breadth-first from both ends, level by level, with one table of visited words
per side.  Moves are relation substitutions (either direction), commutations of
adjacent letters and single-letter cyclic shifts.  The backward side only takes
moves during which no free cancellation happens, since exactly those have a
one-step inverse; every script returned is replayed before it is handed out.
Not finding a script says nothing about inequivalence.
"""

from __future__ import annotations

from collections import deque
from typing import Iterator

from ..core import Word, free_reduce
from .derive import (
    Commute, CyclicShift, DerivationError, DerivationScript, Substitute, run_script,
)
from .relations import COMMUTE, RelationSet

DEFAULT_BUDGET = 10**6


def _hits(w: Word, pattern: Word) -> list[int]:
    m = len(pattern)
    return [s for s in range(len(w) - m + 1) if w[s:s + m] == pattern]


def _moves(w: Word, rels: RelationSet) -> Iterator[tuple]:
    """Yield (step, result, inverse step or None).

    Every factor of a plain word is a single letter, so the engine's steps
    reduce to splicing plus free reduction; run_script re-checks the result.
    """
    for rel in rels.relations:
        if rel.kind == COMMUTE:
            continue  # covered by Commute moves
        for direction in ("LR", "RL"):
            source, target = rel.side(direction)
            if not source:
                continue  # never insert a relator out of nothing
            back = "RL" if direction == "LR" else "LR"
            m = len(source)
            for n, s in enumerate(_hits(w, source), 1):
                v = free_reduce(w[:s] + target + w[s + m:])
                inverse = None
                if target and len(v) == len(w) - m + len(target):
                    n_back = sum(1 for t in _hits(v, target) if t < s) + 1
                    inverse = Substitute(rel.id, n_back, back)
                yield Substitute(rel.id, n, direction), v, inverse
    for i in range(len(w) - 1):
        if w[i] != w[i + 1] and rels.commute(w[i], w[i + 1]):
            v = free_reduce(w[:i] + Word((w[i + 1], w[i])) + w[i + 2:])
            step = Commute(i + 1)
            yield step, v, step if len(v) == len(w) else None
    if len(w) > 1:
        for k in (1, -1):
            v = free_reduce(w[k:] + w[:k])
            yield CyclicShift(k), v, CyclicShift(-k) if len(v) == len(w) else None


def search_equivalence(w1: Word, w2: Word, rels: RelationSet,
                       budget: int = DEFAULT_BUDGET, max_growth: int = 4) -> DerivationScript | None:
    """Look for a script taking ``w1`` to ``w2``; ``None`` when the budget runs out.

    ``max_growth`` bounds how many letters longer than the longer endpoint any
    intermediate word may be.
    """
    w1, w2 = free_reduce(w1), free_reduce(w2)
    if w1 == w2:
        return DerivationScript(rels.d, w1, w2, ())
    cap = max(len(w1), len(w2)) + max_growth
    # word -> (parent word, step taking parent to word) forward;
    # word -> (next word, step taking word to next) backward
    fwd: dict[Word, tuple] = {w1: (None, None)}
    bwd: dict[Word, tuple] = {w2: (None, None)}
    fq, bq = deque([w1]), deque([w2])
    spent = 0

    def expand(queue, table, other, forward):
        nonlocal spent
        for _ in range(len(queue)):
            if spent >= budget:
                return None
            u = queue.popleft()
            spent += 1
            for step, v, inverse in _moves(u, rels):
                if len(v) > cap or v in table:
                    continue
                if forward:
                    table[v] = (u, step)
                else:
                    if inverse is None:
                        continue
                    table[v] = (u, inverse)
                if v in other:
                    return v
                queue.append(v)
        return None

    while (fq or bq) and spent < budget:
        side = bool(fq) and (not bq or len(fq) <= len(bq))
        meet = expand(fq, fwd, bwd, True) if side else expand(bq, bwd, fwd, False)
        if meet is None:
            continue
        script = _assemble(rels.d, w1, w2, meet, fwd, bwd)
        if script is not None:
            return script
    return None


def _assemble(d, w1, w2, meet, fwd, bwd) -> DerivationScript | None:
    head = []
    u = meet
    while fwd[u][0] is not None:
        parent, step = fwd[u]
        head.append(step)
        u = parent
    head.reverse()
    tail = []
    u = meet
    while bwd[u][0] is not None:
        nxt, step = bwd[u]
        tail.append(step)
        u = nxt
    script = DerivationScript(d, w1, w2, tuple(head + tail))
    try:
        final, _ = run_script(w1, script)
    except DerivationError:
        return None
    return script if final == w2 else None
