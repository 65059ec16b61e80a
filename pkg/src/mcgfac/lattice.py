"""Exact arithmetic in the negative-definite lattices E6, E7, E8 and the affine E8.

Coordinates are ``(x1, ..., x_r; y)``: ``x_i`` is the coefficient of the chain
node e_i and ``y`` that of e0, which is attached to e3.  Basic roots square to
-2 and adjacent ones pair to +1.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from functools import lru_cache
from typing import Iterable, Sequence

from .delta import DeltaProfile, delta_profile

RANKS = {"E6": 6, "E7": 7, "E8": 8, "E8~": 9}
CHAIN = {"E6": 5, "E7": 6, "E8": 7, "E8~": 8}
DET = {"E6": 3, "E7": 2, "E8": 1, "E8~": 0}
KIND_FOR_D = {1: "E8", 2: "E7", 3: "E6"}

# Radical of the affine lattice, in (x1..x8; y) coordinates.
TILDE_RADICAL = (2, 4, 6, 5, 4, 3, 2, 1, 3)
# x8-multiple subtracted when passing from affine to E8 coordinates.
_TILDE_FOLD = (2, 4, 6, 5, 4, 3, 2, 3)


class LatticeError(ValueError):
    pass


def _check_kind(kind: str) -> str:
    if kind not in RANKS:
        raise LatticeError(f"unknown lattice kind {kind!r}")
    return kind


@lru_cache(maxsize=None)
def gram(kind: str) -> tuple[tuple[int, ...], ...]:
    """Gram matrix in the basis (e1..e_r, e0)."""
    _check_kind(kind)
    n, chain = RANKS[kind], CHAIN[kind]
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = -2
    for i in range(chain - 1):
        g[i][i + 1] = g[i + 1][i] = 1
    e0, e3 = n - 1, 2
    g[e0][e3] = g[e3][e0] = 1
    return tuple(tuple(row) for row in g)


def _as_fractions(rows) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in rows]


def determinant(kind: str) -> Fraction:
    m = _as_fractions(gram(kind))
    n, det = len(m), Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if m[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return det


@lru_cache(maxsize=None)
def gram_inverse(kind: str) -> tuple[tuple[Fraction, ...], ...]:
    if DET[_check_kind(kind)] == 0:
        raise LatticeError(f"{kind} has a degenerate Gram matrix")
    n = RANKS[kind]
    m = [row + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(_as_fractions(gram(kind)))]
    for c in range(n):
        pivot = next(r for r in range(c, n) if m[r][c] != 0)
        m[c], m[pivot] = m[pivot], m[c]
        p = m[c][c]
        m[c] = [x / p for x in m[c]]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return tuple(tuple(row[n:]) for row in m)


@dataclass(frozen=True)
class LatticeVector:
    """Coordinates (x1..x_r; y); entries are ints, or Fractions for dual weights."""

    kind: str
    coords: tuple

    def __post_init__(self):
        _check_kind(self.kind)
        if len(self.coords) != RANKS[self.kind]:
            raise LatticeError(f"{self.kind} vectors have {RANKS[self.kind]} coordinates")

    @classmethod
    def of(cls, kind: str, x: Sequence, y) -> LatticeVector:
        return cls(kind, tuple(x) + (y,))

    @classmethod
    def basis(cls, kind: str, i: int) -> LatticeVector:
        """Basic root e_i (i=0 is the node attached to e3)."""
        n = RANKS[kind]
        pos = n - 1 if i == 0 else i - 1
        if not 0 <= pos < n or (i != 0 and i > CHAIN[kind]):
            raise LatticeError(f"{kind} has no node e{i}")
        return cls(kind, tuple(int(k == pos) for k in range(n)))

    @classmethod
    def zero(cls, kind: str) -> LatticeVector:
        return cls(kind, (0,) * RANKS[kind])

    @property
    def x(self) -> tuple:
        return self.coords[:-1]

    @property
    def y(self):
        return self.coords[-1]

    def _same(self, other: LatticeVector) -> None:
        if self.kind != other.kind:
            raise LatticeError(f"kind mismatch: {self.kind} vs {other.kind}")

    def __add__(self, other: LatticeVector) -> LatticeVector:
        self._same(other)
        return LatticeVector(self.kind, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: LatticeVector) -> LatticeVector:
        self._same(other)
        return LatticeVector(self.kind, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> LatticeVector:
        return LatticeVector(self.kind, tuple(-a for a in self.coords))

    def __rmul__(self, k) -> LatticeVector:
        return LatticeVector(self.kind, tuple(k * a for a in self.coords))

    def is_integral(self) -> bool:
        return all(Fraction(c).denominator == 1 for c in self.coords)

    def denominator(self) -> int:
        den = 1
        for c in self.coords:
            d = Fraction(c).denominator
            den = den * d // gcd(den, d)
        return den

    def normalized(self) -> LatticeVector:
        """Same vector with integral Fractions turned into ints."""
        return LatticeVector(self.kind, tuple(_simplify(c) for c in self.coords))

    def __str__(self) -> str:
        return f"{self.kind}({','.join(str(c) for c in self.x)};{self.y})"

    def to_json(self) -> dict:
        den = self.denominator()
        if den == 1:
            return {"kind": self.kind, "x": [int(c) for c in self.x], "y": int(self.y)}
        num = [int(Fraction(c) * den) for c in self.coords]
        return {"kind": self.kind, "x": num[:-1], "y": num[-1], "den": den}


def _simplify(c):
    c = Fraction(c)
    return int(c) if c.denominator == 1 else c


@dataclass(frozen=True)
class Covector:
    """Values (l(e1)..l(e_r); l(e0)) of a linear form on the lattice."""

    kind: str
    values: tuple

    def __post_init__(self):
        _check_kind(self.kind)
        if len(self.values) != RANKS[self.kind]:
            raise LatticeError(f"{self.kind} covectors have {RANKS[self.kind]} values")

    @classmethod
    def of(cls, kind: str, x: Sequence, y) -> Covector:
        return cls(kind, tuple(x) + (y,))

    def __call__(self, v: LatticeVector):
        if v.kind != self.kind:
            raise LatticeError(f"kind mismatch: {self.kind} vs {v.kind}")
        return sum(a * b for a, b in zip(self.values, v.coords))

    def __str__(self) -> str:
        return f"{self.kind}*({','.join(str(c) for c in self.values[:-1])};{self.values[-1]})"

    def to_json(self) -> dict:
        return {"kind": self.kind, "l": list(self.values[:-1]), "y": self.values[-1]}


def pairing(v: LatticeVector, w: LatticeVector):
    v._same(w)
    g = gram(v.kind)
    return _simplify(sum(v.coords[i] * g[i][j] * w.coords[j]
                         for i in range(len(g)) for j in range(len(g)) if g[i][j]))


def norm(v: LatticeVector):
    return pairing(v, v)


def dualize(v: LatticeVector) -> Covector:
    """The form h -> v.h, evaluated on the basis."""
    g = gram(v.kind)
    return Covector(v.kind, tuple(_simplify(sum(g[i][j] * v.coords[j] for j in range(len(g))))
                                  for i in range(len(g))))


def dual_of(l: Covector) -> LatticeVector:
    """The unique vector v with v.h = l(h) for all h (finite types only)."""
    inv = gram_inverse(l.kind)
    return LatticeVector(l.kind, tuple(_simplify(sum(inv[i][j] * l.values[j] for j in range(len(inv))))
                                       for i in range(len(inv))))


def reduce_tilde_to_e8(v: LatticeVector) -> LatticeVector:
    if v.kind != "E8~":
        raise LatticeError("expected an affine E8 vector")
    x8 = v.coords[7]
    trunc = v.coords[:7] + (v.coords[8],)
    return LatticeVector("E8", tuple(c - x8 * f for c, f in zip(trunc, _TILDE_FOLD)))


def extend_to_tilde(v: LatticeVector) -> LatticeVector:
    """Embed an E8 vector into the affine lattice with x8 = 0."""
    if v.kind != "E8":
        raise LatticeError("expected an E8 vector")
    return LatticeVector("E8~", v.coords[:7] + (0, v.coords[7]))


# -- root enumeration -------------------------------------------------------

def _ldl(q: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[Fraction]]:
    """q = L D L^T with unit lower-triangular L, exact."""
    n = len(q)
    L = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    D = [Fraction(0)] * n
    for j in range(n):
        D[j] = q[j][j] - sum(L[j][k] ** 2 * D[k] for k in range(j))
        for i in range(j + 1, n):
            L[i][j] = (q[i][j] - sum(L[i][k] * L[j][k] * D[k] for k in range(j))) / D[j]
    return L, D


def vectors_of_norm(kind: str, target: int) -> list[LatticeVector]:
    """All v with v.v = -target, by Fincke-Pohst enumeration on -Gram.

    With -Gram = L D L^T, the form is sum_j D_j (x_j + sum_{i>j} L_ij x_i)^2, so
    coordinates are fixed from the last to the first, each confined to the
    interval where the partial sum stays within ``target``.
    """
    if DET[_check_kind(kind)] == 0:
        raise LatticeError(f"{kind} is not definite")
    q = [[-Fraction(x) for x in row] for row in gram(kind)]
    L, D = _ldl(q)
    n = len(q)
    found: list[tuple[int, ...]] = []
    x = [0] * n

    def rec(j: int, budget: Fraction) -> None:
        if j < 0:
            if budget == 0:
                found.append(tuple(x))
            return
        centre = -sum(L[i][j] * x[i] for i in range(j + 1, n))
        c = round(centre)
        # walk outwards from the nearest integer until the term exceeds the budget
        for direction in (0, 1):
            k = c if direction == 0 else c - 1
            step = 1 if direction == 0 else -1
            while True:
                term = D[j] * (k - centre) ** 2
                if term > budget:
                    break
                x[j] = k
                rec(j - 1, budget - term)
                k += step
        x[j] = 0

    rec(n - 1, Fraction(target))
    return [LatticeVector(kind, v) for v in sorted(found)]


@lru_cache(maxsize=None)
def _roots(kind: str) -> tuple[LatticeVector, ...]:
    return tuple(vectors_of_norm(kind, 2))


def enumerate_roots(kind: str) -> list[LatticeVector]:
    """All v with v.v = -2: 240 (E8), 126 (E7), 72 (E6)."""
    return list(_roots(kind))


# -- sections and reflections ---------------------------------------------

@dataclass(frozen=True)
class SectionClass:
    """The class [S] + n[T] + v of a section, with n = -(v.v)/2."""

    v: LatticeVector
    n: int


def section_class(v: LatticeVector) -> SectionClass:
    if v.kind != "E8":
        raise LatticeError("section classes live over E8")
    sq = norm(v)
    if sq % 2:
        raise LatticeError(f"odd square {sq}")
    return SectionClass(v, -sq // 2)


def is_root(v: LatticeVector) -> bool:
    return v.is_integral() and norm(v) == -2


def picard_lefschetz(e: LatticeVector, x: LatticeVector) -> LatticeVector:
    """rho_e(x) = x + (e.x) e."""
    e._same(x)
    return x + pairing(e, x) * e


@dataclass(frozen=True)
class PathStep:
    """Apply rho_{e_node}, i.e. add ``coefficient * e_node`` to the current root."""

    node: int
    coefficient: int = 1

    def __str__(self) -> str:
        c = self.coefficient
        return f"{'+' if c > 0 else '-'}{'' if abs(c) == 1 else abs(c)}e{self.node}"


def basic_roots(kind: str) -> list[tuple[int, LatticeVector]]:
    nodes = list(range(1, CHAIN[kind] + 1)) + [0]
    return [(i, LatticeVector.basis(kind, i)) for i in nodes]


def height(v: LatticeVector):
    return sum(v.coords)


def root_path(e: LatticeVector, target: LatticeVector) -> list[PathStep] | None:
    """Shortest walk from e to target, each step a reflection in a basic root.

    Steps are rho_{e_i} applied to roots pairing to +-1 with e_i, which adds
    +-e_i and moves the height by one.  Such steps never leave the positive
    (or negative) roots, so when e and target lie on opposite sides the walk
    may also use rho_{e_i}(+-e_i) = -+e_i, a step of -+2e_i.
    """
    e._same(target)
    if e == target:
        return []
    crossing = height(e) * height(target) < 0
    basics = basic_roots(e.kind)
    prev: dict[LatticeVector, tuple[LatticeVector, PathStep]] = {e: None}
    queue = deque([e])
    while queue:
        cur = queue.popleft()
        for i, b in basics:
            p = pairing(cur, b)
            if p not in (1, -1) and not (crossing and p in (2, -2)):
                continue
            nxt = cur + p * b
            if nxt in prev or (p in (2, -2) and height(nxt) * height(target) < 0):
                continue
            prev[nxt] = (cur, PathStep(i, p))
            if nxt == target:
                steps = []
                node = nxt
                while prev[node] is not None:
                    node, step = prev[node]
                    steps.append(step)
                return steps[::-1]
            queue.append(nxt)
    return None


# -- delta profiles to covectors -------------------------------------------

# Which delta term feeds which node, per lattice: node order (e1..e_r, e0),
# each entry (sequence name, 0-based term index).  E8 is the direct reading
# l(e_i) = delta-a_i, l(e0) = delta-b_3.  E7 and E6 are calibrated: a sign-free
# reading must reproduce the worked Type 1 example and give 56 (27) distinct
# duals of one common square.  E6 has exactly one such reading; E7 has three,
# equal up to a cyclic block shift, and the one feeding delta-b_3 to e0 (as
# for E8) is kept.  See tests/test_calibration.py.
ASSIGNMENTS: dict[str, tuple[tuple[str, int], ...]] = {
    "E8": (("a", 0), ("a", 1), ("a", 2), ("a", 3), ("a", 4), ("a", 5), ("a", 6), ("b", 2)),
    "E7": (("a1", 0), ("b", 2), ("a2", 1), ("a2", 2), ("a2", 3), ("a2", 4), ("a2", 0)),
    "E6": (("a1", 1), ("a1", 0), ("b", 2), ("a2", 0), ("a2", 1), ("a3", 0)),
}


def profile_to_covector(p: DeltaProfile, assignment: Sequence[tuple[str, int]] | None = None) -> Covector:
    kind = KIND_FOR_D[p.d]
    table = ASSIGNMENTS[kind] if assignment is None else assignment
    return Covector(kind, tuple(p[name][k] for name, k in table))


def affine_covector(p: DeltaProfile) -> Covector:
    """d=1 only: the E8 covector extended by l(e8) = delta-a_8."""
    if p.d != 1:
        raise LatticeError("affine extension is defined for d=1")
    a, b = p["a"], p["b"]
    return Covector("E8~", tuple(a[:8]) + (b[2],))


def root_of_profile(p: DeltaProfile) -> LatticeVector:
    if p.d != 1:
        raise LatticeError("roots correspond to d=1 profiles")
    e = dual_of(profile_to_covector(p))
    if not is_root(e):
        raise LatticeError(f"{e} is not a root (square {norm(e)})")
    if e.x[6] != p["a"][7]:
        raise LatticeError(f"x7={e.x[6]} disagrees with the eighth delta-a term {p['a'][7]}")
    return e


def weight_of_profile(p: DeltaProfile) -> LatticeVector:
    if p.d not in (2, 3):
        raise LatticeError("weights correspond to d=2,3 profiles")
    w = dual_of(profile_to_covector(p))
    bound = {2: 2, 3: 3}[p.d]
    if bound % w.denominator():
        raise LatticeError(f"{w} has denominator {w.denominator()}, expected a divisor of {bound}")
    return w


def root_of_factorization(f) -> LatticeVector:
    return root_of_profile(delta_profile(f))


def weight_of_factorization(f) -> LatticeVector:
    return weight_of_profile(delta_profile(f))


def vector_record(v: LatticeVector) -> dict:
    rec = v.normalized().to_json()
    if v.kind in ("E6", "E7", "E8") and is_root(v):
        rec["root"] = True
    return rec


def closure_under_reflections(seeds: Iterable[LatticeVector]) -> set[LatticeVector]:
    """Orbit of the seeds under the reflections in the basic roots."""
    seeds = list(seeds)
    if not seeds:
        return set()
    basics = [b for _, b in basic_roots(seeds[0].kind)]
    seen = set(seeds)
    queue = deque(seeds)
    while queue:
        v = queue.popleft()
        for b in basics:
            w = picard_lefschetz(b, v)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen
