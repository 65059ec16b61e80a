"""Re-derive the frozen E7/E6 readings of delta profiles.

For every node the search tries each delta term whose value on the Type 1
sample equals the node's value in the worked example covector, without signs.
An assignment survives if the duals of all expanded factorizations are
pairwise distinct and share one square.  Duals are compared through the
integer adjugate of the Gram matrix (sympy), independent of the package's own
rational arithmetic.
"""

import itertools
from fractions import Fraction

import pytest
import sympy

from golden import E6_EXAMPLE, E7_EXAMPLE
from mcgfac.delta import delta_profile
from mcgfac.lattice import ASSIGNMENTS, gram
from mcgfac.tables import expand_all, sample


def _search(d, kind, example):
    g = sympy.Matrix(gram(kind))
    det = int(g.det())
    adj = [[int(c) for c in row] for row in (g.adjugate()).tolist()]
    n = len(adj)
    profiles = [delta_profile(t.word) for t in expand_all(d)]
    first = delta_profile(sample(d, "1").word)
    terms = [(name, k) for name in first.names() for k in range(len(first[name]))]
    candidates = [[t for t in terms if first[t[0]][t[1]] == example[i]] for i in range(n)]
    table = [{t: p[t[0]][t[1]] for t in terms} for p in profiles]
    found = []
    for combo in itertools.product(*candidates):
        if len(set(combo)) < n:
            continue
        seen, squares = set(), set()
        for row in table:
            l = tuple(row[t] for t in combo)
            if l in seen:
                break
            seen.add(l)
            squares.add(sum(l[i] * adj[i][j] * l[j] for i in range(n) for j in range(n)))
            if len(squares) > 1:
                break
        else:
            found.append((combo, Fraction(squares.pop(), det)))
    return found


def _shift_terms(combo, d):
    """Move every term one block along, as cyclically shifting the factorization does."""
    length = {"a1": 3, "b": 3, "a2": 6 if d == 2 else 3, "a3": 3}
    step = {"a1": 1, "b": 1, "a2": 2 if d == 2 else 1, "a3": 1}
    return tuple((name, (k + step[name]) % length[name]) for name, k in combo)


@pytest.mark.parametrize("d,kind,example,square", [
    (2, "E7", E7_EXAMPLE, Fraction(-3, 2)),
    (3, "E6", E6_EXAMPLE, Fraction(-4, 3)),
])
def test_calibrated_assignment(d, kind, example, square):
    target = example[0] + (example[1],)
    found = _search(d, kind, target)
    frozen = ASSIGNMENTS[kind]
    assert (frozen, square) in found
    assert {sq for _, sq in found} == {square}
    # all survivors are the frozen reading seen from another block shift
    orbit = {frozen, _shift_terms(frozen, d), _shift_terms(_shift_terms(frozen, d), d)}
    assert {combo for combo, _ in found} <= orbit
