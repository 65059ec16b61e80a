"""Homological shadow: the action of twists on H1 of the torus, in SL(2, Z)."""

from __future__ import annotations

from typing import Iterable

from ..core import CurveLetter

Matrix = tuple[tuple[int, int], tuple[int, int]]

IDENTITY: Matrix = ((1, 0), (0, 1))
A: Matrix = ((1, 1), (0, 1))
B: Matrix = ((1, 0), (-1, 1))
A_INV: Matrix = ((1, -1), (0, 1))
B_INV: Matrix = ((1, 0), (1, 1))

_IMAGES = {("a", 1): A, ("a", -1): A_INV, ("b", 1): B, ("b", -1): B_INV}


def matmul(m: Matrix, n: Matrix) -> Matrix:
    return (
        (m[0][0] * n[0][0] + m[0][1] * n[1][0], m[0][0] * n[0][1] + m[0][1] * n[1][1]),
        (m[1][0] * n[0][0] + m[1][1] * n[1][0], m[1][0] * n[0][1] + m[1][1] * n[1][1]),
    )


def sl2_image(w: Iterable[CurveLetter]) -> Matrix:
    """Multiply the letter images left to right: a-letters give A, b-letters B."""
    m = IDENTITY
    for x in w:
        m = matmul(m, _IMAGES[(x.family, x.sign)])
    return m


def is_identity_sl2(w) -> bool:
    letters = getattr(w, "letters", w)
    return sl2_image(letters) == IDENTITY
