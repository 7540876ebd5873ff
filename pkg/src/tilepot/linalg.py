"""Exact integer linear algebra: Bareiss determinant, rank, integer kernel vectors.

Everything here works on lists of Python ints, so results never overflow and
never round.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    m = [list(map(int, row)) for row in matrix]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            a = row_i[k]
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                row_i[j] = (pivot * row_i[j] - a * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def echelon(matrix: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form.

    Returns the reduced integer matrix and the list of pivot column indices.
    Entries stay integral at every step (Bareiss update with exact division).
    """
    m = [list(map(int, row)) for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pivot = m[r][c]
        for i in range(r + 1, rows):
            a = m[i][c]
            for j in range(c + 1, cols):
                m[i][j] = (pivot * m[i][j] - a * m[r][j]) // prev
            m[i][c] = 0
        # rows above the pivot row keep their (already divided) scale
        prev = pivot
        pivots.append(c)
        r += 1
    return m, pivots


def rank(matrix: Sequence[Sequence[int]]) -> int:
    if not matrix or not matrix[0]:
        return 0
    return len(echelon(matrix)[1])


def kernel_vector(matrix: Sequence[Sequence[int]]) -> list[int] | None:
    """A primitive integer vector x with matrix @ x == 0, or None if the columns
    are linearly independent.

    The vector is supported on the pivot columns plus the first free column, with
    the free coordinate positive.
    """
    if not matrix:
        return None
    cols = len(matrix[0])
    if cols == 0:
        return None
    ech, pivots = echelon(matrix)
    free = [c for c in range(cols) if c not in set(pivots)]
    if not free:
        return None
    f = free[0]
    x: list[Fraction] = [Fraction(0)] * cols
    x[f] = Fraction(1)
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        s = sum((Fraction(ech[r][j]) * x[j] for j in range(c + 1, cols) if x[j]), Fraction(0))
        x[c] = -s / ech[r][c]
    denom = 1
    for v in x:
        denom = denom * v.denominator // gcd(denom, v.denominator)
    ints = [int(v * denom) for v in x]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return [v // g for v in ints]
