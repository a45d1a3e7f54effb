"""Gaussian elimination over a FieldSpec: rank, determinant, kernel."""

from __future__ import annotations

from typing import Sequence

from .gf import FieldSpec


def _rref(F: FieldSpec, rows: Sequence[Sequence[int]]):
    m = [list(r) for r in rows]
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    pivots = []
    sign_flips = 0
    row = 0
    for col in range(n_cols):
        piv = next((i for i in range(row, n_rows) if m[i][col]), None)
        if piv is None:
            continue
        if piv != row:
            m[row], m[piv] = m[piv], m[row]
            sign_flips += 1
        inv = F.inv(m[row][col])
        m[row] = [F.mul(inv, x) for x in m[row]]
        for i in range(n_rows):
            if i != row and m[i][col]:
                c = F.neg(m[i][col])
                m[i] = [F.add(x, F.mul(c, y)) for x, y in zip(m[i], m[row])]
        pivots.append(col)
        row += 1
        if row == n_rows:
            break
    return m, pivots, sign_flips


def rank(F: FieldSpec, rows: Sequence[Sequence[int]]) -> int:
    if not rows:
        return 0
    return len(_rref(F, rows)[1])


def det(F: FieldSpec, M: Sequence[Sequence[int]]) -> int:
    """Determinant of a square matrix by elimination."""
    m = [list(r) for r in M]
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("determinant of a non-square matrix")
    result = 1
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col]), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            result = F.neg(result)
        pv = m[col][col]
        result = F.mul(result, pv)
        inv = F.inv(pv)
        for i in range(col + 1, n):
            if m[i][col]:
                c = F.neg(F.mul(m[i][col], inv))
                m[i] = [F.add(x, F.mul(c, y)) for x, y in zip(m[i], m[col])]
    return result


def kernel_vector(F: FieldSpec, M: Sequence[Sequence[int]]) -> list[int] | None:
    """A nonzero x with M x = 0, or None if the kernel is trivial.

    The free variable of smallest index is set to 1, others to 0.
    """
    n_cols = len(M[0])
    red, pivots, _ = _rref(F, M)
    free = [c for c in range(n_cols) if c not in pivots]
    if not free:
        return None
    f0 = free[0]
    x = [0] * n_cols
    x[f0] = 1
    for r, c in enumerate(pivots):
        x[c] = F.neg(red[r][f0])
    return x
