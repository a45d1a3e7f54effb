"""Dense univariate polynomials over a :class:`~cyclicup.gf.FieldSpec`.

A polynomial is a list of element codes, lowest degree first, with no
trailing zeros; ``[]`` is the zero polynomial.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .gf import FieldSpec

Poly = list[int]


def trim(a: Iterable[int]) -> Poly:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def deg(a: Sequence[int]) -> int:
    """Degree, with -1 for the zero polynomial."""
    return len(trim(a)) - 1


def add(F: FieldSpec, a: Sequence[int], b: Sequence[int]) -> Poly:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return trim(F.add(x, y) for x, y in zip(a, b))


def sub(F: FieldSpec, a: Sequence[int], b: Sequence[int]) -> Poly:
    return add(F, a, [F.neg(y) for y in b])


def scale(F: FieldSpec, c: int, a: Sequence[int]) -> Poly:
    return trim(F.mul(c, x) for x in a)


def mul(F: FieldSpec, a: Sequence[int], b: Sequence[int]) -> Poly:
    a, b = trim(a), trim(b)
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    bs = [(j, y) for j, y in enumerate(b) if y]
    for i, x in enumerate(a):
        if x:
            for j, y in bs:
                out[i + j] = F.add(out[i + j], F.mul(x, y))
    return trim(out)


def monic(F: FieldSpec, a: Sequence[int]) -> Poly:
    a = trim(a)
    if not a:
        return a
    return scale(F, F.inv(a[-1]), a)


def divmod_(F: FieldSpec, a: Sequence[int], b: Sequence[int]) -> tuple[Poly, Poly]:
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = trim(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], a
    inv_lead = F.inv(b[-1])
    q = [0] * (len(a) - db)
    nz = [(j, y) for j, y in enumerate(b[:-1]) if y]
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c == 0:
            continue
        c = F.mul(c, inv_lead)
        q[i - db] = c
        a[i] = 0
        negc = F.neg(c)
        base = i - db
        for j, y in nz:
            a[base + j] = F.add(a[base + j], F.mul(negc, y))
    return trim(q), trim(a[:db])


def mod(F: FieldSpec, a: Sequence[int], b: Sequence[int]) -> Poly:
    return divmod_(F, a, b)[1]


def gcd(F: FieldSpec, a: Sequence[int], b: Sequence[int]) -> Poly:
    """Monic greatest common divisor (Euclid)."""
    a, b = trim(a), trim(b)
    while b:
        a, b = b, mod(F, a, b)
    return monic(F, a)


def evaluate(F: FieldSpec, a: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def evaluate_many(F: FieldSpec, a: Sequence[int], xs: Sequence[int]) -> list[int]:
    """Evaluate ``a`` at every point of ``xs`` (Horner, vectorised if possible)."""
    a = trim(a)
    if not F.vectorized or len(xs) < 8:
        return [evaluate(F, a, x) for x in xs]
    pts = np.asarray(xs, dtype=np.int64)
    acc = np.zeros(len(pts), dtype=np.int64)
    for c in reversed(a):
        acc = F.vmul(acc, pts)
        if c:
            acc = F.vadd(acc, c)
    return [int(v) for v in acc]


def from_roots(F: FieldSpec, roots: Iterable[int]) -> Poly:
    """The monic polynomial prod (X - a) over the given roots."""
    out = [1]
    for a in roots:
        na = F.neg(a)
        nxt = [0] * (len(out) + 1)
        for i, c in enumerate(out):
            nxt[i + 1] = F.add(nxt[i + 1], c)
            nxt[i] = F.add(nxt[i], F.mul(na, c))
        out = nxt
    return out


def x_pow_minus_one(F: FieldSpec, n: int) -> Poly:
    """X^n - 1."""
    return [F.neg(1)] + [0] * (n - 1) + [1]


def fmt(F: FieldSpec, a: Sequence[int], var: str = "X") -> str:
    """Human-readable form, highest degree first, e.g. ``X^3 + X + 1``."""
    a = trim(a)
    if not a:
        return "0"
    terms = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if not c:
            continue
        mono = "1" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if c == 1:
            terms.append(mono)
        else:
            cs = F.fmt(c)
            if F.r > 1:
                cs = f"({cs})"
            terms.append(cs if i == 0 else f"{cs}*{mono}")
    return " + ".join(terms)
