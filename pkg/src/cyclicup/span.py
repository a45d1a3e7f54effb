"""Exhaustive enumeration of the F-linear span of a few vectors.

The span of k rows over F_q is walked in blocks: a table of all
combinations of the first ``b`` rows is built once, then shifted by every
combination of the remaining rows.  Message ``m`` gets the index
``sum(m_i * q^i)`` (row 0 least significant), and every block reports the
index of its first row, so callers can apply deterministic tie-breaks no
matter how blocks are scheduled.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterator, TypeVar

import numpy as np

from .gf import FieldSpec

T = TypeVar("T")

DEFAULT_BLOCK = 1 << 16


class SpanWalker:
    """Span of ``rows`` (entries in F) over the scalars 0..q-1.

    ``scalar_order`` restricts scalars to a subfield, e.g. the prime field
    when the rows live in an extension; it defaults to |F|.
    """

    def __init__(self, F: FieldSpec, rows, block: int = DEFAULT_BLOCK, scalar_order: int | None = None):
        rows = np.asarray(rows, dtype=np.int64 if F.vectorized else object)
        if rows.ndim != 2 or rows.shape[0] == 0:
            raise ValueError("need a non-empty 2-d array of rows")
        self.F = F
        self.rows = rows
        q = scalar_order or F.order
        k = rows.shape[0]
        b = 1
        while b < k and q ** (b + 1) <= block:
            b += 1
        self.low = b
        self.k = k
        self.q = q
        table = np.zeros((1, rows.shape[1]), dtype=rows.dtype)
        for i in range(b):
            parts = [table] + [F.vadd(table, F.vmul(c, rows[i])) for c in range(1, q)]
            table = np.concatenate(parts, axis=0)
        self.table = table
        self.n_blocks = q ** (k - b)
        self.block_size = q**b

    @property
    def total(self) -> int:
        return self.q**self.k

    def offset(self, h: int):
        """Combination of the high rows selected by high index ``h``."""
        F = self.F
        acc = np.zeros(self.rows.shape[1], dtype=self.rows.dtype)
        i = self.low
        while h:
            h, d = divmod(h, self.q)
            if d:
                acc = F.vadd(acc, F.vmul(d, self.rows[i]))
            i += 1
        return acc

    def block(self, h: int) -> tuple[int, np.ndarray]:
        return h * self.block_size, self.F.vadd(self.table, self.offset(h))

    def blocks(self) -> Iterator[tuple[int, np.ndarray]]:
        """All blocks; over F_2 the high part follows a Gray code (one XOR per step)."""
        if self.q == 2:
            acc = np.zeros(self.rows.shape[1], dtype=self.rows.dtype)
            prev = 0
            for t in range(self.n_blocks):
                g = t ^ (t >> 1)
                changed = g ^ prev
                if changed:
                    acc = acc ^ self.rows[self.low + changed.bit_length() - 1]
                prev = g
                yield g * self.block_size, self.table ^ acc
            return
        for h in range(self.n_blocks):
            yield self.block(h)

    def map_blocks(self, fn: Callable[[int, np.ndarray], T], jobs: int = 1) -> Iterator[T]:
        """Apply ``fn`` to every block; with jobs > 1 blocks run on a thread pool."""
        if jobs <= 1:
            for start, blk in self.blocks():
                yield fn(start, blk)
            return
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            yield from pool.map(lambda h: fn(*self.block(h)), range(self.n_blocks))


def lex_first(rows: np.ndarray) -> int:
    """Index of the lexicographically smallest row (column 0 most significant)."""
    if len(rows) == 1:
        return 0
    return int(np.lexsort(rows.T[::-1])[0])
