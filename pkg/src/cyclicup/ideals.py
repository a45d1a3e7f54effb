"""The ideal lattice of R = F[X]/(X^p - 1).

R splits as a direct sum of one field per irreducible factor of X^p - 1, so
its ideals correspond to subsets of the factor set.  An ideal is described
by ``present`` (factor indices whose summands lie in the ideal) and by its
classical cyclic-code generator, the product of the factors *not* present.

In characteristic p the ring is local and the ideals form the chain
((X - 1)^m); ``present`` is then ``range(p - m)``, one layer per dimension,
so subset order is still containment.
"""

from __future__ import annotations

import itertools
import random
from math import comb
from dataclasses import dataclass
from typing import Iterator, Sequence

from . import poly as P
from .ring import Factorization, RingElement

__all__ = [
    "IdealDescriptor",
    "BudgetExceeded",
    "enumerate_ideals",
    "ideal_from_generator",
    "ideals_in_dim_range",
    "DEFAULT_IDEAL_BUDGET",
]

DEFAULT_IDEAL_BUDGET = 1 << 22


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed its configured budget."""


@dataclass(frozen=True)
class IdealDescriptor:
    fact: Factorization
    present: tuple[int, ...]
    generator: tuple[int, ...]
    dim: int

    @property
    def is_zero(self) -> bool:
        return self.dim == 0

    def contains(self, word: RingElement | Sequence[int]) -> bool:
        """Membership: the generator divides the word (degree < p)."""
        cs = word.coeffs if isinstance(word, RingElement) else word
        return not P.mod(self.fact.field, cs, self.generator)

    def to_json(self) -> dict:
        return {
            "p": self.fact.p,
            "ell": self.fact.ell,
            "present": list(self.present),
            "generator": list(self.generator),
            "dim": self.dim,
        }


def _descriptor(fact: Factorization, present: Sequence[int]) -> IdealDescriptor:
    present = tuple(sorted(present))
    F = fact.field
    if fact.char_p:
        m = fact.p - len(present)
        g: list[int] = [1]
        for _ in range(m):
            g = P.mul(F, g, fact.factors[0].poly)
        return IdealDescriptor(fact, present, tuple(g), len(present))
    inside = set(present)
    if 2 * sum(fact.factors[i].degree for i in inside) < fact.p:
        # cheaper to divide X^p - 1 by the few present factors
        h: list[int] = [1]
        for i in present:
            h = P.mul(F, h, fact.factors[i].poly)
        g, rem = P.divmod_(F, fact.xp_minus_1(), h)
        if rem:
            raise ArithmeticError("present factors do not divide X^p - 1")
    else:
        g = [1]
        for i, f in enumerate(fact.factors):
            if i not in inside:
                g = P.mul(F, g, f.poly)
    dim = fact.p - (len(g) - 1)
    if dim != sum(fact.factors[i].degree for i in present):
        raise ArithmeticError("dimension bookkeeping mismatch")
    return IdealDescriptor(fact, present, tuple(g), dim)


def _count(fact: Factorization) -> int:
    return fact.p + 1 if fact.char_p else 1 << len(fact.factors)


def enumerate_ideals(
    fact: Factorization, budget: int = DEFAULT_IDEAL_BUDGET, unbounded: bool = False
) -> Iterator[IdealDescriptor]:
    """Every ideal of R, subsets taken as a binary counter over factor indices.

    Bit i of the counter marks factor i as present, so the zero ideal comes
    first and R itself last.
    """
    total = _count(fact)
    if total > budget and not unbounded:
        raise BudgetExceeded(f"{total} ideals exceed the budget of {budget}")
    if fact.char_p:
        for d in range(fact.p + 1):
            yield _descriptor(fact, range(d))
        return
    n = len(fact.factors)
    for mask in range(total):
        yield _descriptor(fact, [i for i in range(n) if mask >> i & 1])


def ideal_from_generator(g: Sequence[int] | RingElement, fact: Factorization) -> IdealDescriptor:
    """Canonical descriptor of the principal ideal generated by ``g``."""
    cs = g.coeffs if isinstance(g, RingElement) else g
    F = fact.field
    cs = P.trim(c % F.order for c in cs)
    if not cs:
        raise ValueError("the zero polynomial generates the zero ideal; no generator form")
    d = P.gcd(F, cs, fact.xp_minus_1())
    if fact.char_p:
        m = len(d) - 1
        return _descriptor(fact, range(fact.p - m))
    present = [i for i, f in enumerate(fact.factors) if P.mod(F, d, f.poly)]
    desc = _descriptor(fact, present)
    if desc.generator != tuple(d):
        raise ArithmeticError("gcd is not a product of distinct factors")
    return desc


def ideals_in_dim_range(
    fact: Factorization,
    lo: int,
    hi: int,
    budget: int = DEFAULT_IDEAL_BUDGET,
    sample: int | None = None,
    seed: int = 0,
) -> Iterator[IdealDescriptor]:
    """Ideals with ``lo <= dim < hi``.

    Dimensions are 0 or 1 plus a multiple of r, so the stream can be empty.
    Ideals are produced per dimension (ascending), and within a dimension in
    lexicographic order of ``present``.  With ``sample`` set, at most that
    many ideals are drawn at random per achievable dimension instead, which
    is the only feasible mode for rings with hundreds of factors.
    """
    if not 0 <= lo <= hi <= fact.p + 1:
        raise ValueError(f"need 0 <= lo <= hi <= p+1, got lo={lo}, hi={hi}")
    if fact.char_p:
        for d in range(lo, min(hi, fact.p + 1)):
            yield _descriptor(fact, range(d))
        return
    r, s = fact.r, fact.s
    rng = random.Random(seed)
    emitted = 0
    for dim in range(lo, hi):
        for with_one in (True, False):
            rest = dim - 1 if with_one else dim
            if rest < 0 or rest % r:
                continue
            i = rest // r
            if i > s:
                continue
            head = (0,) if with_one else ()
            if sample is not None:
                n_choices = comb(s, i)
                picks = (
                    list(itertools.combinations(range(1, s + 1), i))
                    if n_choices <= sample
                    else sorted({tuple(sorted(rng.sample(range(1, s + 1), i))) for _ in range(sample)})
                )
                for combo in picks:
                    yield _descriptor(fact, head + combo)
                continue
            for combo in itertools.combinations(range(1, s + 1), i):
                emitted += 1
                if emitted > budget:
                    raise BudgetExceeded(f"more than {budget} ideals in the dimension window")
                yield _descriptor(fact, head + combo)

