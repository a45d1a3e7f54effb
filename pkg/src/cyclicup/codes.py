"""Cyclic codes from ideals: bases, minimum distance, and code families.

Distances are computed by exhaustive enumeration of all nonzero messages
(exact) or by seeded sampling (an upper bound).  Both report the
lexicographically smallest minimum-weight codeword they saw, which makes
the witness independent of enumeration order.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from . import poly as P
from .ideals import BudgetExceeded, IdealDescriptor, enumerate_ideals, ideal_from_generator, ideals_in_dim_range
from .linalg import rank
from .primes import is_prime, ord_mod
from .ring import Factorization, RingElement, factor_xp_minus_1
from .span import SpanWalker, lex_first

__all__ = [
    "CyclicCode",
    "DistanceResult",
    "GoodCodeReport",
    "DEFAULT_CODEWORD_BUDGET",
    "min_distance_exact",
    "min_distance_upper",
    "build_good_code_candidate",
    "verify_good_bound",
    "quadratic_residue_code",
    "mds_check_r1",
]

DEFAULT_CODEWORD_BUDGET = 1 << 26
_CHUNK = 1 << 14


@dataclass(frozen=True)
class CyclicCode:
    ideal: IdealDescriptor
    n: int
    k: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def from_ideal(cls, ideal: IdealDescriptor) -> "CyclicCode":
        if ideal.dim < 1:
            raise ValueError("the zero ideal is not a code")
        p = ideal.fact.p
        g = list(ideal.generator)
        rows = tuple(tuple(RingElement.from_poly(ideal.fact.field, p, [0] * i + g).coeffs) for i in range(ideal.dim))
        if rank(ideal.fact.field, rows) != ideal.dim:
            raise ArithmeticError("basis rows are linearly dependent")
        return cls(ideal, p, ideal.dim, rows)

    @classmethod
    def from_generator(cls, g, fact: Factorization) -> "CyclicCode":
        return cls.from_ideal(ideal_from_generator(g, fact))

    @property
    def field(self):
        return self.ideal.fact.field

    @property
    def generator(self) -> tuple[int, ...]:
        return self.ideal.generator

    def encode(self, message) -> RingElement:
        """Codeword sum(m_i X^i g)."""
        if len(message) != self.k:
            raise ValueError(f"message must have length {self.k}")
        return RingElement.from_poly(self.field, self.n, P.mul(self.field, list(message), self.generator))

    def message_of(self, word: RingElement) -> list[int]:
        """Inverse of :meth:`encode`; raises if the word is not a codeword."""
        q, rem = P.divmod_(self.field, word.coeffs, self.generator)
        if rem:
            raise ValueError("word is not in the code")
        return q + [0] * (self.k - len(q))

    def contains(self, word: RingElement) -> bool:
        return self.ideal.contains(word)

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "ideal": self.ideal.to_json()}


@dataclass
class DistanceResult:
    d: int
    exact: bool
    witness: RingElement
    enumerated: int
    elapsed: float = field(default=0.0, compare=False)

    def verify(self, code: CyclicCode) -> bool:
        """The witness is a nonzero codeword of weight d that encodes from a message."""
        w = self.witness
        if w.is_zero() or w.weight != self.d or not code.contains(w):
            return False
        return code.encode(code.message_of(w)) == w

    def to_json(self, code: CyclicCode | None = None) -> dict:
        out = {
            "d": self.d,
            "exact": self.exact,
            "witness": self.witness.to_hex() if self.witness.field.order == 2 else self.witness.to_json(),
            "enumerated": self.enumerated,
            "elapsed_s": round(self.elapsed, 6),
        }
        if code is not None:
            out = {
                "n": code.n,
                "k": code.k,
                **out,
                "rate": code.k / code.n,
                "relative_distance": self.d / code.n,
            }
        return out


class _Best:
    """Running minimum by (weight, lexicographic word)."""

    def __init__(self):
        self.weight = None
        self.word = None

    def offer(self, words: np.ndarray) -> None:
        if len(words) == 0:
            return
        w = np.count_nonzero(words, axis=1)
        m = int(w.min())
        if self.weight is not None and m > self.weight:
            return
        cands = words[w == m]
        cand = tuple(int(x) for x in cands[lex_first(cands)])
        if self.weight is None or m < self.weight or cand < self.word:
            self.weight, self.word = m, cand


def min_distance_exact(
    code: CyclicCode,
    budget: int = DEFAULT_CODEWORD_BUDGET,
    time_budget: float | None = None,
    jobs: int = 1,
) -> DistanceResult:
    """Exact minimum distance by walking every nonzero message.

    Raises :class:`BudgetExceeded` when q^k - 1 exceeds ``budget``.  When
    ``time_budget`` (seconds) runs out the exception carries the partial,
    non-exact result in ``partial``.
    """
    F = code.field
    total = F.order**code.k - 1
    if total > budget:
        raise BudgetExceeded(f"{total} codewords exceed the budget of {budget}; use min_distance_upper")
    t0 = time.perf_counter()
    walker = SpanWalker(F, code.basis)
    best = _Best()
    seen = 0

    def reduce(start: int, blk: np.ndarray):
        return blk[1:] if start == 0 else blk

    for words in walker.map_blocks(reduce, jobs=jobs):
        best.offer(words)
        seen += len(words)
        if time_budget is not None and time.perf_counter() - t0 > time_budget and seen < total:
            exc = BudgetExceeded(f"time budget of {time_budget}s exhausted after {seen} codewords")
            exc.partial = DistanceResult(
                best.weight, False, RingElement(F, code.n, best.word), seen, time.perf_counter() - t0
            )
            raise exc
    return DistanceResult(best.weight, True, RingElement(F, code.n, best.word), seen, time.perf_counter() - t0)


def _encode_many(F, msgs: np.ndarray, basis: np.ndarray) -> np.ndarray:
    acc = np.zeros((msgs.shape[0], basis.shape[1]), dtype=basis.dtype)
    for i in range(basis.shape[0]):
        col = msgs[:, i : i + 1]
        if np.any(col):
            acc = F.vadd(acc, F.vmul(col, basis[i]))
    return acc


def min_distance_upper(
    code: CyclicCode, trials: int, seed: int = 0, budget: int = DEFAULT_CODEWORD_BUDGET
) -> DistanceResult:
    """Upper bound on the distance from sampled codewords.

    Looks at every basis row, every combination row_i + c*row_j, and
    ``trials`` uniformly random nonzero messages drawn from ``seed``.  If the
    trials cover the whole message space the walk is exhaustive, but the
    result is still reported as not exact.
    """
    if trials < 0:
        raise ValueError("trials must be non-negative")
    F = code.field
    q, k = F.order, code.k
    t0 = time.perf_counter()
    if trials >= q**k - 1 and q**k - 1 <= budget:
        res = min_distance_exact(code, budget)
        return DistanceResult(res.d, False, res.witness, res.enumerated, time.perf_counter() - t0)
    basis = np.asarray(code.basis, dtype=np.int64 if F.vectorized else object)
    best = _Best()
    seen = 0
    structured = []
    for i in range(k):
        m = [0] * k
        m[i] = 1
        structured.append(m)
        for j in range(i + 1, k):
            for c in range(1, q):
                m = [0] * k
                m[i], m[j] = 1, c
                structured.append(m)
    for start in range(0, len(structured), _CHUNK):
        msgs = np.asarray(structured[start : start + _CHUNK], dtype=np.int64)
        best.offer(_encode_many(F, msgs, basis))
        seen += len(msgs)
    rng = np.random.default_rng(seed)
    remaining = trials
    while remaining > 0:
        n = min(remaining, _CHUNK)
        msgs = rng.integers(0, q, size=(n, k), dtype=np.int64)
        msgs = msgs[np.any(msgs, axis=1)]
        remaining -= n
        if len(msgs):
            best.offer(_encode_many(F, msgs, basis))
            seen += len(msgs)
    return DistanceResult(best.weight, False, RingElement(F, code.n, best.word), seen, time.perf_counter() - t0)


def distance(code: CyclicCode, budget: int = DEFAULT_CODEWORD_BUDGET, trials: int = 100_000, seed: int = 0,
             time_budget: float | None = None) -> DistanceResult:
    """Exact distance when affordable, otherwise a sampled upper bound."""
    try:
        return min_distance_exact(code, budget, time_budget=time_budget)
    except BudgetExceeded as exc:
        partial = getattr(exc, "partial", None)
        upper = min_distance_upper(code, trials, seed, budget)
        if partial is not None and (partial.d, partial.witness.coeffs) < (upper.d, upper.witness.coeffs):
            return partial
        return upper


@dataclass
class GoodCodeReport:
    p: int
    ell: int
    epsilon: float
    delta_target: float | None
    code: CyclicCode
    distance: DistanceResult

    @property
    def k(self) -> int:
        return self.code.k

    @property
    def rate(self) -> float:
        return self.code.k / self.p

    @property
    def relative_distance(self) -> float:
        return self.distance.d / self.p

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "ell": self.ell,
            "epsilon": self.epsilon,
            "delta_target": self.delta_target,
            "window": [self.epsilon * self.p / 2, self.epsilon * self.p],
            "ideal": self.code.ideal.to_json(),
            "k": self.k,
            "distance": self.distance.to_json(),
            "rate": self.rate,
            "relative_distance": self.relative_distance,
        }


def build_good_code_candidate(
    ell: int,
    p: int,
    epsilon: float,
    delta: float | None = None,
    budget: int = DEFAULT_CODEWORD_BUDGET,
    trials: int = 100_000,
    seed: int = 0,
) -> GoodCodeReport:
    """Pick the ideal of largest dimension in [eps*p/2, eps*p) and measure it.

    Ties on dimension go to the lexicographically smallest ``present`` set.
    Requires ord_p(ell) < eps*p, and eps < delta when a target delta is given.
    """
    if not 0 < epsilon < 1:
        raise ValueError("epsilon must lie in (0, 1)")
    if delta is not None and not (0 < epsilon < delta <= 1):
        raise ValueError(f"need 0 < epsilon < delta <= 1, got epsilon={epsilon}, delta={delta}")
    r = ord_mod(ell, p)
    if not r < epsilon * p:
        raise ValueError(f"ord_{p}({ell}) = {r} is not below epsilon*p = {epsilon * p}")
    fact = factor_xp_minus_1(ell, p)
    lo = math.ceil(epsilon * p / 2)
    hi = min(math.ceil(epsilon * p), p + 1)
    window = [i for i in ideals_in_dim_range(fact, lo, hi) if i.dim > 0]
    if not window:
        raise ValueError(f"no ideal has dimension in [{epsilon * p / 2}, {epsilon * p})")
    chosen = min(window, key=lambda i: (-i.dim, i.present))
    code = CyclicCode.from_ideal(chosen)
    dist = distance(code, budget, trials, seed)
    return GoodCodeReport(p, ell, epsilon, delta, code, dist)


def verify_good_bound(code: CyclicCode, mu: int, epsilon: float, budget: int = DEFAULT_CODEWORD_BUDGET) -> dict:
    """Check wt(h) > (delta - eps) p on every nonzero codeword h.

    ``delta`` is taken as (mu - 1)/p, the largest multiple of 1/p with
    mu > delta*p.  Every codeword is enumerated, so ``holds`` is a full check.
    """
    p = code.n
    delta = (mu - 1) / p
    bound = (delta - epsilon) * p
    F = code.field
    total = F.order**code.k - 1
    if total > budget:
        raise BudgetExceeded(f"{total} codewords exceed the budget of {budget}")
    walker = SpanWalker(F, code.basis)
    min_w = None
    checked = 0
    for start, blk in walker.blocks():
        words = blk[1:] if start == 0 else blk
        w = int(np.count_nonzero(words, axis=1).min())
        min_w = w if min_w is None else min(min_w, w)
        checked += len(words)
    return {
        "mu": mu,
        "delta": delta,
        "epsilon": epsilon,
        "bound": bound,
        "checked": checked,
        "min_weight": min_w,
        "holds": min_w > bound,
    }


def quadratic_residue_code(p: int) -> CyclicCode:
    """Binary QR code: generator prod_{a square mod p} (X - zeta^a).

    zeta is the fixed primitive root of unity of the F_2 factorization, so
    the residue (not the non-residue) code is returned; the two are
    equivalent by a coordinate permutation.
    """
    if not is_prime(p) or p % 8 not in (1, 7):
        raise ValueError(f"2 is not a quadratic residue mod {p}; need p = +-1 mod 8")
    fact = factor_xp_minus_1(2, p)
    L = fact.splitting_field
    squares = sorted({a * a % p for a in range(1, p)})
    g = P.from_roots(L, (fact.points[a] for a in squares))
    if not all(L.in_prime_subfield(c) for c in g):
        raise ArithmeticError("QR generator is not defined over F_2")
    if len(g) - 1 != (p - 1) // 2:
        raise ArithmeticError("QR generator has the wrong degree")
    return CyclicCode.from_generator(g, fact)


def mds_check_r1(ell: int, p: int, budget: int = DEFAULT_CODEWORD_BUDGET) -> dict:
    """Exact distance of every nonzero ideal when X^p - 1 splits over F_ell.

    Returns the (k, d) table and whether d = p - k + 1 throughout.
    """
    if (ell - 1) % p:
        raise ValueError(f"{p} does not divide {ell} - 1")
    fact = factor_xp_minus_1(ell, p)
    rows = []
    for ideal in enumerate_ideals(fact):
        if ideal.dim == 0:
            continue
        code = CyclicCode.from_ideal(ideal)
        res = min_distance_exact(code, budget)
        rows.append({"present": list(ideal.present), "k": code.k, "d": res.d, "mds": res.d == p - code.k + 1})
    return {"ell": ell, "p": p, "rows": rows, "all_mds": all(r["mds"] for r in rows)}
