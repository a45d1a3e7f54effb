"""The uncertainty invariant mu_{F,p} = min over f != 0 of wt(f) + dim I_f.

Two independent routes compute it exactly: a brute-force sweep that reads
dim I_f off the evaluations of f at the p-th roots of unity, and a
reduction to minimum distances over the ideal lattice.  The module also
builds the explicit counterexamples (trace polynomials, products of Ore
subspace polynomials over F_{2^n}) and checks Chebotarev's minor theorem,
both modulo a prime and exactly in Z[zeta_p].
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import poly as P
from .codes import DEFAULT_CODEWORD_BUDGET, CyclicCode, distance
from .gf import FieldSpec, absolute_trace, build_extension, prime_field
from .ideals import BudgetExceeded, enumerate_ideals
from .linalg import det, kernel_vector, rank
from .primes import is_prime, ord_mod
from .ring import Factorization, RingElement, dft, factor_xp_minus_1, ideal_dim

__all__ = [
    "MuReport",
    "CycInt",
    "MinorSweepReport",
    "ChebotarevViolation",
    "mu_of",
    "mu_bruteforce",
    "mu_via_ideals",
    "verify_primitive_root_case",
    "verify_char_p",
    "trace_counterexample",
    "ore_subspace_poly",
    "mersenne_counterexample",
    "chebotarev_minor",
    "chebotarev_sweep",
    "up_equivalence_check",
    "donoho_stark_check",
    "BRUTEFORCE_LIMIT",
]

BRUTEFORCE_LIMIT = 1 << 30
_SLOW_LIMIT = 1 << 20


@dataclass
class MuReport:
    ell: int
    r: int
    p: int
    mu: int
    upper_bound_only: bool
    witness: RingElement
    method: str
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        w = self.witness
        return {
            "ell": self.ell,
            "r": self.r,
            "p": self.p,
            "mu": self.mu,
            "upper_bound_only": self.upper_bound_only,
            "method": self.method,
            "witness": w.to_json(),
            "witness_display": str(w),
            "witness_field": w.field.describe(),
            **self.details,
        }


def _factorization(F: FieldSpec, p: int) -> Factorization:
    return factor_xp_minus_1(F, p, char_p=F.ell == p)


def mu_of(f: RingElement, fact: Factorization) -> int:
    """wt(f) + dim I_f, both recomputed from scratch."""
    return f.weight + ideal_dim(f, fact)


def _field(ell: int, r: int) -> FieldSpec:
    return prime_field(ell) if r == 1 else build_extension(ell, r)


# -- brute force -------------------------------------------------------------


def _sweep_scores(F: FieldSpec, p: int):
    """Walker over all f with a per-row score function giving (wt, dim)."""
    from .span import SpanWalker

    if F.ell == p:
        # Taylor coefficients at X = 1: b_k = sum_i a_i C(i, k) mod p
        taylor = [[math.comb(i, k) % p for k in range(p)] for i in range(p)]
        rows = [[1 if j == i else 0 for j in range(p)] + taylor[i] for i in range(p)]
        walker = SpanWalker(F, rows)

        def score(blk):
            wt = np.count_nonzero(blk[:, :p], axis=1)
            b = blk[:, p:] != 0
            m = np.argmax(b, axis=1)
            return wt, p - m

        return walker, score, None
    fact = factor_xp_minus_1(F, p)
    L = fact.splitting_field
    pts = fact.points
    # row i: unit vector e_i next to (zeta^(ij))_j, all codes living in L
    rows = [[1 if j == i else 0 for j in range(p)] + [pts[i * j % p] for j in range(p)] for i in range(p)]
    if not L.vectorized and F.order**p > _SLOW_LIMIT:
        raise BudgetExceeded(f"splitting field {L} has no vectorized arithmetic; sweep too large")
    # scalars are codes of F, which are also valid codes of L
    walker = SpanWalker(L, rows, scalar_order=F.order)

    def score(blk):
        return np.count_nonzero(blk[:, :p], axis=1), np.count_nonzero(blk[:, p:], axis=1)

    return walker, score, fact


def _index_to_element(F: FieldSpec, p: int, index: int) -> RingElement:
    q = F.order
    cs = []
    for _ in range(p):
        index, d = divmod(index, q)
        cs.append(d)
    return RingElement(F, p, tuple(cs))


def mu_bruteforce(ell: int, r: int, p: int, limit: int = BRUTEFORCE_LIMIT) -> MuReport:
    """Exact mu over F_{ell^r} by sweeping every nonzero f.

    dim I_f is the number of p-th roots of unity where f does not vanish
    (in characteristic p: p minus the order of vanishing at X = 1).  The
    witness is the first minimiser in base-q counter order, constant term
    least significant.
    """
    F = _field(ell, r)
    if F.order**p > limit:
        raise BudgetExceeded(f"{F.order}^{p} elements exceed the brute-force limit {limit}")
    walker, score, _ = _sweep_scores(F, p)
    best, best_idx, checked = None, None, 0
    for start, blk in walker.blocks():
        wt, dim = score(blk)
        s = wt + dim
        if start == 0:
            s[0] = np.iinfo(np.int64).max
        m = int(s.min())
        idx = start + int(np.argmax(s == m))
        if best is None or m < best or (m == best and idx < best_idx):
            best, best_idx = m, idx
        checked += len(blk)
    witness = _index_to_element(F, p, best_idx)
    fact = _factorization(F, p)
    if mu_of(witness, fact) != best:
        raise ArithmeticError("brute-force witness does not re-verify")
    return MuReport(ell, r, p, best, False, witness, "bruteforce", {"checked": checked - 1})


# -- ideal reduction ---------------------------------------------------------


def mu_via_ideals(
    ell: int,
    r: int,
    p: int,
    distance_budget: int = DEFAULT_CODEWORD_BUDGET,
    trials: int = 100_000,
    seed: int = 0,
) -> MuReport:
    """mu as the minimum of d(I) + dim I over the nonzero ideals.

    Any f has wt(f) >= d(I_f); a minimum-weight word h of I has I_h inside
    I.  If some distance is only bounded by sampling the result is flagged
    ``upper_bound_only``.
    """
    F = _field(ell, r)
    fact = _factorization(F, p)
    rows, best, upper_only = [], None, False
    for ideal in enumerate_ideals(fact):
        if ideal.dim == 0:
            continue
        code = CyclicCode.from_ideal(ideal)
        res = distance(code, distance_budget, trials, seed)
        upper_only |= not res.exact
        rows.append({"present": list(ideal.present), "dim": ideal.dim, "d": res.d, "exact": res.exact})
        val = res.d + ideal.dim
        if best is None or val < best[0]:
            best = (val, res.witness)
    mu, witness = best
    recomputed = mu_of(witness, fact)
    if recomputed > mu or (not upper_only and recomputed != mu):
        raise ArithmeticError(f"ideal witness gives {recomputed}, expected {mu}")
    return MuReport(ell, r, p, recomputed, upper_only, witness, "ideal_reduction", {"ideals": rows})


def verify_primitive_root_case(ell: int, p: int) -> dict:
    """mu = p + 1 when ell is a primitive root mod p, with the three-case trace."""
    if ord_mod(ell, p) != p - 1:
        raise ValueError(f"{ell} is not a primitive root modulo {p}")
    rep = mu_via_ideals(ell, 1, p)
    cases = []
    for row in rep.details["ideals"]:
        cases.append({"dim": row["dim"], "min_weight": row["d"], "mu": row["d"] + row["dim"]})
    cases.sort(key=lambda c: -c["dim"])
    return {
        "ell": ell,
        "p": p,
        "mu": rep.mu,
        "holds": rep.mu == p + 1 and sorted(c["dim"] for c in cases) == [1, p - 1, p],
        "cases": cases,
    }


def verify_char_p(p: int, limit: int = BRUTEFORCE_LIMIT) -> dict:
    """In characteristic p, every f with (X-1)^m || f has wt(f) > m; hence mu = p + 1."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    F = prime_field(p)
    if F.order**p > limit:
        raise BudgetExceeded(f"{p}^{p} elements exceed the brute-force limit")
    walker, score, _ = _sweep_scores(F, p)
    violations, checked, mu = 0, 0, None
    for start, blk in walker.blocks():
        wt, dim = score(blk)
        if start == 0:
            wt, dim = wt[1:], dim[1:]
        m = p - dim
        violations += int(np.count_nonzero(wt <= m))
        s = int((wt + dim).min())
        mu = s if mu is None else min(mu, s)
        checked += len(wt)
    return {"p": p, "checked": checked, "violations": violations, "mu": mu, "holds": violations == 0 and mu == p + 1}


# -- trace polynomial counterexample ----------------------------------------


def trace_counterexample(q: int, p: int) -> MuReport:
    """f = T + alpha with T = sum_{i<r} X^(q^i), alpha chosen to maximise the zeros.

    T agrees with the trace F_{q^r} -> F_q on the p-th roots of unity, so
    T + alpha vanishes on the trace fibre over -alpha.  The report carries
    the fibre sizes, both bounds, and whether r < p/q.
    """
    if q == p:
        raise ValueError("q must differ from p")
    r = ord_mod(q, p)
    Fq = prime_field(q)
    fact = factor_xp_minus_1(q, p)
    E = fact.splitting_field
    fibres = [0] * q
    for z in fact.points:
        fibres[absolute_trace(E.element(z)).value] += 1
    counts = {alpha: fibres[Fq.neg(alpha)] for alpha in range(q)}
    alpha = max(range(q), key=lambda a: (counts[a], -a))
    terms: dict[int, int] = {}
    for i in range(r):
        e = pow(q, i, p)
        terms[e] = Fq.add(terms.get(e, 0), 1)
    terms[0] = Fq.add(terms.get(0, 0), alpha)
    f = RingElement.from_terms(Fq, p, terms)
    wt = f.weight
    dim = ideal_dim(f, fact)
    mu = wt + dim
    bound_f = r + 1 + (1 - 1 / q) * p
    bound_e = p + 1 + r - p / q
    if mu > bound_f or mu > bound_e + 1e-9:
        raise ArithmeticError("trace construction exceeds its bound")
    return MuReport(
        q,
        1,
        p,
        mu,
        True,
        f,
        "construction",
        {
            "construction": "trace",
            "order": r,
            "alpha": alpha,
            "fibre_sizes": fibres,
            "zeros": counts[alpha],
            "weight": wt,
            "dim": dim,
            "bound_base_field": bound_f,
            "bound_extension": bound_e,
            "certified_extension_bound": math.floor(bound_e),
            "extension_field": E.describe(),
            "counterexample_regime": r < p / q,
        },
    )


# -- Ore subspace polynomials and the Mersenne construction -----------------


def _independent(F: FieldSpec, vecs: Sequence[int]) -> bool:
    return rank(prime_field(F.ell), [F.coeffs(v) for v in vecs]) == len(vecs)


def _lin_eval(F: FieldSpec, lin: Sequence[int], x: int) -> int:
    """Evaluate sum c_j x^(q^j)."""
    acc, y = 0, x
    for c in lin:
        if c:
            acc = F.add(acc, F.mul(c, y))
        y = F.pow(y, F.ell)
    return acc


def ore_subspace_poly(F: FieldSpec, basis: Sequence[int], offset: int = 0) -> dict[int, int]:
    """prod_{a in A} (X - a) for the affine space A = offset + span_{F_l}(basis).

    Built by the recursion L_i = L_{i-1}^l - L_{i-1}(v_i)^(l-1) L_{i-1} on
    the linearised coefficients, then shifted by the constant -L(offset).
    Returned as ``{exponent: coefficient}``; the root set is checked to be
    exactly A.
    """
    q = F.ell
    basis = list(basis)
    if any(v == 0 for v in basis) or not _independent(F, basis):
        raise ValueError("basis vectors are linearly dependent")
    lin = [1]
    for v in basis:
        c = F.pow(_lin_eval(F, lin, v), q - 1)
        frob = [0] + [F.pow(a, q) for a in lin]
        lin = [F.sub(a, F.mul(c, b)) for a, b in zip(frob, lin + [0])]
    terms = {q**j: c for j, c in enumerate(lin) if c}
    const = F.neg(_lin_eval(F, lin, offset))
    if const:
        terms[0] = const
    k = len(basis)
    if max(terms) != q**k or any(e != 0 and e not in {q**j for j in range(k + 1)} for e in terms):
        raise ArithmeticError("subspace polynomial is not of additive shape")
    for combo in itertools.product(range(q), repeat=k):
        a = offset
        for c, v in zip(combo, basis):
            if c:
                a = F.add(a, F.mul(c, v))
        val = const
        for j, cj in enumerate(lin):
            if cj:
                val = F.add(val, F.mul(cj, F.pow(a, q**j)))
        if val:
            raise ArithmeticError("subspace polynomial misses a point of A")
    return dict(sorted(terms.items()))


def _sparse_mul(F: FieldSpec, a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = F.add(out.get(i + j, 0), F.mul(x, y))
    return {e: c for e, c in out.items() if c}


def mersenne_counterexample(n: int, k: int) -> MuReport:
    """Upper bound on mu over F_{2^n} at p = 2^n - 1 from k Ore polynomials.

    A_i (i = 1..k) fixes the first i-1 coordinates to 0 and coordinate i to
    1 in the polynomial basis of F_{2^n}; the A_i are disjoint, avoid 0, and
    f = prod f_{A_i} vanishes on all of them.
    """
    p = 2**n - 1
    if not is_prime(p):
        raise ValueError(f"2^{n} - 1 = {p} is not prime")
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    F = build_extension(2, n)
    e = [1 << j for j in range(n)]
    f: dict[int, int] = {0: 1}
    weight_caps = []
    for i in range(1, k + 1):
        fi = ore_subspace_poly(F, e[i:], offset=e[i - 1])
        weight_caps.append(n - i + 2)
        if len(fi) > n - i + 2:
            raise ArithmeticError("Ore polynomial heavier than dim + 2")
        f = _sparse_mul(F, f, fi)
    degree = max(f)
    elem = RingElement.from_terms(F, p, f)
    fact = factor_xp_minus_1(F, p)
    wt = elem.weight
    dim = ideal_dim(elem, fact)
    expected_deg = 2**n - 2 ** (n - k)
    checks = {
        "degree": degree,
        "expected_degree": expected_deg,
        "degree_ok": degree == expected_deg and degree < p,
        "weight": wt,
        "weight_cap_product": math.prod(weight_caps),
        "weight_cap_power": (n + 1) ** k,
        "weight_ok": wt <= math.prod(weight_caps) <= (n + 1) ** k,
        "dim": dim,
        "expected_dim": 2 ** (n - k) - 1,
        "dim_ok": dim == 2 ** (n - k) - 1 and dim <= p / 2**k,
    }
    return MuReport(2, n, p, wt + dim, True, elem, "construction", {"construction": "mersenne", "n": n, "k": k, **checks})


# -- Chebotarev minors --------------------------------------------------------


class ChebotarevViolation(AssertionError):
    """A Vandermonde minor at a primitive root of unity vanished exactly."""


class CycInt:
    """Element of Z[zeta_p], as an integer polynomial of degree < p - 1."""

    __slots__ = ("p", "c")

    def __init__(self, p: int, coeffs: Sequence[int]):
        self.p = p
        self.c = self._reduce(p, coeffs)

    @staticmethod
    def _reduce(p: int, coeffs: Sequence[int]) -> tuple[int, ...]:
        full = [0] * p
        for i, x in enumerate(coeffs):
            full[i % p] += x
        top = full[p - 1]
        return tuple(x - top for x in full[: p - 1])

    @classmethod
    def zeta_power(cls, p: int, e: int) -> "CycInt":
        cs = [0] * p
        cs[e % p] = 1
        return cls(p, cs)

    @classmethod
    def integer(cls, p: int, n: int) -> "CycInt":
        return cls(p, [n])

    def is_zero(self) -> bool:
        return not any(self.c)

    def __add__(self, o: "CycInt") -> "CycInt":
        return CycInt(self.p, [a + b for a, b in zip(self.c, o.c)])

    def __sub__(self, o: "CycInt") -> "CycInt":
        return CycInt(self.p, [a - b for a, b in zip(self.c, o.c)])

    def __neg__(self) -> "CycInt":
        return CycInt(self.p, [-a for a in self.c])

    def __mul__(self, o: "CycInt") -> "CycInt":
        out = [0] * (2 * self.p)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    if b:
                        out[i + j] += a * b
        return CycInt(self.p, out)

    def __eq__(self, o) -> bool:
        return isinstance(o, CycInt) and o.p == self.p and o.c == self.c

    def __hash__(self):
        return hash((self.p, self.c))

    def __repr__(self) -> str:
        return f"CycInt({self.p}, {list(self.c)})"

    def conjugate(self, t: int) -> "CycInt":
        """Galois action zeta -> zeta^t."""
        cs = [0] * self.p
        for i, a in enumerate(self.c):
            cs[i * t % self.p] += a
        return CycInt(self.p, cs)

    def exact_div(self, o: "CycInt") -> "CycInt":
        """Exact quotient in Z[zeta_p] via the norm N(o) = o * prod_{t != 1} o^sigma_t."""
        if o.is_zero():
            raise ZeroDivisionError("division by zero in Z[zeta_p]")
        co = CycInt.integer(self.p, 1)
        for t in range(2, self.p):
            co = co * o.conjugate(t)
        norm = o * co
        if any(norm.c[1:]):
            raise ArithmeticError("norm is not rational")
        n = norm.c[0]
        num = self * co
        if any(x % n for x in num.c):
            raise ArithmeticError("quotient is not a cyclotomic integer")
        return CycInt(self.p, [x // n for x in num.c])


def _bareiss(M: list[list[CycInt]]) -> CycInt:
    n = len(M)
    M = [row[:] for row in M]
    p = M[0][0].p
    sign = 1
    prev = CycInt.integer(p, 1)
    for k in range(n - 1):
        if M[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not M[i][k].is_zero()), None)
            if swap is None:
                return CycInt.integer(p, 0)
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]).exact_div(prev)
        prev = M[k][k]
    d = M[n - 1][n - 1]
    return d if sign == 1 else -d


def exact_minor(p: int, A: Sequence[int], B: Sequence[int]) -> CycInt:
    """det (zeta^(ij))_{i in A, j in B} exactly in Z[zeta_p] (fraction-free elimination)."""
    return _bareiss([[CycInt.zeta_power(p, i * j) for j in B] for i in A])


def _modulus_for(p: int, floor: int = 1 << 30) -> int:
    """Smallest prime Q = 1 mod p above ``floor``."""
    Q = floor + 1 + (-(floor + 1 - 1)) % p
    while not is_prime(Q):
        Q += p
    return Q


def _root_mod(p: int, Q: int) -> int:
    for x in range(2, Q):
        w = pow(x, (Q - 1) // p, Q)
        if w != 1:
            return w
    raise ArithmeticError("no root of unity")  # pragma: no cover


def chebotarev_minor(p: int, A: Sequence[int], B: Sequence[int], modulus: int | None = None) -> dict:
    """Decide det(V_{A x B}) != 0 for V = (zeta^(ij)) and zeta = exp(2 pi i / p).

    The minor is first evaluated in F_Q (Q = 1 mod p, zeta sent to an
    element of order p); a nonzero value there is a proof.  Otherwise the
    exact determinant in Z[zeta_p] decides, and an exact zero raises
    :class:`ChebotarevViolation`.
    """
    A, B = sorted(A), sorted(B)
    if len(A) != len(B) or not A:
        raise ValueError("minor needs index sets of equal positive size")
    Q = modulus or _modulus_for(p)
    w = _root_mod(p, Q)
    FQ = prime_field(Q)
    val = det(FQ, [[pow(w, i * j % p, Q) for j in B] for i in A])
    if val:
        return {"nonzero": True, "certificate": "modular", "modulus": Q}
    if exact_minor(p, A, B).is_zero():
        raise ChebotarevViolation(f"minor A={A}, B={B} vanishes exactly for p={p}")
    return {"nonzero": True, "certificate": "exact", "modulus": Q}


@dataclass
class MinorSweepReport:
    p: int
    minors_checked: int
    all_nonzero: bool
    exhaustive: bool
    first_failure: tuple | None = None
    modular_prime_used: int | None = None
    escalated: int = 0
    by_size: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "minors_checked": self.minors_checked,
            "all_nonzero": self.all_nonzero,
            "exhaustive": self.exhaustive,
            "first_failure": [list(x) for x in self.first_failure] if self.first_failure else None,
            "modular_prime_used": self.modular_prime_used,
            "escalated": self.escalated,
            "by_size": {str(k): v for k, v in sorted(self.by_size.items())},
        }


def _batch_det_mod(mats: np.ndarray, Q: int) -> np.ndarray:
    """Determinants mod Q < 2^31 of a stack of square int64 matrices."""
    M = mats.copy() % Q
    N, k, _ = M.shape
    det_ = np.ones(N, dtype=np.int64)
    ar = np.arange(N)
    for c in range(k):
        col = M[:, c:, c] != 0
        has = col.any(axis=1)
        det_[~has] = 0
        piv = np.argmax(col, axis=1) + c
        swap = has & (piv != c)
        if swap.any():
            idx = ar[swap]
            rows_c = M[idx, c, :].copy()
            M[idx, c, :] = M[idx, piv[swap], :]
            M[idx, piv[swap], :] = rows_c
            det_[idx] = (-det_[idx]) % Q
        pv = M[ar, c, c]
        det_ = det_ * pv % Q
        inv = _vpow(pv, Q - 2, Q)
        if c + 1 < k:
            factor = M[:, c + 1 :, c] * inv[:, None] % Q
            M[:, c + 1 :, :] = (M[:, c + 1 :, :] - factor[:, :, None] * M[:, c : c + 1, :] % Q) % Q
    return det_


def _vpow(a: np.ndarray, e: int, Q: int) -> np.ndarray:
    result = np.ones_like(a)
    base = a % Q
    while e:
        if e & 1:
            result = result * base % Q
        e >>= 1
        if e:
            base = base * base % Q
    return result


def _check_batch(p, k, As, Bs, Q, w_pows, report):
    mats = w_pows[(As[:, :, None] * Bs[:, None, :]) % p]
    dets = _batch_det_mod(mats, Q)
    report.minors_checked += len(dets)
    report.by_size[k] = report.by_size.get(k, 0) + len(dets)
    for t in np.flatnonzero(dets == 0):
        A, B = As[t].tolist(), Bs[t].tolist()
        report.escalated += 1
        if exact_minor(p, A, B).is_zero():
            report.all_nonzero = False
            report.first_failure = report.first_failure or (tuple(A), tuple(B))


def chebotarev_sweep(
    p: int,
    exhaustive: bool = True,
    random_minors: int = 0,
    sizes: Sequence[int] = (),
    seed: int = 0,
    modulus: int | None = None,
) -> MinorSweepReport:
    """Check many minors of the p x p Fourier matrix at once.

    ``exhaustive`` covers every pair (A, B); otherwise all minors of the
    listed ``sizes`` plus ``random_minors`` minors of uniformly random size
    and uniformly random index sets are checked.  Minors that vanish mod Q
    are recomputed exactly; an exact zero is recorded in ``first_failure``.
    """
    Q = modulus or _modulus_for(p)
    if Q >= 1 << 31:
        raise ValueError("batched elimination needs Q < 2^31")
    w = _root_mod(p, Q)
    w_pows = np.array([pow(w, e, Q) for e in range(p)], dtype=np.int64)
    report = MinorSweepReport(p, 0, True, exhaustive, modular_prime_used=Q)
    full_sizes = range(1, p + 1) if exhaustive else sorted(set(sizes))
    for k in full_sizes:
        subsets = np.array(list(itertools.combinations(range(p), k)), dtype=np.int64)
        n = len(subsets)
        for start in range(0, n * n, 1 << 15):
            idx = np.arange(start, min(n * n, start + (1 << 15)))
            _check_batch(p, k, subsets[idx // n], subsets[idx % n], Q, w_pows, report)
    if random_minors:
        rng = np.random.default_rng(seed)
        ks = rng.integers(1, p + 1, size=random_minors)
        for k in range(1, p + 1):
            cnt = int(np.count_nonzero(ks == k))
            if not cnt:
                continue
            As = np.sort(np.argsort(rng.random((cnt, p)), axis=1)[:, :k], axis=1)
            Bs = np.sort(np.argsort(rng.random((cnt, p)), axis=1)[:, :k], axis=1)
            for start in range(0, cnt, 1 << 15):
                _check_batch(p, k, As[start : start + (1 << 15)], Bs[start : start + (1 << 15)], Q, w_pows, report)
    return report


# -- equivalence with the uncertainty principle over a finite field ---------


def up_equivalence_check(p: int, F: FieldSpec, witness: RingElement | None = None) -> dict:
    """Both directions of "all minors invertible <=> mu_{F,p} = p + 1" over F.

    Every minor of V' = (zeta^(-ij)) is computed over F.  From the first
    vanishing one a kernel vector f is built, with |supp f| + |supp f^| <= p.
    Conversely from a witness with mu <= p (given, or found by brute force)
    the sets A = supp f and B inside the zero set of f^ give a vanishing minor.
    """
    fact = factor_xp_minus_1(F, p)
    if fact.r != 1:
        raise ValueError(f"{F} does not contain a primitive {p}-th root of unity")
    pts = fact.points
    inv_pts = [pts[-e % p] for e in range(p)]
    checked, vanishing, first = 0, 0, None
    for k in range(1, p + 1):
        for A in itertools.combinations(range(p), k):
            for B in itertools.combinations(range(p), k):
                checked += 1
                M = [[inv_pts[i * j % p] for i in A] for j in B]
                if det(F, M) == 0:
                    vanishing += 1
                    if first is None:
                        first = (A, B)
    out: dict = {"p": p, "field": F.describe(), "minors_checked": checked, "vanishing": vanishing}
    if first is not None:
        A, B = first
        M = [[inv_pts[i * j % p] for i in A] for j in B]
        x = kernel_vector(F, M)
        f = RingElement.from_terms(F, p, {i: c for i, c in zip(A, x)})
        fhat = dft(f, fact)
        supp_hat = sum(1 for v in fhat if v)
        out["first_vanishing"] = {"A": list(A), "B": list(B)}
        out["constructed"] = {
            "f": f.to_json(),
            "support": len(f.support),
            "fourier_support": supp_hat,
            "vanishes_on_B": all(fhat[j] == 0 for j in B),
            "mu": mu_of(f, fact),
            "violates": len(f.support) + supp_hat <= p,
        }
    if witness is None:
        brute = mu_bruteforce(F.ell, F.r, p) if F.order**p <= BRUTEFORCE_LIMIT else None
        out["mu_bruteforce"] = brute.mu if brute else None
        if brute is not None and brute.mu <= p:
            witness = brute.witness
    if witness is not None:
        witness = witness if witness.field == F else witness.embed(F)
        A = witness.support
        fhat = dft(witness, fact)
        zero_set = [j for j in range(p) if fhat[j] == 0]
        located = None
        if len(A) + (p - len(zero_set)) <= p:
            B = zero_set[: len(A)]
            M = [[inv_pts[i * j % p] for i in A] for j in B]
            located = {"A": A, "B": B, "det": det(F, M)}
        out["from_witness"] = {"witness": witness.to_json(), "mu": mu_of(witness, fact), "located_minor": located}
    out["consistent"] = (vanishing > 0) == (
        out.get("mu_bruteforce") is not None and out["mu_bruteforce"] <= p
        if "mu_bruteforce" in out
        else vanishing > 0
    )
    return out


def donoho_stark_check(F: FieldSpec, p: int, samples: int | None = None, seed: int = 0) -> dict:
    """Count f != 0 with |supp f| * |supp f^| < p.

    With ``samples=None`` every nonzero f over F is checked (brute-force
    scale only); otherwise ``samples`` uniformly random nonzero f are drawn.
    The Fourier transform lives in the splitting field of X^p - 1.
    """
    from .codes import _encode_many

    if F.ell == p:
        raise ValueError("the Fourier transform needs ell != p")
    walker, score, fact = _sweep_scores(F, p)
    checked, violations, min_product, first = 0, 0, None, None

    def consume(start, wt, dim):
        nonlocal checked, violations, min_product, first
        prod = wt * dim
        bad = np.flatnonzero(prod < p)
        if len(bad) and first is None:
            first = start + int(bad[0])
        violations += len(bad)
        m = int(prod.min())
        min_product = m if min_product is None else min(min_product, m)
        checked += len(prod)

    if samples is None:
        if F.order**p > BRUTEFORCE_LIMIT:
            raise BudgetExceeded(f"{F.order}^{p} elements exceed the brute-force limit")
        for start, blk in walker.blocks():
            wt, dim = score(blk)
            if start == 0:
                wt, dim, start = wt[1:], dim[1:], 1
            consume(start, wt, dim)
    else:
        L, rows = walker.F, walker.rows
        rng = np.random.default_rng(seed)
        remaining = samples
        while remaining > 0:
            n = min(remaining, 1 << 12)
            msgs = rng.integers(0, F.order, size=(n, p), dtype=np.int64)
            msgs = msgs[np.any(msgs, axis=1)]
            remaining -= n
            wt, dim = score(_encode_many(L, msgs, rows))
            consume(-1, wt, dim)
    return {
        "p": p,
        "field": F.describe(),
        "exhaustive": samples is None,
        "checked": checked,
        "violations": violations,
        "min_product": min_product,
        "first_violation_index": first if samples is None else None,
        "holds": violations == 0,
    }
