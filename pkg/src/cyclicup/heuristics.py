"""Entropy counts and the random-ideal heuristics for binary cyclic codes.

All asymptotic predictions are published next to exact big-integer counts;
nothing here models the o(p) terms.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .codes import (
    DEFAULT_CODEWORD_BUDGET,
    CyclicCode,
    min_distance_exact,
    min_distance_upper,
    quadratic_residue_code,
)
from .ideals import BudgetExceeded, _descriptor, ideals_in_dim_range
from .primes import is_prime, ord_mod
from .ring import factor_xp_minus_1
from .span import SpanWalker

__all__ = [
    "EntropyReport",
    "ExperimentReport",
    "entropy",
    "sphere_size",
    "expected_intersection",
    "random_ideal_experiment",
    "weak_up_expectation",
    "qr_distance_study",
]

# tolerance on delta * p before flooring, so 3/7 * 7 counts as 3
_FLOOR_EPS = 1e-9


def entropy(delta: float) -> tuple[float, float]:
    """(H, H') with H in nats and H' = H / log 2."""
    if not 0 < delta < 1:
        raise ValueError(f"delta must lie in (0, 1), got {delta}")
    h = -delta * math.log(delta) - (1 - delta) * math.log(1 - delta)
    return h, h / math.log(2)


def _radius(p: int, delta: float) -> int:
    return math.floor(delta * p + _FLOOR_EPS)


@dataclass
class EntropyReport:
    p: int
    delta: float
    radius: int
    exact_count: int
    log2_count: float | None
    h_prime: float
    lower: int
    upper: int
    sandwich_applies: bool
    sandwich_holds: bool

    @property
    def rate_gap(self) -> float | None:
        """log2|S| / p - H'(delta); None for an empty sphere."""
        if self.log2_count is None:
            return None
        return self.log2_count / self.p - self.h_prime

    def to_json(self) -> dict:
        out = asdict(self)
        # big integers go out as strings so JSON readers keep every digit
        for k in ("exact_count", "lower", "upper"):
            out[k] = str(out[k])
        out["rate_gap"] = self.rate_gap
        return out


def sphere_size(p: int, delta: float) -> EntropyReport:
    """|S_delta|: nonzero binary words of length p and weight <= delta * p.

    The sandwich C(p, m) <= |S| <= p * C(p, m), m = floor(delta p), needs
    1 <= m <= p/2; outside that range it is reported as not applicable.
    """
    if p < 2:
        raise ValueError("p must be at least 2")
    _, hp = entropy(delta)
    m = _radius(p, delta)
    count = sum(math.comb(p, j) for j in range(1, m + 1))
    lower, upper = math.comb(p, m), p * math.comb(p, m)
    applies = 1 <= m <= p / 2
    holds = lower <= count <= upper
    if applies and not holds:
        raise ArithmeticError("binomial sandwich violated")
    log2 = math.log2(count) if count else None
    return EntropyReport(p, delta, m, count, log2, hp, lower, upper, applies, holds)


def expected_intersection(p: int, eta: float, delta: float) -> float:
    """Exponent p (H'(delta) - (1 - eta)) of the expected |S_delta & I| for dim I ~ eta p."""
    if not 0 < eta < 1:
        raise ValueError(f"eta must lie in (0, 1), got {eta}")
    return p * (entropy(delta)[1] - (1 - eta))


@dataclass
class ExperimentReport:
    seed: int
    p: int
    eta: float
    delta: float
    dim: int
    present: tuple[int, ...]
    samples: int
    observed: int
    min_weight: int
    threshold: float
    verdict: bool
    low_confidence: bool
    expected_exponent: float

    def to_json(self) -> dict:
        out = asdict(self)
        out["present"] = list(self.present)
        return out


def random_ideal_experiment(p: int, eta: float, delta: float, samples: int, seed: int = 0) -> ExperimentReport:
    """Sample codewords of a binary ideal of dimension near eta p.

    The ideal is the one whose dimension is closest to eta p (within r),
    ties going to the lexicographically smallest set of present factors.
    Every basis row and row pair is looked at as well as ``samples``
    uniform nonzero messages.
    """
    if not is_prime(p) or p == 2:
        raise ValueError(f"p must be an odd prime, got {p}")
    fact = factor_xp_minus_1(2, p)
    target = eta * p
    lo = max(1, math.ceil(target - fact.r))
    hi = min(p + 1, math.floor(target + fact.r) + 1)
    cands = list(ideals_in_dim_range(fact, lo, hi)) if lo < hi else []
    if not cands:
        raise ValueError(f"no ideal of F_2[X]/(X^{p}-1) has dimension within {fact.r} of {target}")
    ideal = min(cands, key=lambda I: (abs(I.dim - target), I.present))
    code = CyclicCode.from_ideal(ideal)
    res = min_distance_upper(code, samples, seed)
    threshold = delta * p
    return ExperimentReport(
        seed=seed,
        p=p,
        eta=eta,
        delta=delta,
        dim=ideal.dim,
        present=ideal.present,
        samples=samples,
        observed=res.enumerated,
        min_weight=res.d,
        threshold=threshold,
        verdict=res.d > threshold,
        low_confidence=samples == 0,
        expected_exponent=expected_intersection(p, eta, delta),
    )


def weak_up_expectation(p: int, delta: float = 0.1, budget: int = 1 << 24) -> dict:
    """Exact counts behind the independence heuristic at a prime with ord_p(2) = (p-1)/2.

    ``multiples`` is the exact size of the ideal (f_1) for the first
    degree-(p-1)/2 factor; ``sphere`` is |S_delta|.  The expected
    intersection exponent is log2(multiples * sphere / 2^p), compared with
    p (H'(delta) - 1/2).  When the ideal is small enough its codewords of
    weight <= delta p are also counted directly.
    """
    if not is_prime(p) or p == 2 or ord_mod(2, p) != (p - 1) // 2:
        raise ValueError(f"need ord_p(2) = (p-1)/2, fails for p={p}")
    fact = factor_xp_minus_1(2, p)
    f1 = fact.factors[1]
    ideal = _descriptor(fact, [i for i in range(len(fact.factors)) if i != 1])
    if tuple(ideal.generator) != tuple(f1.poly):
        raise ArithmeticError("ideal generator is not f_1")
    multiples = 2**ideal.dim
    sphere = sphere_size(p, delta)
    exponent = None if sphere.log2_count is None else math.log2(multiples) + sphere.log2_count - p
    predicted = p * (sphere.h_prime - 0.5)
    intersection = None
    if multiples <= budget:
        m = sphere.radius
        walker = SpanWalker(fact.field, CyclicCode.from_ideal(ideal).basis)
        intersection = 0
        for start, blk in walker.blocks():
            w = np.count_nonzero(blk, axis=1)
            intersection += int(np.count_nonzero((w >= 1) & (w <= m)))
    return {
        "p": p,
        "delta": delta,
        "factor": list(f1.poly),
        "ideal_dim": ideal.dim,
        "multiples": str(multiples),
        "multiples_half_power": str(2 ** ((p - 1) // 2)),
        "sphere": str(sphere.exact_count),
        "exponent": exponent,
        "predicted_exponent": predicted,
        "reference_rate_exponent": -3 * p / 100,
        "gap": None if exponent is None else exponent - predicted,
        "within_tenth_p": exponent is not None and abs(exponent - predicted) <= 0.1 * p,
        "intersection": intersection,
    }


def qr_distance_study(p_max: int, budget: int = DEFAULT_CODEWORD_BUDGET, trials: int = 100_000, seed: int = 0):
    """(p, k, d, d/p) for binary QR codes at primes with ord_p(2) = (p-1)/2.

    Distances are exact when 2^k - 1 fits the budget, else sampled upper
    bounds with ``exact`` false.
    """
    rows = []
    for p in range(7, p_max + 1):
        if not is_prime(p) or p % 8 not in (1, 7) or ord_mod(2, p) != (p - 1) // 2:
            continue
        code = quadratic_residue_code(p)
        try:
            res = min_distance_exact(code, budget)
        except BudgetExceeded:
            res = min_distance_upper(code, trials, seed, budget)
        rows.append({"p": p, "k": code.k, "d": res.d, "d_over_p": round(res.d / p, 4), "exact": res.exact})
    return rows
