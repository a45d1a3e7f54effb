"""Multiplicative orders, primality and bounded prime sieves.

Every predicate here is a finite, exact check.  Statements about infinitely
many primes are only ever *sampled* over a bounded range and reported as
counts.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field

__all__ = [
    "PrimeRecord",
    "Predicate",
    "factorize",
    "is_prime",
    "legendre",
    "ord_mod",
    "search_primes",
    "predicate",
    "PREDICATES",
]

# Deterministic Miller-Rabin witnesses, valid for n < 3.317e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3_317_044_064_679_887_385_961_981
_TRIAL_LIMIT = 10**12


def is_prime(n: int) -> bool:
    """Deterministic primality test for ``n`` below 3.3e24."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    if n >= _MR_LIMIT:
        raise ValueError(f"{n} is beyond the deterministic Miller-Rabin range")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization ``{prime: exponent}`` of a positive integer."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    if n >= _TRIAL_LIMIT:
        from sympy import factorint

        return {int(q): int(e) for q, e in factorint(n).items()}
    out: dict[int, int] = {}
    for q in (2, 3):
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
    q = 5
    while q * q <= n:
        for c in (q, q + 2):
            while n % c == 0:
                out[c] = out.get(c, 0) + 1
                n //= c
        q += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def ord_mod(ell: int, p: int) -> int:
    """Multiplicative order of ``ell`` modulo the prime ``p``.

    Computed by starting from ``p - 1`` and stripping prime factors while
    the power stays congruent to 1.
    """
    if p < 2 or not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    if ell % p == 0:
        raise ValueError(f"{ell} is not invertible modulo {p}")
    order = p - 1
    for q, e in factorize(p - 1).items():
        for _ in range(e):
            if pow(ell, order // q, p) == 1:
                order //= q
            else:
                break
    return order


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    t = pow(a, (p - 1) // 2, p)
    if t == 0:
        return 0
    return 1 if t == 1 else -1


def _is_mersenne(p: int) -> bool:
    return (p + 1) & p == 0 and is_prime(p)


@dataclass(frozen=True)
class PrimeRecord:
    """One prime together with the order of ``ell`` modulo it."""

    p: int
    ell: int
    ord: int
    is_mersenne: bool
    is_primitive_root: bool
    ord_equals_half: bool
    is_qr: bool

    @classmethod
    def build(cls, p: int, ell: int = 2) -> "PrimeRecord":
        r = ord_mod(ell, p)
        return cls(
            p=p,
            ell=ell,
            ord=r,
            is_mersenne=_is_mersenne(p),
            is_primitive_root=r == p - 1,
            ord_equals_half=2 * r == p - 1,
            is_qr=p != 2 and legendre(ell, p) == 1,
        )

    def as_row(self) -> dict:
        return {
            "p": self.p,
            "ell": self.ell,
            "ord": self.ord,
            "is_mersenne": int(self.is_mersenne),
            "is_primitive_root": int(self.is_primitive_root),
            "ord_equals_half": int(self.ord_equals_half),
            "is_qr": int(self.is_qr),
        }


@dataclass(frozen=True)
class Predicate:
    """A named filter on primes; ``ell`` is the base whose order is tracked."""

    name: str
    test: Callable[[int], bool] = field(compare=False)
    ell: int = 2

    def __call__(self, p: int) -> bool:
        return self.test(p)

    def __and__(self, other: "Predicate") -> "Predicate":
        if other.ell != self.ell:
            raise ValueError("cannot combine predicates on different bases")
        return Predicate(
            f"{self.name}&{other.name}", lambda p: self(p) and other(p), self.ell
        )


def ord_lt_eps(eps: float, ell: int = 2) -> Predicate:
    return Predicate(f"ord_lt_eps({eps})", lambda p: ord_mod(ell, p) < eps * p, ell)


def primitive_root(ell: int = 2) -> Predicate:
    return Predicate(f"primitive_root({ell})", lambda p: ord_mod(ell, p) == p - 1, ell)


def mersenne() -> Predicate:
    return Predicate("mersenne", _is_mersenne, 2)


def ord_half(ell: int = 2) -> Predicate:
    return Predicate(f"ord_half({ell})", lambda p: 2 * ord_mod(ell, p) == p - 1, ell)


def split_in_Kql(q: int, ell: int = 2) -> Predicate:
    """Total splitting of p in Q(zeta_q, ell^(1/q)), in elementary form.

    p must be 1 mod q and ell must be a q-th power residue mod p.
    """

    def test(p: int) -> bool:
        return p % q == 1 and pow(ell, (p - 1) // q, p) == 1

    return Predicate(f"split_in_Kql({q},{ell})", test, ell)


PREDICATES: dict[str, Callable[..., Predicate]] = {
    "ord_lt_eps": ord_lt_eps,
    "primitive_root": primitive_root,
    "mersenne": mersenne,
    "ord_half": ord_half,
    "split_in_Kql": split_in_Kql,
}


def predicate(name: str, **kwargs) -> Predicate:
    """Look up a predicate factory by name and instantiate it."""
    try:
        factory = PREDICATES[name]
    except KeyError:
        raise ValueError(f"unknown predicate {name!r}") from None
    return factory(**kwargs)


def _primes_between(lo: int, hi: int) -> Iterable[int]:
    # sieve of Eratosthenes on [0, hi)
    if hi <= 2:
        return []
    sieve = bytearray([1]) * hi
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(hi - 1) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, hi, i)))
    return (i for i in range(max(lo, 2), hi) if sieve[i])


def search_primes(lo: int, hi: int, pred: Predicate | None = None) -> Iterator[PrimeRecord]:
    """Yield a record for every prime ``lo <= p < hi`` accepted by ``pred``.

    Primes dividing the base are skipped.  Records come out in ascending p.
    """
    if hi - lo > 10**8:
        raise ValueError("search range too large")
    ell = pred.ell if pred is not None else 2
    for p in _primes_between(lo, hi):
        if p % ell == 0:
            continue
        if pred is None or pred(p):
            yield PrimeRecord.build(p, ell)
