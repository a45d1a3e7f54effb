"""The group ring R = F[X]/(X^p - 1) for a prime p.

Covers cyclotomic cosets, the factorization of X^p - 1 through a splitting
field, weights and supports, the root count Z(f) = deg gcd(f, X^p - 1),
ideal dimensions and the (unnormalised) discrete Fourier transform.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Sequence

from . import poly as P
from .gf import FieldSpec, build_extension, prime_field
from .primes import is_prime, ord_mod

__all__ = [
    "RingElement",
    "Factor",
    "Factorization",
    "RingParams",
    "cyclotomic_cosets",
    "factor_xp_minus_1",
    "zeros_count",
    "ideal_dim",
    "weight",
    "dft",
    "inverse_dft",
]

# full product check of the factorization up to this length
_PRODUCT_CHECK_LIMIT = 1024


@dataclass(frozen=True)
class RingElement:
    """A polynomial of degree < p, coefficient of X^i at index i."""

    field: FieldSpec
    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        cs = tuple(int(c) for c in self.coeffs)
        if len(cs) != self.p:
            raise ValueError(f"expected {self.p} coefficients, got {len(cs)}")
        if not is_prime(self.p):
            raise ValueError(f"length {self.p} is not prime")
        q = self.field.order
        if any(not 0 <= c < q for c in cs):
            raise ValueError("coefficient code out of range")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def from_poly(cls, field: FieldSpec, p: int, poly: Sequence[int]) -> "RingElement":
        """Reduce an arbitrary polynomial modulo X^p - 1."""
        cs = [0] * p
        for i, c in enumerate(poly):
            if c:
                cs[i % p] = field.add(cs[i % p], c)
        return cls(field, p, tuple(cs))

    @classmethod
    def from_terms(cls, field: FieldSpec, p: int, terms: dict[int, int]) -> "RingElement":
        cs = [0] * p
        for e, c in terms.items():
            cs[e % p] = field.add(cs[e % p], c)
        return cls(field, p, tuple(cs))

    @classmethod
    def all_ones(cls, field: FieldSpec, p: int) -> "RingElement":
        return cls(field, p, (1,) * p)

    @classmethod
    def monomial(cls, field: FieldSpec, p: int, i: int, c: int = 1) -> "RingElement":
        cs = [0] * p
        cs[i % p] = c
        return cls(field, p, tuple(cs))

    @property
    def poly(self) -> list[int]:
        return P.trim(self.coeffs)

    @property
    def support(self) -> list[int]:
        return [i for i, c in enumerate(self.coeffs) if c]

    @property
    def weight(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def shift(self, i: int) -> "RingElement":
        """X^i * f, a cyclic rotation of the coefficients."""
        i %= self.p
        return RingElement(self.field, self.p, self.coeffs[-i:] + self.coeffs[:-i] if i else self.coeffs)

    def _check(self, other: "RingElement") -> None:
        if other.field != self.field or other.p != self.p:
            raise TypeError("ring elements from different rings")

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        F = self.field
        return RingElement(F, self.p, tuple(F.add(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        F = self.field
        return RingElement(F, self.p, tuple(F.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement.from_poly(self.field, self.p, P.mul(self.field, self.coeffs, other.coeffs))

    def scale(self, c: int) -> "RingElement":
        return RingElement(self.field, self.p, tuple(self.field.mul(c, a) for a in self.coeffs))

    def embed(self, field: FieldSpec) -> "RingElement":
        """View a prime-field polynomial inside an extension of the same characteristic."""
        if field.ell != self.field.ell or (self.field.r != 1 and field != self.field):
            raise ValueError("can only embed prime-field polynomials into an extension")
        return RingElement(field, self.p, self.coeffs)

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    def to_hex(self) -> str:
        """Bit-packed form for F_2 (bit i = coefficient of X^i)."""
        if self.field.order != 2:
            raise ValueError("hex packing is only defined over F_2")
        return hex(sum(1 << i for i, c in enumerate(self.coeffs) if c))

    @classmethod
    def from_hex(cls, p: int, text: str) -> "RingElement":
        v = int(text, 16)
        if v >> p:
            raise ValueError("hex word longer than p bits")
        return cls(prime_field(2), p, tuple(v >> i & 1 for i in range(p)))

    def __str__(self) -> str:
        return P.fmt(self.field, self.coeffs)


class Factor(NamedTuple):
    coset: tuple[int, ...]
    poly: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.poly) - 1


class RingParams(NamedTuple):
    ell: int
    p: int
    r: int
    s: int


@dataclass(frozen=True)
class Factorization:
    """Irreducible factors of X^p - 1 over ``field``, indexed by cyclotomic coset.

    ``r`` is the order of |field| modulo p and ``s = (p - 1) / r``.  Factor 0
    is always X - 1.  ``zeta`` is a fixed primitive p-th root of unity in
    ``splitting_field``; factor i vanishes exactly at ``zeta^j`` for j in its
    coset.  In characteristic p the descriptor is degenerate: a single
    factor X - 1 of multiplicity p and no splitting field.
    """

    p: int
    field: FieldSpec
    r: int
    s: int
    factors: tuple[Factor, ...]
    splitting_field: FieldSpec | None
    zeta: int | None
    char_p: bool = False

    @property
    def ell(self) -> int:
        return self.field.ell

    @property
    def params(self) -> RingParams:
        return RingParams(self.ell, self.p, self.r, self.s)

    @property
    def degrees(self) -> list[int]:
        if self.char_p:
            return [1] * self.p
        return [f.degree for f in self.factors]

    @property
    def multiplicity(self) -> int:
        return self.p if self.char_p else 1

    @cached_property
    def points(self) -> tuple[int, ...]:
        """zeta^j for j = 0..p-1, in the splitting field."""
        if self.char_p:
            raise ValueError("no roots of unity in characteristic p")
        L, z = self.splitting_field, self.zeta
        out, x = [], 1
        for _ in range(self.p):
            out.append(x)
            x = L.mul(x, z)
        return tuple(out)

    def xp_minus_1(self) -> list[int]:
        return P.x_pow_minus_one(self.field, self.p)

    def describe(self) -> dict:
        return {
            "p": self.p,
            "ell": self.ell,
            "field": self.field.describe(),
            "r": self.r,
            "s": self.s,
            "char_p": self.char_p,
            "factors": [
                {"coset": list(f.coset), "poly": list(f.poly), "display": P.fmt(self.field, f.poly)}
                for f in self.factors
            ],
            "multiplicity": self.multiplicity,
            "splitting_field": self.splitting_field.describe() if self.splitting_field else None,
            "zeta": self.zeta,
        }


def cyclotomic_cosets(ell: int, p: int) -> list[list[int]]:
    """Orbits of j -> ell*j on Z/pZ, each sorted, ordered by least element.

    ``ell`` may be any integer prime to ``p`` (a prime power gives the
    cosets for the field of that size).
    """
    if ell % p == 0:
        raise ValueError(f"{ell} is divisible by {p}; use characteristic-p mode")
    seen: set[int] = set()
    out = []
    for j in range(p):
        if j in seen:
            continue
        orbit, x = [], j
        while x not in orbit:
            orbit.append(x)
            x = x * ell % p
        seen.update(orbit)
        out.append(sorted(orbit))
    return out


def factor_xp_minus_1(field: FieldSpec | int, p: int, char_p: bool = False) -> Factorization:
    """Factor X^p - 1 over ``field`` (a FieldSpec or a prime for F_ell).

    Each factor is prod_{j in C} (X - zeta^j) computed in the splitting field
    and checked to have coefficients in ``field``.  Extension coefficient
    fields are supported when they already contain the p-th roots of unity.
    """
    F = prime_field(field) if isinstance(field, int) else field
    if not is_prime(p):
        raise ValueError(f"length {p} is not prime")
    if F.ell == p:
        if not char_p:
            raise ValueError("characteristic equals p; pass char_p=True for the degenerate descriptor")
        F1 = F
        x_minus_1 = (F1.neg(1), 1)
        return Factorization(p, F, 1, 0, (Factor((0,), x_minus_1),), None, None, char_p=True)
    q = F.order
    r = ord_mod(q % p, p)
    if r == 1:
        L = F
    elif F.r == 1:
        L = build_extension(F.ell, r)
    else:
        raise ValueError(
            f"F_{F.ell}^{F.r} does not contain the {p}-th roots of unity; "
            "only prime fields or fields containing them are supported"
        )
    zeta = L.root_of_unity(p)
    pw = [1] * p
    for j in range(1, p):
        pw[j] = L.mul(pw[j - 1], zeta)
    factors = []
    for coset in cyclotomic_cosets(q, p):
        g = P.from_roots(L, (pw[j] for j in coset))
        if L is not F and not all(L.in_prime_subfield(c) for c in g):
            raise ArithmeticError(f"factor for coset {coset} has coefficients outside the base field")
        factors.append(Factor(tuple(coset), tuple(g)))
    if len(set(pw)) != p or L.mul(pw[-1], zeta) != 1:
        raise ArithmeticError("zeta is not a primitive p-th root of unity")
    if p <= _PRODUCT_CHECK_LIMIT:
        prod: list[int] = [1]
        for f in factors:
            prod = P.mul(F, prod, f.poly)
        if prod != P.x_pow_minus_one(F, p):
            raise ArithmeticError("product of factors differs from X^p - 1")
    if any(f.degree != (1 if f.coset == (0,) else r) for f in factors):
        raise ArithmeticError("factor degree differs from the order of |F| mod p")
    return Factorization(p, F, r, (p - 1) // r, tuple(factors), L, zeta)


def _require_nonzero(f: RingElement) -> None:
    if f.is_zero():
        raise ValueError("the zero element has no root count")


def _check_ring(f: RingElement, fact: Factorization) -> None:
    if f.p != fact.p or f.field != fact.field:
        raise ValueError("ring element and factorization disagree on the ring")


def zeros_count(f: RingElement, fact: Factorization, cross_check: bool = True) -> int:
    """Z(f) = deg gcd(f, X^p - 1).

    With ``cross_check`` the count of p-th roots of unity annihilated by f is
    also computed in the splitting field; a disagreement raises.
    """
    _require_nonzero(f)
    _check_ring(f, fact)
    g = P.gcd(fact.field, f.poly, fact.xp_minus_1())
    z = len(g) - 1
    if cross_check and not fact.char_p:
        vals = P.evaluate_many(fact.splitting_field, f.poly, fact.points)
        z_eval = sum(1 for v in vals if v == 0)
        if z_eval != z:
            raise ArithmeticError(f"gcd degree {z} but {z_eval} roots of unity are zeros")
    return z


def ideal_dim(f: RingElement, fact: Factorization, cross_check: bool = True) -> int:
    """dim I_f = p - Z(f)."""
    return fact.p - zeros_count(f, fact, cross_check)


def weight(f: RingElement) -> int:
    return f.weight


def dft(f: RingElement, fact: Factorization) -> list[int]:
    """(f(zeta^-j))_{j=0..p-1} in the splitting field, without the 1/p factor."""
    _check_ring(f, fact)
    if fact.char_p:
        raise ValueError("no Fourier transform in characteristic p")
    pts = fact.points
    p = fact.p
    return P.evaluate_many(fact.splitting_field, f.poly, [pts[-j % p] for j in range(p)])


def inverse_dft(values: Sequence[int], fact: Factorization) -> RingElement:
    """Inverse of :func:`dft`; returns p*f as an element over the splitting field."""
    p = fact.p
    if len(values) != p:
        raise ValueError(f"expected {p} values")
    L = fact.splitting_field
    coeffs = P.evaluate_many(L, list(values), fact.points)
    return RingElement(L, p, tuple(coeffs))
