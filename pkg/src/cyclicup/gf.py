"""Exact arithmetic in prime fields F_l and extension fields F_{l^r}.

Elements are stored as integer *codes*: the element
``c_0 + c_1 t + ... + c_{r-1} t^{r-1}`` (``t`` a root of the modulus) has
code ``c_0 + c_1 l + ... + c_{r-1} l^{r-1}``.  Codes below ``l`` are exactly
the prime subfield, so a prime-field value has the same code in every
extension built by :func:`build_extension`.

Fields with at most 2**16 elements get exp/log tables for speed; the tables
are derived from the polynomial-basis multiplication and never change the
result of an operation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

from .primes import factorize, is_prime

__all__ = [
    "FieldSpec",
    "FieldElement",
    "build_extension",
    "prime_field",
    "field_arith",
    "absolute_trace",
    "element_order",
    "is_irreducible",
    "MAX_FIELD_BITS",
    "TABLE_LIMIT",
]

MAX_FIELD_BITS = 61
TABLE_LIMIT = 1 << 16
# exhaustive trial division is used while the number of candidate divisors stays below this
_TRIAL_DIVISORS = 1 << 14


def _digits(code: int, ell: int, r: int) -> list[int]:
    out = []
    for _ in range(r):
        code, d = divmod(code, ell)
        out.append(d)
    return out


def _undigits(ds: Sequence[int], ell: int) -> int:
    code = 0
    for d in reversed(ds):
        code = code * ell + d
    return code


# -- polynomials over the prime field, as low-first lists -------------------


def _pf_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pf_mod(a: Sequence[int], m: Sequence[int], ell: int) -> list[int]:
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, ell)
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] * inv_lead % ell
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % ell
    return _pf_trim(a[:dm] if len(a) > dm else a)


def _pf_mulmod(a: Sequence[int], b: Sequence[int], m: Sequence[int], ell: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % ell
    return _pf_mod(out, m, ell)


def _pf_powmod(a: Sequence[int], e: int, m: Sequence[int], ell: int) -> list[int]:
    result = [1]
    base = _pf_mod(a, m, ell)
    while e:
        if e & 1:
            result = _pf_mulmod(result, base, m, ell)
        e >>= 1
        if e:
            base = _pf_mulmod(base, base, m, ell)
    return result


def _pf_gcd(a: Sequence[int], b: Sequence[int], ell: int) -> list[int]:
    a, b = _pf_trim(list(a)), _pf_trim(list(b))
    while b:
        a, b = b, _pf_mod(a, b, ell)
    return a


def is_irreducible(modulus: Sequence[int], ell: int) -> bool:
    """Irreducibility of a monic polynomial over F_ell (low-first coefficients).

    Trial division by every monic polynomial of degree <= r/2 when that is
    cheap, otherwise Rabin's test.
    """
    f = _pf_trim([c % ell for c in modulus])
    r = len(f) - 1
    if r < 1:
        return False
    if r == 1:
        return True
    if f[0] == 0:
        return False
    if sum(ell**d for d in range(1, r // 2 + 1)) <= _TRIAL_DIVISORS:
        for d in range(1, r // 2 + 1):
            for code in range(ell**d):
                g = _digits(code, ell, d) + [1]
                if not _pf_mod(f, g, ell):
                    return False
        return True
    x = [0, 1]
    if _pf_powmod(x, ell**r, f, ell) != _pf_mod(x, f, ell):
        return False
    for t in factorize(r):
        h = _pf_powmod(x, ell ** (r // t), f, ell)
        h = h + [0] * (2 - len(h))
        h[1] = (h[1] - 1) % ell
        if len(_pf_gcd(f, _pf_trim(h), ell)) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def _checked_modulus(ell: int, modulus: tuple[int, ...]) -> bool:
    return is_irreducible(modulus, ell)


@dataclass(frozen=True)
class FieldSpec:
    """The field F_{ell^r} = F_ell[t]/(modulus).

    ``modulus`` is monic of degree ``r``, low-first.  For ``r == 1`` it is
    the polynomial ``X``.
    """

    ell: int
    r: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.ell):
            raise ValueError(f"characteristic {self.ell} is not prime")
        if self.r < 1:
            raise ValueError("extension degree must be >= 1")
        if self.ell**self.r > 1 << MAX_FIELD_BITS:
            raise ValueError(f"field of size {self.ell}^{self.r} exceeds the 2^{MAX_FIELD_BITS} budget")
        m = tuple(int(c) for c in self.modulus)
        if len(m) != self.r + 1 or m[-1] != 1 or any(not 0 <= c < self.ell for c in m):
            raise ValueError(f"modulus {m} is not a monic degree-{self.r} polynomial over F_{self.ell}")
        if not _checked_modulus(self.ell, m):
            raise ValueError(f"modulus {m} is reducible over F_{self.ell}")
        object.__setattr__(self, "modulus", m)

    # -- basic facts ---------------------------------------------------------

    @property
    def order(self) -> int:
        return self.ell**self.r

    @property
    def is_prime_field(self) -> bool:
        return self.r == 1

    def __repr__(self) -> str:
        return f"FieldSpec(F_{self.ell}^{self.r}, modulus={self.modulus})"

    def describe(self) -> dict:
        return {"ell": self.ell, "r": self.r, "modulus": list(self.modulus)}

    def coeffs(self, a: int) -> list[int]:
        return _digits(a, self.ell, self.r)

    def from_coeffs(self, cs: Sequence[int]) -> int:
        cs = [c % self.ell for c in cs]
        if len(cs) > self.r:
            cs = _pf_mod(cs, self.modulus, self.ell)
        return _undigits(cs, self.ell)

    def in_prime_subfield(self, a: int) -> bool:
        return 0 <= a < self.ell

    def element(self, a: int | Sequence[int]) -> "FieldElement":
        if not isinstance(a, int):
            a = self.from_coeffs(a)
        return FieldElement(self, a)

    def fmt(self, a: int) -> str:
        if self.r == 1:
            return str(a)
        terms = []
        for i, c in reversed(list(enumerate(self.coeffs(a)))):
            if c:
                mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
                coef = "" if (c == 1 and mono) else str(c)
                terms.append(coef + mono)
        return "+".join(terms) or "0"

    # -- scalar arithmetic ---------------------------------------------------

    @cached_property
    def _mod_bits(self) -> int:
        return sum(1 << i for i, c in enumerate(self.modulus) if c)

    def _mul_raw(self, a: int, b: int) -> int:
        ell, r = self.ell, self.r
        if r == 1:
            return a * b % ell
        if ell == 2:
            prod = 0
            while b:
                if b & 1:
                    prod ^= a
                b >>= 1
                a <<= 1
            m = self._mod_bits
            for i in range(prod.bit_length() - 1, r - 1, -1):
                if prod >> i & 1:
                    prod ^= m << (i - r)
            return prod
        da, db = self.coeffs(a), self.coeffs(b)
        out = [0] * (2 * r - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    out[i + j] += x * y
        return _undigits(_pf_mod([c % ell for c in out], self.modulus, ell), ell)

    @cached_property
    def _tables(self):
        q = self.order
        if q > TABLE_LIMIT:
            return None
        g = self._primitive_element()
        exp = [0] * (2 * (q - 1))
        log = [0] * q
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._mul_raw(x, g)
        exp[q - 1 :] = exp[: q - 1]
        return exp, log, np.asarray(exp, dtype=np.int64), np.asarray(log, dtype=np.int64)

    def _pow_raw(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._mul_raw(result, a)
            e >>= 1
            if e:
                a = self._mul_raw(a, a)
        return result

    def _primitive_element(self) -> int:
        q = self.order
        if q == 2:
            return 1
        ts = list(factorize(q - 1))
        for g in range(2, q):
            if all(self._pow_raw(g, (q - 1) // t) != 1 for t in ts):
                return g
        raise ArithmeticError("no primitive element found")  # pragma: no cover

    @property
    def has_tables(self) -> bool:
        return self._tables is not None

    def add(self, a: int, b: int) -> int:
        if self.ell == 2:
            return a ^ b
        if self.r == 1:
            return (a + b) % self.ell
        ell = self.ell
        return _undigits([(x + y) % ell for x, y in zip(self.coeffs(a), self.coeffs(b))], ell)

    def neg(self, a: int) -> int:
        if self.ell == 2:
            return a
        if self.r == 1:
            return -a % self.ell
        return _undigits([-x % self.ell for x in self.coeffs(a)], self.ell)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        t = self._tables
        if t is not None:
            return t[0][t[1][a] + t[1][b]]
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.r == 1:
            return pow(a, -1, self.ell)
        t = self._tables
        if t is not None:
            return t[0][(self.order - 1 - t[1][a]) % (self.order - 1)]
        return self._pow_raw(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 1 if e == 0 else 0
        if self.r == 1:
            return pow(a, e, self.ell)
        t = self._tables
        if t is not None:
            return t[0][t[1][a] * e % (self.order - 1)]
        return self._pow_raw(a, e % (self.order - 1))

    def root_of_unity(self, n: int) -> int:
        """Deterministic element of exact multiplicative order ``n``.

        Takes the first code ``x`` (in increasing order) whose power
        ``x^((q-1)/n)`` has order exactly ``n``.
        """
        q = self.order
        if (q - 1) % n:
            raise ValueError(f"F_{self.ell}^{self.r} has no element of order {n}")
        ts = list(factorize(n)) if n > 1 else []
        for x in range(1, q):
            y = self.pow(x, (q - 1) // n)
            if all(self.pow(y, n // t) != 1 for t in ts):
                return y
        raise ArithmeticError("no root of unity found")  # pragma: no cover

    # -- vectorised arithmetic on int64 arrays of codes ----------------------

    @property
    def vectorized(self) -> bool:
        return self.has_tables or (self.r == 1 and self.ell < 1 << 31)

    def _as_array(self, a):
        return np.asarray(a, dtype=np.int64 if self.vectorized else object)

    def vadd(self, a, b):
        a, b = self._as_array(a), self._as_array(b)
        if self.ell == 2:
            return a ^ b
        if self.r == 1:
            return (a + b) % self.ell
        return self._digitwise(lambda x, y: x + y, a, b)

    def vneg(self, a):
        a = self._as_array(a)
        if self.ell == 2:
            return a
        if self.r == 1:
            return -a % self.ell
        return self._digitwise(lambda x, y: -x, a, a)

    def vsub(self, a, b):
        return self.vadd(a, self.vneg(b))

    def _digitwise(self, op, a, b):
        ell = self.ell
        out = np.zeros(np.broadcast(a, b).shape, dtype=a.dtype)
        m = 1
        for _ in range(self.r):
            out += (op(a // m % ell, b // m % ell) % ell) * m
            m *= ell
        return out

    def vmul(self, a, b):
        a, b = self._as_array(a), self._as_array(b)
        t = self._tables
        if t is not None:
            exp, log = t[2], t[3]
            res = exp[log[a] + log[b]]
            return np.where((a == 0) | (b == 0), 0, res)
        if self.r == 1:
            return a * b % self.ell
        return np.frompyfunc(self.mul, 2, 1)(a, b)

    def vsum(self, a, axis: int = 0):
        a = self._as_array(a)
        if self.ell == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        if self.r == 1:
            return a.sum(axis=axis) % self.ell
        ell = self.ell
        out = None
        m = 1
        for _ in range(self.r):
            part = ((a // m % ell).sum(axis=axis) % ell) * m
            out = part if out is None else out + part
            m *= ell
        return out


@lru_cache(maxsize=None)
def prime_field(ell: int) -> FieldSpec:
    return FieldSpec(ell, 1, (0, 1))


@lru_cache(maxsize=None)
def build_extension(ell: int, r: int) -> FieldSpec:
    """F_{ell^r} modulo the smallest monic irreducible of degree r.

    Candidates are ordered by their code ``sum(c_i ell^i)`` over the
    non-leading coefficients, so X^3+X+1 precedes X^3+X^2+1.
    """
    if not is_prime(ell):
        raise ValueError(f"characteristic {ell} is not prime")
    if r < 1:
        raise ValueError("extension degree must be >= 1")
    if ell**r > 1 << MAX_FIELD_BITS:
        raise ValueError(f"field of size {ell}^{r} exceeds the 2^{MAX_FIELD_BITS} budget")
    for code in range(ell**r):
        m = tuple(_digits(code, ell, r)) + (1,)
        if _checked_modulus(ell, m):
            return FieldSpec(ell, r, m)
    raise ArithmeticError(f"no irreducible of degree {r} over F_{ell}")  # pragma: no cover


@dataclass(frozen=True)
class FieldElement:
    """An element of a :class:`FieldSpec`, with operator overloading."""

    spec: FieldSpec
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.spec.order:
            raise ValueError(f"code {self.value} out of range for {self.spec}")

    @property
    def coeffs(self) -> list[int]:
        return self.spec.coeffs(self.value)

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement) or other.spec != self.spec:
            raise TypeError("operands live in different fields")

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.spec, self.spec.add(self.value, other.value))

    def __sub__(self, other):
        self._check(other)
        return FieldElement(self.spec, self.spec.sub(self.value, other.value))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.value))

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.spec, self.spec.mul(self.value, other.value))

    def __truediv__(self, other):
        self._check(other)
        return FieldElement(self.spec, self.spec.div(self.value, other.value))

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self) -> str:
        return self.spec.fmt(self.value)


_OPS = {"add", "sub", "mul", "div", "pow", "inv"}


def field_arith(a: FieldElement, b: FieldElement | int | None, op: str) -> FieldElement:
    """Dispatch one of add, sub, mul, div, pow, inv.

    For ``pow`` the second operand is a non-negative integer exponent; for
    ``inv`` it is ignored.
    """
    if op not in _OPS:
        raise ValueError(f"unknown operation {op!r}")
    if op == "inv":
        return a.inverse()
    if op == "pow":
        if not isinstance(b, int) or b < 0:
            raise ValueError("pow needs a non-negative integer exponent")
        return a**b
    if not isinstance(b, FieldElement) or b.spec != a.spec:
        raise TypeError("operands live in different fields")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    return a / b


def absolute_trace(x: FieldElement) -> FieldElement:
    """Sum of the Frobenius conjugates x, x^l, ..., x^(l^(r-1))."""
    spec = x.spec
    total, y = 0, x.value
    for _ in range(spec.r):
        total = spec.add(total, y)
        y = spec.pow(y, spec.ell)
    if not spec.in_prime_subfield(total):
        raise ArithmeticError("trace left the prime subfield")
    return FieldElement(spec, total)


def element_order(x: FieldElement) -> int:
    if x.value == 0:
        raise ValueError("zero has no multiplicative order")
    spec = x.spec
    order = spec.order - 1
    for q, e in factorize(order).items():
        for _ in range(e):
            if spec.pow(x.value, order // q) == 1:
                order //= q
            else:
                break
    return order
