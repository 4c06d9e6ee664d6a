"""Exact integer and residue arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .errors import ModulusMismatch

Factorization = tuple[tuple[int, int], ...]


@dataclass(frozen=True, order=True)
class Residue:
    """An element of Z/NZ, always stored reduced."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {self.modulus}")
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other) -> int:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ModulusMismatch(f"Z/{self.modulus} vs Z/{other.modulus}")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return Residue(self.value + v, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return Residue(self.value - v, self.modulus)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return Residue(v - self.value, self.modulus)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return Residue(self.value * v, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return Residue(pow(self.value, k, self.modulus), self.modulus)

    def is_unit(self) -> bool:
        return gcd(self.value, self.modulus) == 1

    def inverse(self) -> Residue:
        return Residue(pow(self.value, -1, self.modulus), self.modulus)

    def __int__(self):
        return self.value

    def __str__(self):
        return f"{self.value} mod {self.modulus}"


def factorize(n: int) -> Factorization:
    """Prime factorization of ``n >= 1`` by trial division, sorted by prime.

    >>> factorize(108)
    ((2, 2), (3, 3))
    """
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def prime_divisors(n: int) -> tuple[int, ...]:
    return tuple(p for p, _ in factorize(n))


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == ((n, 1),)


def prime_power(n: int) -> tuple[int, int] | None:
    """Return ``(p, e)`` if ``n = p**e`` with ``e >= 1``, else None."""
    f = factorize(n) if n >= 2 else ()
    return f[0] if len(f) == 1 else None


def euler_phi(n: int) -> int:
    r = n
    for p in prime_divisors(n):
        r = r // p * (p - 1)
    return r


def dedekind_psi(n: int) -> int:
    r = n
    for p in prime_divisors(n):
        r = r // p * (p + 1)
    return r


def squarefree_part(n: int) -> int:
    """The squarefree ``d`` with ``n = d * m**2`` and the sign of ``n``."""
    if n == 0:
        raise ValueError("squarefree_part(0) is undefined")
    d = 1
    for p, e in factorize(abs(n)):
        if e % 2:
            d *= p
    return d if n > 0 else -d


def is_squarefree(n: int) -> bool:
    return n != 0 and squarefree_part(n) == n


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def integer_root(n: int, k: int) -> int | None:
    """Exact non-negative ``k``-th root of ``n >= 0``, or None."""
    if n < 0:
        return None
    lo, hi = 0, 1
    while hi**k <= n:
        hi *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid**k <= n:
            lo = mid
        else:
            hi = mid
    return lo if lo**k == n else None
