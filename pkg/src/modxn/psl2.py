"""Explicit computation in PSL2(Z/NZ) = SL2(Z/NZ)/{±1}.

Group elements are 2x2 determinant-one matrices over Z/NZ, identified with
their negatives.  The canonical representative of ``{M, -M}`` is the one
whose entry tuple ``(a, b, c, d)`` (entries in ``[0, N)``) is
lexicographically smaller.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .arith import Residue, euler_phi, factorize, is_prime, prime_power
from .errors import ModulusTooLarge, SampleConstructionFailure

MAX_ENUMERATION_LEVEL = 40
MAX_SIMPLICITY_LEVEL = 13

Quad = tuple[int, int, int, int]


def _reduce(t: Quad, n: int) -> Quad:
    return (t[0] % n, t[1] % n, t[2] % n, t[3] % n)


def _canon(t: Quad, n: int) -> Quad:
    neg = ((-t[0]) % n, (-t[1]) % n, (-t[2]) % n, (-t[3]) % n)
    return min(t, neg)


def _mul(s: Quad, t: Quad, n: int) -> Quad:
    a, b, c, d = s
    e, f, g, h = t
    return ((a * e + b * g) % n, (a * f + b * h) % n, (c * e + d * g) % n, (c * f + d * h) % n)


def _inv(t: Quad, n: int) -> Quad:
    a, b, c, d = t
    return (d % n, (-b) % n, (-c) % n, a % n)


@dataclass(frozen=True, order=True)
class Mat2:
    """Determinant-one matrix ``[[a, b], [c, d]]`` over Z/NZ."""

    a: int
    b: int
    c: int
    d: int
    N: int

    def __post_init__(self):
        if self.N < 1:
            raise ValueError(f"modulus must be >= 1, got {self.N}")
        for name in "abcd":
            object.__setattr__(self, name, getattr(self, name) % self.N)
        if (self.a * self.d - self.b * self.c - 1) % self.N:
            raise ValueError(f"det != 1 mod {self.N}: {self.entries}")

    @classmethod
    def identity(cls, N: int) -> Mat2:
        return cls(1, 0, 0, 1, N)

    @property
    def entries(self) -> Quad:
        return (self.a, self.b, self.c, self.d)

    def residues(self) -> tuple[Residue, Residue, Residue, Residue]:
        return tuple(Residue(x, self.N) for x in self.entries)

    def __matmul__(self, other: Mat2) -> Mat2:
        if other.N != self.N:
            raise ValueError("moduli differ")
        return Mat2(*_mul(self.entries, other.entries, self.N), self.N)

    def __neg__(self) -> Mat2:
        return Mat2(-self.a, -self.b, -self.c, -self.d, self.N)

    def inverse(self) -> Mat2:
        return Mat2(*_inv(self.entries, self.N), self.N)


@dataclass(frozen=True, order=True)
class PSL2Element:
    rep: Mat2

    @classmethod
    def from_matrix(cls, m: Mat2) -> PSL2Element:
        return cls(Mat2(*_canon(m.entries, m.N), m.N))

    @classmethod
    def of(cls, a: int, b: int, c: int, d: int, N: int) -> PSL2Element:
        return cls.from_matrix(Mat2(a, b, c, d, N))

    @classmethod
    def identity(cls, N: int) -> PSL2Element:
        return cls.from_matrix(Mat2.identity(N))

    @property
    def N(self) -> int:
        return self.rep.N

    @property
    def key(self) -> Quad:
        return self.rep.entries

    def __mul__(self, other: PSL2Element) -> PSL2Element:
        return PSL2Element.from_matrix(self.rep @ other.rep)

    def inverse(self) -> PSL2Element:
        return PSL2Element.from_matrix(self.rep.inverse())

    def is_identity(self) -> bool:
        return self.key == _canon((1, 0, 0, 1), self.N)

    def __repr__(self):
        return f"PSL2Element({list(self.key)} mod {self.N})"


class SubgroupKind(str, Enum):
    GAMMA1 = "Gamma1"
    GAMMA0_UPPER = "Gamma0Upper"
    GAMMA0 = "Gamma0"
    CARTAN = "Cartan"
    FULL = "Full"


@dataclass(frozen=True)
class SubgroupImage:
    kind: SubgroupKind
    N: int
    elements: frozenset[PSL2Element] | None = None

    def __len__(self):
        return len(self.elements)


def psl2_order(N: int) -> int:
    """|PSL2(Z/NZ)|: ``N^3/2 * prod(1 - p^-2)`` for N > 2, 6 for N = 2, 1 for N = 1."""
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if N == 1:
        return 1
    if N == 2:
        return 6
    r = Fraction(N**3, 2)
    for p, _ in factorize(N):
        r *= 1 - Fraction(1, p * p)
    assert r.denominator == 1
    return int(r)


def sl2_order(N: int) -> int:
    r = N**3
    for p, _ in factorize(N):
        r = r // (p * p) * (p * p - 1)
    return r


def _check_enumerable(N: int) -> None:
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if N > MAX_ENUMERATION_LEVEL:
        raise ModulusTooLarge(f"N={N} exceeds enumeration cutoff {MAX_ENUMERATION_LEVEL}")


@lru_cache(maxsize=None)
def _psl2_quads(N: int) -> tuple[Quad, ...]:
    # For each (a, b, c) solve a*d = 1 + b*c (mod N) for d.
    _check_enumerable(N)
    out = set()
    for a in range(N):
        g = gcd(a, N)
        n1 = N // g
        inv = pow(a // g, -1, n1) if n1 > 1 else 0
        for b in range(N):
            for c in range(N):
                r = 1 + b * c
                if r % g:
                    continue
                d0 = (r // g) * inv % n1
                for k in range(g):
                    out.add(_canon((a, b, c, (d0 + k * n1) % N), N))
    return tuple(sorted(out))


def enumerate_psl2(N: int) -> frozenset[PSL2Element]:
    """All elements of PSL2(Z/NZ) for ``N <= 40``."""
    return frozenset(PSL2Element(Mat2(*q, N)) for q in _psl2_quads(N))


def element_order(g: PSL2Element) -> int:
    N = g.N
    ident = _canon((1, 0, 0, 1), N)
    x, k = g.key, 1
    while x != ident:
        x = _canon(_mul(x, g.key, N), N)
        k += 1
    return k


def _subgroup_quads(kind: SubgroupKind, N: int) -> set[Quad]:
    units = [u for u in range(N) if gcd(u, N) == 1] if N > 1 else [0]
    inv = {u: pow(u, -1, N) if N > 1 else 0 for u in units}
    if kind is SubgroupKind.GAMMA1:
        raw = [(1, b, 0, 1) for b in range(N)]
    elif kind is SubgroupKind.GAMMA0:
        raw = [(u, b, 0, inv[u]) for u in units for b in range(N)]
    elif kind is SubgroupKind.GAMMA0_UPPER:
        raw = [(u, 0, c, inv[u]) for u in units for c in range(N)]
    elif kind is SubgroupKind.CARTAN:
        raw = [(u, 0, 0, inv[u]) for u in units]
    else:
        return set(_psl2_quads(N))
    return {_canon(_reduce(q, N), N) for q in raw}


def is_closed(quads: set[Quad], N: int, *, exhaustive_limit: int = 1000, seed: int = 0) -> bool:
    """Closure under product and inverse; sampled above ``exhaustive_limit``."""
    items = sorted(quads)
    if any(_canon(_inv(q, N), N) not in quads for q in items):
        return False
    if len(items) <= exhaustive_limit:
        pairs = ((s, t) for s in items for t in items)
    else:
        rng = random.Random(seed)
        pairs = ((rng.choice(items), rng.choice(items)) for _ in range(20000))
    return all(_canon(_mul(s, t, N), N) in quads for s, t in pairs)


def subgroup_image(kind: SubgroupKind | str, N: int) -> SubgroupImage:
    kind = SubgroupKind(kind)
    _check_enumerable(N)
    quads = _subgroup_quads(kind, N)
    if not is_closed(quads, N):
        raise AssertionError(f"{kind.value}({N}) is not closed")
    return SubgroupImage(kind, N, frozenset(PSL2Element(Mat2(*q, N)) for q in quads))


def subgroup_order(kind: SubgroupKind | str, N: int) -> int:
    kind = SubgroupKind(kind)
    if kind is SubgroupKind.FULL:
        return psl2_order(N)
    if kind is SubgroupKind.GAMMA1:
        return N
    half = 2 if N > 2 else 1
    if kind is SubgroupKind.CARTAN:
        return euler_phi(N) // half
    return N * euler_phi(N) // half


def congruence_index(kind: SubgroupKind | str, N: int) -> int:
    """Index of the named image in PSL2(Z/NZ), i.e. the degree of X(N) -> X_H."""
    return psl2_order(N) // subgroup_order(kind, N)


def _generated(gens: list[Quad], N: int, stop_at: int | None = None) -> set[Quad]:
    e = _canon((1, 0, 0, 1), N)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = _canon(_mul(x, s, N), N)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        if stop_at is not None and len(seen) >= stop_at:
            break
        frontier = nxt
    return seen


def _group_generators(N: int) -> tuple[Quad, Quad]:
    # Images of S and T generate SL2(Z/NZ) since SL2(Z) -> SL2(Z/NZ) is onto.
    return _canon((0, N - 1, 1, 0), N), _canon((1, 1 % N, 0, 1), N)


def _normal_closure(g: Quad, N: int, order: int) -> set[Quad]:
    gens = [g]
    sub = _generated(gens, N, stop_at=order)
    changed = True
    while changed and len(sub) < order:
        changed = False
        for x in _group_generators(N):
            xi = _inv(x, N)
            for k in list(gens):
                c = _canon(_mul(_mul(x, k, N), xi, N), N)
                if c not in sub:
                    gens.append(c)
                    sub = _generated(gens, N, stop_at=order)
                    changed = True
    return sub


def _conjugacy_class_reps(N: int) -> list[Quad]:
    elems = _psl2_quads(N)
    gens = _group_generators(N)
    seen: set[Quad] = set()
    reps = []
    for g in elems:
        if g in seen:
            continue
        reps.append(g)
        seen.add(g)
        frontier = [g]
        while frontier:
            nxt = []
            for y in frontier:
                for x in gens:
                    c = _canon(_mul(_mul(x, y, N), _inv(x, N), N), N)
                    if c not in seen:
                        seen.add(c)
                        nxt.append(c)
            frontier = nxt
    return reps


@lru_cache(maxsize=None)
def is_simple(N: int) -> bool:
    """Whether PSL2(Z/NZ) is simple, by normal closures of class representatives."""
    if N > MAX_SIMPLICITY_LEVEL:
        raise ModulusTooLarge(f"simplicity test is enumeration-backed only up to {MAX_SIMPLICITY_LEVEL}")
    order = psl2_order(N)
    if order == 1:
        return False
    ident = _canon((1, 0, 0, 1), N)
    for g in _conjugacy_class_reps(N):
        if g != ident and len(_normal_closure(g, N, order)) < order:
            return False
    return True


def psl2_prime_simplicity(p: int) -> tuple[bool, str]:
    """Simplicity of PSL2(p) with the method used: ``enumeration`` or ``axiom``.

    Above the enumeration cutoff the classical theorem (PSL2(p) simple for
    primes p >= 5) is taken as an axiom.
    """
    if not is_prime(p):
        return False, "axiom"
    if p <= MAX_SIMPLICITY_LEVEL:
        return is_simple(p), "enumeration"
    return p >= 5, "axiom"


def min_symmetric_degree(k: int) -> int:
    """Smallest m such that S_m has an element of order k (1 for k = 1)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if k == 1:
        return 1
    return sum(p**e for p, e in factorize(k))


def beta_obstruction(N: int, m: int) -> bool:
    """True when every homomorphism PSL2(Z/NZ) -> S_m is forced trivial.

    Covers N prime, N a power of a prime >= 7, and N coprime to 30; any
    other N is reported as undecided (False).
    """
    if N < 7 or m < 1:
        raise ValueError(f"need N >= 7 and m >= 1, got N={N}, m={m}")

    def kills(p: int) -> bool:
        return psl2_prime_simplicity(p)[0] and min_symmetric_degree(p) > m

    pp = prime_power(N)
    if pp is not None:
        p, e = pp
        if e == 1:
            return kills(p)
        # the p-group kernel H of PSL2(p^e) -> PSL2(p) has only p-power orders
        return p >= 7 and kills(p)
    if gcd(N, 30) == 1:
        return all(kills(p) for p, _ in factorize(N))
    return False


def in_gamma(m: Quad, N: int) -> bool:
    a, b, c, d = m
    return (a - 1) % N == 0 and b % N == 0 and c % N == 0 and (d - 1) % N == 0


def in_gamma1(m: Quad, M: int) -> bool:
    a, _, c, d = m
    return (a - 1) % M == 0 and c % M == 0 and (d - 1) % M == 0


def in_gamma0(m: Quad, M: int) -> bool:
    return m[2] % M == 0


def _integer_word(rng: random.Random, upper: int, lower: int, length: int) -> Quad:
    # Product of elementary matrices [[1, upper*k], [0, 1]] and [[1, 0], [lower*j, 1]].
    a, b, c, d = 1, 0, 0, 1
    for _ in range(length):
        k = rng.randint(-3, 3)
        if rng.random() < 0.5:
            a, b, c, d = a, a * upper * k + b, c, c * upper * k + d
        else:
            a, b, c, d = a + b * lower * k, b, c + d * lower * k, d
    if a * d - b * c != 1:
        raise SampleConstructionFailure(f"non-unimodular sample {(a, b, c, d)}")
    return a, b, c, d


def conjugate_by_u(m: Quad, N: int) -> Quad | None:
    """``U m U^-1`` for ``U = diag(1, 1/N)``: ``[[a, bN], [c/N, d]]``; None if not integral."""
    a, b, c, d = m
    if c % N:
        return None
    return a, b * N, c // N, d


def conjugate_by_u_inverse(m: Quad, N: int) -> Quad | None:
    a, b, c, d = m
    if b % N:
        return None
    return a, b // N, c * N, d


def conjugation_inclusion_check(N: int, sample_count: int, seed: int = 0) -> bool:
    """Sample-check Gamma1(N^2) <= U^-1 Gamma(N) U <= Gamma0(N^2)."""
    if N < 2:
        raise ValueError(f"N must be >= 2, got {N}")
    rng = random.Random(seed * 1_000_003 + N)
    M = N * N
    samples_1 = [(1, 0, 0, 1)] + [_integer_word(rng, 1, M, rng.randint(1, 8)) for _ in range(sample_count)]
    samples_n = [(1, 0, 0, 1)] + [_integer_word(rng, N, N, rng.randint(1, 8)) for _ in range(sample_count)]
    for g in samples_1:
        if not in_gamma1(g, M):
            raise SampleConstructionFailure(f"{g} not in Gamma1({M})")
        h = conjugate_by_u(g, N)
        if h is None or not in_gamma(h, N):
            return False
    for g in samples_n:
        if not in_gamma(g, N):
            raise SampleConstructionFailure(f"{g} not in Gamma({N})")
        h = conjugate_by_u_inverse(g, N)
        if h is None or not in_gamma0(h, M):
            return False
    return True
