"""Explicit curve models: point enumeration over F_p and rational point search.

Models are fixed families of homogeneous equations (a plane curve in P^2,
or the Wiman twists W_d as three quadrics in P^4).  Enumeration over a
prime field scans canonical representatives of projective space; plane
models are evaluated vectorized with numpy, the P^4 twists by scanning
``(x1, x2, x3)`` and extracting square roots for ``x4`` and ``x0``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from math import gcd, isqrt
from typing import Iterable, Sequence

import numpy as np
import sympy

from .arith import integer_root, is_prime, is_square, prime_divisors
from .errors import BadReductionPrime, DegenerateImage, PointNotOnCurve, PrimeTooLarge

MAX_PRIME = 499

Poly = dict[tuple[int, ...], int]


class Family(str, Enum):
    KLEIN = "KleinQuartic"
    WIMAN = "WimanTwist"
    X064 = "X064Quartic"
    X9 = "X9Sextic"
    TEQ = "EllipticTEq"
    E32 = "EllipticConductor32"
    E64 = "EllipticConductor64"
    E49 = "X049Elliptic"


# variables, homogeneous equations (``d`` is the twist parameter), genus, conductor, bad primes
_SPECS = {
    Family.KLEIN: ("x y z", ["x**3*y + y**3*z + z**3*x"], 3, None, {7}),
    Family.WIMAN: (
        "x0 x1 x2 x3 x4",
        ["x0**2 - x3*x4", "d*x3**2 - 4*x1**2 - x2**2", "x4**2 - d*x1*x2"],
        5,
        None,
        {2},
    ),
    Family.X064: ("x0 x1 x2", ["x0**4 - x1*x2*(4*x1**2 + x2**2)"], 3, 64, {2}),
    # degree-11 homogenization of y^6 - x(x^3+1)y^3 - x^5(x^3+1)^2; singular, no genus claimed
    Family.X9: ("x y z", ["y**6*z**5 - x*(x**3 + z**3)*y**3*z**4 - x**5*(x**3 + z**3)**2"], None, None, {3}),
    Family.TEQ: ("x t z", ["t**2*z - t*z**2 - x**3"], 1, 27, {3}),
    Family.E32: ("x y z", ["y**2*z - x**3 + x*z**2"], 1, 32, {2}),
    Family.E64: ("x y z", ["y**2*z - x**3 - x*z**2"], 1, 64, {2}),
    Family.E49: ("x y z", ["y**2*z + 3*x*y*z + y*z**2 - x**3 + 2*x*z**2 + 3*z**3"], 1, 49, {7}),
}

MODEL_ALIASES = {
    "klein": Family.KLEIN,
    "wiman": Family.WIMAN,
    "x064": Family.X064,
    "x9": Family.X9,
    "teq": Family.TEQ,
    "e32": Family.E32,
    "e64": Family.E64,
    "x049": Family.E49,
}


@dataclass(frozen=True)
class CurveModel:
    family: Family
    d: int = 1

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.family is not Family.WIMAN and self.d != 1:
            raise ValueError("only Wiman twists take a twist parameter")
        if self.d == 0:
            raise ValueError("twist parameter must be nonzero")

    @classmethod
    def named(cls, name: str, twist: int = 1) -> CurveModel:
        key = name.lower()
        if key in MODEL_ALIASES:
            return cls(MODEL_ALIASES[key], twist)
        return cls(Family(name), twist)

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(_SPECS[self.family][0].split())

    @property
    def ambient_dimension(self) -> int:
        return len(self.variables) - 1

    @property
    def genus(self) -> int | None:
        return _SPECS[self.family][2]

    @property
    def conductor(self) -> int | None:
        return _SPECS[self.family][3]

    def bad_primes(self) -> frozenset[int]:
        bad = set(_SPECS[self.family][4])
        if self.family is Family.WIMAN:
            bad |= set(prime_divisors(abs(self.d)))
        return frozenset(bad)

    @property
    def equations(self) -> tuple[Poly, ...]:
        return _polys(self)[0]

    @property
    def partials(self) -> tuple[tuple[Poly, ...], ...]:
        return _polys(self)[1]

    def __str__(self):
        return f"WimanTwist({self.d})" if self.family is Family.WIMAN else self.family.value


KLEIN = CurveModel(Family.KLEIN)
WIMAN = CurveModel(Family.WIMAN, 1)
X064 = CurveModel(Family.X064)
X9 = CurveModel(Family.X9)


def wiman_twist(d: int) -> CurveModel:
    return CurveModel(Family.WIMAN, d)


@lru_cache(maxsize=None)
def _polys(model: CurveModel) -> tuple[tuple[Poly, ...], tuple[tuple[Poly, ...], ...]]:
    syms = sympy.symbols(model.variables)
    local = {str(s): s for s in syms}
    local["d"] = sympy.Integer(model.d)
    eqs, partials = [], []
    for text in _SPECS[model.family][1]:
        P = sympy.Poly(sympy.sympify(text, locals=local), *syms)
        eqs.append(_as_dict(P))
        partials.append(tuple(_as_dict(P.diff(s)) for s in syms))
    return tuple(eqs), tuple(partials)


def _as_dict(P: sympy.Poly) -> Poly:
    return {tuple(k): int(v) for k, v in P.as_dict().items()}


def evaluate(poly: Poly, coords: Sequence[int], p: int | None = None) -> int:
    total = 0
    for exps, c in poly.items():
        term = c
        for x, e in zip(coords, exps):
            term *= x**e
        total += term
    return total % p if p else total


# ------------------------------------------------------------------- points


@dataclass(frozen=True, order=True)
class ProjectivePoint:
    """Canonical homogeneous coordinates over F_p (``p`` set) or over Q (``p`` None).

    Over F_p the first nonzero coordinate is 1; over Q the coordinates are
    coprime integers with the first nonzero one positive.
    """

    coords: tuple[int, ...]
    p: int | None = None

    @classmethod
    def over_fp(cls, coords: Iterable[int], p: int) -> ProjectivePoint:
        c = [x % p for x in coords]
        lead = next((x for x in c if x), None)
        if lead is None:
            raise ValueError("the zero vector is not a projective point")
        inv = pow(lead, -1, p)
        return cls(tuple(x * inv % p for x in c), p)

    @classmethod
    def over_q(cls, coords: Iterable[int]) -> ProjectivePoint:
        c = [int(x) for x in coords]
        g = 0
        for x in c:
            g = gcd(g, x)
        if g == 0:
            raise ValueError("the zero vector is not a projective point")
        lead = next(x for x in c if x)
        s = g if lead > 0 else -g
        return cls(tuple(x // s for x in c), None)

    def rebuild(self, coords: Iterable[int]) -> ProjectivePoint:
        return self.over_fp(coords, self.p) if self.p else self.over_q(coords)

    @property
    def height(self) -> int:
        return max(abs(x) for x in self.coords)

    def __str__(self):
        return ":".join(str(x) for x in self.coords)


def format_points(points: Iterable[ProjectivePoint]) -> str:
    """One point per line, colon-separated canonical coordinates, sorted."""
    return "".join(f"{pt}\n" for pt in sorted(points))


def parse_points(text: str, p: int | None = None) -> list[ProjectivePoint]:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        coords = [int(x) for x in line.split(":")]
        out.append(ProjectivePoint.over_fp(coords, p) if p else ProjectivePoint.over_q(coords))
    return out


def is_on_curve(model: CurveModel, pt: ProjectivePoint) -> bool:
    if len(pt.coords) != len(model.variables):
        return False
    return all(evaluate(eq, pt.coords, pt.p) == 0 for eq in model.equations)


# -------------------------------------------------------------- enumeration


def _check_prime(model: CurveModel, p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p > MAX_PRIME:
        raise PrimeTooLarge(f"p={p} exceeds {MAX_PRIME}")
    if p in model.bad_primes():
        raise BadReductionPrime(f"{model} has bad reduction at {p}")


@lru_cache(maxsize=64)
def _p2_representatives(p: int) -> np.ndarray:
    b, c = np.meshgrid(np.arange(p, dtype=np.int64), np.arange(p, dtype=np.int64), indexing="ij")
    b, c = b.ravel(), c.ravel()
    chart1 = np.stack([np.ones_like(b), b, c], axis=1)
    r = np.arange(p, dtype=np.int64)
    chart2 = np.stack([np.zeros_like(r), np.ones_like(r), r], axis=1)
    chart3 = np.array([[0, 0, 1]], dtype=np.int64)
    return np.concatenate([chart1, chart2, chart3])


def _evaluate_columns(poly: Poly, cols: Sequence[np.ndarray], p: int) -> np.ndarray:
    # Values stay below p^2 <= 499^2 between reductions, far from int64 overflow.
    powers: dict[tuple[int, int], np.ndarray] = {}

    def power(i: int, e: int) -> np.ndarray:
        if (i, e) not in powers:
            acc = np.ones_like(cols[i])
            for _ in range(e):
                acc = acc * cols[i] % p
            powers[(i, e)] = acc
        return powers[(i, e)]

    total = np.zeros_like(cols[0])
    for exps, coeff in poly.items():
        term = np.full_like(cols[0], coeff % p)
        for i, e in enumerate(exps):
            if e:
                term = term * power(i, e) % p
        total = (total + term) % p
    return total


@lru_cache(maxsize=64)
def _square_roots(p: int) -> dict[int, tuple[int, ...]]:
    roots: dict[int, list[int]] = {v: [] for v in range(p)}
    for r in range(p):
        roots[r * r % p].append(r)
    return {v: tuple(rs) for v, rs in roots.items()}


def _wiman_points(d: int, p: int) -> set[ProjectivePoint]:
    roots = _square_roots(p)
    d %= p
    out = set()
    for x1, x2, x3 in _p2_representatives(p).tolist():
        if (d * x3 * x3 - 4 * x1 * x1 - x2 * x2) % p:
            continue
        for x4 in roots[d * x1 * x2 % p]:
            for x0 in roots[x3 * x4 % p]:
                out.add(ProjectivePoint.over_fp((x0, x1, x2, x3, x4), p))
    return out


@lru_cache(maxsize=256)
def enumerate_points(model: CurveModel, p: int) -> frozenset[ProjectivePoint]:
    """All F_p-points of the model, canonicalized."""
    _check_prime(model, p)
    if model.family is Family.WIMAN:
        return frozenset(_wiman_points(model.d, p))
    reps = _p2_representatives(p)
    cols = [reps[:, i] for i in range(3)]
    mask = np.ones(len(reps), dtype=bool)
    for eq in model.equations:
        mask &= _evaluate_columns(eq, cols, p) == 0
    return frozenset(ProjectivePoint(tuple(row), p) for row in reps[mask].tolist())


def count_points(model: CurveModel, p: int) -> int:
    return len(enumerate_points(model, p))


def weil_window(p: int, genus: int) -> tuple[int, int]:
    """``[p + 1 - floor(2 g sqrt p), p + 1 + floor(2 g sqrt p)]``; may start below 0."""
    if genus < 0:
        raise ValueError("genus must be >= 0")
    w = isqrt(4 * genus * genus * p)
    return p + 1 - w, p + 1 + w


def in_weil_window(count: int, p: int, genus: int) -> bool:
    lo, hi = weil_window(p, genus)
    return max(lo, 0) <= count <= hi


def _jacobian_rank(model: CurveModel, coords: Sequence[int], p: int) -> int:
    rows = [[evaluate(dpoly, coords, p) for dpoly in grads] for grads in model.partials]
    return _rank_mod_p(rows, p)


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    rows = [r[:] for r in rows]
    rank, ncols = 0, len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] % p), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] % p:
                f = rows[i][col]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def singular_points(model: CurveModel, p: int) -> list[ProjectivePoint]:
    need = len(model.equations)
    return sorted(pt for pt in enumerate_points(model, p) if _jacobian_rank(model, pt.coords, p) < need)


def smoothness_probe(model: CurveModel, primes: Iterable[int]) -> bool:
    """True iff the Jacobian has full rank at every F_p-point for each prime."""
    return all(not singular_points(model, p) for p in primes)


# ------------------------------------------------------ involution / quotient


def _require_on_curve(model: CurveModel, pt: ProjectivePoint) -> None:
    if not is_on_curve(model, pt):
        raise PointNotOnCurve(f"{pt} is not on {model}")


def iota1(pt: ProjectivePoint, model: CurveModel = WIMAN) -> ProjectivePoint:
    """``(x0, x1, x2, x3, x4) -> (x0, x1, x2, -x3, -x4)`` on a Wiman twist."""
    if model.family is not Family.WIMAN:
        raise ValueError("iota1 acts on Wiman twists")
    _require_on_curve(model, pt)
    x0, x1, x2, x3, x4 = pt.coords
    return pt.rebuild((x0, x1, x2, -x3, -x4))


def quotient_to_X064(pt: ProjectivePoint, model: CurveModel = WIMAN) -> ProjectivePoint:
    """``f_d(x0, ..., x4) = (x0, x1, x2)`` onto ``x0^4 = x1 x2 (4 x1^2 + x2^2)``."""
    if model.family is not Family.WIMAN:
        raise ValueError("the quotient map is defined on Wiman twists")
    _require_on_curve(model, pt)
    head = pt.coords[:3]
    if not any(x % pt.p if pt.p else x for x in head):
        raise DegenerateImage(f"{pt} maps to the zero vector")
    return pt.rebuild(head)


# ---------------------------------------------------------- rational points


def _x064_rational_points(H: int) -> set[ProjectivePoint]:
    r = np.arange(-H, H + 1, dtype=np.int64)
    x1, x2 = (a.ravel() for a in np.meshgrid(r, r, indexing="ij"))
    rhs = x1 * x2 * (4 * x1 * x1 + x2 * x2)
    root = np.rint(np.sqrt(np.sqrt(np.maximum(rhs, 0).astype(np.float64)))).astype(np.int64)
    hit = (rhs >= 0) & (root**4 == rhs) & (root <= H) & ((x1 != 0) | (x2 != 0))
    out = set()
    for a, b in zip(x1[hit].tolist(), x2[hit].tolist()):
        x0 = integer_root(a * b * (4 * a * a + b * b), 4)
        for s in {x0, -x0}:
            coords = (s, a, b)
            if gcd(gcd(s, a), b) == 1:
                out.add(ProjectivePoint.over_q(coords))
    return out


def _wiman_rational_points(d: int, H: int) -> set[ProjectivePoint]:
    model = wiman_twist(d)
    r = np.arange(-H, H + 1, dtype=np.int64)
    x1, x2 = (a.ravel() for a in np.meshgrid(r, r, indexing="ij"))
    s = 4 * x1 * x1 + x2 * x2
    t = d * x1 * x2
    hit = (s % abs(d) == 0) & (t >= 0) & ((x1 != 0) | (x2 != 0))
    q = np.where(hit, s // d, -1)
    hit &= q >= 0
    sq = np.rint(np.sqrt(np.maximum(q, 0).astype(np.float64))).astype(np.int64)
    st = np.rint(np.sqrt(np.maximum(t, 0).astype(np.float64))).astype(np.int64)
    hit &= (sq * sq == q) & (st * st == t) & (sq <= H) & (st <= H)
    out = set()
    for a, b in zip(x1[hit].tolist(), x2[hit].tolist()):
        x3a = isqrt((4 * a * a + b * b) // d)
        x4a = isqrt(d * a * b)
        for x3 in {x3a, -x3a}:
            for x4 in {x4a, -x4a}:
                if not is_square(x3 * x4):
                    continue
                x0a = isqrt(x3 * x4)
                if x0a > H:
                    continue
                for x0 in {x0a, -x0a}:
                    coords = (x0, a, b, x3, x4)
                    g = 0
                    for c in coords:
                        g = gcd(g, c)
                    if g != 1:
                        continue
                    pt = ProjectivePoint.over_q(coords)
                    assert is_on_curve(model, pt)
                    out.add(pt)
    return out


def rational_point_search(model: CurveModel, H: int) -> frozenset[ProjectivePoint]:
    """Primitive integer solutions with every |coordinate| <= H."""
    if H < 1:
        raise ValueError("height bound must be >= 1")
    if model.family is Family.X064:
        return frozenset(_x064_rational_points(H))
    if model.family is Family.WIMAN:
        return frozenset(_wiman_rational_points(model.d, H))
    raise ValueError(f"no rational point search for {model}")


@dataclass(frozen=True)
class TwistReport:
    height: int
    d_values: tuple[int, ...]
    quartic_points: tuple[ProjectivePoint, ...]
    points: dict[int, tuple[ProjectivePoint, ...]] = field(default_factory=dict)
    images: dict[int, tuple[ProjectivePoint, ...]] = field(default_factory=dict)

    @property
    def nonempty(self) -> tuple[int, ...]:
        return tuple(d for d in self.d_values if self.points[d])

    @property
    def disjoint(self) -> bool:
        seen: set[ProjectivePoint] = set()
        for d in self.d_values:
            imgs = set(self.images[d])
            if imgs & seen:
                return False
            seen |= imgs
        return True

    @property
    def images_on_quartic(self) -> bool:
        return all(set(self.images[d]) <= set(self.quartic_points) for d in self.d_values)

    @property
    def covers_two_each(self) -> bool:
        return all(
            len(self.points.get(d, ())) == 4 and len(self.images.get(d, ())) == 2 for d in (1, 2) if d in self.points
        )

    @property
    def union_is_quartic(self) -> bool:
        union = set().union(*(self.images.get(d, ()) for d in (1, 2)))
        return union == set(self.quartic_points)

    @property
    def ok(self) -> bool:
        return self.disjoint and self.images_on_quartic and self.covers_two_each and self.union_is_quartic


def twist_partition_experiment(d_values: Iterable[int], H: int) -> TwistReport:
    ds = tuple(sorted(set(d_values), key=lambda d: (abs(d), d < 0)))
    points, images = {}, {}
    for d in ds:
        model = wiman_twist(d)
        pts = tuple(sorted(rational_point_search(model, H)))
        points[d] = pts
        images[d] = tuple(sorted({quotient_to_X064(pt, model) for pt in pts}))
    quartic = tuple(sorted(rational_point_search(X064, H)))
    return TwistReport(H, ds, quartic, points, images)


# ---------------------------------------------------------------- X(9) map


def sextic_affine(x: int, y: int, p: int) -> int:
    u = x * (x**3 + 1)
    return (y**6 - u * y**3 - x**5 * (x**3 + 1) ** 2) % p


def e_prime_affine(x: int, z: int, p: int) -> int:
    u = x * (x**3 + 1)
    return (z * z - u * z - x**5 * (x**3 + 1) ** 2) % p


def sextic_affine_points(p: int) -> list[tuple[int, int]]:
    _check_prime(X9, p)
    xs, ys = (a.ravel() for a in np.meshgrid(np.arange(p, dtype=np.int64), np.arange(p, dtype=np.int64), indexing="ij"))
    poly = {(0, 6): 1, (4, 3): -1, (1, 3): -1, (11, 0): -1, (8, 0): -2, (5, 0): -1}
    vals = _evaluate_columns(poly, [xs, ys], p)
    return sorted(zip(xs[vals == 0].tolist(), ys[vals == 0].tolist()))


def x9_cover_map(pt: tuple[int, int], p: int) -> tuple[int, int]:
    """``(x, y) -> (x, y^3)`` from the sextic model onto E'."""
    x, y = pt
    if sextic_affine(x, y, p):
        raise PointNotOnCurve(f"{pt} is not on the sextic mod {p}")
    image = (x % p, pow(y, 3, p))
    assert e_prime_affine(*image, p) == 0
    return image


def t_transform(pt: tuple[int, int], p: int) -> tuple[int, int] | None:
    """``(x, z) -> (x, z / (x (x^3 + 1)))`` onto ``t^2 - t = x^3``; None on the degenerate locus."""
    x, z = pt
    u = x * (x**3 + 1) % p
    if u == 0:
        return None
    return x % p, z * pow(u, -1, p) % p


def x9_fiber_sizes(p: int) -> Counter:
    """Number of sextic affine points over each point of E'."""
    return Counter(x9_cover_map(pt, p) for pt in sextic_affine_points(p))
