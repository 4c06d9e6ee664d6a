"""Closed-form numerology of X(N): degree, genus, Hurwitz and index bounds, cusps."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .arith import dedekind_psi, euler_phi
from .errors import GenusTooSmall, LevelTooSmall
from .psl2 import SubgroupKind, congruence_index, psl2_order

# (lower level, upper level exclusive, bound on [Aut X(N) : PSL2(Z/NZ)])
INDEX_BOUND_TABLE = ((7, 11, 2), (11, 14, 3), (14, 21, 4), (21, None, 6))


@dataclass(frozen=True)
class CurveInvariants:
    N: int
    delta: int
    genus: int
    aut_order: int | None
    cusp_count: int | None
    index_bound_m: int | None


@dataclass(frozen=True)
class CoverDegreeLedger:
    N: int
    deg_pi1: int
    deg_pi0: int
    deg_f1: int
    deg_forgetful_X1N2_X0N2: int

    def consistent(self) -> bool:
        return self.deg_pi1 * self.deg_pi0 == self.deg_forgetful_X1N2_X0N2


def genus_fraction(N: int) -> Fraction:
    """``1 + delta_N (N - 6) / (12 N)`` as an exact rational."""
    return 1 + Fraction(psl2_order(N) * (N - 6), 12 * N)


def genus_XN(N: int) -> int:
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if N == 1:
        return 0
    g = genus_fraction(N)
    assert g.denominator == 1, (N, g)
    return int(g)


def hurwitz_bound(genus: int) -> int:
    if genus < 2:
        raise GenusTooSmall(f"Hurwitz bound needs genus >= 2, got {genus}")
    return 84 * (genus - 1)


def _require_level(N: int, least: int = 7) -> None:
    if N < least:
        raise LevelTooSmall(f"N must be >= {least}, got {N}")


def index_bound(N: int) -> int:
    """Tabulated bound on the index of PSL2(Z/NZ) in Aut X(N)."""
    _require_level(N)
    for lo, hi, m in INDEX_BOUND_TABLE:
        if lo <= N and (hi is None or N < hi):
            return m
    raise AssertionError("unreachable")


def sharp_index_bound(N: int) -> int:
    """``floor(84 (g_N - 1) / delta_N) = floor(7 - 42/N)``."""
    _require_level(N)
    return hurwitz_bound(genus_XN(N)) // psl2_order(N)


def aut_order_YN(N: int) -> int:
    _require_level(N)
    return N * euler_phi(N) * dedekind_psi(N) // 2


def cusp_count(N: int) -> int:
    _require_level(N, 3)
    delta = psl2_order(N)
    assert delta % N == 0
    return delta // N


def cover_degrees(N: int) -> CoverDegreeLedger:
    _require_level(N, 3)
    ledger = CoverDegreeLedger(
        N=N,
        deg_pi1=N,
        deg_pi0=euler_phi(N) // 2,
        deg_f1=congruence_index(SubgroupKind.GAMMA1, N),
        deg_forgetful_X1N2_X0N2=euler_phi(N * N) // 2,
    )
    assert ledger.consistent()
    return ledger


def rh_genus(d: int, g_base: int, ramification: Iterable[tuple[int, int]]) -> Fraction:
    """Genus forced by Riemann-Hurwitz for a degree-``d`` cover of a genus-``g_base`` curve.

    ``ramification`` lists ``(index, number of points upstairs with that
    index)``.  The result is returned as a Fraction; a denominator other than
    1 means the data are inconsistent, which callers probe on purpose.
    """
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    total = 0
    for nu, count in ramification:
        if nu < 1 or count < 0:
            raise ValueError(f"bad ramification entry {(nu, count)}")
        total += count * (nu - 1)
    return 1 + d * (g_base - 1) + Fraction(total, 2)


def modular_ramification(N: int) -> list[tuple[int, int]]:
    """Ramification of X(N) -> X(1) above j(i), j(omega), j(infinity)."""
    delta = psl2_order(N)
    out = []
    for nu in (2, 3, N):
        assert delta % nu == 0, (N, nu)
        out.append((nu, delta // nu))
    return out


def curve_invariants(N: int) -> CurveInvariants:
    return CurveInvariants(
        N=N,
        delta=psl2_order(N),
        genus=genus_XN(N),
        aut_order=aut_order_YN(N) if N >= 7 else None,
        cusp_count=cusp_count(N) if N >= 3 else None,
        index_bound_m=index_bound(N) if N >= 7 else None,
    )
