"""Hyperelliptic / bielliptic classification of X(N) for N >= 7.

The exclusion criteria for Galois covers are evaluated exactly; the facts
imported about X_0(N^2) (Ogg-Bars) and the cited genera of a few small
modular curves are kept as anchored data, not recomputed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import GenusTooSmall, HypothesisNotMet, LevelTooSmall
from .invariants import cover_degrees, genus_XN


class InvolutionKind(str, Enum):
    HYPERELLIPTIC = "Hyperelliptic"
    BIELLIPTIC = "Bielliptic"
    OTHER = "Other"


@dataclass(frozen=True)
class CoverDatum:
    degree: int
    g_source: int
    g_target: int
    galois: bool = True

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"degree must be >= 1, got {self.degree}")
        if self.g_source < self.g_target:
            raise ValueError("a nonconstant cover cannot raise the genus")


@dataclass(frozen=True)
class InvolutionProfile:
    fixed_points: int
    kind: InvolutionKind


@dataclass(frozen=True)
class Evidence:
    reason: str
    anchor: str


@dataclass(frozen=True)
class Classification:
    N: int
    hyperelliptic: bool
    bielliptic: bool
    evidence: tuple[Evidence, ...] = field(default=())


# Genera of auxiliary modular curves as cited, keyed by curve name.
CITED_GENERA = {
    "X0(27)": (1, "X_0(27) is an elliptic curve, 3-isogenous to t^2 - t = x^3"),
    "X0(32)": (1, "X_0(32) is elliptic (y^2 = x^3 - x, conductor 32)"),
    "X0(49)": (1, "X_0(49) is elliptic (y^2 + 3xy + y = x^3 - 2x - 3)"),
    "X0(64)": (3, "X_0(64) is a genus 3 curve, x0^4 = x1 x2 (4 x1^2 + x2^2)"),
    "X0(81)": (4, "X_0(81) is a curve of genus 4"),
}

OGG_BARS = "Ogg-Bars: X_0(N^2) of genus >= 2 is never hyperelliptic, bielliptic exactly for N = 8, 9"
HYP_DESCENT = "hyperelliptic descent: a nonconstant map C -> C' with g(C') >= 2 and C hyperelliptic forces C' hyperelliptic"
HARRIS_SILVERMAN = "Harris-Silverman: C bielliptic and C -> C' nonconstant with g(C') >= 2 forces C' bielliptic or hyperelliptic"
CENTRAL_INVOLUTIONS = "hyperelliptic and bielliptic (g >= 6) involutions are unique and central in Aut"
KLEIN = "X(7) is the Klein quartic x^3 y + y^3 z + z^3 x = 0: bielliptic, not hyperelliptic"
WIMAN = "X(8) is the Wiman curve x0^2 = x3 x4, x3^2 = 4x1^2 + x2^2, x4^2 = x1 x2: bielliptic, not hyperelliptic"
X9_MAP = "X(9) -> E: t^2 - t = x^3 via z = y^3 on y^6 - x(x^3+1)y^3 = x^5(x^3+1)^2, Galois of degree 3"
CRITERIA = "Galois cover criteria: for degree d with g_Y >= 2 or d odd, 2g_X+2 > d(2g_Y+2) excludes hyperelliptic; 2g_X-2 > d(2g_Y+2) with g_X >= 6 excludes bielliptic"


def fixed_point_count(kind: InvolutionKind | str, genus: int) -> int:
    kind = InvolutionKind(kind)
    if genus < 2:
        raise GenusTooSmall(f"genus must be >= 2, got {genus}")
    if kind is InvolutionKind.HYPERELLIPTIC:
        return 2 * genus + 2
    if kind is InvolutionKind.BIELLIPTIC:
        return 2 * genus - 2
    raise ValueError("no fixed-point count for a generic involution")


def _check_hypothesis(cover: CoverDatum, least_genus: int) -> None:
    if cover.g_source < least_genus:
        raise GenusTooSmall(f"g_X must be >= {least_genus}, got {cover.g_source}")
    if not (cover.g_target >= 2 or cover.degree % 2 == 1):
        raise HypothesisNotMet(f"need g_Y >= 2 or odd degree, got g_Y={cover.g_target}, d={cover.degree}")


def excludes_hyperelliptic(cover: CoverDatum) -> bool:
    _check_hypothesis(cover, 2)
    return 2 * cover.g_source + 2 > cover.degree * (2 * cover.g_target + 2)


def excludes_bielliptic_fp(cover: CoverDatum, n_involution: int) -> bool:
    """Criterion with the fixed-point count of the involutions of the target."""
    _check_hypothesis(cover, 6)
    return 2 * cover.g_source - 2 > cover.degree * n_involution


def excludes_bielliptic(cover: CoverDatum) -> bool:
    _check_hypothesis(cover, 6)
    return 2 * cover.g_source - 2 > cover.degree * (2 * cover.g_target + 2)


def ogg_bars_X0_Nsquared(N: int) -> dict[str, bool]:
    if N < 2:
        raise ValueError(f"N must be >= 2, got {N}")
    return {"hyperelliptic": False, "bielliptic": N in (8, 9), "genus_ge_2": N >= 8}


def classify_XN(N: int) -> Classification:
    if N < 7:
        raise LevelTooSmall(f"classification needs N >= 7, got {N}")
    g = genus_XN(N)
    ev = [Evidence(f"g(X({N})) = {g} >= 2", "genus formula g = 1 + delta (N-6)/(12N)")]

    if N == 7:
        ev.append(Evidence("X(7) is isomorphic over Q to the Klein quartic", KLEIN))
        ev.append(Evidence(f"|Aut X(7)| = 168 = 84*({g}-1) attains the Hurwitz bound", "Hurwitz bound"))
        return Classification(N, False, True, tuple(ev))

    deg_pi0 = cover_degrees(N).deg_pi0
    ob = ogg_bars_X0_Nsquared(N)
    m2 = N * N
    ev.append(
        Evidence(
            f"pi0: X({N}) -> X0({m2}) of degree phi({N})/2 = {deg_pi0}; X0({m2}) has genus >= 2 and is not hyperelliptic",
            OGG_BARS,
        )
    )
    ev.append(Evidence(f"X({N}) hyperelliptic would force X0({m2}) hyperelliptic; excluded", HYP_DESCENT))

    if N == 8:
        g64, src = CITED_GENERA["X0(64)"]
        ev.append(Evidence(f"X0(64) has genus {g64}", src))
        ev.append(Evidence("X(8) is a twist of the Wiman curve over X0(64); bielliptic", WIMAN))
        return Classification(N, False, True, tuple(ev))

    if N == 9:
        g81, src = CITED_GENERA["X0(81)"]
        ev.append(Evidence(f"X0(81) has genus {g81} and is bielliptic, so Harris-Silverman does not decide", src))
        cover = CoverDatum(degree=3, g_source=g, g_target=1, galois=True)
        excluded = excludes_bielliptic(cover)
        lhs = 2 * g - 2
        rhs = cover.degree * (2 * cover.g_target + 2)
        ev.append(Evidence("rho: X(9) -> E, z = y^3, degree 3 (odd), Galois, g(E) = 1", X9_MAP))
        ev.append(
            Evidence(
                f"2*{g}-2 = {lhs} > {rhs} = 3*(2*1+2): {lhs} > {rhs} is {excluded}; X(9) is not bielliptic",
                CRITERIA,
            )
        )
        ev.append(Evidence("the bielliptic involution would be central, hence descend along rho", CENTRAL_INVOLUTIONS))
        return Classification(N, False, not excluded, tuple(ev))

    assert not ob["bielliptic"] and not ob["hyperelliptic"] and ob["genus_ge_2"]
    ev.append(
        Evidence(
            f"X0({m2}) is neither bielliptic nor hyperelliptic (N = {N} > 9), so X({N}) is not bielliptic",
            HARRIS_SILVERMAN,
        )
    )
    return Classification(N, False, False, tuple(ev))
