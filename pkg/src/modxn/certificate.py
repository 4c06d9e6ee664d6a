"""Machine-checkable certificates that Aut X(N) = PSL2(Z/NZ) for N >= 7.

``certify`` picks one proof branch for N and records every inequality and
group fact it relies on as a :class:`CertStep`.  ``verify`` re-evaluates
each step from its recorded inputs only, regenerates the claim text, and
checks that the step list is the one the branch requires.  All numbers are
ints or Fractions; nothing is ever a float.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd, prod
from typing import Callable

from .arith import factorize, is_prime, prime_power
from .errors import LevelTooSmall
from .invariants import INDEX_BOUND_TABLE
from .psl2 import MAX_SIMPLICITY_LEVEL, is_simple, min_symmetric_degree, psl2_order, sl2_order

Number = int | Fraction


class Branch(str, Enum):
    SMALL_N = "SmallN"
    PRIME = "Prime"
    PRIME_POWER = "PrimePower"
    COPRIME_TO_30 = "CoprimeTo30"
    RAMIFICATION = "Ramification"


class StepKind(str, Enum):
    INDEX_BOUND = "IndexBound"
    NORMALITY_FROM_INDEX = "NormalityFromIndex"
    SIMPLICITY = "Simplicity"
    SYMMETRIC_OBSTRUCTION = "SymmetricObstruction"
    KERNEL_CONTAINS_H = "KernelContainsH"
    CRT_SPLIT = "CRTSplit"
    RAMIFIED_POINTS_COUNT = "RamifiedPointsCount"
    CASE1_BOUND = "Case1Bound"
    CASE2_EXCLUSION = "Case2Exclusion"
    IMPROVED_HURWITZ = "ImprovedHurwitz"


class Verdict(str, Enum):
    CERTIFIED = "Certified"
    NOT_CERTIFIED = "NotCertified"


# Facts imported without computation; the trust boundary of every certificate.
AXIOMS = (
    "Hurwitz bound: |Aut C| <= 84(g-1) for a curve of genus g >= 2",
    "X(N) -> X(1) is Galois with group PSL2(Z/NZ), ramified exactly over j(i), j(omega), j(infinity) with indices 2, 3, N",
    "Normality lemma: if PSL2(Z/NZ) is normal in Aut X(N) then they are equal",
    "Coset action: PSL2(Z/NZ) is normal in Aut X(N) iff its action on the m cosets is trivial",
    "Hurwitz bound improves to 12(g-1) when more than three branch points occur below X(1)",
    "A subgroup of index at most 2 is normal",
)

BRANCH_PRIORITY = (Branch.PRIME, Branch.SMALL_N, Branch.PRIME_POWER, Branch.COPRIME_TO_30, Branch.RAMIFICATION)

CASE2_NOTE = (
    "merged-point multipliers psi in {1,2}, phi >= 1 and the extra branch index nu >= 2 "
    "are taken as given hypotheses, not derived independently"
)


@dataclass(frozen=True)
class CertStep:
    kind: StepKind
    inputs: dict[str, Number]
    claim: str
    holds: bool
    note: str = ""


@dataclass(frozen=True)
class AutCertificate:
    N: int
    genus: int
    delta: int
    m_bound: int
    branch: Branch
    steps: tuple[CertStep, ...]
    verdict: Verdict
    alternatives: tuple[Branch, ...] = ()
    axioms: tuple[str, ...] = AXIOMS
    notes: tuple[str, ...] = field(default=())


def _table_bound(N: int) -> int | None:
    for lo, hi, m in INDEX_BOUND_TABLE:
        if lo <= N and (hi is None or N < hi):
            return m
    return None


def _frac(x: Number) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------- evaluators
# Each evaluator maps recorded inputs to (claim text, holds).


def _eval_index_bound(i):
    N, delta, genus, hurwitz, m_sharp, m = (i[k] for k in ("N", "delta", "genus", "hurwitz", "m_sharp", "m"))
    holds = (
        delta == psl2_order(N)
        and 12 * N * (genus - 1) == delta * (N - 6)
        and hurwitz == 84 * (genus - 1)
        and m_sharp == hurwitz // delta
        and m == _table_bound(N)
        and m_sharp <= m
    )
    claim = (
        f"delta={delta}=|PSL2(Z/{N}Z)|; 12*{N}*({genus}-1) = {delta}*({N}-6); "
        f"m*{delta} <= 84*({genus}-1) = {hurwitz} gives m <= {m_sharp} <= {m}"
    )
    return claim, holds


def _eval_normality(i):
    m = i["m"]
    return f"[Aut X(N) : PSL2] <= {m} <= 2, so PSL2 is normal", m <= 2


def _eval_simplicity(i):
    p, enumerated = i["p"], i["enumerated"]
    if enumerated == 1:
        holds = is_prime(p) and p <= MAX_SIMPLICITY_LEVEL and is_simple(p)
        how = "every nontrivial conjugacy class normally generates the group"
    else:
        holds = enumerated == 0 and is_prime(p) and p > MAX_SIMPLICITY_LEVEL and p >= 5
        how = "classical simplicity of PSL2(p) for primes p >= 5"
    return f"PSL2(Z/{p}Z) is simple ({how})", holds


def _eval_symmetric(i):
    p, m, dmin = i["p"], i["m"], i["min_degree"]
    holds = is_prime(p) and dmin == min_symmetric_degree(p) and dmin > m
    return f"S_{m} has no element of order {p}: least such degree is {dmin} > {m}", holds


def _eval_kernel(i):
    p, e, h, m = i["p"], i["e"], i["h_order"], i["m"]
    holds = (
        is_prime(p)
        and p >= 7
        and e >= 2
        and h == p ** (3 * (e - 1))
        and psl2_order(p**e) == psl2_order(p) * h
        and min_symmetric_degree(p) > m
    )
    claim = (
        f"H = ker(PSL2(Z/{p}^{e}Z) -> PSL2(Z/{p}Z)) has order {p}^{3 * (e - 1)} = {h}; "
        f"its nontrivial elements have {p}-power order and S_{m} has none, so H <= ker(beta)"
    )
    return claim, holds


def _eval_crt(i):
    N, total, k = i["N"], i["sl2_order"], i["k"]
    qs = [i.get(f"q{j}") for j in range(1, k + 1)]
    ss = [i.get(f"s{j}") for j in range(1, k + 1)]
    if None in qs or None in ss:
        return "malformed CRT split", False
    ok_factors = all(prime_power(q) is not None for q in qs) and all(
        gcd(a, b) == 1 for x, a in enumerate(qs) for b in qs[x + 1 :]
    )
    holds = (
        k >= 2
        and gcd(N, 30) == 1
        and ok_factors
        and prod(qs) == N
        and all(s == sl2_order(q) for q, s in zip(qs, ss))
        and total == sl2_order(N) == prod(ss)
        and total == 2 * psl2_order(N)
    )
    parts = " * ".join(f"|SL2(Z/{q}Z)|={s}" for q, s in zip(qs, ss))
    return f"gcd({N},30)=1 and |SL2(Z/{N}Z)| = {total} = {parts}; beta is trivial iff trivial on each factor", holds


def _eval_improved(i):
    N, delta, genus, imp = i["N"], i["delta"], i["genus"], i["improved"]
    holds = imp == 12 * (genus - 1) and imp < 2 * delta
    return f"r > 3 would give |Aut| <= 12*({genus}-1) = {imp} < 2*{delta}, forcing m <= 1 (level {N})", holds


def _eval_ramified(i):
    N, delta, genus, r = i["N"], i["delta"], i["genus"], i["r"]
    nus = (i["nu1"], i["nu2"], i["nu3"])
    bracket = sum(1 - Fraction(1, nu) for nu in nus) - 2
    holds = r == 3 and nus == (2, 3, N) and 2 * (genus - 1) == delta * bracket
    claim = f"r = {r}: 2*({genus}-1) = {delta}*(3 - 1/2 - 1/3 - 1/{N} - 2) = {_frac(delta * bracket)}"
    return claim, holds


def _eval_case1(i):
    N, delta, genus = i["N"], i["delta"], i["genus"]
    bmin, bound = Fraction(i["bracket_min"]), Fraction(i["aut_bound"])
    grid = min(
        (1 - Fraction(1, 2 * k)) + (1 - Fraction(1, 3 * lam)) + (1 - Fraction(1, N * mu)) - 2
        for k in range(1, 7)
        for lam in range(1, 7)
        for mu in range(1, 7)
    )
    holds = (
        N > 6
        and bmin == grid == Fraction(1, 6) - Fraction(1, N)
        and bmin > 0
        and bound == 2 * (genus - 1) / bmin
        and bound == Fraction(12 * N, N - 6) * (genus - 1)
        and bound == delta
    )
    claim = (
        f"distinct images: 2*({genus}-1) >= |Aut|*({_frac(bmin)}), "
        f"so |Aut| <= 12*{N}/({N}-6)*({genus}-1) = {_frac(bound)} = delta = {delta}"
    )
    return claim, holds


def _eval_case2(i):
    N, case = i["N"], i["case"]
    if case in (1, 2):
        m, mult = i["m"], i["multiplier"]
        point = "j(i)" if case == 1 else "j(omega)"
        holds = (
            N >= 11
            and mult == (2 if case == 1 else 3)
            and m <= 6
            and m == _table_bound(N)
            and all((mult * k) % N for k in range(1, m + 1))
        )
        claim = f"{point} and j(infinity) stay apart: {mult}*kappa = {N}*mu has no solution with 1 <= kappa <= {m}"
        return claim, holds
    if case == 3:
        delta, genus = i["delta"], i["genus"]
        bmin, floor, bound = (Fraction(i[k]) for k in ("bracket_min", "bracket_floor", "aut_bound"))
        grid = min(
            (1 - Fraction(1, 6 * psi)) + (1 - Fraction(1, phi * N)) + (1 - Fraction(1, nu)) - 2
            for psi in (1, 2)
            for phi in range(1, 7)
            for nu in range(2, 7)
        )
        holds = (
            N >= 11
            and bmin == grid == Fraction(1, 3) - Fraction(1, N)
            and floor == Fraction(1, 3) - Fraction(1, 11)
            and bmin >= floor > 0
            and bound == 2 * (genus - 1) / floor
            and bound == Fraction(33, 4) * (genus - 1)
            and bound < 2 * delta
        )
        claim = (
            f"j(i), j(omega) merged: bracket >= {_frac(bmin)} >= {_frac(floor)}, "
            f"so |Aut| <= 33/4*({genus}-1) = {_frac(bound)} < 2*{delta}, forcing m <= 1"
        )
        return claim, holds
    return "unknown case", False


EVALUATORS: dict[StepKind, Callable[[dict], tuple[str, bool]]] = {
    StepKind.INDEX_BOUND: _eval_index_bound,
    StepKind.NORMALITY_FROM_INDEX: _eval_normality,
    StepKind.SIMPLICITY: _eval_simplicity,
    StepKind.SYMMETRIC_OBSTRUCTION: _eval_symmetric,
    StepKind.KERNEL_CONTAINS_H: _eval_kernel,
    StepKind.CRT_SPLIT: _eval_crt,
    StepKind.IMPROVED_HURWITZ: _eval_improved,
    StepKind.RAMIFIED_POINTS_COUNT: _eval_ramified,
    StepKind.CASE1_BOUND: _eval_case1,
    StepKind.CASE2_EXCLUSION: _eval_case2,
}

INPUT_KEYS = {
    StepKind.INDEX_BOUND: {"N", "delta", "genus", "hurwitz", "m_sharp", "m"},
    StepKind.NORMALITY_FROM_INDEX: {"m"},
    StepKind.SIMPLICITY: {"p", "enumerated"},
    StepKind.SYMMETRIC_OBSTRUCTION: {"p", "m", "min_degree"},
    StepKind.KERNEL_CONTAINS_H: {"p", "e", "h_order", "m"},
    StepKind.IMPROVED_HURWITZ: {"N", "delta", "genus", "improved"},
    StepKind.RAMIFIED_POINTS_COUNT: {"N", "delta", "genus", "r", "nu1", "nu2", "nu3"},
    StepKind.CASE1_BOUND: {"N", "delta", "genus", "bracket_min", "aut_bound"},
}


# the only inputs allowed to be non-integral
RATIONAL_KEYS = frozenset({"bracket_min", "bracket_floor", "aut_bound"})


def _expected_keys(step: CertStep) -> set[str] | None:
    if step.kind is StepKind.CRT_SPLIT:
        k = step.inputs.get("k")
        if not isinstance(k, int) or k < 0:
            return None
        return {"N", "sl2_order", "k"} | {f"{c}{j}" for c in "qs" for j in range(1, k + 1)}
    if step.kind is StepKind.CASE2_EXCLUSION:
        case = step.inputs.get("case")
        if case in (1, 2):
            return {"N", "case", "m", "multiplier"}
        if case == 3:
            return {"N", "case", "delta", "genus", "bracket_min", "bracket_floor", "aut_bound"}
        return None
    return INPUT_KEYS[step.kind]


def evaluate_step(step: CertStep) -> tuple[str, bool]:
    """Recompute a step's claim and truth value from its inputs alone."""
    keys = _expected_keys(step)
    if keys is None or set(step.inputs) != keys:
        return "malformed inputs", False
    if any(isinstance(v, float) or isinstance(v, bool) for v in step.inputs.values()):
        return "non-exact input", False
    for k, v in step.inputs.items():
        allowed = (int, Fraction) if k in RATIONAL_KEYS else (int,)
        if not isinstance(v, allowed):
            return f"input {k} has type {type(v).__name__}", False
    try:
        claim, holds = EVALUATORS[step.kind](step.inputs)
        return claim, bool(holds)
    except (ArithmeticError, ValueError, TypeError, KeyError) as exc:
        return f"evaluation error: {exc}", False


def _make(kind: StepKind, note: str = "", **inputs: Number) -> CertStep:
    probe = CertStep(kind, dict(inputs), "", False, note)
    claim, holds = evaluate_step(probe)
    return CertStep(kind, dict(inputs), claim, holds, note)


# ------------------------------------------------------------------- branches


def applicable_branches(N: int) -> list[Branch]:
    out = []
    pp = prime_power(N)
    if is_prime(N) and N >= 7:
        out.append(Branch.PRIME)
    if 7 <= N < 11:
        out.append(Branch.SMALL_N)
    if pp is not None and pp[0] >= 7 and pp[1] >= 2:
        out.append(Branch.PRIME_POWER)
    if gcd(N, 30) == 1 and N > 1 and not is_prime(N):
        out.append(Branch.COPRIME_TO_30)
    if N >= 11:
        out.append(Branch.RAMIFICATION)
    return [b for b in BRANCH_PRIORITY if b in out]


def _prime_steps(p: int, e: int, m: int) -> list[CertStep]:
    steps = []
    if e >= 2:
        steps.append(_make(StepKind.KERNEL_CONTAINS_H, p=p, e=e, h_order=p ** (3 * (e - 1)), m=m))
    steps.append(_make(StepKind.SIMPLICITY, p=p, enumerated=1 if p <= MAX_SIMPLICITY_LEVEL else 0))
    steps.append(_make(StepKind.SYMMETRIC_OBSTRUCTION, p=p, m=m, min_degree=min_symmetric_degree(p)))
    return steps


def _skeleton(N: int, branch: Branch) -> list[tuple]:
    """Expected (kind, binding) sequence for a branch at level N."""
    head = [(StepKind.INDEX_BOUND, None)]

    def per_prime(p, e):
        out = [(StepKind.KERNEL_CONTAINS_H, (p, e))] if e >= 2 else []
        return out + [(StepKind.SIMPLICITY, (p, None)), (StepKind.SYMMETRIC_OBSTRUCTION, (p, None))]

    if branch is Branch.SMALL_N:
        return head + [(StepKind.NORMALITY_FROM_INDEX, None)]
    if branch is Branch.PRIME:
        return head + per_prime(N, 1)
    if branch is Branch.PRIME_POWER:
        p, e = prime_power(N)
        return head + per_prime(p, e)
    if branch is Branch.COPRIME_TO_30:
        out = head + [(StepKind.CRT_SPLIT, None)]
        for p, e in factorize(N):
            out += per_prime(p, e)
        return out
    return head + [
        (StepKind.IMPROVED_HURWITZ, None),
        (StepKind.RAMIFIED_POINTS_COUNT, None),
        (StepKind.CASE1_BOUND, None),
        (StepKind.CASE2_EXCLUSION, 1),
        (StepKind.CASE2_EXCLUSION, 2),
        (StepKind.CASE2_EXCLUSION, 3),
    ]


def _binding(step: CertStep):
    if step.kind is StepKind.KERNEL_CONTAINS_H:
        return (step.inputs.get("p"), step.inputs.get("e"))
    if step.kind in (StepKind.SIMPLICITY, StepKind.SYMMETRIC_OBSTRUCTION):
        return (step.inputs.get("p"), None)
    if step.kind is StepKind.CASE2_EXCLUSION:
        return step.inputs.get("case")
    return None


def expected_notes(N: int) -> tuple[str, ...]:
    if N == 7:
        return ("|PSL2(Z/7Z)| = 84*(3-1) = 168 by enumeration; the value 164 sometimes printed here is a misprint",)
    return ()


def certify(N: int) -> AutCertificate:
    if N < 7:
        raise LevelTooSmall(f"certification needs N >= 7, got {N}")
    delta = psl2_order(N)
    g = 1 + Fraction(delta * (N - 6), 12 * N)
    assert g.denominator == 1
    genus = int(g)
    m = _table_bound(N)
    hurwitz = 84 * (genus - 1)
    branches = applicable_branches(N)
    branch = branches[0]

    steps = [
        _make(StepKind.INDEX_BOUND, N=N, delta=delta, genus=genus, hurwitz=hurwitz, m_sharp=hurwitz // delta, m=m)
    ]
    if branch is Branch.SMALL_N:
        steps.append(_make(StepKind.NORMALITY_FROM_INDEX, m=m))
    elif branch is Branch.PRIME:
        steps += _prime_steps(N, 1, m)
    elif branch is Branch.PRIME_POWER:
        steps += _prime_steps(*prime_power(N), m)
    elif branch is Branch.COPRIME_TO_30:
        fac = factorize(N)
        qs = {f"q{j}": p**e for j, (p, e) in enumerate(fac, 1)}
        ss = {f"s{j}": sl2_order(p**e) for j, (p, e) in enumerate(fac, 1)}
        steps.append(_make(StepKind.CRT_SPLIT, N=N, sl2_order=sl2_order(N), k=len(fac), **qs, **ss))
        for p, e in fac:
            steps += _prime_steps(p, e, m)
    else:
        bmin1 = Fraction(1, 6) - Fraction(1, N)
        bmin2 = Fraction(1, 3) - Fraction(1, N)
        floor = Fraction(1, 3) - Fraction(1, 11)
        steps += [
            _make(StepKind.IMPROVED_HURWITZ, N=N, delta=delta, genus=genus, improved=12 * (genus - 1)),
            _make(StepKind.RAMIFIED_POINTS_COUNT, N=N, delta=delta, genus=genus, r=3, nu1=2, nu2=3, nu3=N),
            _make(StepKind.CASE1_BOUND, N=N, delta=delta, genus=genus, bracket_min=bmin1, aut_bound=2 * (genus - 1) / bmin1),
            _make(StepKind.CASE2_EXCLUSION, N=N, case=1, m=m, multiplier=2),
            _make(StepKind.CASE2_EXCLUSION, N=N, case=2, m=m, multiplier=3),
            _make(
                StepKind.CASE2_EXCLUSION,
                CASE2_NOTE,
                N=N,
                case=3,
                delta=delta,
                genus=genus,
                bracket_min=bmin2,
                bracket_floor=floor,
                aut_bound=2 * (genus - 1) / floor,
            ),
        ]

    verdict = Verdict.CERTIFIED if all(s.holds for s in steps) else Verdict.NOT_CERTIFIED
    return AutCertificate(
        N=N,
        genus=genus,
        delta=delta,
        m_bound=m,
        branch=branch,
        steps=tuple(steps),
        verdict=verdict,
        alternatives=tuple(branches[1:]),
        axioms=AXIOMS,
        notes=expected_notes(N),
    )


def verify_reasons(cert: AutCertificate) -> list[str]:
    """Everything wrong with ``cert``; an empty list means it checks out."""
    reasons = []
    try:
        N = cert.N
        if not isinstance(N, int) or isinstance(N, bool) or N < 7:
            return [f"level {N!r} is not an integer >= 7"]
        branch = Branch(cert.branch)
        verdict = Verdict(cert.verdict)
    except ValueError as exc:
        return [str(exc)]

    for name in ("genus", "delta", "m_bound"):
        v = getattr(cert, name)
        if not isinstance(v, int) or isinstance(v, bool):
            return [f"{name} {v!r} is not an integer"]

    delta = psl2_order(N)
    if cert.delta != delta:
        reasons.append(f"delta {cert.delta} != |PSL2(Z/{N}Z)| = {delta}")
    if 12 * N * (cert.genus - 1) != delta * (N - 6):
        reasons.append(f"genus {cert.genus} inconsistent with delta {delta}")
    if cert.m_bound != _table_bound(N):
        reasons.append(f"m_bound {cert.m_bound} != tabulated {_table_bound(N)}")

    applicable = applicable_branches(N)
    if branch not in applicable:
        reasons.append(f"branch {branch.value} does not apply to N={N}")
    elif tuple(cert.alternatives) != tuple(b for b in applicable if b is not branch):
        reasons.append("alternative branch list is wrong")
    if tuple(cert.axioms) != AXIOMS:
        reasons.append("axiom list altered")
    if tuple(cert.notes) != expected_notes(N):
        reasons.append("notes altered")

    skeleton = _skeleton(N, branch) if branch in applicable else None
    got = []
    for s in cert.steps:
        try:
            got.append((StepKind(s.kind), _binding(s)))
        except ValueError:
            got.append((s.kind, None))
    if skeleton is not None and got != skeleton:
        reasons.append(f"step sequence {[k.value if isinstance(k, StepKind) else k for k, _ in got]} does not match branch")

    anchors = {"N": N, "delta": cert.delta, "genus": cert.genus, "m": cert.m_bound}
    for idx, s in enumerate(cert.steps):
        try:
            kind = StepKind(s.kind)
        except ValueError:
            reasons.append(f"step {idx}: unknown kind {s.kind!r}")
            continue
        step = CertStep(kind, s.inputs, s.claim, s.holds, s.note)
        claim, holds = evaluate_step(step)
        if not holds:
            reasons.append(f"step {idx} ({kind.value}) fails: {claim}")
        if s.holds is not holds:
            reasons.append(f"step {idx} ({kind.value}) records holds={s.holds!r}, recomputed {holds}")
        if s.claim != claim:
            reasons.append(f"step {idx} ({kind.value}) claim text differs from recomputation")
        expected_note = CASE2_NOTE if kind is StepKind.CASE2_EXCLUSION and s.inputs.get("case") == 3 else ""
        if s.note != expected_note:
            reasons.append(f"step {idx} ({kind.value}) note altered")
        for key, want in anchors.items():
            if key in s.inputs and s.inputs[key] != want:
                reasons.append(f"step {idx} ({kind.value}) input {key}={s.inputs[key]} != certificate {want}")

    all_ok = not reasons and all(s.holds is True for s in cert.steps)
    if verdict is Verdict.CERTIFIED and not all_ok:
        reasons.append("verdict Certified is not supported")
    if verdict is Verdict.NOT_CERTIFIED:
        reasons.append("verdict is NotCertified")
    return reasons


def verify(cert: AutCertificate) -> bool:
    return not verify_reasons(cert)


# -------------------------------------------------------------- serialization


def _enc(x):
    if isinstance(x, bool):
        return x
    if isinstance(x, (int, Fraction)):
        return _frac(x)
    return x


def _dec(s: str) -> Number:
    if "/" in s:
        return Fraction(s)
    return int(s)


def certificate_to_dict(cert: AutCertificate) -> dict:
    return {
        "N": _enc(cert.N),
        "genus": _enc(cert.genus),
        "delta": _enc(cert.delta),
        "m_bound": _enc(cert.m_bound),
        "branch": Branch(cert.branch).value,
        "steps": [
            {
                "kind": StepKind(s.kind).value,
                "inputs": {k: _enc(v) for k, v in s.inputs.items()},
                "claim": s.claim,
                "holds": s.holds,
                "note": s.note,
            }
            for s in cert.steps
        ],
        "verdict": Verdict(cert.verdict).value,
        "alternatives": [b.value for b in cert.alternatives],
        "axioms": list(cert.axioms),
        "notes": list(cert.notes),
    }


def certificate_from_dict(d: dict) -> AutCertificate:
    return AutCertificate(
        N=_dec(d["N"]),
        genus=_dec(d["genus"]),
        delta=_dec(d["delta"]),
        m_bound=_dec(d["m_bound"]),
        branch=Branch(d["branch"]),
        steps=tuple(
            CertStep(
                kind=StepKind(s["kind"]),
                inputs={k: _dec(v) for k, v in s["inputs"].items()},
                claim=s["claim"],
                holds=s["holds"],
                note=s.get("note", ""),
            )
            for s in d["steps"]
        ),
        verdict=Verdict(d["verdict"]),
        alternatives=tuple(Branch(b) for b in d.get("alternatives", [])),
        axioms=tuple(d.get("axioms", [])),
        notes=tuple(d.get("notes", [])),
    )


def certificate_to_json(cert: AutCertificate) -> str:
    return json.dumps(certificate_to_dict(cert), indent=2)


def certificate_from_json(text: str) -> AutCertificate:
    return certificate_from_dict(json.loads(text))
