"""Command-line front end.

Exit codes: 0 when every mathematical assertion holds, 1 when one fails,
2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .arith import is_squarefree
from .certificate import Verdict, certificate_to_dict, certify, verify_reasons
from .classify import classify_XN
from .curves import (
    Family,
    MODEL_ALIASES,
    CurveModel,
    count_points,
    enumerate_points,
    format_points,
    in_weil_window,
    rational_point_search,
    smoothness_probe,
    twist_partition_experiment,
    weil_window,
)
from .errors import BadReductionPrime, LevelTooSmall, ModxnError, PrimeTooLarge
from .invariants import cover_degrees, curve_invariants, sharp_index_bound
from .report import Report, render_table, report_to_json


class UsageError(Exception):
    pass


def parse_range(text: str) -> range:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected 'a..b' or 'a'") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return range(lo, hi + 1)


def cmd_invariants(levels: range) -> tuple[Report, bool]:
    rep = Report("invariants", {"range": f"{levels.start}..{levels.stop - 1}"})
    ok = True
    for N in levels:
        if N < 1:
            raise UsageError("levels must be >= 1")
        inv = curve_invariants(N)
        ledger = cover_degrees(N) if N >= 3 else None
        row = {
            "N": inv.N,
            "delta": inv.delta,
            "genus": inv.genus,
            "aut_order": inv.aut_order,
            "cusp_count": inv.cusp_count,
            "index_bound_m": inv.index_bound_m,
            "sharp_index_bound": sharp_index_bound(N) if N >= 7 else None,
            "status": "ok" if inv.genus >= 2 else "below genus 2, theorems not applicable",
            "cover_degrees": ledger,
        }
        if inv.aut_order is not None:
            ok &= inv.aut_order == inv.delta
        if ledger is not None:
            ok &= ledger.consistent() and inv.cusp_count * N == inv.delta
        rep.rows.append(row)
    return rep, ok


def cmd_aut_certify(levels: range) -> tuple[Report, bool]:
    if levels.start < 7:
        raise UsageError("aut-certify needs N >= 7")
    rep = Report("aut-certify", {"range": f"{levels.start}..{levels.stop - 1}"})
    ok = True
    for N in levels:
        cert = certify(N)
        reasons = verify_reasons(cert)
        certified = cert.verdict is Verdict.CERTIFIED and not reasons
        ok &= certified
        rep.rows.append(
            {
                "N": N,
                "branch": cert.branch,
                "verdict": cert.verdict,
                "verified": not reasons,
                "steps": len(cert.steps),
                "certificate": certificate_to_dict(cert),
            }
        )
    return rep, ok


def cmd_classify(levels: range) -> tuple[Report, bool]:
    if levels.start < 7:
        raise UsageError("classify needs N >= 7")
    rep = Report("classify", {"range": f"{levels.start}..{levels.stop - 1}"})
    ok = True
    for N in levels:
        c = classify_XN(N)
        ok &= (not c.hyperelliptic) and c.bielliptic == (N in (7, 8))
        rep.rows.append(
            {
                "N": N,
                "hyperelliptic": c.hyperelliptic,
                "bielliptic": c.bielliptic,
                "evidence": [{"reason": e.reason, "anchor": e.anchor} for e in c.evidence],
            }
        )
    return rep, ok


def _model(name: str, twist: int | None) -> CurveModel:
    if name.lower() not in MODEL_ALIASES and name not in {f.value for f in Family}:
        raise UsageError(f"unknown model {name!r}; choose from {', '.join(MODEL_ALIASES)}")
    try:
        return CurveModel.named(name, 1 if twist is None else twist)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_points(model: CurveModel, prime: int | None = None, height: int | None = None) -> tuple[Report, bool]:
    rep = Report("points", {"model": str(model), "prime": prime, "height": height})
    ok = True
    if prime is not None:
        pts = enumerate_points(model, prime)
        row = {"model": str(model), "p": prime, "count": len(pts), "genus": model.genus}
        if model.genus is not None:
            lo, hi = weil_window(prime, model.genus)
            inside = in_weil_window(len(pts), prime, model.genus)
            smooth = smoothness_probe(model, [prime])
            row.update(weil_lo=lo, weil_hi=hi, in_weil_window=inside, smooth=smooth)
            ok &= inside and smooth
        else:
            rep.notes.append("singular model: projective closure count reported without a genus assertion")
        row["points"] = sorted(pts)
        rep.rows.append(row)
    else:
        if model.family not in (Family.X064, Family.WIMAN):
            raise UsageError("height search is available for x064 and wiman only")
        if model.family is Family.WIMAN and not is_squarefree(model.d):
            raise UsageError(f"twist {model.d} is not squarefree")
        pts = rational_point_search(model, height)
        rep.rows.append({"model": str(model), "height": height, "count": len(pts), "points": sorted(pts)})
    return rep, ok


def cmd_twist_scan(dmax: int, height: int) -> tuple[Report, bool]:
    if dmax < 1 or height < 1:
        raise UsageError("dmax and height must be >= 1")
    ds = [s * d for d in range(1, dmax + 1) if is_squarefree(d) for s in (1, -1)]
    r = twist_partition_experiment(ds, height)
    rep = Report("twist-scan", {"dmax": dmax, "height": height})
    for d in r.d_values:
        rep.rows.append(
            {"d": d, "count": len(r.points[d]), "images": len(r.images[d]), "points": list(r.points[d]), "image_points": list(r.images[d])}
        )
    rep.notes += [
        f"quartic points: {' '.join(str(p) for p in r.quartic_points)}",
        f"twists with points: {', '.join(str(d) for d in r.nonempty)}",
        f"images pairwise disjoint: {r.disjoint}",
        f"each of W_1, W_2 has 4 points over 2 quartic points: {r.covers_two_each}",
        f"images of W_1, W_2 cover the quartic points: {r.union_is_quartic}",
    ]
    return rep, r.ok


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="modxn", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", metavar="PATH", help="write the JSON report here")
        return p

    for name, text in (
        ("invariants", "degree, genus, automorphism order, cusps and cover degrees of X(N)"),
        ("aut-certify", "certify Aut X(N) = PSL2(Z/NZ)"),
        ("classify", "hyperelliptic / bielliptic classification"),
    ):
        add(name, text).add_argument("--range", required=True, help="'a..b' inclusive or a single level")

    p = add("points", "points of an explicit model over F_p or of bounded height over Q")
    p.add_argument("--model", required=True, help=", ".join(MODEL_ALIASES))
    p.add_argument("--twist", type=int, help="squarefree twist parameter d for wiman")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--prime", type=int)
    g.add_argument("--height", type=int)

    p = add("twist-scan", "rational points on the Wiman twists W_d and their images on X_0(64)")
    p.add_argument("--dmax", type=int, default=20)
    p.add_argument("--height", type=int, default=50)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "invariants":
            rep, ok = cmd_invariants(parse_range(args.range))
        elif args.command == "aut-certify":
            rep, ok = cmd_aut_certify(parse_range(args.range))
        elif args.command == "classify":
            rep, ok = cmd_classify(parse_range(args.range))
        elif args.command == "points":
            if args.height is not None and args.height < 1:
                raise UsageError("height must be >= 1")
            rep, ok = cmd_points(_model(args.model, args.twist), args.prime, args.height)
        else:
            rep, ok = cmd_twist_scan(args.dmax, args.height)
    except (UsageError, LevelTooSmall, BadReductionPrime, PrimeTooLarge) as exc:
        print(f"modxn: error: {exc}", file=sys.stderr)
        return 2
    except (ModxnError, ValueError) as exc:
        print(f"modxn: error: {exc}", file=sys.stderr)
        return 2

    sys.stdout.write(render_table(rep))
    for row in rep.rows:
        if "points" in row and rep.command == "points":
            sys.stdout.write(format_points(row["points"]))
        for ev in row.get("evidence", []):
            sys.stdout.write(f"  N={row['N']}: {ev['reason']}  [{ev['anchor']}]\n")
    if args.json:
        Path(args.json).write_text(report_to_json(rep), encoding="utf-8")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
