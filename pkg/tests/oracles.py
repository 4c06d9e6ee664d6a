"""Slow pure-Python oracles, independent of the package's numpy paths."""

import itertools
from math import gcd, isqrt


def _primitive(coords):
    g = 0
    for c in coords:
        g = gcd(g, c)
    if g != 1:
        return None
    lead = next(c for c in coords if c)
    return tuple(coords) if lead > 0 else tuple(-c for c in coords)


def _fourth_root(n):
    if n < 0:
        return None
    r = isqrt(isqrt(n))
    while r**4 < n:
        r += 1
    return r if r**4 == n else None


def _sqrt(n):
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def klein_fp_points(p):
    """Scan every nonzero vector of F_p^3 and normalize."""
    out = set()
    for v in itertools.product(range(p), repeat=3):
        if not any(v):
            continue
        x, y, z = v
        if (x**3 * y + y**3 * z + z**3 * x) % p == 0:
            lead = next(c for c in v if c)
            inv = pow(lead, -1, p)
            out.add(tuple(c * inv % p for c in v))
    return out


def x064_points(H):
    out = set()
    for x1 in range(-H, H + 1):
        for x2 in range(-H, H + 1):
            r = _fourth_root(x1 * x2 * (4 * x1 * x1 + x2 * x2))
            if r is None or r > H or (x1 == 0 and x2 == 0):
                continue
            for x0 in {r, -r}:
                pt = _primitive((x0, x1, x2))
                if pt:
                    out.add(pt)
    return out


def wiman_points(d, H):
    out = set()
    for x1 in range(-H, H + 1):
        for x2 in range(-H, H + 1):
            if x1 == 0 and x2 == 0:
                continue
            s = 4 * x1 * x1 + x2 * x2
            if s % d:
                continue
            a3, a4 = _sqrt(s // d), _sqrt(d * x1 * x2)
            if a3 is None or a4 is None or a3 > H or a4 > H:
                continue
            for x3 in {a3, -a3}:
                for x4 in {a4, -a4}:
                    a0 = _sqrt(x3 * x4)
                    if a0 is None or a0 > H:
                        continue
                    for x0 in {a0, -a0}:
                        pt = _primitive((x0, x1, x2, x3, x4))
                        if pt:
                            out.add(pt)
    return out


def fmt(points):
    return "".join(":".join(map(str, pt)) + "\n" for pt in sorted(points))
