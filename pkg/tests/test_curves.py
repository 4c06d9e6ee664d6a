from collections import Counter

import pytest
from hypothesis import given, strategies as st

import oracles
from modxn.arith import is_prime, is_squarefree
from modxn.curves import (
    KLEIN,
    MODEL_ALIASES,
    WIMAN,
    X064,
    X9,
    CurveModel,
    ProjectivePoint,
    count_points,
    e_prime_affine,
    enumerate_points,
    format_points,
    in_weil_window,
    iota1,
    is_on_curve,
    parse_points,
    quotient_to_X064,
    rational_point_search,
    sextic_affine,
    sextic_affine_points,
    singular_points,
    smoothness_probe,
    t_transform,
    twist_partition_experiment,
    weil_window,
    wiman_twist,
    x9_cover_map,
    x9_fiber_sizes,
)
from modxn.errors import BadReductionPrime, PointNotOnCurve, PrimeTooLarge

SMOOTH = [m for m in MODEL_ALIASES if m != "x9"]


def test_klein_f2_golden(golden):
    pts = enumerate_points(KLEIN, 2)
    assert format_points(pts) == (golden / "klein_p2.txt").read_text()
    assert {pt.coords for pt in pts} == oracles.klein_fp_points(2)


@pytest.mark.parametrize("p", [3, 5, 11, 13])
def test_klein_matches_full_scan(p):
    assert {pt.coords for pt in enumerate_points(KLEIN, p)} == oracles.klein_fp_points(p)


@pytest.mark.parametrize("name", SMOOTH)
def test_weil_window_and_smoothness(name):
    model = CurveModel.named(name)
    for p in range(2, 54):
        if not is_prime(p) or p in model.bad_primes():
            continue
        n = count_points(model, p)
        assert in_weil_window(n, p, model.genus), (name, p, n, weil_window(p, model.genus))
        assert not singular_points(model, p), (name, p)


def test_wiman_twists_weil():
    for d in (1, 2, 3, -1, 5):
        model = wiman_twist(d)
        for p in (3, 5, 7, 11, 13):
            if p in model.bad_primes():
                continue
            assert in_weil_window(count_points(model, p), p, 5)
            assert smoothness_probe(model, [p])


def test_weil_window_values():
    assert weil_window(2, 3) == (-5, 11)
    assert weil_window(5, 1) == (2, 10)
    assert in_weil_window(0, 2, 3)


def test_prime_guards():
    with pytest.raises(BadReductionPrime):
        enumerate_points(KLEIN, 7)
    with pytest.raises(BadReductionPrime):
        enumerate_points(wiman_twist(3), 3)
    with pytest.raises(ValueError):
        enumerate_points(KLEIN, 9)
    with pytest.raises(PrimeTooLarge):
        enumerate_points(KLEIN, 503)
    with pytest.raises(ValueError):
        CurveModel.named("klein", 2)


def test_point_format_roundtrip():
    pts = sorted(enumerate_points(KLEIN, 11))
    assert parse_points(format_points(pts), 11) == pts
    assert ProjectivePoint.over_q((-4, 2, 6)).coords == (2, -1, -3)
    assert ProjectivePoint.over_fp((3, 6, 9), 7).coords == (1, 2, 3)
    with pytest.raises(ValueError):
        ProjectivePoint.over_q((0, 0, 0))


def test_x064_golden(golden):
    pts = rational_point_search(X064, 100)
    assert format_points(pts) == (golden / "x064_H100.txt").read_text()
    assert len(pts) == 4
    assert {pt.coords for pt in rational_point_search(X064, 30)} == oracles.x064_points(30)


@pytest.mark.parametrize("d, name", [(1, "w1_H100.txt"), (2, "w2_H100.txt")])
def test_wiman_golden(golden, d, name):
    pts = rational_point_search(wiman_twist(d), 100)
    assert format_points(pts) == (golden / name).read_text()
    assert all(is_on_curve(wiman_twist(d), pt) for pt in pts)


@pytest.mark.parametrize("d", [-7, -2, -1, 1, 2, 3, 5, 6])
def test_wiman_search_matches_oracle(d):
    assert {pt.coords for pt in rational_point_search(wiman_twist(d), 25)} == oracles.wiman_points(d, 25)


def test_height_stability():
    for d in (1, 2, -1, 3):
        assert rational_point_search(wiman_twist(d), 50) == rational_point_search(wiman_twist(d), 200)
    assert rational_point_search(X064, 50) == rational_point_search(X064, 200)


def test_twist_partition():
    ds = [s * d for d in range(1, 21) if is_squarefree(d) for s in (1, -1)]
    r = twist_partition_experiment(ds, 100)
    assert r.nonempty == (1, 2)
    assert r.ok and r.disjoint and r.union_is_quartic and r.covers_two_each
    assert len(r.quartic_points) == 4
    assert all(len(r.points[d]) == 0 for d in ds if d not in (1, 2))


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_iota1_properties(p):
    pts = enumerate_points(WIMAN, p)
    assert pts
    for pt in pts:
        q = iota1(pt)
        assert q != pt
        assert q in pts
        assert iota1(q) == pt
        img = quotient_to_X064(pt)
        assert quotient_to_X064(q) == img
        assert is_on_curve(X064, img)
    # the quotient is 2:1 onto its image, with fibres the iota1 orbits
    fibres = Counter(quotient_to_X064(pt) for pt in pts)
    assert set(fibres.values()) == {2}


def test_iota1_rejects_foreign_point():
    with pytest.raises(PointNotOnCurve):
        iota1(ProjectivePoint.over_fp((1, 1, 1, 1, 1), 5))


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_x9_cover(p):
    pts = sextic_affine_points(p)
    brute = [(x, y) for x in range(p) for y in range(p) if sextic_affine(x, y, p) == 0]
    assert pts == brute
    for pt in pts:
        x, z = x9_cover_map(pt, p)
        assert e_prime_affine(x, z, p) == 0
        t = t_transform((x, z), p)
        if t is None:
            assert x * (x**3 + 1) % p == 0
        else:
            assert (t[1] ** 2 - t[1] - t[0] ** 3) % p == 0
    sizes = set(x9_fiber_sizes(p).values())
    assert sizes <= ({1, 3} if p % 3 == 1 else {1})


def test_x9_projective_closure():
    pts = enumerate_points(X9, 7)
    assert count_points(X9, 7) == len(sextic_affine_points(7)) + 1
    assert ProjectivePoint((0, 1, 0), 7) in pts
    assert singular_points(X9, 7)


@given(st.sampled_from([5, 7, 11, 13, 17, 19]), st.data())
def test_affine_cover_equation(p, data):
    # y^3 satisfies the E' quadratic on every sextic point, lifted by any multiple of p
    x, y = data.draw(st.sampled_from(sextic_affine_points(p)))
    k, j = data.draw(st.integers(-5, 5)), data.draw(st.integers(-5, 5))
    assert sextic_affine(x + k * p, y + j * p, p) == 0
    assert e_prime_affine(x + k * p, pow(y + j * p, 3, p), p) == 0
