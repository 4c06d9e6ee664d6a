import itertools
from math import gcd, lcm

import pytest
from hypothesis import given, strategies as st

from modxn.arith import dedekind_psi, euler_phi
from modxn.errors import ModulusTooLarge
from modxn.psl2 import (
    Mat2,
    PSL2Element,
    SubgroupKind,
    beta_obstruction,
    congruence_index,
    conjugate_by_u,
    conjugate_by_u_inverse,
    conjugation_inclusion_check,
    element_order,
    enumerate_psl2,
    in_gamma,
    in_gamma0,
    in_gamma1,
    is_closed,
    is_simple,
    min_symmetric_degree,
    psl2_order,
    psl2_prime_simplicity,
    sl2_order,
    subgroup_image,
    subgroup_order,
)


def brute_psl2(N):
    # full (Z/N)^4 scan, classes {g, -g}
    classes = set()
    for a, b, c, d in itertools.product(range(N), repeat=4):
        if (a * d - b * c) % N == 1 % N:
            g = (a, b, c, d)
            classes.add(min(g, tuple(-x % N for x in g)))
    return classes


@pytest.mark.parametrize("N", range(1, 13))
def test_enumeration_matches_brute_force(N):
    assert {g.key for g in enumerate_psl2(N)} == brute_psl2(N)


def test_small_orders():
    assert [psl2_order(N) for N in (1, 2, 3, 7, 8)] == [1, 6, 12, 168, 192]


def test_order_formula():
    for N in range(3, 201):
        assert 2 * psl2_order(N) == N * euler_phi(N) * dedekind_psi(N)


def test_crt_relation():
    # SL2 is multiplicative; PSL2 picks up the extra sign class
    for n1, n2 in itertools.product(range(3, 30), repeat=2):
        if gcd(n1, n2) == 1:
            assert sl2_order(n1 * n2) == sl2_order(n1) * sl2_order(n2)
            assert psl2_order(n1 * n2) == 2 * psl2_order(n1) * psl2_order(n2)
    assert psl2_order(12) == 576 == 2 * 12 * 24


def test_enumeration_cutoff():
    assert len(enumerate_psl2(40)) == psl2_order(40)
    with pytest.raises(ModulusTooLarge):
        enumerate_psl2(41)


def test_mat2_rejects_bad_det():
    with pytest.raises(ValueError):
        Mat2(1, 1, 1, 1, 7)


def test_element_orders_and_lagrange():
    for N in (5, 7, 8, 9):
        n = psl2_order(N)
        assert element_order(PSL2Element.of(1, 1, 0, 1, N)) == N
        assert element_order(PSL2Element.of(0, N - 1, 1, 0, N)) == 2
        for g in list(enumerate_psl2(N))[:200]:
            assert n % element_order(g) == 0


def test_group_laws():
    G = enumerate_psl2(7)
    e = PSL2Element.identity(7)
    for g in list(G)[:40]:
        assert g * g.inverse() == e
        assert g * e == g
    assert PSL2Element.of(1, 2, 3, 0, 7) == PSL2Element.of(-1, -2, -3, 0, 7)


def _oracle_subgroup(kind, N):
    out = set()
    for g in enumerate_psl2(N):
        for a, b, c, d in ((g.key), tuple(-x % N for x in g.key)):
            if kind == "Gamma1" and c == 0 and a == 1 % N and d == 1 % N:
                out.add(g.key)
            elif kind == "Gamma0" and c == 0:
                out.add(g.key)
            elif kind == "Gamma0Upper" and b == 0:
                out.add(g.key)
            elif kind == "Cartan" and b == 0 and c == 0:
                out.add(g.key)
            elif kind == "Full":
                out.add(g.key)
    return out


@pytest.mark.parametrize("N", [3, 4, 5, 6, 7, 8, 9, 10, 12])
@pytest.mark.parametrize("kind", [k.value for k in SubgroupKind])
def test_subgroup_images(kind, N):
    img = subgroup_image(kind, N)
    keys = {g.key for g in img.elements}
    assert keys == _oracle_subgroup(kind, N)
    assert len(img) == subgroup_order(kind, N)
    assert psl2_order(N) % len(img) == 0
    assert is_closed(keys, N)
    assert congruence_index(kind, N) * len(img) == psl2_order(N)


def test_subgroup_values():
    assert [subgroup_order(k, 7) for k in SubgroupKind] == [7, 21, 21, 3, 168]
    assert [congruence_index(k, 8) for k in SubgroupKind] == [24, 12, 12, 96, 1]


def test_is_closed_negative():
    assert not is_closed({(1, 0, 0, 1), (1, 1, 0, 1)}, 7)


def test_simplicity():
    assert [is_simple(N) for N in (2, 3, 4, 5, 6, 7, 8, 9, 11, 13)] == [
        False, False, False, True, False, True, False, False, True, True
    ]
    with pytest.raises(ModulusTooLarge):
        is_simple(17)
    assert psl2_prime_simplicity(7) == (True, "enumeration")
    assert psl2_prime_simplicity(101) == (True, "axiom")


def brute_min_degree(k):
    # smallest n with a partition of n whose parts have lcm k
    def parts(n, largest):
        if n == 0:
            yield ()
            return
        for p in range(min(n, largest), 0, -1):
            for rest in parts(n - p, p):
                yield (p,) + rest

    n = 1
    while True:
        if any(lcm(*ps) == k for ps in parts(n, n)):
            return n
        n += 1


@pytest.mark.parametrize("k", range(1, 31))
def test_min_symmetric_degree_oracle(k):
    assert min_symmetric_degree(k) == brute_min_degree(k)


def test_beta_obstruction():
    assert beta_obstruction(7, 2)
    assert beta_obstruction(49, 6)
    assert beta_obstruction(77, 6)
    assert not beta_obstruction(12, 3)
    assert not beta_obstruction(7, 7)


@pytest.mark.parametrize("N", range(3, 11))
def test_conjugation_inclusions(N):
    assert conjugation_inclusion_check(N, 100)


@given(st.integers(2, 12), st.integers(-50, 50), st.integers(-50, 50))
def test_conjugation_roundtrip(N, b, c):
    m = (1, b, c * N * N, 1 + b * c * N * N)
    assert in_gamma1(m, N * N)
    h = conjugate_by_u(m, N)
    assert h is not None and in_gamma(h, N)
    assert conjugate_by_u_inverse(h, N) == m


def test_conjugation_negative_controls():
    N = 5
    # in Gamma0(N) but not Gamma0(N^2): conjugate leaves Gamma(N)
    h = conjugate_by_u((1, 0, N, 1), N)
    assert h == (1, 0, 1, 1) and not in_gamma(h, N)
    assert conjugate_by_u((1, 0, 1, 1), N) is None
    assert not in_gamma0((1, 0, N, 1), N * N)
    assert not in_gamma1((2, 1, N * N, 1), N * N)
    with pytest.raises(ValueError):
        conjugation_inclusion_check(1, 10)
