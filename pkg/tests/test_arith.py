from math import gcd, prod

import pytest
from hypothesis import given, strategies as st

from modxn.arith import (
    Residue,
    dedekind_psi,
    euler_phi,
    factorize,
    integer_root,
    is_prime,
    is_square,
    is_squarefree,
    prime_divisors,
    prime_power,
    squarefree_part,
)
from modxn.errors import ModulusMismatch


def brute_phi(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def brute_is_prime(n):
    return n >= 2 and all(n % k for k in range(2, n))


def test_phi_matches_count():
    for n in range(1, 300):
        assert euler_phi(n) == brute_phi(n)


def test_psi_values():
    assert [dedekind_psi(n) for n in range(1, 11)] == [1, 3, 4, 6, 6, 12, 8, 12, 12, 18]


def test_primality_oracle():
    assert [n for n in range(200) if is_prime(n)] == [n for n in range(200) if brute_is_prime(n)]


@given(st.integers(1, 10**6))
def test_factorize_roundtrip(n):
    f = factorize(n)
    assert prod(p**e for p, e in f) == n
    assert all(is_prime(p) and e >= 1 for p, e in f)
    assert [p for p, _ in f] == sorted(p for p, _ in f)
    assert prime_divisors(n) == tuple(p for p, _ in f)


def test_prime_power():
    assert prime_power(49) == (7, 2)
    assert prime_power(7) == (7, 1)
    assert prime_power(12) is None
    assert prime_power(1) is None


@given(st.integers(-10**5, 10**5).filter(bool))
def test_squarefree_part(n):
    s = squarefree_part(n)
    assert is_squarefree(abs(s))
    assert (s > 0) == (n > 0)
    assert is_square(n // s) and n % s == 0


def test_integer_root():
    assert integer_root(81, 4) == 3
    assert integer_root(80, 4) is None
    assert integer_root(0, 3) == 0
    assert is_square(0) and not is_square(-4)


@given(st.integers(2, 60), st.integers(), st.integers())
def test_residue_ring(n, a, b):
    x, y = Residue(a, n), Residue(b, n)
    assert int(x + y) == (a + b) % n
    assert int(x * y) == (a * b) % n
    assert int(x - y) == (a - b) % n
    if gcd(a, n) == 1:
        assert int(x * x.inverse()) == 1 % n


def test_residue_mismatch():
    with pytest.raises(ModulusMismatch):
        Residue(1, 5) + Residue(1, 7)
