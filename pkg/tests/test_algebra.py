import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from admissibility.algebra import (
    ModPoly,
    Poly,
    composed_sum,
    cyclotomic_poly,
    euler_phi,
    factor_mod_p,
    factor_over_q,
    gcd,
    is_irreducible_over_q,
    is_prime,
    xgcd,
)
from admissibility.algebra.finite_field import CompositeModulus

X = sympy.Symbol("x")


def to_sympy(f):
    return sympy.Poly(list(reversed([int(c) for c in f.coeffs])), X)


def test_poly_arithmetic():
    f = Poly((1, 2, 1))
    g = Poly((1, 1))
    assert f == g * g
    q, r = divmod(f, g)
    assert q == g and r.is_zero()
    assert f.derivative() == Poly((2, 2))
    assert f(2) == 9
    assert Poly((0, 0, 0)).is_zero()


def test_gcd_and_xgcd():
    a = Poly((-1, 0, 1))
    b = Poly((1, 2, 1))
    assert gcd(a, b) == Poly((1, 1))
    g, s, t = xgcd(a, b)
    assert s * a + t * b == g


def test_cyclotomic():
    assert cyclotomic_poly(9) == Poly((1, 0, 0, 1, 0, 0, 1))
    assert cyclotomic_poly(12) == Poly((1, 0, -1, 0, 1))
    assert euler_phi(9) == 6
    for n in range(1, 40):
        assert cyclotomic_poly(n).degree == euler_phi(n)


def test_composed_sum_roots():
    # roots sqrt2 + sqrt3
    h = composed_sum(Poly((-2, 0, 1)), Poly((-3, 0, 1)), 1)
    assert h == Poly((1, 0, -10, 0, 1))


def test_is_prime():
    primes = [n for n in range(200) if is_prime(n)]
    assert primes == list(sympy.primerange(0, 200))
    assert is_prime(2 ** 61 - 1)
    assert not is_prime(3215031751)


@pytest.mark.parametrize("coeffs,p,degrees", [
    ((1, 0, 1), 5, [1, 1]),
    ((1, 0, 1), 3, [2]),
    ((1, 0, 1), 2, [1, 1]),
])
def test_factor_mod_p_small(coeffs, p, degrees):
    F = factor_mod_p(ModPoly(coeffs, p))
    assert F.degrees() == degrees
    assert F.expand() == ModPoly(coeffs, p)


def test_factor_mod_p_rejects_composite():
    with pytest.raises(CompositeModulus):
        factor_mod_p(ModPoly((1, 0, 1), 4))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=2, max_size=9),
       st.sampled_from([2, 3, 5, 7, 11, 13]))
def test_factor_mod_p_matches_sympy(coeffs, p):
    f = ModPoly(tuple(coeffs), p)
    if f.degree < 1:
        return
    F = factor_mod_p(f)
    assert F.expand() == f
    ref = sympy.Poly(list(reversed(f.coeffs)), X, modulus=p).factor_list()[1]
    assert sorted(g.degree() for g, m in ref for _ in range(m)) == F.degrees()


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-6, 6), min_size=2, max_size=4), min_size=1, max_size=4))
def test_factor_over_q_matches_sympy(parts):
    g = Poly((1,))
    for c in parts:
        g = g * Poly(c)
    if g.is_zero() or g.degree < 1:
        return
    F = factor_over_q(g)
    assert F.expand() == g
    ref = sympy.factor_list(to_sympy(g).as_expr())[1]
    assert sorted(sympy.Poly(f, X).degree() for f, m in ref for _ in range(m)) == F.degrees()


def test_factor_over_q_large_norm():
    # degree 16 norm of sqrt2 + sqrt3 + sqrt5 + sqrt7 splits into nothing smaller
    h = Poly((-2, 0, 1))
    for d in (3, 5, 7):
        h = composed_sum(h, Poly((-d, 0, 1)), 1)
    assert h.degree == 16
    assert is_irreducible_over_q(h)
    F = factor_over_q(h * Poly((-2, 0, 1)))
    assert F.degrees() == [2, 16]


def test_factorization_deterministic():
    rng = random.Random(3)
    for _ in range(5):
        f = ModPoly(tuple(rng.randint(0, 6) for _ in range(12)) + (1,), 7)
        assert factor_mod_p(f) == factor_mod_p(f)
