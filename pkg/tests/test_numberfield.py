import pytest
import sympy

from admissibility.algebra import Poly, cyclotomic_poly, euler_phi
from admissibility.numberfield import (
    IndexObstruction,
    NotIrreducible,
    NotIrreducibleOverK,
    NotMonic,
    adjoin_root,
    decompose_prime,
    field_from_coeffs,
    has_root_in_field,
    is_galois,
    is_isomorphic,
    p_decomposes,
)

from conftest import desc


def test_rejects_bad_polynomials():
    with pytest.raises(NotMonic):
        desc(2, 0, 1)
    with pytest.raises(NotIrreducible):
        desc(1, 0, -1)


@pytest.mark.parametrize("c", [(1, 0, 1), (1, 0, -7), (1, 0, -3, 1), (1, 0, 0, -2),
                               (1, 0, -26, 0, 1), (1, 1, 1, 1, 1)])
def test_discriminant_matches_sympy(c):
    K = desc(*c)
    x = sympy.Symbol("x")
    assert K.disc_defpoly == sympy.discriminant(sympy.Poly(c, x))


@pytest.mark.parametrize("c,p,pairs", [
    ((1, 0, 1), 2, ((2, 1),)),
    ((1, 0, 1), 5, ((1, 1), (1, 1))),
    ((1, 0, 1), 3, ((1, 2),)),
    ((1, 0, -7), 3, ((1, 1), (1, 1))),
    ((1, 0, -3, 1), 3, ((3, 1),)),
    ((1, 0, 0, -2), 5, ((1, 2), (1, 1))),
    ((1, 0, 0, 1, 0, 0, 1), 3, ((6, 1),)),
    ((1, 0, -5), 2, ((1, 2),)),
])
def test_decompositions(c, p, pairs):
    d = decompose_prime(desc(*c), p)
    assert d.pairs == pairs
    assert sum(e * f for e, f in d.pairs) == len(c) - 1


@pytest.mark.parametrize("m", [5, 7, 8, 9, 12, 15])
def test_cyclotomic_splitting(m):
    K = field_from_coeffs(cyclotomic_poly(m).coeffs)
    for p in [2, 3, 5, 7, 11, 13]:
        d = decompose_prime(K, p)
        pm, mm = 1, m
        while mm % p == 0:
            pm *= p
            mm //= p
        f = 1
        while pow(p, f, mm) != 1 % mm:
            f += 1
        e = euler_phi(pm)
        g = euler_phi(m) // (e * f)
        assert d.pairs == tuple([(e, f)] * g), (m, p)


def test_common_index_divisor_uses_maximal_order():
    # Q(sqrt6, sqrt7, sqrt-3): Dedekind fails at 3 for the Trager generator
    K = desc(1, 0, -26, 0, 1)
    L = adjoin_root(K, Poly((3, 0, 1)))
    assert L.degree == 8
    d = decompose_prime(L, 3)
    assert d.pairs == ((2, 1),) * 4
    assert d.method == "maximal-order"
    with pytest.raises(IndexObstruction):
        decompose_prime(L, 3, dedekind_only=True)


def test_index_divisor_two():
    # x^3 - x^2 - 2x - 8: 2 is a common index divisor and splits completely
    K = desc(1, -1, -2, -8)
    d = decompose_prime(K, 2)
    assert d.pairs == ((1, 1), (1, 1), (1, 1))
    assert d.method == "maximal-order"
    with pytest.raises(IndexObstruction):
        decompose_prime(K, 2, dedekind_only=True)


def test_roots_and_galois():
    Z9 = desc(1, 0, 0, 1, 0, 0, 1)
    assert has_root_in_field(Z9, Poly((1, -3, 0, 1)))
    assert has_root_in_field(Z9, Poly((1, 1, 1)))
    assert not has_root_in_field(Z9, Poly((1, 0, 1)))
    assert is_galois(Z9)
    assert is_galois(desc(1, 0, -3, 1))
    assert not is_galois(desc(1, 0, 0, -2))
    assert is_galois(desc(1, 0, -26, 0, 1))


def test_adjoin_root_and_isomorphism():
    Qi = desc(1, 0, 1)
    L = adjoin_root(Qi, Poly((-2, 0, 1)))
    assert L.degree == 4
    assert is_isomorphic(L, field_from_coeffs(cyclotomic_poly(8).coeffs))
    with pytest.raises(NotIrreducibleOverK):
        adjoin_root(Qi, Poly((1, 0, 0, 0, 1)))


def test_decomposes():
    assert p_decomposes(desc(1, 0, -7), 3)
    assert not p_decomposes(desc(1, 0, 1), 3)
