import pytest

from admissibility.algebra import Poly, is_irreducible_over_q
from admissibility.cyclotomic import (
    CompositeConductor,
    CyclotomicAutomorphism,
    alpha_min_poly,
    all_subgroups,
    fixed_field_subgroup,
    gaussian_period_min_poly,
    liedahl_condition,
    liedahl_violations,
    liedahl_witness,
)
from admissibility.numberfield import decompose_prime, field_from_coeffs, rationals

from conftest import desc


def test_period_of_nine():
    assert gaussian_period_min_poly(9, {1, 8}) == Poly((1, -3, 0, 1))


def test_quadratic_periods():
    # the quadratic subfield of Q(zeta_p) is Q(sqrt(p*)), p* = (-1)^((p-1)/2) p
    for p in (3, 5, 7, 11, 13):
        H = {a * a % p for a in range(1, p)}
        f = gaussian_period_min_poly(p, H)
        assert f.degree == 2
        disc = f.coeffs[1] ** 2 - 4 * f.coeffs[0] * f.coeffs[2]
        assert disc == (p if p % 4 == 1 else -p)


def test_composite_conductor_rejected():
    with pytest.raises(CompositeConductor):
        gaussian_period_min_poly(15, {1})


@pytest.mark.parametrize("p", [3, 5, 7])
def test_alpha_poly(p):
    f = alpha_min_poly(p)
    assert f.degree == p
    assert is_irreducible_over_q(f)
    K = field_from_coeffs(f.coeffs)
    assert decompose_prime(K, p).pairs == ((p, 1),)


def test_subgroup_lattice_of_27():
    subs = all_subgroups(27)
    # cyclic unit group of order 18 has one subgroup per divisor
    assert sorted(len(H) for H in subs) == [1, 2, 3, 6, 9, 18]


def test_fixed_field_degree():
    d = fixed_field_subgroup(CyclotomicAutomorphism(9, 4))
    assert d.degree == 2


def test_liedahl_violations_minimal():
    # sigma_(9,4) has order 3: it moves the cubic subfield and fixes Q(sqrt-3)
    v = liedahl_violations(9, 4)
    assert [s.degree for s in v] == [3]
    assert v[0].min_poly == Poly((1, -3, 0, 1))
    # sigma_(9,8) is complex conjugation: it moves Q(sqrt-3) only
    assert [s.degree for s in liedahl_violations(9, 8)] == [2]


def test_liedahl_condition():
    Z9 = desc(1, 0, 0, 1, 0, 0, 1)
    cubic = desc(1, 0, -3, 1)
    Q = rationals()
    assert liedahl_condition(Q, 9, 4)
    assert not liedahl_condition(Z9, 9, 4)
    assert not liedahl_condition(cubic, 9, 4)
    assert liedahl_condition(cubic, 9, 8)
    assert liedahl_witness(Z9, 9, 4).degree == 3
    assert liedahl_condition(Z9, 9, 1)
