import pytest

from admissibility.local import local_unity, wild_hypotheses, zeta_in_completion
from admissibility.numberfield import NotGaloisField

from conftest import desc


def test_zeta_in_completion():
    Z9 = desc(1, 0, 0, 1, 0, 0, 1)
    assert zeta_in_completion(Z9, 3, 1)
    assert zeta_in_completion(Z9, 3, 2)
    assert not zeta_in_completion(Z9, 3, 3)
    # Q(sqrt-3) contains zeta_3, Q(sqrt 6, sqrt 7) contains it 3-adically
    assert zeta_in_completion(desc(1, 1, 1), 3, 1)
    biq = desc(1, 0, -26, 0, 1)
    assert zeta_in_completion(biq, 3, 1)
    assert not zeta_in_completion(desc(1, 0, -7), 3, 1)


def test_local_unity_levels():
    rep = local_unity(desc(1, 0, -26, 0, 1), 3)
    assert (rep.s_max, rep.local_degree, rep.e) == (1, 2, 2)
    assert local_unity(desc(1, 0, 0, 1, 0, 0, 1), 3).s_max == 2
    assert local_unity(desc(1, 0, -7), 3).s_max == 0


def test_non_galois_rejected():
    with pytest.raises(NotGaloisField):
        zeta_in_completion(desc(1, 0, 0, -2), 3, 1)
    with pytest.raises(ValueError):
        zeta_in_completion(desc(1, 0, 1), 2, 1)


@pytest.mark.parametrize("c,p,clause", [
    ((1, 0, -7), 3, "unramified"),
    ((1, 0, -3, 1), 3, "local_degree"),
    ((1, 1, 1, 1, 1), 7, "unramified"),
])
def test_zeta_free_clauses(c, p, clause):
    wh = wild_hypotheses(desc(*c), p)
    assert wh.zeta_free
    assert wh.clause == clause


def test_clause_ramification_index():
    # Q(sqrt 2, sqrt 5) at 5: e = 2, f = 2, local degree 4 = p - 1
    wh = wild_hypotheses(desc(1, 0, -14, 0, 9), 5)
    assert (wh.zeta_free, wh.clause) == (True, "ramification_index")
    assert wh.local_degrees == [4]


def test_not_zeta_free():
    wh = wild_hypotheses(desc(1, 0, -26, 0, 1), 3)
    assert wh.decomposes
    assert not wh.zeta_free
    assert wh.galois_profile.s_max == 1
