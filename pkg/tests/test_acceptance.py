"""Acceptance criteria 1-10.  Each test carries a ``criterion`` mark; the
conftest prints one PASS/FAIL line per criterion at the end of the run."""

import subprocess
import sys

import pytest

from admissibility.cli import QuerySpec, load_corpus
from admissibility.cyclotomic import alpha_min_poly, gaussian_period_min_poly
from admissibility.engine import Status, all_metacyclic_tame_predicate, decide, replay
from admissibility.groups import (
    DemuskinQuery,
    brute_force_rank,
    d_of_group,
    demuskin_quotient_test,
    is_metacyclic,
    sylow_subgroup,
)
from admissibility.groups.library import (
    abelian,
    cyclic_by_cyclic,
    dihedral,
    elementary_abelian,
    p_groups_of_order_dividing,
    quaternion,
    semidihedral,
)
from admissibility.algebra import Poly, is_irreducible_over_q
from admissibility.numberfield import decompose_prime, field_from_coeffs, p_decomposes

from conftest import desc

S = Status


def corpus_p_groups(max_order):
    """Distinct p-groups of the corpus (query groups and their Sylow subgroups)."""
    out, seen = [], set()
    for case in load_corpus():
        G = QuerySpec.from_json(case["query"]).build_group()
        cands = [G] if G.is_p_group else [sylow_subgroup(G, p) for p in G.prime_divisors]
        for H in cands:
            key = (H.order, tuple(sorted(H.element_orders.tolist())), d_of_group(H))
            if H.order > 1 and H.order <= max_order and key not in seen:
                seen.add(key)
                out.append(H)
    return out


@pytest.mark.criterion(1)
def test_c1_d8(fields):
    D8 = dihedral(8)
    assert decide(D8, fields["Qi"], "tame").status is S.NOT_TAMELY_ADMISSIBLE
    assert decide(D8, fields["Q"], "tame").status is S.TAMELY_ADMISSIBLE


@pytest.mark.criterion(2)
def test_c2_c9_by_c3(fields):
    G = cyclic_by_cyclic(3)
    assert decide(G, fields["Z9"]).status is S.NOT_ADMISSIBLE
    assert decide(G, fields["cubic9"]).status is S.NOT_ADMISSIBLE
    assert decide(G, fields["Qs7"]).status is S.ADMISSIBLE


@pytest.mark.criterion(3)
def test_c3_q16_sd16(fields):
    Q16, SD16 = quaternion(16), semidihedral(16)
    assert decide(Q16, fields["Qi"]).status is S.NOT_ADMISSIBLE
    assert decide(Q16, fields["Qsm2"]).status is S.NOT_ADMISSIBLE
    assert decide(SD16, fields["Qs2"]).status is S.NOT_ADMISSIBLE
    for G in (Q16, SD16):
        assert decide(G, fields["Q"], "tame").status is S.TAMELY_ADMISSIBLE


@pytest.mark.criterion(4)
def test_c4_tame_predicate(fields):
    for name in ("Q", "Qs5", "Z5", "Z6"):
        for p in (2, 3):
            assert all_metacyclic_tame_predicate(fields[name], p)[0], (name, p)
    for name, p in (("Qs2", 2), ("Qi", 2), ("Z9", 3), ("cubic9", 3)):
        assert not all_metacyclic_tame_predicate(fields[name], p)[0], (name, p)


@pytest.mark.criterion(5)
def test_c5_quadratic_sweep():
    groups = [G for G in p_groups_of_order_dividing(3, 4) if d_of_group(G) <= 3]
    assert len(groups) == 23  # 24 groups of order dividing 81, only (Z/3)^4 has d = 4
    bad = []
    for d in (1, 2, 3, 5, 7):
        for sign in (1, -1):
            if d == 1 and sign == 1:
                continue
            K = desc(1, 0, -sign * d)
            dec = p_decomposes(K, 3)
            for G in groups:
                v = decide(G, K, cross_check=False)
                expect = d_of_group(G) <= 2 if dec else is_metacyclic(G) is not None
                got = {S.ADMISSIBLE: True, S.NOT_ADMISSIBLE: False}.get(v.status)
                if got != expect:
                    bad.append((sign * d, G.name, v.status.value, expect))
    assert bad == []


@pytest.mark.criterion(6)
def test_c6_gaussian_periods():
    assert gaussian_period_min_poly(9, {1, 8}) == Poly((1, -3, 0, 1))
    for p in (3, 5, 7):
        f = alpha_min_poly(p)
        assert f.degree == p and is_irreducible_over_q(f)
        assert decompose_prime(field_from_coeffs(f.coeffs), p).pairs == ((p, 1),)


@pytest.mark.criterion(7)
def test_c7_frattini_rank():
    groups = corpus_p_groups(128)
    for n in (8, 16, 32, 64, 128):
        groups += [dihedral(n), quaternion(n)] + ([semidihedral(n)] if n >= 16 else [])
    groups += [cyclic_by_cyclic(3), cyclic_by_cyclic(5)]
    groups += [abelian(*t) for t in [(2, 2, 2, 2), (2, 2, 2, 2, 2), (2,) * 6, (4, 2, 2, 2), (4, 4, 2, 2),
                                     (8, 4, 2, 2), (16, 8), (9, 3, 3), (3, 3, 3, 3), (27, 3),
                                     (5, 5, 5), (25, 5)]]
    bad = [G.name for G in groups if d_of_group(G) != brute_force_rank(G)]
    assert bad == []


@pytest.mark.criterion(8)
def test_c8_free_quotient():
    bad = []
    for G in corpus_p_groups(243):
        d = d_of_group(G)
        for n in (2, 4):
            got = demuskin_quotient_test(G, DemuskinQuery(n, None), G.p) is not None
            if got != (d <= n):
                bad.append((G.name, n))
    assert bad == []


@pytest.mark.criterion(9)
def test_c9_demuskin():
    for p, n in ((2, 4), (2, 6), (3, 4), (3, 6)):
        for s in (1, 2):
            assert demuskin_quotient_test(elementary_abelian(p, n), DemuskinQuery(n, s), p) \
                is not None
        assert demuskin_quotient_test(elementary_abelian(p, n + 1), DemuskinQuery(n, 1), p) is None
    meta = [G for G in corpus_p_groups(10 ** 6) if is_metacyclic(G) is not None]
    assert meta
    for G in meta:
        assert demuskin_quotient_test(G, DemuskinQuery(4, 1), G.p) is not None, G.name


@pytest.mark.criterion(10)
def test_c10_determinism():
    cmd = [sys.executable, "-m", "admissibility.cli", "corpus", "--json"]
    a = subprocess.run(cmd, capture_output=True, text=True)
    b = subprocess.run(cmd, capture_output=True, text=True)
    assert a.returncode == 0, a.stdout[-2000:]
    assert a.stdout and a.stdout == b.stdout


def test_corpus_replays():
    # every definite corpus verdict replays, and every case matches its expectation
    for case in load_corpus():
        q = QuerySpec.from_json(case["query"])
        G, K = q.build_group(), q.build_field()
        v = decide(G, K, q.mode)
        assert v.status.value == case["expected"], case["id"]
        if v.status.definite:
            assert replay(v.certificate, G, K) == [], case["id"]
