import pytest

from admissibility.engine import (
    Budgets,
    Status,
    all_metacyclic_tame_predicate,
    decide,
    fast_path,
    largest_cyclotomic_level,
    replay,
    tame_admissible_metacyclic_p,
    verdict_consistent,
)
from admissibility.groups import build_from_metacyclic, direct_product, sylow_subgroup
from admissibility.groups.library import (
    abelian,
    alternating,
    cyclic_by_cyclic,
    dihedral,
    elementary_abelian,
    heisenberg,
    p_groups_of_order_dividing,
    quaternion,
    semidihedral,
    symmetric,
)
from admissibility.numberfield import rationals

from conftest import desc

S = Status


def run(G, K, mode="admissible", **kw):
    v = decide(G, K, mode, **kw)
    if v.status.definite:
        assert replay(v.certificate, G, K) == []
    return v


def test_spec_examples(fields):
    Q, Qi = fields["Q"], fields["Qi"]
    cubic = fields["cubic9"]
    m27 = cyclic_by_cyclic(3)
    assert run(dihedral(8), Q, "tame").status is S.TAMELY_ADMISSIBLE
    assert run(dihedral(8), Qi, "tame").status is S.NOT_TAMELY_ADMISSIBLE
    assert run(m27, cubic, "tame").status is S.NOT_TAMELY_ADMISSIBLE
    assert run(m27, fields["Qs7"]).status is S.ADMISSIBLE
    v = run(m27, cubic)
    assert v.status is S.NOT_ADMISSIBLE
    assert run(abelian(3), Q).status is S.ADMISSIBLE
    assert run(elementary_abelian(3, 3), fields["Qs5"]).status is S.NOT_ADMISSIBLE
    assert run(elementary_abelian(11, 2), fields["Qs5"]).status is S.ADMISSIBLE
    assert run(abelian(3), fields["Qs7"]).status is S.ADMISSIBLE
    assert run(quaternion(16), Qi).status is S.NOT_ADMISSIBLE
    assert run(semidihedral(16), fields["Qs2"]).status is S.NOT_ADMISSIBLE
    v = run(direct_product(dihedral(8), abelian(3)), Q, "tame")
    assert v.status is S.TAMELY_ADMISSIBLE


def test_metacyclic_c11_squared_over_qi(fields):
    # (Z/11)^2 = Z/11 x Z/11 is metacyclic, so 11 inert does not obstruct it
    v = run(elementary_abelian(11, 2), fields["Qi"])
    assert v.status is S.ADMISSIBLE


def test_theorem_tags(fields):
    assert decide(dihedral(8), fields["Qi"], "tame").theorem == "NEFTIN_T13"
    assert decide(semidihedral(16), fields["Qs2"]).theorem == "SD16_OBSTRUCTION"
    assert decide(quaternion(16), fields["Qi"]).theorem == "Q16_OBSTRUCTION"
    assert decide(elementary_abelian(3, 3), fields["Qs5"]).theorem == \
        "SCHACHER_METACYCLIC_NECESSITY"


def test_trivial_and_nonsolvable(fields):
    assert decide(abelian(), fields["Q"]).status.positive
    assert decide(alternating(5), fields["Q"]).status is S.UNDETERMINED
    # A5 has a Klein four Sylow 2-subgroup: metacyclic, so only Undetermined in tame mode
    assert decide(alternating(5), fields["Q"], "tame").status is S.UNDETERMINED
    # S4 x S4 has a non-metacyclic Sylow 2-subgroup
    assert decide(direct_product(symmetric(4), abelian(2, 2)), fields["Q"], "tame").status \
        is S.NOT_TAMELY_ADMISSIBLE


def test_bad_mode(fields):
    with pytest.raises(ValueError):
        decide(abelian(3), fields["Q"], "wild")


def test_budget_turns_into_undetermined(fields):
    v = decide(heisenberg(3), fields["s6s7"], budgets=Budgets(demuskin_order=10))
    assert v.status is S.UNDETERMINED
    assert "budget" in v.certificate.witnesses["cause"]


def test_tame_predicate(fields):
    for name in ("Q", "Qs5", "Z5", "Z6"):
        for p in (2, 3):
            assert all_metacyclic_tame_predicate(fields[name], p)[0], (name, p)
    assert not all_metacyclic_tame_predicate(fields["Qs2"], 2)[0]
    assert not all_metacyclic_tame_predicate(fields["Qi"], 2)[0]
    assert not all_metacyclic_tame_predicate(fields["Z9"], 3)[0]
    assert not all_metacyclic_tame_predicate(fields["cubic9"], 3)[0]


def test_cyclotomic_level(fields):
    assert largest_cyclotomic_level(fields["Z9"], 3) == 2
    assert largest_cyclotomic_level(fields["Z6"], 3) == 1
    assert largest_cyclotomic_level(fields["Qs7"], 3) == 0


def test_demuskin_branch(fields):
    K = fields["s6s7"]
    v = run(elementary_abelian(3, 3), K)
    assert v.status is S.ADMISSIBLE and v.theorem == "WILD_LOCAL_UNITY"
    assert (v.certificate.witnesses["n"], v.certificate.witnesses["s"]) == (4, 1)
    v = run(elementary_abelian(3, 5), K)
    assert v.status is S.NOT_ADMISSIBLE and v.theorem == "WILD_LOCAL_UNITY"


def test_replay_detects_tampering(fields):
    G, K = dihedral(8), fields["Qi"]
    v = decide(G, K, "tame")
    h, val = v.certificate.hypotheses_checked[0]
    v.certificate.hypotheses_checked[0] = (h, not val)
    assert replay(v.certificate, G, K)


SWEEP_FIELDS = ["Q", "Qi", "Qs2", "Qs5", "Qs7", "Z6", "cubic9", "Z9"]


@pytest.fixture(scope="module")
def small_groups():
    gs = [G for G in p_groups_of_order_dividing(3, 3) if G.order > 1]
    gs += [G for G in p_groups_of_order_dividing(2, 3) if G.order > 1]
    gs += [quaternion(16), semidihedral(16), dihedral(16)]
    return gs


def test_tame_implies_admissible(fields, small_groups):
    for name in SWEEP_FIELDS:
        K = fields[name]
        for G in small_groups:
            t = decide(G, K, "tame")
            a = decide(G, K)
            assert verdict_consistent(t, a), (name, G.name)
            if t.status is S.TAMELY_ADMISSIBLE:
                assert a.status is S.ADMISSIBLE, (name, G.name)


def test_sylow_coherence(fields):
    groups = [direct_product(dihedral(8), abelian(3)), symmetric(3), symmetric(4),
              direct_product(cyclic_by_cyclic(3), abelian(4)),
              build_from_metacyclic(7, 3, 0, 2)]
    for name in ("Q", "Qi", "cubic9", "Z6"):
        K = fields[name]
        for G in groups:
            t = decide(G, K, "tame").status
            parts = [decide(sylow_subgroup(G, p), K, "tame").status for p in G.prime_divisors]
            expect = all(s is S.TAMELY_ADMISSIBLE for s in parts)
            assert (t is S.TAMELY_ADMISSIBLE) == expect, (name, G.name)


def test_quotient_coherence(fields):
    # metacyclic families and their cyclic / smaller metacyclic quotients
    for name in SWEEP_FIELDS:
        K = fields[name]
        for G in [cyclic_by_cyclic(3), build_from_metacyclic(9, 9, 0, 4),
                  build_from_metacyclic(27, 3, 0, 10)]:
            if decide(G, K).status is not S.ADMISSIBLE:
                continue
            N = G.derived_subgroup
            for M in [N, G.frattini]:
                Q = G.quotient(M)
                assert decide(Q, K).status is not S.NOT_ADMISSIBLE, (name, G.name)


def test_fast_path_agreement(fields, small_groups):
    for name in ("Qs5", "Qs7", "Z6", "cubic9"):
        K = fields[name]
        for G in small_groups:
            fp = fast_path(G, K)
            if fp is None:
                continue
            v = decide(G, K, cross_check=False)
            if v.status.definite:
                assert v.status is fp.status, (name, G.name)


def test_certificate_json_round_trip(fields):
    import json
    v = decide(cyclic_by_cyclic(3), fields["cubic9"])
    text = json.dumps(v.to_json(), sort_keys=True)
    assert replay(json.loads(text), cyclic_by_cyclic(3), fields["cubic9"]) == []


def test_tame_metacyclic_direct(fields):
    v = tame_admissible_metacyclic_p(cyclic_by_cyclic(3), fields["Q"])
    assert v.status is S.TAMELY_ADMISSIBLE
    assert "presentation" in v.certificate.witnesses
