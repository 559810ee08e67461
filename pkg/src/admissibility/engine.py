"""Decision core: which theorem applies to (G, K), and a verdict with a
replayable certificate.

Every hypothesis a verdict rests on is recorded as a ``Check`` (a name plus
JSON arguments) together with the boolean it evaluated to.  Group checks
carry ``p``: the check is about the Sylow p-subgroup of the query group
(``p = None`` means the whole group).  ``replay`` re-evaluates every check
from scratch through the lower modules.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from math import gcd
from typing import Optional

from .algebra.poly import Poly, cyclotomic_poly
from .cyclotomic import (
    SQRT_MINUS_ONE,
    SQRT_MINUS_TWO,
    SQRT_TWO,
    DegenerateGenerator,
    alpha_min_poly,
    liedahl_witness,
)
from .groups.group import (
    DEFAULT_ORDER_BUDGET,
    FiniteGroup,
    GroupError,
    OrderBudgetExceeded,
    build_from_metacyclic,
    frattini_rank,
    sylow_subgroup,
)
from .groups.library import quaternion, semidihedral
from .groups.metacyclic import (
    MetacyclicPresentation,
    enumerate_metacyclic_presentations,
    is_metacyclic,
)
from .groups.search import (
    DEFAULT_DEMUSKIN_BUDGET,
    DEFAULT_DEMUSKIN_ORDER,
    DemuskinQuery,
    SearchBudgetExceeded,
    are_isomorphic,
    demuskin_quotient_test,
    generates,
    relation_value,
)
from .local import local_unity, wild_hypotheses
from .numberfield import (
    FieldError,
    IndexObstruction,
    NumberField,
    decompose_prime,
    has_root_in_field,
    is_galois,
    is_isomorphic,
    is_unramified,
    p_decomposes,
)

log = logging.getLogger(__name__)


class Status(str, Enum):
    ADMISSIBLE = "Admissible"
    NOT_ADMISSIBLE = "NotAdmissible"
    TAMELY_ADMISSIBLE = "TamelyAdmissible"
    NOT_TAMELY_ADMISSIBLE = "NotTamelyAdmissible"
    UNDETERMINED = "Undetermined"

    @property
    def definite(self):
        return self is not Status.UNDETERMINED

    @property
    def positive(self):
        return self in (Status.ADMISSIBLE, Status.TAMELY_ADMISSIBLE)


class ConsistencyError(AssertionError):
    """Two theorems gave opposite definite answers: a bug, never a verdict."""


@dataclass(frozen=True)
class Budgets:
    order: int = DEFAULT_ORDER_BUDGET
    demuskin: int = DEFAULT_DEMUSKIN_BUDGET
    demuskin_order: int = DEFAULT_DEMUSKIN_ORDER


@dataclass
class Certificate:
    theorem: str
    witnesses: dict = field(default_factory=dict)
    hypotheses_checked: list = field(default_factory=list)  # [(check dict, bool)]

    def check(self, name, value, **args):
        self.hypotheses_checked.append(({"check": name, **args}, bool(value)))
        return bool(value)

    def absorb(self, other: "Certificate"):
        for h in other.hypotheses_checked:
            if h not in self.hypotheses_checked:
                self.hypotheses_checked.append(h)

    def to_json(self):
        return {
            "theorem": self.theorem,
            "witnesses": self.witnesses,
            "hypotheses_checked": [[dict(h), v] for h, v in self.hypotheses_checked],
        }


@dataclass
class Verdict:
    status: Status
    certificate: Certificate

    @property
    def theorem(self):
        return self.certificate.theorem

    def to_json(self):
        out = {"status": self.status.value}
        out.update(self.certificate.to_json())
        return out


def _undetermined(cause, cert=None, **extra):
    cert = cert or Certificate("NONE")
    cert.witnesses.setdefault("cause", cause)
    cert.witnesses.update(extra)
    return Verdict(Status.UNDETERMINED, cert)


# -- small helpers -----------------------------------------------------------------

def _sylow(G: FiniteGroup, p):
    if p is None or (G.is_p_group and G.order > 1 and G.p == p):
        return G
    return sylow_subgroup(G, p)


def _poly_json(f: Poly):
    return [int(c) for c in f.coeffs]


def _dec_json(K, p):
    return [list(x) for x in decompose_prime(K, p).pairs]


def largest_cyclotomic_level(K: NumberField, p: int):
    """Largest n with zeta_(p^n) in K (n >= 1 always holds for p = 2)."""
    n = 0
    while True:
        # phi(p^(n+1)) must divide [K:Q]
        ph = (p - 1) * p ** n
        if K.degree % ph or not has_root_in_field(K, cyclotomic_poly(p ** (n + 1))):
            return n
        n += 1


_liedahl_cache = {}


def find_liedahl_presentation(P: FiniteGroup, K: NumberField, budget=DEFAULT_ORDER_BUDGET):
    """(witness presentation or None, all presentations tried).

    A presentation is Liedahl for K when K cap Q(zeta_e) is fixed by
    zeta_e -> zeta_e^q; only (e, q) matters, so that test is shared.
    """
    pres = enumerate_metacyclic_presentations(P, budget=budget)
    seen = {}
    for pr in pres:
        key = (pr.e, pr.q)
        if key not in seen:
            seen[key] = liedahl_witness(K, pr.e, pr.q) if pr.e > 2 else None
        if seen[key] is None:
            return pr, pres
    return None, pres


def all_metacyclic_tame_predicate(K: NumberField, p: int):
    """(every metacyclic p-group is tamely admissible over K, blocking polynomial)."""
    if p == 2:
        for g in (SQRT_MINUS_ONE, SQRT_TWO, SQRT_MINUS_TWO):
            if has_root_in_field(K, g):
                return False, g
        return True, None
    a = alpha_min_poly(p)
    if has_root_in_field(K, a):
        return False, a
    return True, None


# -- the metacyclic pipelines --------------------------------------------------------

def tame_admissible_metacyclic_p(G: FiniteGroup, K: NumberField, budgets=Budgets(), p=None):
    """Tame verdict for a metacyclic p-group via the Liedahl search."""
    q = G.p if p is None else p
    cert = Certificate("NEFTIN_T13")
    cert.check("is_metacyclic", True, p=q)
    try:
        pr, tried = find_liedahl_presentation(G, K, budgets.order)
    except OrderBudgetExceeded as exc:
        return _undetermined(str(exc), cert)
    if pr is not None:
        cert.witnesses["presentation"] = {str(q): pr.to_json()}
        cert.check("liedahl_presentation", True, p=q, **pr.to_json())
        return Verdict(Status.TAMELY_ADMISSIBLE, cert)
    cert.witnesses["exhausted"] = {str(q): [x.as_tuple() for x in tried]}
    cert.check("no_liedahl_presentation", True, p=q, count=len(tried))
    return Verdict(Status.NOT_TAMELY_ADMISSIBLE, cert)


def admissible_metacyclic_odd_p(G: FiniteGroup, K: NumberField, budgets=Budgets()):
    p = G.p
    if p == 2:
        raise ValueError("odd p only")
    cert = Certificate("LIEDAHL_T30")
    cert.check("is_metacyclic", True, p=p)
    dec = p_decomposes(K, p)
    cert.witnesses["decomposition"] = {str(p): _dec_json(K, p)}
    if cert.check("p_decomposes", dec, p=p):
        return Verdict(Status.ADMISSIBLE, cert)
    t = tame_admissible_metacyclic_p(G, K, budgets)
    if t.status is Status.UNDETERMINED:
        return _undetermined(t.certificate.witnesses.get("cause"), cert)
    cert.absorb(t.certificate)
    cert.witnesses.update(t.certificate.witnesses)
    ok = t.status is Status.TAMELY_ADMISSIBLE
    return Verdict(Status.ADMISSIBLE if ok else Status.NOT_ADMISSIBLE, cert)


_CLAUSE_TAGS = {"unramified": "LOCAL_NO_UNITY_i", "local_degree": "LOCAL_NO_UNITY_ii",
                "galois_degree": "LOCAL_NO_UNITY_iii"}


def wild_p_group(G: FiniteGroup, K: NumberField, budgets=Budgets()):
    """Admissibility of an odd p-group."""
    p = G.p
    if p == 2:
        raise ValueError("odd p only")
    meta = is_metacyclic(G) is not None
    dec = p_decomposes(K, p)
    if not dec:
        if not meta:
            cert = Certificate("SCHACHER_METACYCLIC_NECESSITY")
            cert.check("p_decomposes", False, p=p)
            cert.check("is_metacyclic", False, p=p)
            cert.witnesses["decomposition"] = {str(p): _dec_json(K, p)}
            return Verdict(Status.NOT_ADMISSIBLE, cert)
        return admissible_metacyclic_odd_p(G, K, budgets)
    if meta:
        return admissible_metacyclic_odd_p(G, K, budgets)

    wh = wild_hypotheses(K, p)
    d = frattini_rank(G)
    if wh.zeta_free:
        tag = _CLAUSE_TAGS.get(wh.clause, "WILD_ADM")
        cert = Certificate(tag)
        cert.check("p_decomposes", True, p=p)
        cert.check("zeta_free", True, p=p, clause=wh.clause)
        bound = wh.second_local_degree + 1
        cert.witnesses.update(d=d, bound=bound, decomposition={str(p): _dec_json(K, p)},
                              zeta_free_by=wh.clause)
        ok = cert.check("rank_at_most", d <= bound, p=p, bound=bound)
        return Verdict(Status.ADMISSIBLE if ok else Status.NOT_ADMISSIBLE, cert)

    cert = Certificate("WILD_LOCAL_UNITY")
    cert.check("p_decomposes", True, p=p)
    if not wh.galois:
        cert.check("is_galois", False)
        return _undetermined("zeta_p in the completions not settled for non-Galois K", cert,
                             notes=wh.notes)
    cert.check("is_galois", True)
    if has_root_in_field(K, cyclotomic_poly(p)):
        cert.check("zeta_in_field", True, p=p)
        return _undetermined("zeta_p lies in K: outside every available theorem", cert)
    cert.check("zeta_in_field", False, p=p)
    rep = wh.galois_profile
    s = rep.s_max
    n = rep.local_degree + 2
    cert.check("local_unity_level", True, p=p, s=s)
    query = DemuskinQuery(n, s)
    try:
        tup = demuskin_quotient_test(G, query, p, budgets.demuskin, budgets.demuskin_order)
    except SearchBudgetExceeded as exc:
        return _undetermined(str(exc), cert)
    cert.witnesses.update(n=n, s=s, d=d, commutator="[a,b] = a^-1 b^-1 a b",
                          decomposition={str(p): _dec_json(K, p)})
    if tup is None:
        cert.check("demuskin_none", True, p=p, n=n, s=s)
        return Verdict(Status.NOT_ADMISSIBLE, cert)
    cert.witnesses["demuskin_tuple"] = [int(x) for x in tup]
    cert.check("demuskin_witness", True, p=p, n=n, s=s, tuple=[int(x) for x in tup])
    return Verdict(Status.ADMISSIBLE, cert)


# -- obstructions ------------------------------------------------------------------

def _roots_of_unity_obstruction(G, K, primes):
    """Sylow P non-abelian of order <= p^(n+1), zeta_(p^n) in K, p not decomposing."""
    for p in primes:
        P = _sylow(G, p)
        if P.is_abelian or p_decomposes(K, p):
            continue
        n = largest_cyclotomic_level(K, p)
        if P.order <= p ** (n + 1):
            cert = Certificate("ROOTS_UNITY_OBSTRUCTION")
            cert.check("p_decomposes", False, p=p)
            cert.check("is_abelian", False, p=p)
            cert.check("zeta_in_field", True, p=p, level=n)
            cert.witnesses.update(p=p, level=n, sylow_order=P.order)
            return cert
    return None


def _schacher_obstruction(G, K, primes):
    for p in primes:
        if p_decomposes(K, p):
            continue
        P = _sylow(G, p)
        if is_metacyclic(P) is None:
            cert = Certificate("SCHACHER_METACYCLIC_NECESSITY")
            cert.check("p_decomposes", False, p=p)
            cert.check("is_metacyclic", False, p=p)
            cert.witnesses["decomposition"] = {str(p): _dec_json(K, p)}
            return cert
    return None


def _q16_sd16(G, K):
    """(tag, tame_obstructed, wild_obstructed) for G isomorphic to Q16 or SD16."""
    if G.order != 16:
        return None
    checks = [("Q16_OBSTRUCTION", quaternion(16), (SQRT_MINUS_ONE, SQRT_MINUS_TWO)),
              ("SD16_OBSTRUCTION", semidihedral(16), (SQRT_TWO,))]
    for tag, H, polys in checks:
        if are_isomorphic(G, H):
            root = next((g for g in polys if has_root_in_field(K, g)), None)
            if root is None:
                return None
            cert = Certificate(tag)
            cert.check("isomorphic_to", True, p=2, group=tag.split("_")[0])
            cert.check("has_root", True, poly=_poly_json(root))
            cert.witnesses["subfield_poly"] = _poly_json(root)
            return cert
    return None


# -- fast paths (specialised corollaries) --------------------------------------------

def fast_path(G: FiniteGroup, K: NumberField):
    """Verdict from a specialised corollary for an odd p-group, or None."""
    if G.order == 1 or not G.is_p_group:
        return None
    p = G.p
    if p == 2:
        return None
    n = K.degree
    meta = lambda: is_metacyclic(G) is not None  # noqa: E731
    d = frattini_rank(G)
    dec = decompose_prime(K, p)
    decomposes = len(dec.pairs) >= 2
    degs = dec.local_degrees
    galois = is_galois(K) if n > 1 else True

    def verdict(tag, ok, **w):
        cert = Certificate(tag)
        cert.check("p_decomposes", decomposes, p=p)
        cert.witnesses.update(d=d, decomposition={str(p): [list(x) for x in dec.pairs]}, **w)
        return Verdict(Status.ADMISSIBLE if ok else Status.NOT_ADMISSIBLE, cert)

    if n == 2:
        return verdict("QUADRATIC_COR", d <= 2 if decomposes else meta())
    if n == 3 and p != 3:
        return verdict("CUBIC_PROP", d <= 2 if decomposes else meta())
    if n == 4 and p != 3:
        return verdict("QUARTIC_PROP", d <= min(degs) + 1 if decomposes else meta())
    if not galois:
        return None
    if is_unramified(K, p):
        return verdict("GALOIS_COR", d <= degs[0] + 1 if decomposes else meta())
    if n & (n - 1) == 0:
        if not decomposes:
            return verdict("DEG_TWO_POWER_COR", meta())
        if degs[0] % (p - 1):
            return verdict("DEG_TWO_POWER_COR", d <= degs[0] + 1)
        return None
    if n % 2 == 1:
        if decomposes:
            return verdict("ODD_DEGREE_THM", d <= degs[0] + 1)
        if not meta():
            return verdict("ODD_DEGREE_THM", False)
        pr, _ = find_liedahl_presentation(G, K)
        return verdict("ODD_DEGREE_THM", pr is not None)
    return None


def _dihedral_general(G, K):
    """Z/p^2 x| Z/p over the degree-p subfield of Q(zeta_(p^2)), or over a field
    containing zeta_(p^2) where p does not decompose."""
    if not G.is_p_group or G.order == 1 or G.is_abelian:
        return None
    p = G.p
    if G.order != p ** 3 or G.element_orders.max() != p * p or is_metacyclic(G) is None:
        return None
    if p_decomposes(K, p):
        return None
    if K.degree == p and is_isomorphic(K, NumberField(alpha_min_poly(p), check=False)):
        return "DIHEDRAL_GENERAL_OBSTRUCTION"
    if p > 2 and largest_cyclotomic_level(K, p) >= 2:
        return "CYCLOTOMIC_COR"
    return None


# -- decide ----------------------------------------------------------------------

def decide(G: FiniteGroup, K: NumberField, mode="admissible", budgets=Budgets(),
           cross_check=True) -> Verdict:
    if mode not in ("admissible", "tame"):
        raise ValueError(f"unknown mode {mode!r}")
    try:
        if mode == "tame":
            v = _decide_tame(G, K, budgets)
        else:
            v = _decide_admissible(G, K, budgets, cross_check)
    except ConsistencyError:
        raise
    except (IndexObstruction, SearchBudgetExceeded, OrderBudgetExceeded, DegenerateGenerator,
            GroupError, FieldError) as exc:
        log.info("undetermined: %s", exc)
        return _undetermined(f"{type(exc).__name__}: {exc}")
    return v


def _decide_tame(G, K, budgets):
    if G.order == 1:
        return Verdict(Status.TAMELY_ADMISSIBLE, Certificate("TRIVIAL_GROUP"))
    primes = G.prime_divisors
    for p in primes:
        P = _sylow(G, p)
        if is_metacyclic(P) is None:
            cert = Certificate("SYLOW_META_NECESSITY")
            cert.check("is_metacyclic", False, p=p)
            return Verdict(Status.NOT_TAMELY_ADMISSIBLE, cert)
    cert = Certificate("NEFTIN_T13")
    if not cert.check("is_solvable", G.is_solvable):
        return _undetermined("tame criterion needs a solvable group", cert)
    presentations = {}
    for p in primes:
        P = _sylow(G, p)
        v = tame_admissible_metacyclic_p(P, K, budgets, p=p)
        if v.status is Status.UNDETERMINED:
            return v
        cert.absorb(v.certificate)
        _cross_check_tame(P, K, v)
        if v.status is Status.NOT_TAMELY_ADMISSIBLE:
            cert.witnesses.update(v.certificate.witnesses)
            return Verdict(Status.NOT_TAMELY_ADMISSIBLE, cert)
        presentations.update(v.certificate.witnesses["presentation"])
    cert.witnesses["presentation"] = presentations
    return Verdict(Status.TAMELY_ADMISSIBLE, cert)


def _cross_check_tame(P, K, v):
    p = P.p
    ok, _ = all_metacyclic_tame_predicate(K, p)
    if ok and v.status is Status.NOT_TAMELY_ADMISSIBLE:
        raise ConsistencyError(f"every metacyclic {p}-group should be tame over {K.name}")
    if p == 2:
        qs = _q16_sd16(P, K)
        if qs is not None and v.status is Status.TAMELY_ADMISSIBLE:
            raise ConsistencyError(f"{qs.theorem} contradicts a Liedahl presentation")


def _decide_admissible(G, K, budgets, cross_check):
    if G.order == 1:
        return Verdict(Status.ADMISSIBLE, Certificate("TRIVIAL_GROUP"))
    primes = G.prime_divisors
    ob = _schacher_obstruction(G, K, primes)
    if ob is not None:
        return Verdict(Status.NOT_ADMISSIBLE, ob)
    if not G.is_solvable:
        return _undetermined("non-solvable group: no applicable criterion")
    if G.is_p_group:
        v = _decide_p_group(G, K, budgets)
        if cross_check:
            v = _reconcile(G, K, v)
        return v
    if G.is_nilpotent:
        return _nilpotent(G, K, budgets, cross_check)
    return _solvable(G, K, budgets)


def _reconcile(G, K, v):
    alt = []
    fp = fast_path(G, K)
    if fp is not None:
        alt.append(fp)
    tag = _dihedral_general(G, K)
    if tag is not None:
        c = Certificate(tag)
        c.check("p_decomposes", False, p=G.p)
        alt.append(Verdict(Status.NOT_ADMISSIBLE, c))
    ru = _roots_of_unity_obstruction(G, K, [G.p])
    if ru is not None:
        alt.append(Verdict(Status.NOT_ADMISSIBLE, ru))
    for a in alt:
        if v.status.definite and a.status != v.status:
            raise ConsistencyError(
                f"{a.theorem} says {a.status.value}, {v.theorem} says {v.status.value} "
                f"for |G|={G.order} over {K.name}")
    if not v.status.definite and alt:
        a = alt[0]
        a.certificate.witnesses["general_pipeline"] = v.certificate.witnesses.get("cause")
        return a
    if alt:
        v.certificate.witnesses["cross_checked"] = sorted({a.theorem for a in alt})
    return v


def _decide_p_group(G, K, budgets):
    p = G.p
    if p != 2:
        return wild_p_group(G, K, budgets)
    meta = is_metacyclic(G) is not None
    dec = p_decomposes(K, p)
    if not dec:
        qs = _q16_sd16(G, K)
        if qs is not None:
            qs.check("p_decomposes", False, p=2)
            return Verdict(Status.NOT_ADMISSIBLE, qs)
        ru = _roots_of_unity_obstruction(G, K, [2])
        if ru is not None:
            return Verdict(Status.NOT_ADMISSIBLE, ru)
    if not meta:
        return _undetermined("2 decomposes and G is not metacyclic: no criterion for p = 2")
    t = tame_admissible_metacyclic_p(G, K, budgets)
    if t.status is Status.TAMELY_ADMISSIBLE:
        # tamely admissible groups are admissible
        t.certificate.witnesses["via"] = "tame"
        return Verdict(Status.ADMISSIBLE, t.certificate)
    return _undetermined("no Liedahl presentation and no obstruction applies for p = 2",
                         t.certificate)


def _nilpotent(G, K, budgets, cross_check):
    cert = Certificate("NILPOTENT_REDUCTION")
    cert.check("is_nilpotent", True)
    parts = {}
    statuses = []
    for p in G.prime_divisors:
        P = _sylow(G, p)
        v = _decide_admissible(P, K, budgets, cross_check)
        parts[str(p)] = v.to_json()
        statuses.append(v.status)
        for h, val in v.certificate.hypotheses_checked:
            h = dict(h)
            h.setdefault("p", p)
            if h.get("p") is None:
                h["p"] = p
            cert.hypotheses_checked.append((h, val))
    cert.witnesses["sylow"] = parts
    if any(s is Status.NOT_ADMISSIBLE for s in statuses):
        return Verdict(Status.NOT_ADMISSIBLE, cert)
    if all(s is Status.ADMISSIBLE for s in statuses):
        return Verdict(Status.ADMISSIBLE, cert)
    return _undetermined("some Sylow subgroup is undetermined", cert)


def _solvable(G, K, budgets):
    primes = G.prime_divisors
    ru = _roots_of_unity_obstruction(G, K, primes)
    if ru is not None:
        return Verdict(Status.NOT_ADMISSIBLE, ru)
    # tame sufficiency
    t = _decide_tame(G, K, budgets)
    if t.status is Status.TAMELY_ADMISSIBLE:
        t.certificate.witnesses["via"] = "tame"
        return Verdict(Status.ADMISSIBLE, t.certificate)
    galois = is_galois(K)
    if galois and G.order % 2:
        v = _solvable_prop(G, K)
        if v is not None:
            return v
        v = _half_rank_prop(G, K)
        if v is not None:
            return v
    return _undetermined("solvable non-nilpotent group outside the sufficient criteria")


def _solvable_prop(G, K):
    cert = Certificate("SOLVABLE_PROP")
    cert.check("is_galois", True)
    cert.check("odd_order", True)
    for p in G.prime_divisors:
        if not cert.check("p_decomposes", p_decomposes(K, p), p=p):
            return None
        unr = is_unramified(K, p)
        if not (unr or K.degree % (p - 1)):
            return None
        cert.check("unramified_or_coprime", True, p=p)
        bound = decompose_prime(K, p).local_degrees[0] + 1
        if not cert.check("rank_at_most", frattini_rank(_sylow(G, p)) <= bound, p=p, bound=bound):
            return None
    return Verdict(Status.ADMISSIBLE, cert)


def _half_rank_prop(G, K):
    cert = Certificate("SOLVABLE_HALF_RANK_PROP")
    cert.check("is_galois", True)
    cert.check("odd_order", True)
    for p in G.prime_divisors:
        if not cert.check("p_decomposes", p_decomposes(K, p), p=p):
            return None
        if cert.check("zeta_in_field", has_root_in_field(K, cyclotomic_poly(p)), p=p):
            return None
        deg = decompose_prime(K, p).local_degrees[0]
        if 2 * (frattini_rank(_sylow(G, p)) - 1) > deg:
            return None
        cert.check("half_rank_at_most", True, p=p, local_degree=deg)
    return Verdict(Status.ADMISSIBLE, cert)


# -- replay ---------------------------------------------------------------------------

def _r_decomposes(G, K, b, p):
    return p_decomposes(K, p)


def _r_metacyclic(G, K, b, p=None):
    return is_metacyclic(_sylow(G, p)) is not None


def _r_liedahl(G, K, b, p, e, f, i, q):
    P = _sylow(G, p)
    H = build_from_metacyclic(e, f, i, q, budget=b.order)
    return are_isomorphic(P, H) and (e <= 2 or liedahl_witness(K, e, q) is None)


def _r_no_liedahl(G, K, b, p, count):
    pr, tried = find_liedahl_presentation(_sylow(G, p), K, b.order)
    return pr is None and len(tried) == count


def _r_zeta_free(G, K, b, p, clause):
    wh = wild_hypotheses(K, p)
    return bool(wh.zeta_free) and wh.clause == clause


def _r_rank(G, K, b, p, bound):
    return frattini_rank(_sylow(G, p)) <= bound


def _r_half_rank(G, K, b, p, local_degree):
    return (decompose_prime(K, p).local_degrees[0] == local_degree
            and 2 * (frattini_rank(_sylow(G, p)) - 1) <= local_degree)


def _r_zeta_in_field(G, K, b, p, level=None):
    if level is None:
        return has_root_in_field(K, cyclotomic_poly(p))
    return largest_cyclotomic_level(K, p) == level


def _r_local_unity(G, K, b, p, s):
    return local_unity(K, p).s_max == s


def _r_demuskin_witness(G, K, b, p, n, s, tuple):
    P = _sylow(G, p)
    return len(tuple) == n and relation_value(P, tuple, p, s) == 0 and generates(P, tuple)


def _r_demuskin_none(G, K, b, p, n, s):
    return demuskin_quotient_test(_sylow(G, p), DemuskinQuery(n, s), p,
                                  b.demuskin, b.demuskin_order) is None


def _r_isomorphic(G, K, b, p, group):
    H = {"Q16": quaternion(16), "SD16": semidihedral(16)}[group]
    return are_isomorphic(_sylow(G, p), H)


def _r_has_root(G, K, b, poly):
    return has_root_in_field(K, Poly(poly))


def _r_unram_or_coprime(G, K, b, p):
    return is_unramified(K, p) or bool(K.degree % (p - 1))


REPLAY = {
    "p_decomposes": _r_decomposes,
    "is_metacyclic": _r_metacyclic,
    "liedahl_presentation": _r_liedahl,
    "no_liedahl_presentation": _r_no_liedahl,
    "zeta_free": _r_zeta_free,
    "rank_at_most": _r_rank,
    "half_rank_at_most": _r_half_rank,
    "zeta_in_field": _r_zeta_in_field,
    "local_unity_level": _r_local_unity,
    "demuskin_witness": _r_demuskin_witness,
    "demuskin_none": _r_demuskin_none,
    "isomorphic_to": _r_isomorphic,
    "has_root": _r_has_root,
    "unramified_or_coprime": _r_unram_or_coprime,
    "is_galois": lambda G, K, b: is_galois(K),
    "is_solvable": lambda G, K, b: G.is_solvable,
    "is_nilpotent": lambda G, K, b: G.is_nilpotent,
    "odd_order": lambda G, K, b: G.order % 2 == 1,
    "is_abelian": lambda G, K, b, p=None: _sylow(G, p).is_abelian,
}


def replay(cert, G: FiniteGroup, K: NumberField, budgets=Budgets()):
    """Re-evaluate every recorded hypothesis; returns the list of mismatches."""
    items = cert.hypotheses_checked if isinstance(cert, Certificate) else cert["hypotheses_checked"]
    bad = []
    for h, expected in items:
        h = dict(h)
        name = h.pop("check")
        fn = REPLAY.get(name)
        if fn is None:
            bad.append((name, "no replay rule"))
            continue
        got = bool(fn(G, K, budgets, **h))
        if got != bool(expected):
            bad.append((name, h, expected, got))
    return bad


def verdict_consistent(tame: Verdict, adm: Verdict):
    """Tame-admissible forces admissible; not admissible forces not tame."""
    if tame.status is Status.TAMELY_ADMISSIBLE and adm.status is Status.NOT_ADMISSIBLE:
        return False
    if adm.status is Status.NOT_ADMISSIBLE and tame.status is Status.TAMELY_ADMISSIBLE:
        return False
    return True
