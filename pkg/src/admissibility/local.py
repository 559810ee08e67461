"""Local data at a rational prime: place profiles and roots of unity in completions."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .algebra.poly import cyclotomic_poly, euler_phi
from .numberfield import (
    NotGaloisField,
    NumberField,
    compositum_fields,
    decompose_prime,
    has_root_in_field,
    is_galois,
)


@dataclass(frozen=True)
class LocalPlaceProfile:
    p: int
    e: int
    f: int

    @property
    def local_degree(self):
        return self.e * self.f


@dataclass(frozen=True)
class LocalUnityReport:
    p: int
    s_max: int
    method: str  # Unramified | DegreeObstruction | CompositumTest | GlobalRoot
    local_degree: int
    e: int

    def to_json(self):
        return {"p": self.p, "s_max": self.s_max, "method": self.method,
                "local_degree": self.local_degree, "e": self.e}


def local_degree_profile(K: NumberField, p: int):
    return [LocalPlaceProfile(p, e, f) for e, f in decompose_prime(K, p).pairs]


def _zeta_test(K, p, s):
    """(answer, method) for zeta_(p^s) in K_p, K Galois."""
    if has_root_in_field(K, cyclotomic_poly(p ** s)):
        return True, "GlobalRoot"
    prof = local_degree_profile(K, p)
    e, f = prof[0].e, prof[0].f
    if e == 1:
        return False, "Unramified"
    # Q_p(zeta_(p^s)) is totally ramified of degree phi(p^s), so phi(p^s) | e
    if e % euler_phi(p ** s):
        return False, "DegreeObstruction"
    L = compositum_fields(K, cyclotomic_poly(p ** s))[0]
    dL = decompose_prime(L, p).pairs[0]
    return dL[0] * dL[1] == e * f, "CompositumTest"


def zeta_in_completion(K: NumberField, p: int, s: int = 1) -> bool:
    return zeta_in_completion_report(K, p, s)[0]


def zeta_in_completion_report(K, p, s=1):
    if p == 2:
        raise ValueError("only odd p is supported")
    if s < 1:
        raise ValueError("s must be positive")
    if not is_galois(K):
        raise NotGaloisField(f"{K.name} is not Galois")
    return K._memo.get_or_compute(("zeta", p, s), lambda: _zeta_test(K, p, s))


def local_unity(K: NumberField, p: int) -> LocalUnityReport:
    """Largest s with zeta_(p^s) in K_p (0 if none), K Galois, p odd."""
    prof = local_degree_profile(K, p)
    e, deg = prof[0].e, prof[0].local_degree
    s, method = 0, None
    while True:
        # phi(p^(s+1)) must divide e <= [K:Q]; beyond that nothing can hold
        if euler_phi(p ** (s + 1)) > K.degree:
            if method is None:
                method = "DegreeObstruction"
            break
        ok, how = zeta_in_completion_report(K, p, s + 1)
        if method is None or not ok:
            method = how
        if not ok:
            break
        s += 1
    return LocalUnityReport(p, s, method, deg, e)


@dataclass
class WildHypotheses:
    p: int
    decomposes: bool
    zeta_free: Optional[bool]
    clause: Optional[str]
    second_local_degree: Optional[int]
    local_degrees: list
    ramification: list
    galois: Optional[bool] = None
    galois_profile: Optional[LocalUnityReport] = None
    notes: list = field(default_factory=list)

    def to_json(self):
        return {
            "p": self.p, "decomposes": self.decomposes, "zeta_free": self.zeta_free,
            "clause": self.clause, "second_local_degree": self.second_local_degree,
            "local_degrees": self.local_degrees, "ramification": self.ramification,
            "galois": self.galois,
            "galois_profile": self.galois_profile.to_json() if self.galois_profile else None,
        }


def wild_hypotheses(K: NumberField, p: int) -> WildHypotheses:
    dec = decompose_prime(K, p)
    degs = [e * f for e, f in dec.pairs]
    es = [e for e, _ in dec.pairs]
    out = WildHypotheses(p, len(degs) >= 2, None, None,
                         degs[1] if len(degs) >= 2 else None, degs, es)
    if all(e == 1 for e in es):
        out.zeta_free, out.clause = True, "unramified"
        return out
    if all(d % (p - 1) for d in degs):
        out.zeta_free, out.clause = True, "local_degree"
        return out
    if all(e % (p - 1) for e in es):
        out.zeta_free, out.clause = True, "ramification_index"
        return out
    out.galois = is_galois(K)
    if out.galois and K.degree % (p - 1):
        out.zeta_free, out.clause = True, "galois_degree"
        return out
    if out.galois and p != 2:
        rep = local_unity(K, p)
        out.galois_profile = rep
        out.zeta_free, out.clause = rep.s_max == 0, rep.method
        return out
    out.notes.append("completions not Galois-conjugate; local roots of unity left open")
    return out
