"""Subfields of prime-power cyclotomic fields.

Subfields of Q(zeta_e) correspond to subgroups H of (Z/e)^x; the field fixed
by H is generated by a Gaussian period, whose minimal polynomial is computed
exactly in the group ring Z[C_e] and then reduced modulo Phi_e.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .algebra import _dense as dn
from .algebra.finite_field import prime_factors
from .algebra.poly import Poly, cyclotomic_poly, euler_phi
from .algebra.poly import gcd as gcd_poly


class CompositeConductor(ValueError):
    pass


class DegenerateGenerator(ArithmeticError):
    pass


SQRT_MINUS_ONE = Poly((1, 0, 1))
SQRT_TWO = Poly((-2, 0, 1))
SQRT_MINUS_TWO = Poly((2, 0, 1))


def prime_of_power(e):
    ps = prime_factors(e)
    if len(ps) != 1:
        raise CompositeConductor(f"conductor {e} is not a prime power")
    return ps[0]


@dataclass(frozen=True)
class CyclotomicAutomorphism:
    e: int
    q: int

    def __post_init__(self):
        if self.e < 1 or gcd(self.q, self.e) != 1:
            raise ValueError(f"sigma_(e,q) needs gcd(q, e) = 1, got e={self.e}, q={self.q}")
        object.__setattr__(self, "q", self.q % self.e if self.e > 1 else 0)


@dataclass(frozen=True)
class SubfieldDescriptor:
    e: int
    subgroup: tuple
    min_poly: Poly

    @property
    def degree(self):
        return self.min_poly.degree

    def to_json(self):
        return {"e": self.e, "subgroup": list(self.subgroup), "min_poly": list(self.min_poly.coeffs)}


def units(e):
    return [a for a in range(1, e) if gcd(a, e) == 1] if e > 1 else [0]


def generated_subgroup(e, gens):
    if e <= 2:
        return (1 % e,)
    out = {1}
    frontier = [1]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g % e
                if y not in out:
                    out.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def all_subgroups(e):
    """All subgroups of (Z/e)^x for a prime power e (rank at most two)."""
    if e <= 2:
        return ((1 % e,),)
    cyclic = {generated_subgroup(e, [a]) for a in units(e)}
    subs = set(cyclic)
    for A in cyclic:
        for B in cyclic:
            subs.add(generated_subgroup(e, list(A) + list(B)))
    return tuple(sorted(subs, key=lambda H: (len(H), H)))


def _period_poly(e, H, t):
    """prod over cosets c*H of (X - eta_c), reduced mod Phi_e; eta_c in Z[C_e]."""
    U = units(e)
    Hs = set(H)
    reps, seen = [], set()
    for c in U:
        if c not in seen:
            reps.append(c)
            seen.update(c * h % e for h in H)
    # coefficients of the product live in Z[C_e]: vectors of length e
    poly = [[1] + [0] * (e - 1)]  # list of group-ring coefficients, ascending in X
    for c in reps:
        eta = [0] * e
        for h in Hs:
            eta[c * h % e] += 1
            if t:
                eta[2 * c * h % e] += t
        # multiply poly by (X - eta)
        new = [[0] * e for _ in range(len(poly) + 1)]
        for k, a in enumerate(poly):
            for i in range(e):
                new[k + 1][i] += a[i]
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(eta):
                        if bj:
                            new[k][(i + j) % e] -= ai * bj
        poly = new
    phi = list(cyclotomic_poly(e).coeffs)
    out = []
    for a in poly:
        r = dn.divmod_exact_lc(dn.trim(list(a)), phi)[1]
        if len(r) > 1:
            raise ArithmeticError("period polynomial coefficient is not rational")
        out.append(r[0] if r else 0)
    return Poly(out)


def _reduce_conductor(e, H):
    """Shrink e while the fixed field already lies in Q(zeta_(e/p))."""
    p = prime_of_power(e)
    while e > 2:
        e2 = e // p
        if e2 == 1 or (p == 2 and e2 == 2):
            # Q(zeta_p) -> Q only if H is everything
            if len(H) == len(units(e)):
                return 1, (0,)
            return e, H
        kernel = [a for a in units(e) if a % e2 == 1]
        if not set(kernel) <= set(H):
            return e, H
        e, H = e2, tuple(sorted({h % e2 for h in H}))
    return e, H


@lru_cache(maxsize=None)
def _min_poly_cached(e, H):
    p = prime_of_power(e) if e > 1 else None
    if not set(H) <= set(units(e)) or 1 % e not in H:
        raise ValueError("H must be a subgroup of (Z/e)^x")
    if tuple(sorted(generated_subgroup(e, list(H)))) != tuple(sorted(H)):
        raise ValueError("H is not closed under multiplication")
    e1, H1 = _reduce_conductor(e, H) if p else (1, (0,))
    if e1 <= 2:
        return Poly((-1, 1))
    for t in range(0, 17):
        f = _period_poly(e1, H1, t)
        if gcd_poly(f, f.derivative()).degree == 0:
            return f
    raise DegenerateGenerator(f"no period generator for e={e}, H={H}")


def gaussian_period_min_poly(e: int, H) -> Poly:
    H = tuple(sorted({h % e for h in H})) if e > 1 else (0,)
    if e > 1:
        prime_of_power(e)
    return _min_poly_cached(e, H)


def fixed_field_subgroup(sigma: CyclotomicAutomorphism) -> SubfieldDescriptor:
    H = generated_subgroup(sigma.e, [sigma.q])
    return SubfieldDescriptor(sigma.e, H, gaussian_period_min_poly(sigma.e, H))


def subfield(e, H) -> SubfieldDescriptor:
    H = tuple(sorted(H))
    return SubfieldDescriptor(e, H, gaussian_period_min_poly(e, H))


@lru_cache(maxsize=None)
def alpha_min_poly(p: int) -> Poly:
    """Minimal polynomial of a generator of the degree-p subfield of Q(zeta_(p^2))."""
    e = p * p
    H = tuple(sorted(a for a in units(e) if pow(a, p - 1, e) == 1))
    return gaussian_period_min_poly(e, H)


def liedahl_violations(e: int, q: int, K_degree=None):
    """Minimal subfields of Q(zeta_e) not fixed by sigma_(e,q).

    A subfield is fixed by sigma iff its subgroup contains <q>; the smallest
    offending subfields belong to the maximal subgroups not containing <q>.
    Subfields whose degree does not divide K_degree are skipped.
    """
    if e <= 2:
        return []
    prime_of_power(e)
    M = set(generated_subgroup(e, [q % e]))
    bad = [H for H in all_subgroups(e) if not M <= set(H)]
    maximal = [H for H in bad if not any(set(H) < set(B) for B in bad)]
    out = []
    phi = euler_phi(e)
    for H in maximal:
        deg = phi // len(H)
        if K_degree is not None and K_degree % deg:
            continue
        out.append(subfield(e, H))
    out.sort(key=lambda s: (s.degree, s.subgroup))
    return out


def liedahl_witness(K, e: int, q: int):
    """A subfield of K cap Q(zeta_e) that sigma_(e,q) moves, or None."""
    from .numberfield import has_root_in_field
    if gcd(q, e) != 1:
        raise ValueError("q must be a unit mod e")
    for sub in liedahl_violations(e, q, K.degree):
        if has_root_in_field(K, sub.min_poly):
            return sub
    return None


def liedahl_condition(K, e: int, q: int) -> bool:
    return liedahl_witness(K, e, q) is None
