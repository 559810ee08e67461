"""Metacyclic presentations <x, y | x^e = 1, y^f = x^i, y x y^-1 = x^q>."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .group import FiniteGroup, InconsistentPresentation, NotPGroup


@dataclass(frozen=True, order=True)
class MetacyclicPresentation:
    e: int
    f: int
    i: int
    q: int

    def __post_init__(self):
        e, f = self.e, self.f
        if e < 1 or f < 1:
            raise InconsistentPresentation("e and f must be positive")
        q = self.q % e if e > 1 else 1
        i = self.i % e if e > 1 else 0
        if gcd(q, e) != 1:
            raise InconsistentPresentation(f"gcd(q, e) must be 1: {self}")
        if pow(q, f, e) != 1 % e:
            raise InconsistentPresentation(f"q^f must be 1 mod e: {self}")
        if (i * (q - 1)) % e:
            raise InconsistentPresentation(f"i(q-1) must be 0 mod e: {self}")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "i", i)

    def as_tuple(self):
        return (self.e, self.f, self.i, self.q)

    def __str__(self):
        return f"(e={self.e}, f={self.f}, i={self.i}, q={self.q})"

    def to_json(self):
        return {"e": self.e, "f": self.f, "i": self.i, "q": self.q}


def _power_index(G, x, e):
    """Map element -> exponent k for elements x^k of <x>."""
    out = {}
    cur = 0
    for k in range(e):
        out[cur] = k
        cur = G.mul(cur, x)
    return out


def _cyclic_normal_subgroups(G: FiniteGroup):
    """(x, <x>) for cyclic normal subgroups with cyclic quotient, largest first."""
    orders = G.element_orders
    seen = set()
    out = []
    for x in sorted(range(G.order), key=lambda a: (-int(orders[a]), a)):
        N = G.closure([x])
        if N in seen:
            continue
        seen.add(N)
        if not G.is_normal(N):
            continue
        f = G.order // len(N)
        y = _quotient_generator(G, N, f)
        if y is None:
            continue
        out.append((x, N, y))
    return out


def _coset_order(G, y, Ns, f):
    cur = y
    k = 1
    while cur not in Ns:
        cur = G.mul(cur, y)
        k += 1
        if k > f:
            break
    return k


def _quotient_generator(G, N, f):
    Ns = set(N)
    if f == 1:
        return 0
    for y in range(G.order):
        if y in Ns:
            continue
        if _coset_order(G, y, Ns, f) == f:
            return y
    return None


def _read_presentation(G, x, N, y, powers):
    e = len(N)
    f = G.order // e
    q = powers[G.conjugate(x, y)] if e > 1 else 1
    i = powers[G.power(y, f)] if e > 1 else 0
    return MetacyclicPresentation(e, f, i, q)


def is_metacyclic(G: FiniteGroup):
    """A witness presentation, or None."""
    for x, N, y in _cyclic_normal_subgroups(G):
        powers = _power_index(G, x, len(N))
        return _read_presentation(G, x, N, y, powers)
    return None


def enumerate_metacyclic_presentations(G: FiniteGroup, budget=4096):
    """Every (e, f, i, q) presenting a group isomorphic to G.

    Each presentation of G arises from a pair (x, y) in G with <x> normal and
    y generating G/<x>, and every such pair presents G (the presented group
    has order at most e*f = |G| and maps onto G), so reading off all pairs is
    exhaustive without isomorphism tests.
    """
    if not G.is_p_group:
        raise NotPGroup("presentation enumeration expects a p-group")
    if G.order > budget:
        from .group import OrderBudgetExceeded
        raise OrderBudgetExceeded(f"order {G.order} exceeds budget {budget}")
    out = set()
    for x, N, _ in _cyclic_normal_subgroups(G):
        e = len(N)
        f = G.order // e
        Ns = set(N)
        powers = _power_index(G, x, e)
        units = [k for k in range(1, e) if gcd(k, e) == 1] if e > 1 else [1]
        for y in range(G.order):
            if f > 1 and (y in Ns or _coset_order(G, y, Ns, f) != f):
                continue
            if f == 1 and y != 0:
                continue
            if e == 1:
                out.add(MetacyclicPresentation(1, f, 0, 1))
                continue
            q = powers[G.conjugate(x, y)]
            i0 = powers[G.power(y, f)]
            for k in units:
                # x' = x^k: y^f = x'^(i0 * k^-1)
                kinv = pow(k, -1, e)
                out.add(MetacyclicPresentation(e, f, i0 * kinv % e, q))
    return sorted(out, key=lambda P: (-P.e, P.f, P.i, P.q))


def split_presentations(pres_list):
    return [P for P in pres_list if P.i == 0]


def canonical_orders(G: FiniteGroup):
    """Sorted element-order multiset, a cheap isomorphism invariant."""
    return tuple(sorted(np.asarray(G.element_orders).tolist()))
