"""Finite groups as dense Cayley tables.

Elements are the indices 0..n-1 with 0 the identity.  Every constructor goes
through ``_closure_table``: breadth-first closure under right multiplication
by generators, after which the full table is filled column by column from
the spanning tree (row a of column b*s is R_s applied to column b).
"""

from __future__ import annotations

from collections import deque
from functools import cached_property
from math import gcd

import numpy as np

from ..algebra.finite_field import prime_factors

DEFAULT_ORDER_BUDGET = 4096
VALIDATE_FULL_UP_TO = 512


class GroupError(ValueError):
    pass


class OrderBudgetExceeded(GroupError):
    pass


class InconsistentPresentation(GroupError):
    pass


class NotPGroup(GroupError):
    pass


class PrimeDoesNotDivideOrder(GroupError):
    pass


def _closure_table(identity, gens, mul, budget):
    """BFS closure of gens under right multiplication; returns (elements, table)."""
    index = {identity: 0}
    elems = [identity]
    parent = [(-1, -1)]
    right = [[0] for _ in gens]  # right[s][k] = index of elems[k] * gens[s]
    queue = deque([0])
    while queue:
        k = queue.popleft()
        x = elems[k]
        for s, g in enumerate(gens):
            y = mul(x, g)
            j = index.get(y)
            if j is None:
                j = len(elems)
                if j >= budget:
                    raise OrderBudgetExceeded(f"group order exceeds budget {budget}")
                index[y] = j
                elems.append(y)
                parent.append((k, s))
                queue.append(j)
                for r in right:
                    r.append(-1)
            right[s][k] = j
    n = len(elems)
    R = [np.asarray(r, dtype=np.int32) for r in right]
    T = np.empty((n, n), dtype=np.int32)
    T[:, 0] = np.arange(n, dtype=np.int32)
    for b in range(1, n):
        pb, s = parent[b]
        T[:, b] = R[s][T[:, pb]]
    return elems, T


class FiniteGroup:
    """Immutable finite group given by its multiplication table."""

    def __init__(self, table, source="table", labels=None, validate=True, name=None):
        T = np.asarray(table, dtype=np.int32)
        T.setflags(write=False)
        n = T.shape[0]
        if T.shape != (n, n) or n == 0:
            raise GroupError("table must be square and nonempty")
        self.table = T
        self.order = n
        self.identity = 0
        self.source = source
        self.labels = labels
        self.name = name
        if validate:
            self._validate()
        inv = np.empty(n, dtype=np.int32)
        rows, cols = np.nonzero(T == 0)
        inv[rows] = cols
        self.inv = inv
        self.inv.setflags(write=False)

    # -- construction --------------------------------------------------------
    @classmethod
    def from_generators(cls, identity, gens, mul, source, budget=DEFAULT_ORDER_BUDGET,
                        name=None, validate=True):
        elems, T = _closure_table(identity, list(gens), mul, budget)
        G = cls(T, source=source, labels=elems, validate=validate, name=name)
        G.generator_indices = tuple(elems.index(g) if g in elems else 0 for g in gens)
        return G

    def _validate(self):
        T, n = self.table, self.order
        if not (np.array_equal(T[0], np.arange(n)) and np.array_equal(T[:, 0], np.arange(n))):
            raise GroupError("index 0 is not a two-sided identity")
        for row in T:
            if np.bincount(row, minlength=n).max() != 1:
                raise GroupError("table row is not a permutation")
        if n <= VALIDATE_FULL_UP_TO:
            for a in range(n):
                if not np.array_equal(T[T[a]], T[a][T]):
                    raise GroupError("table is not associative")
        else:
            rng = np.random.default_rng(n)
            a, b, c = rng.integers(0, n, size=(3, 4096))
            if not np.array_equal(T[T[a, b], c], T[a, T[b, c]]):
                raise GroupError("table is not associative")

    # -- element arithmetic -------------------------------------------------------
    def mul(self, a, b):
        return int(self.table[a, b])

    def inverse(self, a):
        return int(self.inv[a])

    def power(self, a, k):
        if k < 0:
            a, k = self.inverse(a), -k
        out, base = 0, a
        while k:
            if k & 1:
                out = int(self.table[out, base])
            base = int(self.table[base, base])
            k >>= 1
        return out

    def commutator(self, a, b):
        """[a, b] = a^-1 b^-1 a b."""
        T, inv = self.table, self.inv
        return int(T[T[inv[a], inv[b]], T[a, b]])

    def conjugate(self, a, g):
        """g a g^-1."""
        return int(self.table[self.table[g, a], self.inv[g]])

    @cached_property
    def element_orders(self):
        n = self.order
        orders = np.zeros(n, dtype=np.int64)
        cur = np.arange(n, dtype=np.int32)
        k = 1
        idx = np.arange(n)
        while (orders == 0).any():
            done = (cur == 0) & (orders == 0)
            orders[done] = k
            cur = self.table[cur, idx]
            k += 1
        orders.setflags(write=False)
        return orders

    def element_order(self, a):
        return int(self.element_orders[a])

    # -- structure ---------------------------------------------------------------
    def closure(self, gens, within=None):
        """Sorted tuple of the subgroup generated by gens."""
        gens = [int(g) for g in gens if g != 0]
        seen = np.zeros(self.order, dtype=bool)
        seen[0] = True
        frontier = np.array([0], dtype=np.int32)
        members = [frontier]
        while frontier.size:
            new = []
            for g in gens:
                img = self.table[frontier, g]
                img = img[~seen[img]]
                if img.size:
                    img = np.unique(img)
                    seen[img] = True
                    new.append(img)
            frontier = np.concatenate(new) if new else np.array([], dtype=np.int32)
        return tuple(int(x) for x in np.nonzero(seen)[0])

    @cached_property
    def generators(self):
        """A small generating set chosen greedily (largest element order first)."""
        gens = getattr(self, "generator_indices", None)
        if gens and len(self.closure(gens)) == self.order:
            gens = list(gens)
        else:
            gens = []
        # greedy reduction / construction
        order_idx = sorted(range(1, self.order), key=lambda a: (-self.element_orders[a], a))
        if not gens:
            H = (0,)
            for a in order_idx:
                if len(H) == self.order:
                    break
                if a not in set(H):
                    gens.append(a)
                    H = self.closure(gens)
        out = [g for g in gens if g != 0]
        # drop redundant generators
        i = 0
        while i < len(out):
            trial = out[:i] + out[i + 1:]
            if len(self.closure(trial)) == self.order:
                out = trial
            else:
                i += 1
        return tuple(out)

    @cached_property
    def is_abelian(self):
        return bool(np.array_equal(self.table, self.table.T))

    def is_normal(self, H):
        Hs = np.zeros(self.order, dtype=bool)
        Hs[list(H)] = True
        Hl = np.array(sorted(H), dtype=np.int32)
        for g in self.generators:
            conj = self.table[self.table[g, Hl], self.inv[g]]
            if not Hs[conj].all():
                return False
        return True

    def normal_closure(self, S):
        H = self.closure(S)
        while True:
            extra = set()
            Hs = set(H)
            Hl = np.array(H, dtype=np.int32)
            for g in self.generators:
                conj = self.table[self.table[g, Hl], self.inv[g]]
                for c in conj.tolist():
                    if c not in Hs:
                        extra.add(c)
            if not extra:
                return H
            H = self.closure(list(H) + sorted(extra))

    def commutator_subgroup_of(self, A, B):
        T, inv = self.table, self.inv
        Al = np.array(A, dtype=np.int32)
        comms = set()
        for b in B:
            c = T[T[inv[Al], inv[b]], T[Al, b]]
            comms.update(c.tolist())
        return self.normal_closure(sorted(comms))

    @cached_property
    def derived_subgroup(self):
        everything = tuple(range(self.order))
        return self.commutator_subgroup_of(everything, self.generators)

    @cached_property
    def is_solvable(self):
        cur = tuple(range(self.order))
        while len(cur) > 1:
            sub = self.subgroup(cur)
            nxt = sub.derived_subgroup
            if len(nxt) == len(cur):
                return False
            cur = tuple(sub.labels_in_parent[x] for x in nxt)
        return True

    @cached_property
    def is_nilpotent(self):
        cur = tuple(range(self.order))
        while len(cur) > 1:
            nxt = self.commutator_subgroup_of(cur, self.generators)
            if len(nxt) == len(cur):
                return False
            cur = nxt
        return True

    @cached_property
    def prime_divisors(self):
        return prime_factors(self.order)

    @cached_property
    def is_p_group(self):
        return len(self.prime_divisors) <= 1

    @property
    def p(self):
        if self.order == 1:
            return None
        if not self.is_p_group:
            raise NotPGroup(f"order {self.order} is not a prime power")
        return self.prime_divisors[0]

    @cached_property
    def frattini(self):
        """Frattini subgroup of a p-group: generated by p-th powers and commutators."""
        if self.order == 1:
            return (0,)
        p = self.p
        powers = set(int(self.power(a, p)) for a in range(self.order))
        gens = sorted(powers | set(self.derived_subgroup))
        return self.normal_closure(gens)

    def subgroup(self, H, name=None):
        H = sorted(set(int(h) for h in H))
        if H[0] != 0:
            raise GroupError("subgroup must contain the identity")
        pos = np.full(self.order, -1, dtype=np.int64)
        pos[H] = np.arange(len(H))
        sub = self.table[np.ix_(H, H)]
        mapped = pos[sub]
        if (mapped < 0).any():
            raise GroupError("not closed under multiplication")
        S = FiniteGroup(mapped, source="subgroup", validate=False, name=name)
        S.labels_in_parent = tuple(H)
        return S

    def quotient(self, N, name=None):
        if not self.is_normal(N):
            raise GroupError("quotient by a non-normal subgroup")
        Nl = np.array(sorted(N), dtype=np.int32)
        coset_id = np.full(self.order, -1, dtype=np.int64)
        reps = []
        for g in range(self.order):
            if coset_id[g] < 0:
                coset_id[self.table[g, Nl]] = len(reps)
                reps.append(g)
        r = np.array(reps, dtype=np.int32)
        Q = coset_id[self.table[np.ix_(r, r)]]
        return FiniteGroup(Q, source="quotient", validate=False, name=name)

    def conjugacy_class_representatives(self):
        seen = np.zeros(self.order, dtype=bool)
        reps = []
        allg = np.arange(self.order)
        for a in range(self.order):
            if not seen[a]:
                reps.append(a)
                cls = self.table[self.table[allg, a], self.inv[allg]]
                seen[cls] = True
        return reps

    def sylow(self, p):
        return sylow_subgroup(self, p)

    def __repr__(self):
        return f"FiniteGroup(order={self.order}, source={self.source}{', ' + self.name if self.name else ''})"


# -- constructors ---------------------------------------------------------------

def build_from_metacyclic(e, f, i, q, budget=DEFAULT_ORDER_BUDGET, name=None):
    """<x, y | x^e = 1, y^f = x^i, y x y^-1 = x^q> on normal forms x^a y^b."""
    from .metacyclic import MetacyclicPresentation
    pres = MetacyclicPresentation(e, f, i, q)
    e, f, i, q = pres.e, pres.f, pres.i, pres.q
    if e * f > budget:
        raise OrderBudgetExceeded(f"order {e * f} exceeds budget {budget}")
    qpow = [pow(q, b, e) for b in range(f)]

    def mul(u, v):
        a, b = u
        c, d = v
        a = (a + c * qpow[b]) % e
        b += d
        if b >= f:
            b -= f
            a = (a + i) % e
        return (a, b)

    G = FiniteGroup.from_generators((0, 0), [(1 % e, 0), (0, 1 % f)], mul, "metacyclic",
                                    budget=budget, name=name)
    if G.order != e * f:
        raise InconsistentPresentation(f"presentation {pres} collapses to order {G.order}")
    G.presentation = pres
    return G


def parse_cycles(text, degree=None):
    """'(1 2 3)(4 5)' -> tuple image on 0-based points; '()' is the identity."""
    text = text.strip()
    cycles = []
    depth_buf = ""
    inside = False
    for ch in text:
        if ch == "(":
            if inside:
                raise GroupError(f"nested parenthesis in {text!r}")
            inside, depth_buf = True, ""
        elif ch == ")":
            if not inside:
                raise GroupError(f"unbalanced parenthesis in {text!r}")
            inside = False
            pts = [int(t) for t in depth_buf.replace(",", " ").split()]
            cycles.append(pts)
        elif inside:
            depth_buf += ch
        elif not ch.isspace():
            raise GroupError(f"unexpected character {ch!r} in {text!r}")
    if inside:
        raise GroupError(f"unbalanced parenthesis in {text!r}")
    m = max([max(c) for c in cycles if c] + [degree or 0, 1])
    img = list(range(m))
    for c in cycles:
        if len(set(c)) != len(c) or min(c, default=1) < 1:
            raise GroupError(f"bad cycle {c}")
        for k, x in enumerate(c):
            img[x - 1] = c[(k + 1) % len(c)] - 1
    return tuple(img)


def build_from_permutations(gens, budget=DEFAULT_ORDER_BUDGET, name=None):
    """gens: permutations as image tuples (0-based) or cycle strings (1-based)."""
    perms = [parse_cycles(g) if isinstance(g, str) else tuple(g) for g in gens]
    m = max([len(p) for p in perms] + [1])
    perms = [tuple(p) + tuple(range(len(p), m)) for p in perms]
    for p in perms:
        if sorted(p) != list(range(m)):
            raise GroupError(f"not a permutation: {p}")
    ident = tuple(range(m))

    def mul(a, b):  # apply a, then b
        return tuple(b[x] for x in a)

    return FiniteGroup.from_generators(ident, perms, mul, "permutations", budget=budget, name=name)


def direct_product(*groups, budget=DEFAULT_ORDER_BUDGET, name=None):
    total = 1
    for G in groups:
        total *= G.order
    if total > budget:
        raise OrderBudgetExceeded(f"order {total} exceeds budget {budget}")
    k = len(groups)
    ident = (0,) * k
    gens = []
    for j, G in enumerate(groups):
        for g in G.generators:
            t = [0] * k
            t[j] = g
            gens.append(tuple(t))

    def mul(a, b):
        return tuple(int(G.table[x, y]) for G, x, y in zip(groups, a, b))

    P = FiniteGroup.from_generators(ident, gens, mul, "product", budget=budget, name=name)
    P.factors = tuple(groups)
    return P


def cyclic_group(n, name=None):
    return build_from_metacyclic(n, 1, 0, 1, name=name or f"C{n}")


# -- Sylow subgroups ----------------------------------------------------------------

def sylow_subgroup(G: FiniteGroup, p: int) -> FiniteGroup:
    """A Sylow p-subgroup, grown inside normalizers."""
    if G.order % p:
        raise PrimeDoesNotDivideOrder(f"{p} does not divide {G.order}")
    target = p
    while G.order % (target * p) == 0:
        target *= p
    orders = G.element_orders
    p_elems = [a for a in range(G.order) if _is_power_of(int(orders[a]), p)]
    P = (0,)
    while len(P) < target:
        Ps = set(P)
        Pl = np.array(P, dtype=np.int32)
        grown = False
        for a in p_elems:
            if a in Ps:
                continue
            # a must normalize P so that <P, a> is a p-group
            conj = G.table[G.table[a, Pl], G.inv[a]]
            if not all(c in Ps for c in conj.tolist()):
                continue
            H = G.closure(list(P) + [a])
            if _is_power_of(len(H), p):
                P = H
                grown = True
                break
        if not grown:
            raise AssertionError("Sylow growth stalled")
    S = G.subgroup(P)
    return S


def _is_power_of(n, p):
    while n % p == 0:
        n //= p
    return n == 1


def frattini_rank(G: FiniteGroup) -> int:
    """d(G) for a p-group: log_p |G / Phi(G)|."""
    if G.order == 1:
        return 0
    p = G.p
    idx = G.order // len(G.frattini)
    d = 0
    while idx > 1:
        idx //= p
        d += 1
    return d


def gcd_list(xs):
    g = 0
    for x in xs:
        g = gcd(g, x)
    return g
