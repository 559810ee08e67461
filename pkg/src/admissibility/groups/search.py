"""Backtracking searches on Cayley tables: isomorphism, generating tuples and
quotients of one-relator pro-p groups.

Commutators follow [a, b] = a^-1 b^-1 a b throughout.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .group import FiniteGroup, frattini_rank

DEFAULT_DEMUSKIN_BUDGET = 2_000_000
DEFAULT_DEMUSKIN_ORDER = 2187


class SearchBudgetExceeded(RuntimeError):
    pass


# -- isomorphism -----------------------------------------------------------------

def _spanning_words(G: FiniteGroup, gens):
    """BFS tree over right multiplication: list of (element, parent, generator slot)."""
    seen = {0: None}
    order = [0]
    tree = []
    k = 0
    while k < len(order):
        a = order[k]
        k += 1
        for s, g in enumerate(gens):
            b = G.mul(a, g)
            if b not in seen:
                seen[b] = (a, s)
                order.append(b)
                tree.append((b, a, s))
    return tree, len(order)


def _class_sizes(G):
    sizes = np.zeros(G.order, dtype=np.int64)
    allg = np.arange(G.order)
    for a in G.conjugacy_class_representatives():
        cls = np.unique(G.table[G.table[allg, a], G.inv[allg]])
        sizes[cls] = len(cls)
    return sizes


def _small_generating_set(G):
    if G.order > 1 and G.is_p_group:
        return minimal_generating_set(G)
    return list(G.generators)


def find_isomorphism(G: FiniteGroup, H: FiniteGroup):
    """Element map G -> H as an array, or None."""
    if G.order != H.order:
        return None
    if sorted(G.element_orders.tolist()) != sorted(H.element_orders.tolist()):
        return None
    if G.is_abelian != H.is_abelian:
        return None
    if G.order == 1:
        return np.zeros(1, dtype=np.int64)
    gens = _small_generating_set(G)
    tree, reached = _spanning_words(G, gens)
    assert reached == G.order
    cg, ch = _class_sizes(G), _class_sizes(H)
    if sorted(cg.tolist()) != sorted(ch.tolist()):
        return None
    sig_g = list(zip(G.element_orders.tolist(), cg.tolist()))
    sig_h = list(zip(H.element_orders.tolist(), ch.tolist()))
    cand = [[h for h in range(H.order) if sig_h[h] == sig_g[g]] for g in gens]
    # up to an inner automorphism of H the first image is a class representative
    reps = set(H.conjugacy_class_representatives())
    cand[0] = [h for h in cand[0] if h in reps]
    # commutator orders between generator pairs must agree
    comm_order = {(j, k): int(G.element_orders[G.commutator(gens[j], gens[k])])
                  for k in range(len(gens)) for j in range(k)}

    def extend(images):
        phi = np.full(G.order, -1, dtype=np.int64)
        phi[0] = 0
        for b, a, s in tree:
            phi[b] = H.table[phi[a], images[s]]
        if len(np.unique(phi)) != G.order:
            return None
        for s, g in enumerate(gens):
            if not np.array_equal(phi[G.table[:, g]], H.table[phi, images[s]]):
                return None
        return phi

    def rec(k, images):
        if k == len(gens):
            return extend(images)
        for h in cand[k]:
            if any(int(H.element_orders[H.commutator(images[j], h)]) != comm_order[(j, k)]
                   for j in range(k)):
                continue
            r = rec(k + 1, images + [h])
            if r is not None:
                return r
        return None

    return rec(0, [])


def are_isomorphic(G, H):
    return find_isomorphism(G, H) is not None


# -- Frattini coordinates ----------------------------------------------------------

class FrattiniVectors:
    """Images of elements in G/Phi(G) as integer codes of F_p-vectors."""

    def __init__(self, G: FiniteGroup):
        self.G = G
        self.p = G.p if G.order > 1 else 1
        self.d = frattini_rank(G)
        if G.order == 1:
            self.code = np.zeros(1, dtype=np.int64)
            return
        Q = G.quotient(G.frattini)
        # Q is elementary abelian of rank d; pick a basis and expand every element
        basis = list(Q.generators)
        assert len(basis) == self.d
        p = self.p
        coords = {0: 0}
        for idx in range(p ** self.d):
            digits, t = [], idx
            for _ in range(self.d):
                digits.append(t % p)
                t //= p
            el = 0
            for b, c in zip(basis, digits):
                el = Q.mul(el, Q.power(b, c))
            coords[el] = idx
        # map G elements to cosets
        Nl = np.array(sorted(G.frattini), dtype=np.int32)
        coset = np.full(G.order, -1, dtype=np.int64)
        k = 0
        for g in range(G.order):
            if coset[g] < 0:
                coset[G.table[g, Nl]] = k
                k += 1
        self.code = np.array([coords[int(coset[g])] for g in range(G.order)], dtype=np.int64)

    def rank(self, vecs):
        """Rank over F_p of a list of codes."""
        p, d = self.p, self.d
        rows = []
        for v in vecs:
            digits, t = [], int(v)
            for _ in range(d):
                digits.append(t % p)
                t //= p
            rows.append(digits)
        r = 0
        for c in range(d):
            piv = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = pow(rows[r][c], -1, p)
            rows[r] = [x * inv % p for x in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][c]:
                    t = rows[i][c]
                    rows[i] = [(x - t * y) % p for x, y in zip(rows[i], rows[r])]
            r += 1
        return r


# -- generating tuples (free quotients) -------------------------------------------------

def free_quotient_test(G: FiniteGroup, n: int, budget=DEFAULT_DEMUSKIN_BUDGET):
    """An n-tuple generating G, or None.  Pure subgroup-closure search: it
    does not consult the Frattini quotient, so it serves as an independent
    check of d(G) <= n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if G.order == 1:
        return (0,) * n
    full = G.order
    dead = set()  # (subgroup, slots left) known to fail
    counter = [0]

    def rec(H, left, chosen):
        if len(H) == full:
            return chosen + [0] * left
        if left == 0:
            return None
        key = (H, left)
        if key in dead:
            return None
        counter[0] += 1
        if counter[0] > budget:
            raise SearchBudgetExceeded("free quotient search budget exhausted")
        # a failed K rules out every g inside it: <H, g> <= K needs no fewer slots
        covered = np.zeros(G.order, dtype=bool)
        covered[list(H)] = True
        for g in range(G.order):
            if covered[g]:
                continue
            K = G.closure(chosen + [g])
            r = rec(K, left - 1, chosen + [g])
            if r is not None:
                return r
            covered[list(K)] = True
        dead.add(key)
        return None

    out = rec((0,), n, [])
    return tuple(out) if out is not None else None


# -- the one-relator search ---------------------------------------------------------------

@dataclass(frozen=True)
class DemuskinQuery:
    n: int
    s: Optional[int]  # None: no relation at all (free pro-p group)

    def __post_init__(self):
        if self.s is None:
            if self.n < 1:
                raise ValueError("free query needs n >= 1")
        else:
            if self.n < 4 or self.n % 2:
                raise ValueError("relation query needs an even n >= 4")
            if self.s < 1:
                raise ValueError("s must be positive")


def relation_value(G: FiniteGroup, tup, p, s):
    """x1^(p^s) [x1,x2][x3,x4]...[x_(n-1),x_n]."""
    acc = G.power(tup[0], p ** s)
    for k in range(0, len(tup), 2):
        acc = G.mul(acc, G.commutator(tup[k], tup[k + 1]))
    return acc


def generates(G, tup):
    return len(G.closure(list(tup))) == G.order


def demuskin_quotient_test(G: FiniteGroup, query: DemuskinQuery, p: int,
                           budget=DEFAULT_DEMUSKIN_BUDGET, order_budget=DEFAULT_DEMUSKIN_ORDER):
    """A generating n-tuple of G satisfying the relation, or None."""
    if G.order > order_budget:
        raise SearchBudgetExceeded(f"order {G.order} exceeds search budget {order_budget}")
    n, s = query.n, query.s
    if s is None:
        return free_quotient_test(G, n, budget)
    if G.order == 1:
        return (0,) * n
    if G.p != p:
        raise ValueError(f"G is not a {p}-group")
    d = frattini_rank(G)
    if d > n:
        return None
    gens = minimal_generating_set(G)
    if 2 * d <= n:
        # generators in the even slots, identity elsewhere: every commutator
        # has an identity entry and x1 = 1
        tup = [0] * n
        for k, g in enumerate(gens):
            tup[2 * k + 1] = g
        return tuple(tup)
    if G.is_abelian:
        return _abelian_case(G, n, p, s, d)
    return _search(G, n, p, s, d, budget)


def minimal_generating_set(G: FiniteGroup):
    """d(G) elements whose Frattini images form a basis (so they generate G)."""
    if G.order == 1:
        return []
    fv = FrattiniVectors(G)
    out, vecs = [], []
    for g in range(1, G.order):
        if fv.rank(vecs + [fv.code[g]]) > len(out):
            out.append(g)
            vecs.append(fv.code[g])
            if len(out) == fv.d:
                break
    return out


def _complete_generating(G, start, n, fv):
    """Extend a partial tuple to n entries generating G (greedy, deterministic)."""
    tup = list(start)
    while len(tup) < n:
        if generates(G, tup):
            tup.append(0)
            continue
        r = fv.rank([fv.code[x] for x in tup])
        for g in range(G.order):
            if fv.rank([fv.code[x] for x in tup] + [fv.code[g]]) > r:
                tup.append(g)
                break
        else:
            return None
    return tuple(tup) if generates(G, tup) else None


def _abelian_case(G, n, p, s, d):
    # the relation collapses to x1^(p^s) = 1
    fv = FrattiniVectors(G)
    if d <= n - 1:
        return _complete_generating(G, [0], n, fv)
    for g in range(1, G.order):
        if G.power(g, p ** s) == 0 and fv.code[g] != 0:
            return _complete_generating(G, [g], n, fv)
    return None


def _search(G, n, p, s, d, budget):
    fv = FrattiniVectors(G)
    code = fv.code
    T, inv = G.table, G.inv
    N = G.order
    allg = np.arange(N)
    # comm[a, b] = [a, b]
    comm = T[T[inv[:, None], inv[None, :]], T]
    fibers = defaultdict(list)
    for a in range(N):
        row = comm[a]
        for b in range(N):
            fibers[int(row[b])].append((a, b))
    q = p ** s
    nodes = [0]

    def tick():
        nodes[0] += 1
        if nodes[0] > budget:
            raise SearchBudgetExceeded("one-relator search budget exhausted")

    def rec(k, tup, acc, vecs):
        # slots 0..k-1 filled; acc = relation prefix so far
        r = fv.rank(vecs)
        if r + (n - k) < d:
            return None
        if k == n - 2:
            target = int(inv[acc])
            for a, b in fibers.get(target, ()):
                tick()
                if fv.rank(vecs + [code[a], code[b]]) == d:
                    cand = tuple(tup) + (a, b)
                    if generates(G, cand):
                        return cand
            return None
        for g in range(N):
            tick()
            if k % 2 == 1:
                # closing pair (k-1, k)
                nacc = int(T[acc, comm[tup[k - 1], g]])
            else:
                nacc = acc
            res = rec(k + 1, tup + [g], nacc, vecs + [code[g]])
            if res is not None:
                return res
        return None

    for g1 in G.conjugacy_class_representatives():
        tick()
        acc = G.power(g1, q)
        # slot 0 is x1; slot 1 closes [x1, x2] in rec
        res = rec(1, [g1], acc, [code[g1]])
        if res is not None:
            assert relation_value(G, res, p, s) == 0
            return res
    return None


def brute_force_rank(G: FiniteGroup):
    """Smallest size of a generating set, by exhaustive closure search."""
    k = 0
    while True:
        if free_quotient_test(G, k) is not None:
            return k
        k += 1
