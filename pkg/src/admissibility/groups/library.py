"""Named small groups used by the corpus and tests."""

from __future__ import annotations

import numpy as np

from .group import (
    FiniteGroup,
    build_from_metacyclic,
    build_from_permutations,
    cyclic_group,
    direct_product,
)


def abelian(*orders):
    if not orders:
        return cyclic_group(1)
    if len(orders) == 1:
        return cyclic_group(orders[0])
    name = "x".join(f"C{n}" for n in orders)
    return direct_product(*[cyclic_group(n) for n in orders], name=name)


def elementary_abelian(p, rank):
    return abelian(*([p] * rank))


def dihedral(order):
    """Dihedral group of the given order (2n)."""
    n = order // 2
    return build_from_metacyclic(n, 2, 0, n - 1 if n > 2 else 1, name=f"D{order}")


def quaternion(order):
    """Generalized quaternion group of order 2^k >= 8."""
    n = order // 2
    return build_from_metacyclic(n, 2, n // 2, n - 1, name=f"Q{order}")


def semidihedral(order):
    """Semidihedral group of order 2^k >= 16."""
    n = order // 2
    return build_from_metacyclic(n, 2, 0, n // 2 - 1, name=f"SD{order}")


def modular(p, k):
    """M_(p^k) = <x, y | x^(p^(k-1)), y^p, y x y^-1 = x^(1 + p^(k-2))>, k >= 3."""
    e = p ** (k - 1)
    return build_from_metacyclic(e, p, 0, 1 + p ** (k - 2), name=f"M{p ** k}")


def cyclic_by_cyclic(p):
    """Z/p^2 semidirect Z/p with y x y^-1 = x^(1+p)."""
    return build_from_metacyclic(p * p, p, 0, 1 + p, name=f"C{p * p}:C{p}")


def heisenberg(p):
    """Upper unitriangular 3x3 matrices over F_p (exponent p for odd p)."""
    def mul(u, v):
        a, b, c = u
        a2, b2, c2 = v
        return ((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p)

    return FiniteGroup.from_generators((0, 0, 0), [(1, 0, 0), (0, 1, 0)], mul,
                                       "unitriangular", name=f"Heis{p ** 3}")


def wreath_3_3():
    """C3 wr C3 as permutations on nine points (order 81)."""
    return build_from_permutations(["(1 2 3)", "(1 4 7)(2 5 8)(3 6 9)"], name="C3wrC3")


def symmetric(n):
    if n < 2:
        return cyclic_group(1)
    gens = ["(" + " ".join(str(i) for i in range(1, n + 1)) + ")", "(1 2)"]
    return build_from_permutations(gens, name=f"S{n}")


def alternating(n):
    if n < 3:
        return cyclic_group(1)
    gens = ["(%d %d %d)" % (1, 2, k) for k in range(3, n + 1)]
    return build_from_permutations(gens, name=f"A{n}")


def cyclic_extension(moduli, phi, a0, m, name=None):
    """Extension of A = Z/m_1 x ... x Z/m_r by C_m: elements (a, k), the
    generator y acts on A by the integer matrix phi and y^m = a0."""
    r = len(moduli)

    def act(M, v):
        return tuple(sum(M[i][j] * v[j] for j in range(r)) % moduli[i] for i in range(r))

    powers = [tuple(tuple(int(i == j) for j in range(r)) for i in range(r))]
    for _ in range(m - 1):
        prev = powers[-1]
        powers.append(tuple(tuple(sum(phi[i][t] * prev[t][j] for t in range(r)) for j in range(r))
                            for i in range(r)))

    def mul(u, v):
        a, k = u
        b, l = v
        img = act(powers[k], b)
        c = tuple((x + y) % mi for x, y, mi in zip(a, img, moduli))
        if k + l >= m:
            c = tuple((x + y) % mi for x, y, mi in zip(c, a0, moduli))
        return (c, (k + l) % m)

    zero = (0,) * r
    gens = [(tuple(int(i == j) for j in range(r)), 0) for i in range(r)] + [(zero, 1 % m)]
    return FiniteGroup.from_generators((zero, 0), gens, mul, "extension", name=name)


def _jordan_unipotents(r, p):
    """Unipotent Jordan forms of size r with blocks of size <= p."""
    out = []
    for part in _partitions(r):
        if max(part) > p:
            continue
        M = [[0] * r for _ in range(r)]
        pos = 0
        for b in part:
            for t in range(b):
                M[pos + t][pos + t] = 1
                if t + 1 < b:
                    M[pos + t][pos + t + 1] = 1
            pos += b
        out.append(M)
    return out


def _endomorphisms(moduli):
    from itertools import product
    r = len(moduli)
    choices = []
    for i in range(r):
        for j in range(r):
            step = moduli[i] // min(moduli[i], moduli[j])
            choices.append(range(0, moduli[i], step))
    for flat in product(*choices):
        yield [list(flat[i * r:(i + 1) * r]) for i in range(r)]


def _is_automorphism_of_order(moduli, M, p):
    from itertools import product
    r = len(moduli)

    def act(v):
        return tuple(sum(M[i][j] * v[j] for j in range(r)) % moduli[i] for i in range(r))

    elems = list(product(*[range(mi) for mi in moduli]))
    if len({act(v) for v in elems}) != len(elems):
        return False
    for v in [tuple(int(i == j) for j in range(r)) for i in range(r)]:
        w = v
        for _ in range(p):
            w = act(w)
        if w != v:
            return False
    return True


def _invariants(G):
    from .group import frattini_rank
    orders = tuple(sorted(G.element_orders.tolist()))
    return (G.order, G.is_abelian, orders, len(G.derived_subgroup), frattini_rank(G),
            len(G.conjugacy_class_representatives()))


def p_groups_of_order(p, k):
    """All groups of order p^k (k <= 4) up to isomorphism.

    Every group of order p^k with k <= 4 has an abelian normal subgroup of
    index p, so it is a cyclic extension of an abelian group of order
    p^(k-1) by C_p; those extensions are enumerated (automorphisms of
    elementary abelian groups only up to conjugacy) and deduplicated.
    """
    from itertools import product
    from .search import are_isomorphic
    if k > 4:
        raise ValueError("only orders up to p^4 are enumerated")
    if k <= 2:
        return [abelian(*[p ** a for a in part]) if part else cyclic_group(1, name="C1")
                for part in _partitions(k)] if k else [cyclic_group(1, name="C1")]
    found = {}

    def add(G):
        key = _invariants(G)
        bucket = found.setdefault(key, [])
        for H in bucket:
            if are_isomorphic(G, H):
                return
        bucket.append(G)

    for part in _partitions(k):
        add(abelian(*[p ** a for a in part]))
    for part in _partitions(k - 1):
        moduli = [p ** a for a in part]
        if all(mi == p for mi in moduli):
            phis = _jordan_unipotents(len(moduli), p)
        else:
            phis = [M for M in _endomorphisms(moduli) if _is_automorphism_of_order(moduli, M, p)]
        for M in phis:
            r = len(moduli)
            for a0 in product(*[range(mi) for mi in moduli]):
                fixed = tuple(sum(M[i][j] * a0[j] for j in range(r)) % moduli[i] for i in range(r))
                if fixed != a0:
                    continue
                G = cyclic_extension(moduli, M, a0, p)
                if G.order == p ** k:
                    add(G)
    out = [G for bucket in found.values() for G in bucket]
    out.sort(key=_invariants)
    for idx, G in enumerate(out):
        if G.name is None:
            G.name = f"G{p ** k}_{idx}"
    return out


def p_groups_of_order_dividing(p, max_exp):
    out = []
    for k in range(max_exp + 1):
        out.extend(p_groups_of_order(p, k))
    return out


def _partitions(k, largest=None):
    if largest is None:
        largest = k
    if k == 0:
        yield []
        return
    for a in range(min(k, largest), 0, -1):
        for rest in _partitions(k - a, a):
            yield [a] + rest


def _core_is_trivial(G, H):
    Hs = set(H)
    allg = np.arange(G.order)
    for h in H:
        if h == 0:
            continue
        cls = G.table[G.table[allg, h], G.inv[allg]]
        if all(int(c) in Hs for c in cls):
            # a conjugation-closed piece of H generates a normal subgroup inside H
            return False
    core = set(range(G.order))
    for g in range(G.order):
        core &= {int(G.table[G.table[g, h], G.inv[g]]) for h in H}
        if len(core) == 1:
            return True
    return len(core) == 1


def permutation_generators(G):
    """Cycle strings for a faithful transitive action of G on the cosets of
    the largest core-free subgroup found among small closures."""
    best = (0,)
    seen = set()
    elems = range(1, G.order)
    cands = []
    for a in elems:
        H = G.closure([a])
        if H not in seen:
            seen.add(H)
            cands.append(H)
    for H in list(cands):
        for b in elems:
            K = G.closure(list(H) + [b])
            if K not in seen and len(K) < G.order:
                seen.add(K)
                cands.append(K)
    for H in sorted(cands, key=len, reverse=True):
        if len(H) <= len(best):
            break
        if _core_is_trivial(G, H):
            best = H
            break
    Hl = np.array(sorted(best), dtype=np.int64)
    coset_of = np.full(G.order, -1, dtype=np.int64)
    reps = []
    for g in range(G.order):
        if coset_of[g] < 0:
            coset_of[G.table[g, Hl]] = len(reps)
            reps.append(g)
    out = []
    for x in _small_gens(G):
        # left action g H -> x g H
        img = [int(coset_of[G.table[x, r]]) for r in reps]
        out.append(_cycle_string(img))
    return out


def _small_gens(G):
    from .search import minimal_generating_set
    if G.order > 1 and G.is_p_group:
        return minimal_generating_set(G)
    return list(G.generators)


def _cycle_string(img):
    seen = [False] * len(img)
    parts = []
    for i in range(len(img)):
        if seen[i] or img[i] == i:
            seen[i] = True
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)
            j = img[j]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"
