"""Factorization of integer polynomials over the rationals (Zassenhaus).

Factor modulo a well-chosen prime, Hensel-lift the modular factors to a
modulus beyond the coefficient bound, then recombine subsets of lifted
factors by trial division.  No lattice reduction: the subset search is
exponential in the worst case, which is acceptable at the degrees used here.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import isqrt

from . import _dense as dn
from . import finite_field as ff
from .finite_field import Factorization
from .poly import Poly, gcd

_PRIMES_TO_TRY = 6


def _primes(start=3):
    p = start
    while True:
        if ff.is_prime(p):
            yield p
        p += 1


def _subset_degree_sums(degs):
    sums = {0}
    for d in degs:
        sums |= {s + d for s in sums}
    return sums


# -- Hensel lifting -----------------------------------------------------------

def _mod(a, m):
    return dn.trim([c % m for c in a])


def _mul_mod(a, b, m):
    return _mod(dn.mul(a, b), m)


def _divmod_monic(a, b, m):
    q, r = dn.divmod_exact_lc(list(a), list(b))
    return _mod(q, m), _mod(r, m)


def _hensel_step(m, f, g, h, s, t):
    """One quadratic step: f = g*h mod m, s*g + t*h = 1 mod m, h monic -> same mod m^2."""
    M = m * m
    e = _mod(dn.sub(f, dn.mul(g, h)), M)
    q, r = _divmod_monic(_mul_mod(s, e, M), h, M)
    g1 = _mod(dn.add(dn.add(g, dn.mul(t, e)), dn.mul(q, g)), M)
    h1 = _mod(dn.add(h, r), M)
    b = _mod(dn.sub(dn.add(dn.mul(s, g1), dn.mul(t, h1)), [1]), M)
    c, d = _divmod_monic(_mul_mod(s, b, M), h1, M)
    s1 = _mod(dn.sub(s, d), M)
    t1 = _mod(dn.sub(dn.sub(t, dn.mul(t, b)), dn.mul(c, g1)), M)
    return g1, h1, s1, t1


def _multifactor_lift(f, facs, p, steps):
    """Lift monic factors of f mod p to monic factors mod p^(2^steps)."""
    M = p ** (2 ** steps)
    if len(facs) == 1:
        inv = pow(f[-1], -1, M)
        return [_mod([c * inv for c in f], M)]
    k = len(facs) // 2
    A, B = facs[:k], facs[k:]
    h = [1]
    for u in A:
        h = ff.mul(h, u, p)
    g = [f[-1] % p]
    for u in B:
        g = ff.mul(g, u, p)
    one, s, t = ff.xgcd(g, h, p)
    assert one == [1], "modular factors not coprime"
    m = p
    fm = list(f)
    for _ in range(steps):
        g, h, s, t = _hensel_step(m, _mod(fm, m * m), g, h, s, t)
        m *= m
    return _multifactor_lift(h, A, p, steps) + _multifactor_lift(g, B, p, steps)


# -- core ------------------------------------------------------------------------

def _choose_prime(h):
    """Pick the prime with the fewest modular factors; also return allowed degrees."""
    n = len(h) - 1
    lc = h[-1]
    disc_guard = 0
    best = None
    allowed = set(range(n + 1))
    found = 0
    for p in _primes():
        if lc % p == 0 or not ff.is_squarefree_mod_p(h, p):
            disc_guard += 1
            if disc_guard > 2000:
                raise ArithmeticError("no squarefree reduction found")
            continue
        degs = ff.distinct_degree_pattern(h, p)
        allowed &= _subset_degree_sums(degs)
        if best is None or len(degs) < len(best[1]):
            best = (p, degs)
        found += 1
        if len(degs) == 1 or allowed == {0, n} or found >= _PRIMES_TO_TRY:
            break
    return best[0], allowed


def _zassenhaus(h):
    """Irreducible factors of a primitive squarefree integer polynomial (lists)."""
    n = len(h) - 1
    if n <= 1:
        return [h]
    p, allowed = _choose_prime(h)
    if allowed == {0, n}:
        return [h]
    facs = ff.irreducible_factors_mod_p(h, p)
    if len(facs) == 1:
        return [h]
    lc = h[-1]
    norm2 = isqrt(sum(c * c for c in h)) + 1
    bound = 2 * abs(lc) * (2 ** n) * norm2
    steps, M = 0, p
    while M <= bound:
        steps += 1
        M = M * M
    lifted = _multifactor_lift(h, facs, p, steps)
    return _recombine(h, lifted, M, allowed)


def _recombine(h, lifted, M, allowed):
    out = []
    cur = list(h)
    facs = list(lifted)
    size = 1
    while 2 * size <= len(facs):
        hit = False
        for S in combinations(range(len(facs)), size):
            deg = sum(len(facs[i]) - 1 for i in S)
            if deg not in allowed:
                continue
            lc = cur[-1]
            # constant-term pretest
            c0 = lc
            for i in S:
                c0 = c0 * facs[i][0] % M
            c0 = dn.sym_mod([c0], M)
            c0 = c0[0] if c0 else 0
            if c0 == 0 and cur[0] != 0:
                continue
            if c0 and cur[0] % c0 and (lc * cur[0]) % c0:
                continue
            cand = [lc % M]
            for i in S:
                cand = _mul_mod(cand, facs[i], M)
            cand = dn.primitive(dn.sym_mod(cand, M))
            q = dn.exact_quotient(cur, cand)
            if q is None:
                continue
            out.append(cand)
            cur = q
            facs = [u for j, u in enumerate(facs) if j not in S]
            hit = True
            break
        if not hit:
            size += 1
    if len(cur) > 1:
        out.append(dn.primitive(cur))
    return out


def _squarefree_parts(f: Poly):
    """Yun's algorithm over Q: list of (primitive squarefree integer part, multiplicity)."""
    out = []
    a = f.primitive()
    b = a.derivative()
    c = gcd(a, b)
    w = a // c
    i = 1
    while w.degree > 0:
        y = gcd(w, c)
        z = w // y
        if z.degree > 0:
            out.append((z.primitive(), i))
        i += 1
        w = y
        c = c // y
    return out


def _canon(f: list):
    return Poly(f)


def factor_over_q(g: Poly) -> Factorization:
    """Factor into primitive irreducible integer polynomials (positive leading
    coefficient) times a rational unit."""
    if not isinstance(g, Poly):
        g = Poly(g)
    if g.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    unit = g.content() * (1 if g.lc > 0 else -1)
    prim = g.primitive()
    if prim.degree == 0:
        return Factorization((), Fraction(unit) if not isinstance(unit, int) else unit)
    found = {}
    # powers of x first
    k = 0
    while prim[k] == 0:
        k += 1
    if k:
        found[Poly((0, 1))] = k
        prim = Poly(prim.coeffs[k:])
    if prim.degree > 0:
        for part, m in _squarefree_parts(prim):
            for fac in _zassenhaus(list(part.coeffs)):
                key = Poly(fac)
                found[key] = found.get(key, 0) + m
    factors = tuple(sorted(found.items(), key=lambda kv: (kv[0].degree, kv[0].coeffs)))
    return Factorization(factors, unit)


def is_irreducible_over_q(g: Poly) -> bool:
    F = factor_over_q(g)
    return g.degree >= 1 and len(F.factors) == 1 and F.factors[0][1] == 1
