"""Polynomials over prime fields and their factorization.

Factorization follows the classical route: squarefree decomposition,
distinct-degree splitting, then Cantor-Zassenhaus equal-degree splitting.
Randomness is drawn from a generator seeded by the input itself, so a given
polynomial always factors the same way.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import _dense as dn


class CompositeModulus(ValueError):
    pass


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact below 3.3e24)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    out, p = [], 2
    n = abs(n)
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out


# -- list kernels mod p -------------------------------------------------------

def reduce(a, p):
    return dn.trim([c % p for c in a])


def add(a, b, p):
    return reduce(dn.add(a, b), p)


def sub(a, b, p):
    return reduce(dn.sub(a, b), p)


def mul(a, b, p):
    return reduce(dn.mul(a, b), p)


def monic(a, p):
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def divmod_p(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = [c % p for c in a]
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    if len(a) - 1 < db:
        return [], dn.trim(a)
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] % p
        if c:
            t = c * inv % p
            q[k - db] = t
            for i in range(db + 1):
                a[k - db + i] = (a[k - db + i] - t * b[i]) % p
    return dn.trim(q), dn.trim(a[:db])


def rem(a, b, p):
    return divmod_p(a, b, p)[1]


def gcd(a, b, p):
    a, b = reduce(a, p), reduce(b, p)
    while b:
        a, b = b, rem(a, b, p)
    return monic(a, p)


def xgcd(a, b, p):
    """(g, s, t) with s*a + t*b = g monic, all mod p."""
    r0, r1 = reduce(a, p), reduce(b, p)
    s0, s1, t0, t1 = [1], [], [], [1]
    while r1:
        q, r = divmod_p(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    if not r0:
        return [], s0, t0
    inv = pow(r0[-1], -1, p)
    return ([c * inv % p for c in r0], [c * inv % p for c in s0], [c * inv % p for c in t0])


def derivative(a, p):
    return reduce(dn.derivative(a), p)


def powmod(base, e, mod, p):
    out = [1]
    base = rem(base, mod, p)
    while e:
        if e & 1:
            out = rem(mul(out, base, p), mod, p)
        base = rem(mul(base, base, p), mod, p)
        e >>= 1
    return out


def pth_root(a, p):
    """For a(x) = b(x^p) over F_p, return b (coefficients are fixed by Frobenius)."""
    return [a[i] for i in range(0, len(a), p)]


# -- the public ModPoly type -------------------------------------------------

@dataclass(frozen=True)
class ModPoly:
    coeffs: tuple
    p: int

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(reduce(list(self.coeffs), self.p)))

    @classmethod
    def from_poly(cls, f, p):
        return cls(tuple(int(c) for c in f.int_coeffs()), p)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def _wrap(self, c):
        return ModPoly(tuple(c), self.p)

    def _other(self, other):
        if isinstance(other, ModPoly):
            if other.p != self.p:
                raise ValueError("moduli differ")
            return list(other.coeffs)
        return reduce([other], self.p)

    def __add__(self, other):
        return self._wrap(add(list(self.coeffs), self._other(other), self.p))

    def __sub__(self, other):
        return self._wrap(sub(list(self.coeffs), self._other(other), self.p))

    def __mul__(self, other):
        return self._wrap(mul(list(self.coeffs), self._other(other), self.p))

    __rmul__ = __mul__

    def __pow__(self, n):
        out = ModPoly((1,), self.p)
        for _ in range(n):
            out = out * self
        return out

    def __divmod__(self, other):
        q, r = divmod_p(list(self.coeffs), self._other(other), self.p)
        return self._wrap(q), self._wrap(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        return dn.evaluate(self.coeffs, x) % self.p

    def derivative(self):
        return self._wrap(derivative(list(self.coeffs), self.p))

    def monic(self):
        return self._wrap(monic(list(self.coeffs), self.p))

    def gcd(self, other):
        return self._wrap(gcd(list(self.coeffs), self._other(other), self.p))

    def __str__(self):
        from .poly import Poly
        return f"{Poly(self.coeffs)} (mod {self.p})"


@dataclass(frozen=True)
class Factorization:
    """factors: ((poly, multiplicity), ...) in canonical order; unit: scalar."""

    factors: tuple
    unit: object = 1
    extra: dict = field(default_factory=dict, compare=False)

    def expand(self):
        if not self.factors:
            return None
        acc = None
        for f, m in self.factors:
            for _ in range(m):
                acc = f if acc is None else acc * f
        return acc * self.unit

    def degrees(self):
        return sorted(f.degree for f, m in self.factors for _ in range(m))

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)


# -- factorization -------------------------------------------------------------

def squarefree_decomposition(f, p):
    """Monic f -> list of (g, m) with f = prod g^m, each g squarefree and coprime."""
    out = {}
    _sqf(monic(f, p), p, 1, out)
    return sorted(out.items(), key=lambda kv: kv[0])


def _sqf(f, p, mult, out):
    if len(f) <= 1:
        return
    df = derivative(f, p)
    if not df:
        _sqf(pth_root(f, p), p, mult * p, out)
        return
    c = gcd(f, df, p)
    w = divmod_p(f, c, p)[0]
    i = 1
    while len(w) > 1:
        y = gcd(w, c, p)
        z = divmod_p(w, y, p)[0]
        if len(z) > 1:
            key = tuple(z)
            out[key] = out.get(key, 0) + i * mult
        i += 1
        w = y
        c = divmod_p(c, y, p)[0]
    if len(c) > 1:
        _sqf(pth_root(c, p), p, mult * p, out)


def distinct_degree(f, p):
    """Squarefree monic f -> list of (product of all degree-d irreducibles, d)."""
    out = []
    h = [0, 1]
    d = 0
    f = list(f)
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = powmod(h, p, f, p)
        g = gcd(f, sub(h, [0, 1], p), p)
        if len(g) > 1:
            out.append((g, d))
            f = divmod_p(f, g, p)[0]
            h = rem(h, f, p)
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def equal_degree(f, d, p, rng):
    """Split a squarefree monic product of degree-d irreducibles."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = [rng.randrange(p) for _ in range(n)]
        dn.trim(a)
        if len(a) < 2:
            continue
        if p == 2:
            # trace map a + a^2 + ... + a^(2^(d-1))
            t, cur = list(a), list(a)
            for _ in range(d - 1):
                cur = rem(mul(cur, cur, p), f, p)
                t = add(t, cur, p)
            g = gcd(f, t, p)
        else:
            b = powmod(a, (p ** d - 1) // 2, f, p)
            g = gcd(f, sub(b, [1], p), p)
        if 1 < len(g) < len(f):
            h = divmod_p(f, g, p)[0]
            return equal_degree(g, d, p, rng) + equal_degree(h, d, p, rng)


def _irreducible_factors_sqf(f, p, rng):
    out = []
    for g, d in distinct_degree(f, p):
        out.extend(equal_degree(g, d, p, rng))
    return out


def factor_mod_p(g: ModPoly) -> Factorization:
    """Complete factorization of g over F_p into monic irreducibles."""
    p = g.p
    if not is_prime(p):
        raise CompositeModulus(f"modulus {p} is not prime")
    if g.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    coeffs = list(g.coeffs)
    unit = coeffs[-1]
    rng = random.Random(f"factor_mod_p:{p}:{coeffs}")
    pieces = []
    for sq, m in squarefree_decomposition(coeffs, p):
        for h in _irreducible_factors_sqf(list(sq), p, rng):
            pieces.append((tuple(h), m))
    pieces.sort(key=lambda fm: (len(fm[0]), fm[0], fm[1]))
    return Factorization(tuple((ModPoly(h, p), m) for h, m in pieces), unit)


def irreducible_factors_mod_p(coeffs, p):
    """Monic irreducible factors (as lists) of a squarefree polynomial mod p."""
    f = monic(reduce(list(coeffs), p), p)
    rng = random.Random(f"irr:{p}:{f}")
    fs = _irreducible_factors_sqf(f, p, rng)
    fs.sort(key=lambda h: (len(h), h))
    return fs


def is_squarefree_mod_p(coeffs, p):
    f = reduce(list(coeffs), p)
    if len(f) <= 1:
        return True
    return len(gcd(f, derivative(f, p), p)) == 1


def distinct_degree_pattern(coeffs, p):
    """Degrees of the irreducible factors of a squarefree polynomial mod p."""
    f = monic(reduce(list(coeffs), p), p)
    degs = []
    for g, d in distinct_degree(f, p):
        degs.extend([d] * ((len(g) - 1) // d))
    return sorted(degs)
