"""Univariate polynomials over the rationals.

A ``Poly`` with integral coefficients plays the role of an integer
polynomial (defining polynomials, cyclotomic polynomials, norms); the same
class carries rational coefficients when division forces them.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import lcm
from numbers import Rational

from . import _dense as dn


def _coerce(c):
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return _coerce(Fraction(c.numerator, c.denominator))
    if isinstance(c, str):
        return _coerce(Fraction(c))
    raise TypeError(f"not an exact rational coefficient: {c!r}")


class Poly:
    """Immutable polynomial with exact rational coefficients (ascending order)."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=()):
        c = [_coerce(x) for x in coeffs]
        dn.trim(c)
        self._c = tuple(c)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs):
        obj = cls.__new__(cls)
        obj._c = tuple(_coerce(x) for x in coeffs)
        obj._hash = None
        return obj

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, n, c=1):
        return cls([0] * n + [c])

    # -- structure -------------------------------------------------------
    @property
    def coeffs(self):
        return self._c

    @property
    def degree(self):
        return len(self._c) - 1

    @property
    def lc(self):
        return self._c[-1] if self._c else 0

    def is_zero(self):
        return not self._c

    def is_integral(self):
        return all(isinstance(c, int) for c in self._c)

    def is_monic(self):
        return bool(self._c) and self._c[-1] == 1

    def __len__(self):
        return len(self._c)

    def __getitem__(self, i):
        return self._c[i] if 0 <= i < len(self._c) else 0

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == Poly((other,))._c
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("Poly", self._c))
        return self._hash

    # -- arithmetic ------------------------------------------------------
    @staticmethod
    def _lift(other):
        if isinstance(other, Poly):
            return other
        return Poly((other,))

    def __add__(self, other):
        return Poly._raw(dn.add(list(self._c), list(self._lift(other)._c)))

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw([-c for c in self._c])

    def __sub__(self, other):
        return Poly._raw(dn.sub(list(self._c), list(self._lift(other)._c)))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, Poly):
            return Poly._raw(dn.mul(self._c, other._c))
        return Poly._raw(dn.scale(list(self._c), _coerce(other)))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        out, base = Poly((1,)), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other):
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        a = [Fraction(c) for c in self._c]
        q, r = dn.divmod_exact_lc(a, [Fraction(c) for c in other._c])
        return Poly(q), Poly(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        return dn.evaluate(self._c, x)

    # -- derived ---------------------------------------------------------
    def derivative(self):
        return Poly._raw(dn.derivative(self._c))

    def monic(self):
        if self.is_zero():
            return self
        lc = Fraction(self.lc)
        return Poly(c / lc for c in self._c)

    def content(self):
        """Positive rational c with self / c primitive integral (0 for zero)."""
        if self.is_zero():
            return 0
        den = lcm(*(Fraction(c).denominator for c in self._c))
        num = dn.content([int(c * den) for c in self._c])
        return Fraction(num, den) if den != 1 else num

    def primitive(self):
        """Content-stripped integral form with positive leading coefficient."""
        if self.is_zero():
            return self
        den = lcm(*(Fraction(c).denominator for c in self._c))
        return Poly._raw(dn.primitive([int(c * den) for c in self._c]))

    def int_coeffs(self):
        if not self.is_integral():
            raise ValueError(f"{self} has non-integral coefficients")
        return list(self._c)

    def shift(self, t):
        """self(x + t)."""
        return Poly._raw(dn.taylor_shift(list(self._c), _coerce(t)))

    def compose(self, other):
        other = self._lift(other)
        acc = Poly()
        for c in reversed(self._c):
            acc = acc * other + c
        return acc

    def squarefree_part(self):
        if self.degree < 1:
            return self
        return (self // gcd(self, self.derivative())).monic()

    def __repr__(self):
        return f"Poly({list(self._c)!r})"

    def __str__(self):
        if not self._c:
            return "0"
        terms = []
        for i in range(len(self._c) - 1, -1, -1):
            c = self._c[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if i == 0:
                body = str(a)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over the rationals (zero if both are zero)."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    g = dn.zz_gcd(list(a.primitive().coeffs), list(b.primitive().coeffs))
    return Poly(g).monic()


def xgcd(a: Poly, b: Poly):
    """Return (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = a, b
    s0, s1 = Poly((1,)), Poly()
    t0, t1 = Poly(), Poly((1,))
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    lc = Fraction(r0.lc)
    return r0 * (1 / lc), s0 * (1 / lc), t0 * (1 / lc)


def power_sums(f: Poly, count: int):
    """Power sums p_0..p_count of the roots of a monic polynomial (Newton)."""
    f = f.monic()
    n = f.degree
    # e-coefficients: f = x^n + a_{n-1} x^{n-1} + ... ; a_k = f[k]
    a = [f[n - k] for k in range(n + 1)]  # a[0] = 1, a[k] = coeff of x^{n-k}
    p = [n] + [0] * count
    for k in range(1, count + 1):
        s = -k * a[k] if k <= n else 0
        for i in range(1, min(k - 1, n) + 1):
            s -= a[i] * p[k - i]
        p[k] = s
    return p


def from_power_sums(p, n):
    """Monic degree-n polynomial whose roots have power sums p[1..n]."""
    a = [Fraction(1)] + [Fraction(0)] * n
    for k in range(1, n + 1):
        s = Fraction(p[k])
        for i in range(1, k):
            s += a[i] * p[k - i]
        a[k] = -s / k
    return Poly(a[n - i] for i in range(n + 1))


def composed_sum(g: Poly, f: Poly, c=1) -> Poly:
    """Monic polynomial whose roots are beta + c*theta over roots beta of g, theta of f."""
    g, f = g.monic(), f.monic()
    m, n = g.degree, f.degree
    D = m * n
    pg = power_sums(g, D)
    pf = power_sums(f, D)
    binom = [1]
    sums = [0] * (D + 1)
    cpow = [1] * (D + 1)
    for k in range(1, D + 1):
        cpow[k] = cpow[k - 1] * c
    for k in range(D + 1):
        if k:
            binom = [1] + [binom[i - 1] + binom[i] for i in range(1, k)] + [1]
        sums[k] = sum(binom[b] * pg[k - b] * pf[b] * cpow[b] for b in range(k + 1))
    return from_power_sums(sums, D)


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> Poly:
    """The n-th cyclotomic polynomial, by exact division of x^n - 1."""
    if n < 1:
        raise ValueError("cyclotomic_poly needs n >= 1")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            q = dn.exact_quotient(num, list(cyclotomic_poly(d).coeffs))
            assert q is not None
            num = q
    return Poly(num)


def euler_phi(n: int) -> int:
    out, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            out -= out // p
        p += 1
    if m > 1:
        out -= out // m
    return out
